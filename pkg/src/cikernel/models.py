"""Compile statistical model descriptors into conditional independence
ideals.

Discrete models get a Markov ring with one probability variable per joint
state; a CI statement A _||_ B | C compiles to the 2x2 minors of the
D-marginalized slice tables.  Gaussian models get a ring of covariance
entries s_i_j (i <= j) and minors of submatrices of the symmetric matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ideals import Ideal, sum_ideals
from .poly import RingContext, determinant


@dataclass(frozen=True)
class DiscreteModel:
    """State-space sizes (r_1, ..., r_m), every r_i >= 2."""

    sizes: tuple

    def __init__(self, sizes):
        sizes = tuple(int(r) for r in sizes)
        if not sizes:
            raise ValueError("model needs at least one variable")
        if any(r < 2 for r in sizes):
            raise ValueError("state-space sizes must be >= 2")
        object.__setattr__(self, "sizes", sizes)

    @property
    def m(self):
        return len(self.sizes)


@dataclass(frozen=True)
class CIStatement:
    """A _||_ B | C on 1-based variable indices; A, B nonempty and the
    three sets pairwise disjoint."""

    A: tuple
    B: tuple
    C: tuple

    def __init__(self, A, B, C=()):
        A = tuple(sorted(int(i) for i in A))
        B = tuple(sorted(int(i) for i in B))
        C = tuple(sorted(int(i) for i in C))
        if not A or not B:
            raise ValueError("A and B must be nonempty")
        combined = A + B + C
        if len(set(combined)) != len(combined):
            raise ValueError("A, B, C must be pairwise disjoint")
        if min(combined) < 1:
            raise ValueError("variable indices are 1-based")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)

    def validate_for(self, m):
        if max(self.A + self.B + self.C) > m:
            raise ValueError(f"statement references variable beyond {m}")

    def swap(self):
        return CIStatement(self.B, self.A, self.C)

    def __str__(self):
        lhs = ",".join(map(str, self.A))
        rhs = ",".join(map(str, self.B))
        if self.C:
            return f"{lhs}_||_{rhs}|{','.join(map(str, self.C))}"
        return f"{lhs}_||_{rhs}"


class GaussianContext:
    """Ring of covariance indeterminates s_i_j for 1 <= i <= j <= m."""

    def __init__(self, m, order="grevlex"):
        m = int(m)
        if m < 1:
            raise ValueError("need at least one variable")
        self.m = m
        names = [f"s_{i}_{j}" for i in range(1, m + 1) for j in range(i, m + 1)]
        self.ring = RingContext(names, order)

    def sigma_name(self, i, j):
        if not (1 <= i <= self.m and 1 <= j <= self.m):
            raise ValueError("index out of range")
        i, j = min(i, j), max(i, j)
        return f"s_{i}_{j}"

    def sigma(self, i, j):
        return self.ring.var(self.sigma_name(i, j))


def state_tuples(sizes):
    """Joint states in row-major order, last index fastest, 1-based."""
    return itertools.product(*(range(1, r + 1) for r in sizes))


def state_name(idx, wide=False):
    if wide:
        return "p_" + "_".join(str(i) for i in idx)
    return "p_" + "".join(str(i) for i in idx)


def markov_ring(model: DiscreteModel, order="grevlex") -> RingContext:
    """Ring with one probability variable per joint state, named
    p_<indices> (underscore-separated when any size exceeds 9)."""
    wide = any(r > 9 for r in model.sizes)
    names = [state_name(idx, wide) for idx in state_tuples(model.sizes)]
    return RingContext(names, order)


def _marginal(ring, model, positions, assignment, d_positions, wide):
    """Sum of probability variables over all completions of the partial
    assignment (marginalizing the D variables)."""
    m = model.m
    acc = {}
    d_ranges = [range(1, model.sizes[p - 1] + 1) for p in d_positions]
    for d_vals in itertools.product(*d_ranges):
        full = [0] * m
        for pos, val in zip(positions, assignment):
            full[pos - 1] = val
        for pos, val in zip(d_positions, d_vals):
            full[pos - 1] = val
        exps = [0] * ring.arity
        exps[ring.index(state_name(tuple(full), wide))] = 1
        acc[tuple(exps)] = acc.get(tuple(exps), 0) + 1
    return ring.from_dict(acc)


def ci_ideal_discrete(model: DiscreteModel, stmt: CIStatement, ring=None) -> Ideal:
    """2x2 minors of the (R_A x R_B) marginal tables, one table per
    assignment to C.  When A u B u C covers all variables the generators
    are binomials."""
    stmt.validate_for(model.m)
    if ring is None:
        ring = markov_ring(model)
    wide = any(r > 9 for r in model.sizes)
    A, B, C = stmt.A, stmt.B, stmt.C
    D = tuple(i for i in range(1, model.m + 1) if i not in A + B + C)
    R_A = list(itertools.product(*(range(1, model.sizes[a - 1] + 1) for a in A)))
    R_B = list(itertools.product(*(range(1, model.sizes[b - 1] + 1) for b in B)))
    R_C = list(itertools.product(*(range(1, model.sizes[c - 1] + 1) for c in C)))
    positions = A + B + C

    def entry(ia, ib, ic):
        return _marginal(ring, model, positions, ia + ib + ic, D, wide)

    gens = []
    for ic in R_C:
        for ia, ja in itertools.combinations(R_A, 2):
            for ib, jb in itertools.combinations(R_B, 2):
                g = entry(ia, ib, ic) * entry(ja, jb, ic) - entry(ia, jb, ic) * entry(
                    ja, ib, ic
                )
                gens.append(g)
    return Ideal(ring, gens)


def ci_ideal_gaussian(ctx: GaussianContext, stmt: CIStatement) -> Ideal:
    """All (#C+1)-minors of the covariance submatrix with rows A u C and
    columns B u C."""
    stmt.validate_for(ctx.m)
    rows = sorted(set(stmt.A) | set(stmt.C))
    cols = sorted(set(stmt.B) | set(stmt.C))
    k = len(stmt.C) + 1
    gens = []
    for rsub in itertools.combinations(rows, k):
        for csub in itertools.combinations(cols, k):
            matrix = [[ctx.sigma(i, j) for j in csub] for i in rsub]
            gens.append(determinant(matrix))
    return Ideal(ctx.ring, gens)


def alt_gaussian_generators(ctx: GaussianContext, stmt: CIStatement) -> Ideal:
    """The smaller generating set: one (#C+1)-minor per pair (a, b) with
    a in A, b in B, using rows {a} u C and columns {b} u C."""
    stmt.validate_for(ctx.m)
    gens = []
    for a in stmt.A:
        for b in stmt.B:
            rows = sorted({a} | set(stmt.C))
            cols = sorted({b} | set(stmt.C))
            matrix = [[ctx.sigma(i, j) for j in cols] for i in rows]
            gens.append(determinant(matrix))
    return Ideal(ctx.ring, gens)


def ci_collection_ideal(model_or_ctx, stmts) -> Ideal:
    """Sum of the CI ideals of a list of statements."""
    if isinstance(model_or_ctx, DiscreteModel):
        ring = markov_ring(model_or_ctx)
        build = lambda s: ci_ideal_discrete(model_or_ctx, s, ring)
    elif isinstance(model_or_ctx, GaussianContext):
        ring = model_or_ctx.ring
        build = lambda s: ci_ideal_gaussian(model_or_ctx, s)
    else:
        raise TypeError("expected DiscreteModel or GaussianContext")
    total = Ideal(ring, ())
    for stmt in stmts:
        total = sum_ideals(total, build(stmt))
    return total


def model_from_json(obj):
    """{"type":"discrete","sizes":[...]} or {"type":"gaussian","m":n}."""
    kind = obj.get("type")
    if kind == "discrete":
        return DiscreteModel(obj["sizes"])
    if kind == "gaussian":
        return GaussianContext(obj["m"])
    raise ValueError(f"unknown model type {kind!r}")


def statement_from_json(obj):
    """{"A":[...],"B":[...],"C":[...]} with 1-based indices."""
    return CIStatement(obj["A"], obj["B"], obj.get("C", ()))
