"""Mixed graphs, treks, the trek rule, and t-separation.

A mixed graph has directed edges (acyclic by construction) and bidirected
edges.  Treks are pairs of directed paths whose sources either coincide or
are joined by a bidirected edge; summing trek monomials reproduces the
covariance matrix (Id - L)^{-T} W (Id - L)^{-1} of the linear structural
equation model, which is checked symbolically entry by entry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .poly import RingContext, determinant


class MixedGraph:
    """Vertices 1..m, directed edge set (i -> j), bidirected edge set
    {i, j}.  The directed part must be acyclic; both edge types may join
    the same pair."""

    __slots__ = ("m", "directed", "bidirected", "_topo")

    def __init__(self, m, directed=(), bidirected=()):
        m = int(m)
        if m < 1:
            raise ValueError("need at least one vertex")
        dedges = set()
        for i, j in directed:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError("directed self-loop")
            if not (1 <= i <= m and 1 <= j <= m):
                raise ValueError("edge endpoint out of range")
            dedges.add((i, j))
        bedges = set()
        for i, j in bidirected:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError("bidirected loop")
            if not (1 <= i <= m and 1 <= j <= m):
                raise ValueError("edge endpoint out of range")
            bedges.add((min(i, j), max(i, j)))
        self.m = m
        self.directed = frozenset(dedges)
        self.bidirected = frozenset(bedges)
        self._topo = self._topological_order()

    def _topological_order(self):
        indeg = {v: 0 for v in range(1, self.m + 1)}
        for _, j in self.directed:
            indeg[j] += 1
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for i, j in sorted(self.directed):
                if i == v:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        ready.append(j)
            ready.sort()
        if len(order) != self.m:
            raise ValueError("directed part has a cycle")
        return tuple(order)

    def parents(self, v):
        return sorted(i for i, j in self.directed if j == v)

    @classmethod
    def from_json(cls, obj):
        return cls(
            obj["vertices"],
            obj.get("directed", ()),
            obj.get("bidirected", ()),
        )

    def __repr__(self):
        return (
            f"MixedGraph({self.m}, directed={sorted(self.directed)}, "
            f"bidirected={sorted(self.bidirected)})"
        )


@dataclass(frozen=True)
class Trek:
    """Pair of directed paths (vertex lists, trivial paths allowed); the
    left path ends at the trek's first endpoint, the right path at the
    second.  Sources coincide ('common') or are joined by a bidirected
    edge ('bidirected')."""

    left: tuple
    right: tuple
    source_kind: str

    @property
    def sources(self):
        return self.left[0], self.right[0]


class SemParameters:
    """Polynomial ring for a mixed graph's structural equation model:
    one l_i_j per directed edge, one w_i_i per vertex, one w_i_j per
    bidirected edge."""

    def __init__(self, graph: MixedGraph, order="grevlex"):
        self.graph = graph
        omega_names = [f"w_{i}_{i}" for i in range(1, graph.m + 1)]
        omega_names += [f"w_{i}_{j}" for i, j in sorted(graph.bidirected)]
        lambda_names = [f"l_{i}_{j}" for i, j in sorted(graph.directed)]
        self.ring = RingContext(omega_names + lambda_names, order)

    def lam(self, i, j):
        return self.ring.var(f"l_{i}_{j}")

    def omega(self, i, j):
        i, j = min(i, j), max(i, j)
        return self.ring.var(f"w_{i}_{j}")

    def has_omega(self, i, j):
        return i == j or (min(i, j), max(i, j)) in self.graph.bidirected


def directed_paths_ending_at(G: MixedGraph, v):
    """Every directed path ending at v, as a vertex tuple; includes the
    trivial path (v,).  Finite because the directed part is acyclic."""
    paths = [(v,)]
    for i in G.parents(v):
        for p in directed_paths_ending_at(G, i):
            paths.append(p + (v,))
    return paths


def enumerate_treks(G: MixedGraph, i, j):
    """All treks between i and j, trivial paths included."""
    treks = []
    for left in directed_paths_ending_at(G, i):
        for right in directed_paths_ending_at(G, j):
            s, t = left[0], right[0]
            if s == t:
                treks.append(Trek(left, right, "common"))
            elif (min(s, t), max(s, t)) in G.bidirected:
                treks.append(Trek(left, right, "bidirected"))
    return treks


def trek_monomial(trek: Trek, params: SemParameters):
    """Product (with multiplicity) of l over every directed edge on both
    paths, times w over the pair of sources."""
    s, t = trek.sources
    poly = params.omega(s, t)
    for path in (trek.left, trek.right):
        for a, b in zip(path, path[1:]):
            poly = poly * params.lam(a, b)
    return poly


def sigma_trek_rule(G: MixedGraph, params: SemParameters, i, j):
    """Covariance entry as the sum of trek monomials over all treks."""
    total = params.ring.zero()
    for trek in enumerate_treks(G, i, j):
        total = total + trek_monomial(trek, params)
    return total


def sigma_matrix_formula(G: MixedGraph, params: SemParameters):
    """Covariance matrix (Id - L)^{-T} W (Id - L)^{-1} expanded
    symbolically; the inverse is the finite Neumann sum of powers of the
    nilpotent L."""
    m = G.m
    ring = params.ring
    zero, one = ring.zero(), ring.one()
    L = [[zero] * m for _ in range(m)]
    for a, b in G.directed:
        L[a - 1][b - 1] = params.lam(a, b)
    # M = sum_k L^k = (Id - L)^{-1}
    M = [[one if r == c else zero for c in range(m)] for r in range(m)]
    power = [row[:] for row in L]
    for _ in range(m - 1):
        if all(entry.is_zero for row in power for entry in row):
            break
        for r in range(m):
            for c in range(m):
                M[r][c] = M[r][c] + power[r][c]
        power = _mat_mul(power, L, ring)
    W = [[zero] * m for _ in range(m)]
    for v in range(1, m + 1):
        W[v - 1][v - 1] = params.omega(v, v)
    for a, b in G.bidirected:
        W[a - 1][b - 1] = params.omega(a, b)
        W[b - 1][a - 1] = params.omega(a, b)
    MT = [[M[c][r] for c in range(m)] for r in range(m)]
    return _mat_mul(_mat_mul(MT, W, ring), M, ring)


def _mat_mul(A, B, ring):
    n, mid, p = len(A), len(B), len(B[0])
    out = [[ring.zero()] * p for _ in range(n)]
    for r in range(n):
        for k in range(mid):
            a = A[r][k]
            if a.is_zero:
                continue
            for c in range(p):
                b = B[k][c]
                if not b.is_zero:
                    out[r][c] = out[r][c] + a * b
    return out


def t_separates(G: MixedGraph, C_A, C_B, A, B) -> bool:
    """True iff every trek between A and B has its left path meeting C_A
    or its right path meeting C_B (paths include their endpoints)."""
    C_A, C_B = set(C_A), set(C_B)
    for a in A:
        for b in B:
            for trek in enumerate_treks(G, a, b):
                if set(trek.left) & C_A or set(trek.right) & C_B:
                    continue
                return False
    return True


def find_tsep_certificate(G: MixedGraph, A, B):
    """Smallest-total-size pair (C_A, C_B) with |C_A| + |C_B| < |A| that
    t-separates A from B, or None.  Exhaustive subset search, smallest
    first, lexicographic within a size."""
    A, B = sorted(A), sorted(B)
    if len(A) != len(B):
        raise ValueError("A and B must have the same size")
    k = len(A)
    vertices = list(range(1, G.m + 1))
    for total in range(k):
        for size_a in range(total + 1):
            size_b = total - size_a
            for C_A in itertools.combinations(vertices, size_a):
                for C_B in itertools.combinations(vertices, size_b):
                    if t_separates(G, C_A, C_B, A, B):
                        return tuple(C_A), tuple(C_B)
    return None


def check_vanishing_minor(G: MixedGraph, A, B, params=None) -> bool:
    """True iff det of the covariance submatrix with rows A, columns B is
    identically zero as a polynomial in the model parameters."""
    A, B = sorted(A), sorted(B)
    if len(A) != len(B):
        raise ValueError("A and B must have the same size")
    params = params or SemParameters(G)
    sigma = sigma_matrix_formula(G, params)
    sub = [[sigma[a - 1][b - 1] for b in B] for a in A]
    return determinant(sub).is_zero
