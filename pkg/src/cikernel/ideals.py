"""Ideal algebra: sum, intersection, elimination, saturation, membership,
radical membership, equality, containment, and the positivity prune used
to tag components that miss the open probability simplex or the positive
definite cone.

Intersections use the auxiliary-variable construction
I cap J = (t*I + (1-t)*J) with t eliminated; saturation I : f^inf uses
elimination of t from <I, 1 - t*f>.  Pure monomial ideals get a direct
lcm-based intersection, which matters for the larger catalog runs.
"""

from __future__ import annotations

import re
import threading

from .groebner import GroebnerBasis, buchberger, normal_form
from .orders import Block
from .poly import Polynomial, RingContext, RingMismatchError, mono_lcm, mono_divides


class Ideal:
    """A list of generators in a ring, with lazily cached reduced Groebner
    bases (one per monomial order).  Immutable apart from the cache, which
    is published atomically under a lock."""

    __slots__ = ("ring", "generators", "_gb", "_lock")

    def __init__(self, ring, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("generators must be polynomials")
            if g.ring != ring:
                raise RingMismatchError("generator outside the ideal's ring")
            if not g.is_zero:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}
        self._lock = threading.Lock()

    def groebner(self, order=None) -> GroebnerBasis:
        order = order or self.ring.order
        got = self._gb.get(order)
        if got is not None:
            return got
        gb = buchberger(self.generators, order=order, ring=self.ring)
        with self._lock:
            self._gb.setdefault(order, gb)
        return self._gb[order]

    @property
    def is_zero(self):
        return not self.generators

    def is_monomial(self):
        return all(len(g.terms) == 1 for g in self.generators)

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]})"


def sum_ideals(I: Ideal, J: Ideal) -> Ideal:
    """Generators of I + J: the union of the two generator lists."""
    _check_same_ring(I, J)
    gens = list(I.generators)
    for g in J.generators:
        if g not in gens:
            gens.append(g)
    return Ideal(I.ring, gens)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J in the shared ring."""
    _check_same_ring(I, J)
    if I.is_zero or J.is_zero:
        return Ideal(I.ring, ())
    if I.is_monomial() and J.is_monomial():
        return _intersect_monomial(I, J)
    ring = I.ring
    tname = _fresh_name(ring, "t")
    work = RingContext((tname,) + ring.variables, Block(1))
    t = work.var(tname)
    one = work.one()
    gens = [t * f.map_ring(work) for f in I.generators]
    gens += [(one - t) * g.map_ring(work) for g in J.generators]
    return _eliminate_first_block(work, gens, 1, ring)


def _intersect_monomial(I, J):
    lcms = []
    for g in I.generators:
        eu = g.terms[0][0]
        for h in J.generators:
            lcms.append(mono_lcm(eu, h.terms[0][0]))
    minimal = _minimalize_monomials(lcms)
    return Ideal(I.ring, [I.ring.monomial(e) for e in minimal])


def _minimalize_monomials(monos):
    uniq = sorted(set(monos), key=sum)
    kept = []
    for m in uniq:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    kept.sort()
    return kept


def eliminate(I: Ideal, drop) -> Ideal:
    """The elimination ideal I cap k[remaining variables], returned in the
    subring on the remaining variables (same order tag as I's ring)."""
    drop = set(drop)
    for name in drop:
        I.ring.index(name)
    if not drop:
        return I
    remaining = [v for v in I.ring.variables if v not in drop]
    if not remaining:
        raise ValueError("cannot eliminate every variable")
    dropped = [v for v in I.ring.variables if v in drop]
    work = RingContext(tuple(dropped) + tuple(remaining), Block(len(dropped)))
    gens = [g.map_ring(work) for g in I.generators]
    target = RingContext(tuple(remaining), I.ring.order)
    return _eliminate_first_block(work, gens, len(dropped), target)


def _eliminate_first_block(work_ring, gens, k, target_ring):
    gb = buchberger(gens, ring=work_ring)
    block = set(range(k))
    kept = [g for g in gb if not (g.support() & block)]
    return Ideal(target_ring, [g.map_ring(target_ring) for g in kept])


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^inf, the polynomials pushed into I by some power of f."""
    if f.is_zero:
        raise ValueError("cannot saturate by zero")
    if f.ring != I.ring:
        raise RingMismatchError("saturation element outside the ideal's ring")
    if f.total_degree() == 0:
        return I
    ring = I.ring
    tname = _fresh_name(ring, "t")
    work = RingContext((tname,) + ring.variables, Block(1))
    t = work.var(tname)
    gens = [g.map_ring(work) for g in I.generators]
    gens.append(work.one() - t * f.map_ring(work))
    return _eliminate_first_block(work, gens, 1, ring)


def saturate_by_variables(I: Ideal, names) -> Ideal:
    """I : (prod of the named variables)^inf, one variable at a time."""
    out = I
    for name in names:
        out = saturate(out, out.ring.var(name))
    return out


def is_member(f: Polynomial, I: Ideal) -> bool:
    if f.ring != I.ring:
        raise RingMismatchError("membership test across rings")
    return I.groebner().reduces_to_zero(f)


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """True iff some power of f lies in I (Rabinowitsch: 1 in <I, 1-t*f>).
    This is radical membership over an algebraically closed field."""
    if f.ring != I.ring:
        raise RingMismatchError("membership test across rings")
    if f.is_zero:
        return True
    ring = I.ring
    tname = _fresh_name(ring, "t")
    work = RingContext((tname,) + ring.variables)
    t = work.var(tname)
    gens = [g.map_ring(work) for g in I.generators]
    gens.append(work.one() - t * f.map_ring(work))
    return buchberger(gens, ring=work).is_trivial


def equal(I: Ideal, J: Ideal) -> bool:
    """Exact ideal equality via reduced Groebner bases under the ring's
    own order."""
    _check_same_ring(I, J)
    return I.groebner().elements == J.groebner().elements


def contains(I: Ideal, J: Ideal) -> bool:
    """True iff every generator of J lies in I."""
    _check_same_ring(I, J)
    gb = I.groebner()
    return all(gb.reduces_to_zero(g) for g in J.generators)


_PROB_VAR = re.compile(r"^p_\S+$")
_COV_VAR = re.compile(r"^s_(\d+)_(\d+)$")


def positivity_prune(I: Ideal, region: str) -> bool:
    """Sound-but-incomplete check that V(I) misses an open statistical
    region.

    region='simplex': some generator is a nonzero one-signed linear
    combination of probability variables, which forces coordinates to
    vanish; impossible on the open simplex.

    region='pd-cone': some generator is (a multiple of) a power of a
    diagonal covariance variable, which is strictly positive on the
    positive definite cone.

    Returns False when inconclusive.
    """
    ring = I.ring
    if region == "simplex":
        if not all(_PROB_VAR.match(v) for v in ring.variables):
            raise ValueError("ring is not tagged with probability variables")
        for g in I.generators:
            if g.is_zero:
                continue
            if any(sum(e) != 1 for e, _ in g.terms):
                continue
            signs = {c > 0 for _, c in g.terms}
            if len(signs) == 1:
                return True
        return False
    if region == "pd-cone":
        diag = set()
        for v in ring.variables:
            m = _COV_VAR.match(v)
            if not m:
                raise ValueError("ring is not tagged with covariance variables")
            if m.group(1) == m.group(2):
                diag.add(ring.index(v))
        for g in I.generators:
            if len(g.terms) != 1:
                continue
            e, _ = g.terms[0]
            used = [i for i, x in enumerate(e) if x]
            if len(used) == 1 and used[0] in diag:
                return True
        return False
    raise ValueError(f"unknown region {region!r}")


def _check_same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")


def _fresh_name(ring, stem):
    if stem not in ring._index:
        return stem
    i = 0
    while f"{stem}{i}" in ring._index:
        i += 1
    return f"{stem}{i}"
