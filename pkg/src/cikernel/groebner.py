"""Multivariate division, Buchberger's algorithm, reduced Groebner bases.

The pair-update logic follows the classic GROEBNERNEWS2 formulation
(Gebauer-Moller criteria: coprime leading terms and the chain criterion),
with the normal selection strategy (smallest lcm first).  Reduced bases
are monic, inter-reduced, and sorted by leading monomial, so they are
canonical for (ideal, order) and structural equality decides ideal
equality.
"""

from __future__ import annotations

from .poly import (
    Polynomial,
    RingContext,
    RingMismatchError,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


def _mul_term(f, exps, coeff):
    # multiplying by a single term preserves term order (orders are
    # multiplicative), so the sorted representation can be kept as-is
    return Polynomial(
        f.ring, tuple((mono_mul(e, exps), c * coeff) for e, c in f.terms)
    )


def normal_form(f, reducers, order=None):
    """Fully reduce ``f`` modulo a list of polynomials: no term of the
    result is divisible by any reducer's leading monomial, and
    f - result lies in the ideal the reducers generate."""
    ring = f.ring
    for g in reducers:
        if g.ring != ring:
            raise RingMismatchError("normal_form arguments in different rings")
    order = order or ring.order
    key = order.key
    table = [(g.leading_monomial(order), g.leading_coefficient(order), g)
             for g in reducers if not g.is_zero]
    pending = dict(f.terms)
    remainder = {}
    last = None
    while pending:
        m = max(pending, key=key)
        # each step strictly lowers the working leading monomial
        assert last is None or key(m) < key(last)
        last = m
        c = pending.pop(m)
        for lm, lc, g in table:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = c / lc
                for e, k in g.terms:
                    if e == lm:
                        continue
                    e2 = mono_mul(e, shift)
                    nc = pending.get(e2, 0) - factor * k
                    if nc:
                        pending[e2] = nc
                    else:
                        pending.pop(e2, None)
                break
        else:
            remainder[m] = c
    return ring.from_dict(remainder)


def s_polynomial(f, g, order=None):
    order = order or f.ring.order
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    return _mul_term(f, mono_div(lcm, mf), 1 / cf) - _mul_term(
        g, mono_div(lcm, mg), 1 / cg
    )


class GroebnerBasis:
    """Reduced Groebner basis: monic elements, no term of any element
    divisible by another element's leading monomial, sorted by leading
    monomial.  Unique for a given (ideal, order)."""

    __slots__ = ("ring", "order", "elements")

    def __init__(self, ring, order, elements):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.elements))

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.elements]})"

    @property
    def is_trivial(self):
        """True iff the basis generates the unit ideal."""
        return len(self.elements) == 1 and self.elements[0].total_degree() == 0

    def normal_form(self, f):
        return normal_form(f, self.elements, self.order)

    def reduces_to_zero(self, f):
        return self.normal_form(f).is_zero


def buchberger(gens, order=None, ring=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``order`` defaults to the ring's own order; ``ring`` is only needed
    when ``gens`` is empty (the zero ideal).
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        if ring is None:
            raise ValueError("empty generator list needs an explicit ring")
        return GroebnerBasis(ring, order or ring.order, ())
    base_ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != base_ring:
            raise RingMismatchError("generators live in different rings")
    order = order or base_ring.order

    # work in a ring whose stored term order matches the target order so
    # leading terms are O(1)
    if order == base_ring.order:
        work_ring, work = base_ring, list(gens)
    else:
        work_ring = base_ring.with_order(order)
        work = [g.map_ring(work_ring) for g in gens]

    reduced = _buchberger(work, work_ring)
    if work_ring is not base_ring:
        reduced = [g.map_ring(base_ring) for g in reduced]
    return GroebnerBasis(base_ring, order, reduced)


def _buchberger(gens, ring):
    order = ring.order
    key = order.key

    def lm(i):
        return f[i].terms[0][0]

    # inter-reduce the input first; repeat until stable
    current = [g.monic() for g in gens]
    while True:
        nxt = []
        for i, p in enumerate(current):
            r = normal_form(p, nxt, order)
            if not r.is_zero:
                nxt.append(r.monic())
        if nxt == current:
            break
        current = nxt
    if not current:
        return []

    f = list(current)

    def update(G, B, ih):
        # Gebauer-Moller pair pruning, [BW]-style
        mh = lm(ih)
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = lm(ig)
            lcm_hg = mono_lcm(mh, mg)

            def lcm_divides(ip):
                return mono_divides(mono_lcm(mh, lm(ip)), lcm_hg)

            if mono_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))

        E = set()
        while D:
            ih2, ig = D.pop()
            mg = lm(ig)
            if mono_mul(mh, mg) != mono_lcm(mh, mg):
                E.add((ih2, ig))

        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            lcm12 = mono_lcm(lm(ig1), lm(ig2))
            if (
                not mono_divides(mh, lcm12)
                or mono_lcm(lm(ig1), mh) == lcm12
                or mono_lcm(lm(ig2), mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if not mono_divides(mh, lm(ig))}
        G_new.add(ih)
        return G_new, B_new

    G = set()
    CP = set()
    for ih in sorted(range(len(f)), key=lambda i: key(lm(i))):
        G, CP = update(G, CP, ih)

    registry = {p: i for i, p in enumerate(f)}
    while CP:
        pair = min(CP, key=lambda p: key(mono_lcm(lm(p[0]), lm(p[1]))))
        CP.remove(pair)
        ig1, ig2 = pair
        s = s_polynomial(f[ig1], f[ig2], order)
        reducers = [f[ig] for ig in sorted(G, key=lambda i: key(lm(i)))]
        h = normal_form(s, reducers, order)
        if h.is_zero:
            continue
        h = h.monic()
        ih = registry.get(h)
        if ih is None:
            ih = len(f)
            f.append(h)
            registry[h] = ih
        G, CP = update(G, CP, ih)

    # G is now minimal (update() discards dominated leading monomials);
    # one tail-reduction pass per element yields the reduced basis
    indices = sorted(G, key=lambda i: key(lm(i)))
    polys = [f[i] for i in indices]
    reduced = []
    for i, g in enumerate(polys):
        others = polys[:i] + polys[i + 1 :]
        r = normal_form(g, others, order)
        if not r.is_zero:
            reduced.append(r.monic())
    reduced.sort(key=lambda g: key(g.terms[0][0]))
    return reduced


def is_groebner(basis, order=None):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    polys = [g for g in basis if not g.is_zero]
    if len(polys) < 2:
        return True
    order = order or polys[0].ring.order
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j], order)
            if not normal_form(s, polys, order).is_zero:
                return False
    return True
