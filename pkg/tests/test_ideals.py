import itertools
import random
from fractions import Fraction

import pytest

from cikernel.ideals import (
    Ideal,
    contains,
    eliminate,
    equal,
    intersect,
    is_member,
    positivity_prune,
    radical_member,
    saturate,
    saturate_by_variables,
    sum_ideals,
)
from cikernel.parse import parse_polynomial
from cikernel.poly import RingContext, RingMismatchError

from helpers import random_nonzero_poly, small_ring


def ring_xy():
    return RingContext(["x", "y"])


def ideal(ring, *texts):
    return Ideal(ring, [parse_polynomial(t, ring) for t in texts])


def gauss3_ring():
    return RingContext(["s_1_1", "s_1_2", "s_1_3", "s_2_2", "s_2_3", "s_3_3"])


def test_sum_concatenates_generators():
    R = ring_xy()
    I = ideal(R, "x^2 - y")
    J = ideal(R, "x^2 + y^2 - 1")
    assert sum_ideals(I, J).generators == I.generators + J.generators
    assert sum_ideals(I, Ideal(R, [R.zero()])).generators == I.generators


def test_sum_gaussian_worked_example():
    R = gauss3_ring()
    I = ideal(R, "s_1_3*s_2_2 - s_1_2*s_2_3")
    J = ideal(R, "s_1_3")
    K = sum_ideals(I, J)
    assert len(K.generators) == 2
    assert equal(K, ideal(R, "s_1_2*s_2_3", "s_1_3"))


def test_intersect_coprime_principal():
    R = ring_xy()
    got = intersect(ideal(R, "x"), ideal(R, "y"))
    assert equal(got, ideal(R, "x*y"))


def test_intersect_gaussian_examples():
    R = gauss3_ring()
    got = intersect(ideal(R, "s_1_2", "s_1_3"), ideal(R, "s_2_3", "s_1_3"))
    assert equal(got, ideal(R, "s_1_2*s_2_3", "s_1_3"))
    got2 = intersect(ideal(R, "s_1_2", "s_2_3"), ideal(R, "s_3_3", "s_2_3"))
    assert equal(got2, ideal(R, "s_1_2*s_3_3", "s_2_3"))


def test_intersect_generators_lie_in_both():
    rng = random.Random(17)
    for _ in range(30):
        ring = small_ring(rng)
        I = Ideal(ring, [random_nonzero_poly(rng, ring, max_terms=2, max_exp=2)])
        J = Ideal(ring, [random_nonzero_poly(rng, ring, max_terms=2, max_exp=2)])
        K = intersect(I, J)
        for g in K.generators:
            assert is_member(g, I) and is_member(g, J)


def test_eliminate_parabola_circle():
    R = RingContext(["x", "y"], "lex")
    I = ideal(R, "x^2 - y", "x^2 + y^2 - 1")
    E = eliminate(I, {"x"})
    assert E.ring.variables == ("y",)
    assert [str(g) for g in E.generators] == ["y^2 + y - 1"]


def test_eliminate_empty_and_unit():
    R = ring_xy()
    I = ideal(R, "x^2 - y")
    assert eliminate(I, set()) is I
    T = RingContext(["t", "x"])
    J = ideal(T, "1 - t*x", "x")
    E = eliminate(J, {"t"})
    assert any(g.total_degree() == 0 for g in E.generators)
    assert is_member(E.ring.one(), E)


def test_eliminate_invalid_variable():
    R = ring_xy()
    with pytest.raises(ValueError):
        eliminate(ideal(R, "x"), {"zz"})


def test_saturate_monomial_example():
    R = ring_xy()
    I = ideal(R, "x^2*y", "x*y^2")
    got = saturate(I, R.var("x"))
    assert equal(got, ideal(R, "y"))
    assert is_member(parse_polynomial("y", R), saturate(I, R.var("x")))


def test_saturate_by_unit_and_zero():
    R = ring_xy()
    I = ideal(R, "x^2*y", "x*y^2")
    assert saturate(I, R.one()) is I
    with pytest.raises(ValueError):
        saturate(I, R.zero())


def test_saturate_idempotent():
    rng = random.Random(29)
    for _ in range(25):
        ring = small_ring(rng)
        I = Ideal(ring, [random_nonzero_poly(rng, ring, max_terms=2, max_exp=2)])
        f = random_nonzero_poly(rng, ring, max_terms=2, max_exp=2)
        once = saturate(I, f)
        twice = saturate(once, f)
        assert equal(once, twice)


def test_saturated_determinant_stays_fixed():
    ring = RingContext(["p_11", "p_12", "p_21", "p_22"])
    I = ideal(ring, "p_11*p_22 - p_12*p_21")
    sat = saturate_by_variables(I, ring.variables)
    assert equal(sat, I)


def test_radical_membership_fixtures():
    R = ring_xy()
    assert radical_member(R.var("x"), ideal(R, "x^2"))
    assert radical_member(parse_polynomial("x*y", R), ideal(R, "x^2*y", "x*y^2"))
    assert not radical_member(R.var("x"), ideal(R, "y"))


def test_equal_and_contains():
    R = RingContext(["x", "y"], "lex")
    I = ideal(R, "x^2 - y", "x^2 + y^2 - 1")
    J = ideal(R, "x^2 - y", "x^4 + x^2 - 1")
    assert equal(I, J)
    assert not equal(ideal(R, "x"), ideal(R, "x^2"))
    assert contains(ideal(R, "x"), ideal(R, "x^2", "x*y"))
    assert not contains(ideal(R, "x^2", "x*y"), ideal(R, "x"))


def test_equal_is_equivalence_and_matches_double_containment():
    rng = random.Random(31)
    for _ in range(25):
        ring = small_ring(rng)
        I = Ideal(ring, [random_nonzero_poly(rng, ring, max_terms=2, max_exp=2)])
        J = Ideal(ring, [random_nonzero_poly(rng, ring, max_terms=2, max_exp=2)])
        assert equal(I, I)
        eq = equal(I, J)
        assert eq == (contains(I, J) and contains(J, I))
        if eq:
            assert equal(J, I)


def test_ring_mismatch_everywhere():
    R, S = ring_xy(), RingContext(["a", "b"])
    I, J = ideal(R, "x"), Ideal(S, [S.var("a")])
    for op in (sum_ideals, intersect, equal, contains):
        with pytest.raises(RingMismatchError):
            op(I, J)


def test_variety_union_pointwise():
    # points annihilating the intersection are exactly the union of the
    # two vanishing sets, checked on a rational grid
    R = ring_xy()
    I = ideal(R, "x - 1", "y")
    J = ideal(R, "x + y")
    K = intersect(I, J)
    grid = [Fraction(n, d) for n in range(-2, 3) for d in (1, 2)]
    for x in grid:
        for y in grid:
            on_I = all(g.evaluate([x, y]) == 0 for g in I.generators)
            on_J = all(g.evaluate([x, y]) == 0 for g in J.generators)
            on_K = all(g.evaluate([x, y]) == 0 for g in K.generators)
            assert on_K == (on_I or on_J)


def test_positivity_prune_pd_cone():
    R = gauss3_ring()
    assert positivity_prune(ideal(R, "s_3_3", "s_2_3"), "pd-cone")
    assert not positivity_prune(ideal(R, "s_1_2", "s_2_3"), "pd-cone")


def test_positivity_prune_simplex():
    names = [f"p_{a}{b}{c}" for a in "12" for b in "12" for c in "12"]
    R = RingContext(names)
    flagged = ideal(R, "p_122 + p_222", "p_112 + p_212", "p_121*p_211 - p_111*p_221")
    assert positivity_prune(flagged, "simplex")
    # sign-normalized: an all-negative combination counts too
    assert positivity_prune(ideal(R, "-p_111 - p_112"), "simplex")
    # mixed signs are inconclusive
    assert not positivity_prune(ideal(R, "p_111 - p_112"), "simplex")


def test_positivity_prune_untagged_ring():
    R = ring_xy()
    with pytest.raises(ValueError):
        positivity_prune(ideal(R, "x"), "simplex")
    with pytest.raises(ValueError):
        positivity_prune(ideal(R, "x"), "pd-cone")
    with pytest.raises(ValueError):
        positivity_prune(ideal(gauss3_ring(), "s_1_1"), "half-plane")


def test_intersect_sum_containment_properties():
    rng = random.Random(37)
    for _ in range(20):
        ring = small_ring(rng)
        I = Ideal(ring, [random_nonzero_poly(rng, ring, max_terms=2, max_exp=2)])
        J = Ideal(ring, [random_nonzero_poly(rng, ring, max_terms=2, max_exp=2)])
        S = sum_ideals(I, J)
        assert contains(S, I) and contains(S, J)
        K = intersect(I, J)
        assert contains(I, K) and contains(J, K)


def test_intersect_principal_coprime_is_product():
    rng = random.Random(41)
    for _ in range(40):
        ring = small_ring(rng)
        # coprime monomials: disjoint supports
        k = ring.arity
        e1 = tuple(rng.randint(0, 2) if i < k // 2 + 1 else 0 for i in range(k))
        e2 = tuple(0 if i < k // 2 + 1 else rng.randint(0, 2) for i in range(k))
        if sum(e1) == 0 or sum(e2) == 0:
            continue
        f, g = ring.monomial(e1), ring.monomial(e2)
        assert equal(intersect(Ideal(ring, [f]), Ideal(ring, [g])), Ideal(ring, [f * g]))


def test_cached_groebner_consistent():
    R = RingContext(["x", "y"], "lex")
    I = ideal(R, "x^2 - y", "x^2 + y^2 - 1")
    gb1 = I.groebner()
    gb2 = I.groebner()
    assert gb1 is gb2
    assert contains(I, Ideal(R, list(gb1.elements)))
    assert contains(Ideal(R, list(gb1.elements)), I)
