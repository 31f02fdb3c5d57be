"""Shared generators for randomized kernel tests (seeded, deterministic)."""

from fractions import Fraction

from cikernel.mixedgraph import MixedGraph
from cikernel.poly import RingContext


def random_monomial(rng, arity, max_exp=3):
    return tuple(rng.randint(0, max_exp) for _ in range(arity))


def random_poly(rng, ring, max_terms=4, max_exp=3, max_coeff=6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        num = rng.randint(-max_coeff, max_coeff)
        den = rng.randint(1, 3)
        terms[random_monomial(rng, ring.arity, max_exp)] = Fraction(num, den)
    return ring.from_dict(terms)


def random_nonzero_poly(rng, ring, **kw):
    while True:
        f = random_poly(rng, ring, **kw)
        if not f.is_zero:
            return f


def small_ring(rng, max_vars=3, order="grevlex"):
    arity = rng.randint(2, max_vars)
    return RingContext([f"x{i}" for i in range(arity)], order)


def random_mixed_graph(rng, max_vertices=5, p_dir=0.35, p_bi=0.25):
    """Random acyclic mixed graph; directed edges only point upward, so
    acyclicity holds by construction."""
    m = rng.randint(2, max_vertices)
    directed = [
        (i, j)
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
        if rng.random() < p_dir
    ]
    bidirected = [
        (i, j)
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
        if rng.random() < p_bi
    ]
    return MixedGraph(m, directed, bidirected)
