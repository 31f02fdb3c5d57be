"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is an immutable list of (monomial, coefficient) terms kept
sorted in strictly decreasing order of the owning ring's monomial order.
Monomials are plain exponent tuples.  Coefficients are ``Fraction``;
no floating point enters the kernel anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .orders import GREVLEX, Block, order_from_name


class RingMismatchError(ValueError):
    """Raised when an operation mixes polynomials from different rings."""


class RingContext:
    """A polynomial ring: an ordered tuple of variable names plus a monomial
    order.  Two contexts are interchangeable iff both agree."""

    __slots__ = ("variables", "order", "_index")

    def __init__(self, variables, order=GREVLEX):
        variables = tuple(variables)
        if not variables:
            raise ValueError("ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for name in variables:
            if not name or not (name[0].isalpha()):
                raise ValueError(f"invalid variable name {name!r}")
        order = order_from_name(order)
        if isinstance(order, Block) and not 1 <= order.k < len(variables):
            raise ValueError("block order k must satisfy 1 <= k < arity")
        self.variables = variables
        self.order = order
        self._index = {name: i for i, name in enumerate(variables)}

    @property
    def arity(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, (((0,) * self.arity, c),))

    def var(self, name):
        exps = [0] * self.arity
        exps[self.index(name)] = 1
        return Polynomial(self, ((tuple(exps), Fraction(1)),))

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.arity:
            raise ValueError("exponent tuple has wrong length")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero()
        return Polynomial(self, ((exps, coeff),))

    def from_dict(self, terms):
        """Build a polynomial from {exponent tuple: coefficient}, dropping
        zeros and sorting into canonical order."""
        key = self.order.key
        items = [(e, c) for e, c in terms.items() if c != 0]
        items.sort(key=lambda t: key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def with_order(self, order):
        return RingContext(self.variables, order)

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return f"RingContext({list(self.variables)}, {self.order!r})"


# -- monomial helpers (exponent tuples) -------------------------------------

def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v):
    """True iff monomial u divides v."""
    return all(a <= b for a, b in zip(u, v))


def mono_div(u, v):
    """u / v, assuming v divides u."""
    return tuple(a - b for a, b in zip(u, v))


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_coprime(u, v):
    return all(a == 0 or b == 0 for a, b in zip(u, v))


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        # terms must already be canonical (sorted desc, no zeros); use
        # ring.from_dict for arbitrary input.
        self.ring = ring
        self.terms = terms

    # -- predicates and accessors -------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def leading_term(self, order=None):
        """(coefficient, monomial) maximal under the given order (default:
        the ring's own order)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            e, c = self.terms[0]
        else:
            key = order.key
            e, c = max(self.terms, key=lambda t: key(t[0]))
        return c, e

    def leading_monomial(self, order=None):
        return self.leading_term(order)[1]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[0]

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(e) for e, _ in self.terms)

    def support(self):
        """Indices of variables that actually occur."""
        used = set()
        for e, _ in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(i)
        return used

    def coefficient(self, exps):
        exps = tuple(exps)
        for e, c in self.terms:
            if e == exps:
                return c
        return Fraction(0)

    def constant_term(self):
        return self.coefficient((0,) * self.ring.arity)

    # -- arithmetic ----------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"polynomials live in different rings: "
                f"{self.ring!r} vs {other.ring!r}"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check_ring(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            nc = acc.get(e, 0) + c
            if nc:
                acc[e] = nc
            else:
                acc.pop(e, None)
        return self.ring.from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_ring(other)
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = mono_mul(e1, e2)
                nc = acc.get(e, 0) + c1 * c2
                if nc:
                    acc[e] = nc
                else:
                    del acc[e]
        return self.ring.from_dict(acc)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((e, c * k) for e, k in self.terms))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self, order=None):
        if self.is_zero:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    # -- evaluation and variable maps ----------------------------------

    def evaluate(self, values):
        """Evaluate at a point given as a sequence (by variable position)
        or a mapping from variable name to value.  Exact arithmetic."""
        if isinstance(values, dict):
            point = [Fraction(values[name]) for name in self.ring.variables]
        else:
            point = [Fraction(v) for v in values]
            if len(point) != self.ring.arity:
                raise ValueError("point has wrong length")
        total = Fraction(0)
        for e, c in self.terms:
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x**k
            total += term
        return total

    def map_ring(self, target, rename=None):
        """Reinterpret this polynomial in another ring.  Variables are
        matched by name, through the optional ``rename`` map.  Every used
        variable must exist in the target."""
        rename = rename or {}
        src = self.ring.variables
        positions = {}
        for i in self.support():
            name = rename.get(src[i], src[i])
            positions[i] = target.index(name)
        acc = {}
        for e, c in self.terms:
            exps = [0] * target.arity
            for i, x in enumerate(e):
                if x:
                    exps[positions[i]] += x
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + c
        return target.from_dict(acc)

    # -- dunder plumbing -----------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<poly {format_polynomial(self)}>"


def format_polynomial(f):
    """Canonical text form: terms in decreasing ring order, '^' powers,
    '*' between factors, positive leading sign suppressed.  Output parses
    back to the same polynomial."""
    if f.is_zero:
        return "0"
    names = f.ring.variables
    pieces = []
    for pos, (exps, coeff) in enumerate(f.terms):
        neg = coeff < 0
        mag = -coeff if neg else coeff
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = _format_fraction(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_fraction(mag)] + factors)
        if pos == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


def _format_fraction(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def determinant(matrix):
    """Determinant of a square matrix of polynomials (all in one ring),
    by expansion along the first column with memoization on column sets."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    ring = matrix[0][0].ring
    cache = {}

    def minor(row, cols):
        if len(cols) == 1:
            return matrix[row][cols[0]]
        got = cache.get((row, cols))
        if got is not None:
            return got
        total = ring.zero()
        for j, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero:
                continue
            rest = cols[:j] + cols[j + 1 :]
            sub = minor(row + 1, rest)
            term = entry * sub
            total = total - term if j % 2 else total + term
        cache[(row, cols)] = total
        return total

    return minor(0, tuple(range(n)))
