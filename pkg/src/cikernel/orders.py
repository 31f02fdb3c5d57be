"""Monomial orders: lex, graded reverse lex, and block elimination orders.

An order is represented by an object with a ``key`` method mapping an
exponent tuple to something tuple-comparable; larger key means larger
monomial.  Keys from different orders must never be compared.
"""

from __future__ import annotations


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Lex:
    name = "lex"

    def key(self, exps):
        return exps

    def __repr__(self):
        return "lex"

    def __eq__(self, other):
        return isinstance(other, Lex)

    def __hash__(self):
        return hash("lex")


class Grevlex:
    name = "grevlex"

    def key(self, exps):
        return _grevlex_key(exps)

    def __repr__(self):
        return "grevlex"

    def __eq__(self, other):
        return isinstance(other, Grevlex)

    def __hash__(self):
        return hash("grevlex")


class Block:
    """Elimination order: grevlex on the first ``k`` variables, ties broken
    by grevlex on the rest.  Any monomial involving a variable from the
    first block beats every monomial that avoids the block, which is what
    makes elimination work."""

    def __init__(self, k):
        if k < 1:
            raise ValueError("block order needs k >= 1")
        self.k = k
        self.name = f"block({k})"

    def key(self, exps):
        k = self.k
        return (_grevlex_key(exps[:k]), _grevlex_key(exps[k:]))

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Block) and other.k == self.k

    def __hash__(self):
        return hash(("block", self.k))


LEX = Lex()
GREVLEX = Grevlex()


def order_from_name(spec):
    """Map 'lex', 'grevlex', or {'block': k} to an order object."""
    if isinstance(spec, (Lex, Grevlex, Block)):
        return spec
    if spec == "lex":
        return LEX
    if spec == "grevlex":
        return GREVLEX
    if isinstance(spec, dict) and set(spec) == {"block"}:
        return Block(int(spec["block"]))
    raise ValueError(f"unknown monomial order: {spec!r}")


def order_to_json(order):
    if isinstance(order, Block):
        return {"block": order.k}
    return order.name
