"""Exact computational-algebra kernel for conditional independence ideals,
toric ideals, and trek separation in structural equation models."""

from .orders import LEX, GREVLEX, Block, Grevlex, Lex, order_from_name, order_to_json
from .poly import (
    Polynomial,
    RingContext,
    RingMismatchError,
    determinant,
    format_polynomial,
)
from .parse import ParseError, parse_generators, parse_polynomial
from .groebner import GroebnerBasis, buchberger, is_groebner, normal_form, s_polynomial
from .ideals import (
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

__version__ = "0.1.0"
