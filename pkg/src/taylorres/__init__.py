"""Taylor resolutions of monomial ideals: minimality, linear quotients and
Betti numbers in exact arithmetic."""

from .betti import BettiTable, betti_formula, betti_oracle, has_linear_resolution
from .classify import classify
from .errors import EnvelopeError, PreconditionError
from .monomial import Monomial, MonomialIdeal, minimalize, parse_ideal
from .quotients import OrderedIdeal, check_order, find_order
from .taylor import TaylorComplex, build_taylor, is_minimal, verify_complex

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "EnvelopeError", "Monomial", "MonomialIdeal", "OrderedIdeal",
    "PreconditionError", "TaylorComplex", "betti_formula", "betti_oracle",
    "build_taylor", "check_order", "classify", "find_order",
    "has_linear_resolution", "is_minimal", "minimalize", "parse_ideal",
    "verify_complex",
]
