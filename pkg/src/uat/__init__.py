"""Exact decision and refutation procedures for unit-additive rings.

A commutative ring is unit-additive when the sum of two units is always a
unit or nilpotent.  This package works with finitely presented algebras
k[X1..Xn]/I over QQ, prime fields and simple extension towers of them, and
with small finite rings given by their operation tables.

The main entry points are re-exported here; the ``uat`` command wraps them.
"""

from .errors import (
    BudgetExceeded, HypothesisViolation, InapplicableOperation, NotZeroDimensional, ParseError, UATError,
)
from .fields import GF, QQ, FieldElement, FieldTower, parse_field
from .ideals import Budget, Ideal, eliminate, equal, ideal_sum, intersect, member, radical_member, saturate
from .poly import MultiPoly, PolyRing
from .quotient import classify, element, is_nilpotent, is_unit
from .spectrum import split_by_idempotent, verify_crt, verify_minimal_primes, zero_dim_components
from .unit_additivity import (
    infer_ua_from_min_primes, locally_ua_from_decomposition, localize, product_rule, ua_refute, uu_refute,
    zero_dim_ua_decide,
)
from .fundamentality import PointSet, finite_set_decide, fundamental_refute, nonvanishing_on_closure
from .base_change import extend_scalars, geometric_ua_refute
from .oracle import FiniteRing, cross_check, parse_ring

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "FieldElement", "FieldTower", "FiniteRing", "GF", "HypothesisViolation", "Ideal",
    "InapplicableOperation", "MultiPoly", "NotZeroDimensional", "ParseError", "PointSet", "PolyRing", "QQ",
    "UATError", "classify", "cross_check", "element", "eliminate", "equal", "extend_scalars", "finite_set_decide",
    "fundamental_refute", "geometric_ua_refute", "ideal_sum", "infer_ua_from_min_primes", "intersect",
    "is_nilpotent", "is_unit", "locally_ua_from_decomposition", "localize", "member", "nonvanishing_on_closure",
    "parse_field", "parse_ring", "product_rule", "radical_member", "saturate", "split_by_idempotent",
    "ua_refute", "uu_refute", "verify_crt", "verify_minimal_primes", "zero_dim_components", "zero_dim_ua_decide",
]
