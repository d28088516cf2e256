"""Exact model of a maximal function field in characteristic three.

Computes the Weierstrass semigroup or gap set at every place of the
curve x^q + x + (y + y^3 + ... + y^(q/3))^2 = 0 over F_{q^2} (q = 3^t),
its automorphism group, and the supporting polynomial families, and
verifies every claim with machine-checkable certificates.
"""

__version__ = "0.1.0"

from .curve import Curve, HermitianLift, Place, PlaceClass
from .fields import FieldElement, FieldLevel, FieldTower, make_tower, \
    mult_order, sqrt, trace_p
from .localseries import LocalData, TrackedFunction, TruncatedSeries
from .semigroups import GapSet, NumericalSemigroup, is_cofinite_monoid
from .weierstrass import SemigroupAssignment, full_census, semigroup_at, \
    verify_gaps, verify_nongaps

__all__ = [
    "Curve", "HermitianLift", "Place", "PlaceClass",
    "FieldElement", "FieldLevel", "FieldTower", "make_tower",
    "mult_order", "sqrt", "trace_p",
    "LocalData", "TrackedFunction", "TruncatedSeries",
    "GapSet", "NumericalSemigroup", "is_cofinite_monoid",
    "SemigroupAssignment", "full_census", "semigroup_at",
    "verify_gaps", "verify_nongaps",
]
