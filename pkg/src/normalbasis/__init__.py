"""Explicit (completely) normal elements in cyclotomic and modular function fields.

Exact cyclotomic arithmetic, Galois subgroup lattices, character-sum and
group-determinant normality tests, the archimedean ratio criterion, and a
formal q-expansion engine for Siegel functions and Delta(tau)/Delta(N tau).
"""

from .cyclotomic import (
    CyclotomicElement,
    cos_half_element,
    cos_plus_one_element,
    cyclotomic_polynomial,
    galois_apply,
    lift_level,
    sqrt_minus_t,
    zeta,
)
from .criterion import (
    ExponentResult,
    PrecisionPolicy,
    affine_power_exponent,
    cos_half_exponent,
    cos_plus_one_exponent,
    min_exponent,
    ratio_upper_bound,
)
from .errors import (
    DomainError,
    EnumerationBoundError,
    HypothesisError,
    IndeterminateError,
    LevelMismatchError,
    VerificationError,
)
from .galois import GaloisGroup, Subgroup, all_subgroups, build_group, characters, phi
from .intervals import ComplexInterval, numeric_eval
from .modular import (
    SiegelIndex,
    IntegerMatrix2x2,
    delta_ratio_expansion,
    siegel_expansion,
    valuation_exponent_sum,
    verify_delta_quotient_complete_normality,
    verify_delta_siegel_product,
)
from .normality import (
    NormalityCertificate,
    character_sum,
    composite_normal_check,
    group_determinant,
    is_completely_normal,
    is_normal,
    is_normal_determinant,
)
from .qseries import QSeries

__version__ = "0.1.0"
