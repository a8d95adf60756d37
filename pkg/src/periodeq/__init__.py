"""Exact Gaussian period equations, monogeneity classification, and
cyclotomic match surveys for primes p = e*f + 1."""

from .intpoly import (
    IntPoly,
    NotSelfReciprocal,
    NotSquarefree,
    OddDegree,
    Signature,
    cyclotomic_prime,
    demoivre_reduce,
    demoivre_unfold,
    discriminant,
    is_self_reciprocal,
    resultant,
    signature,
)
from .monogeneity import (
    ClassificationRecord,
    FieldDiscriminant,
    MatchKind,
    NotDivisible,
    NotPerfectSquare,
    classify,
    field_discriminant,
    index_squared,
)
from .number_theory import (
    CompositeP,
    InvalidContext,
    PrimeContext,
    factorize,
    is_prime,
    make_context,
    primitive_root,
)
from .periods import (
    CycInt,
    MismatchedP,
    NonIntegerCoefficient,
    PeriodPolynomial,
    period,
    period_polynomial_exact,
    period_polynomial_modular,
)
from .scanner import (
    CubicGrowthReport,
    ScanFailure,
    ScanMode,
    ScanReport,
    ScanSpec,
    conjecture_check,
    cubic_growth,
    doublet_survey,
    missing_e_census,
    scan,
)

__version__ = "0.1.0"
