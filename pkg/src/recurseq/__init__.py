"""Exact analysis of prime divisors of recurrence sequences."""

from .errors import BoundExceeded, CapExceeded, DomainError, RecurseqError, VerificationFailure
from .exact_algebra import (
    IntPoly,
    cyclotomic,
    p_adic_valuation,
    poly_gcd,
    poly_product,
    resultant,
    reverse_poly,
)
from .recurrences import (
    IntPolynomialSequence,
    LinearRecurrence,
    NonlinearRecurrence,
    RationalGF,
    evaluate,
    from_polynomial,
    generating_function,
    is_degenerate,
    load_spec,
    minimal_order,
    source_from_spec,
)
from .transforms import (
    ScalingReport,
    SubsequenceSpec,
    phi_b,
    scaling_candidate,
    strip_prime,
    subsequence_recurrence,
    verify_scaling,
)
from .modular import (
    PeriodCertificate,
    is_null_divisor,
    period_mod,
    prime_index,
    unbounded_on_classes,
)
from .divisors import (
    DivisorReport,
    coprime_prime_divisors,
    enumerate_prime_divisors,
    is_prime_divisor,
    schur_profile,
    verify_generalized,
    verify_infinitude,
)
from .topology import (
    CongruenceClass,
    continuity_certificate,
    euclid_witness,
    fm_basis_valid,
    intersect,
    member,
)

__version__ = "0.1.0"
