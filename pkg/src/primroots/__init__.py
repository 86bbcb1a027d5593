"""Primitive roots, special prime families, character sums, and the
least-prime scan machinery behind them."""

from .arith import (
    NATURAL_MAX,
    DomainError,
    gcd,
    is_perfect_square,
    jacobi,
    log_integral,
    mod_pow,
)
from .artin import (
    ArtinConstant,
    DensityReport,
    ScanRecord,
    ScanSummary,
    artin_constant,
    conjecture_scan,
    least_prime_with_primitive_root,
    prime_counts,
    summarize_scan,
)
from .charsum import (
    IntervalDecomposition,
    PsiEvaluation,
    decompose_interval,
    psi_divisor_dependent,
    psi_divisor_free,
)
from .factorize import (
    Factorization,
    carmichael_lambda,
    euler_phi,
    factor,
    is_prime,
    mobius,
    omega,
)
from .primroot import (
    OrderResult,
    count_primitive_roots,
    is_lambda_primitive_root,
    is_primitive_root_prime,
    least_primitive_root,
    lift_primitive_root,
    multiplicative_order,
)
from .special_primes import (
    FERMAT_PRIMES,
    GermainForm,
    KPow2Enumeration,
    PrimeClass,
    classify_prime,
    enumerate_k_pow2_primes,
    fermat_primitive_root_test,
    germain_decompose,
    germain_primitive_root_test,
    sieve_primes,
)

__version__ = "0.1.0"
