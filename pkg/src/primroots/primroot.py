"""Multiplicative orders and primitive-root tests.

Covers the F_p test (strip one prime divisor of p-1 at a time), the
lambda-primitive-root test in Z/nZ, and the lift from prime-power moduli
to composites. "Primitive root mod composite n" always means an element
of maximal order lambda(n): Z/nZ is not cyclic in general, and that is
the only reading under which the lift is well-formed.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _gcd, isqrt

from .arith import DomainError, check_natural
from .factorize import carmichael_lambda, factor, is_prime


@dataclass(frozen=True)
class OrderResult:
    """Multiplicative order of u in (Z/nZ)* with the group exponent."""

    n: int
    u: int
    order: int
    group_exponent: int
    is_lambda_primitive: bool


def _require_prime(p, name="p"):
    check_natural(p, name)
    if not is_prime(p):
        raise DomainError(f"{name} = {p} is not prime")


@lru_cache(maxsize=65536)
def _prime_test_exponents(p):
    """Exponents (p-1)/l for each prime l | p-1, largest quotient first."""
    return tuple((p - 1) // ell for ell, _ in factor(p - 1).factors)


@lru_cache(maxsize=65536)
def _lambda_test_exponents(n):
    lam = carmichael_lambda(factor(n))
    return lam, tuple(lam // ell for ell, _ in factor(lam).factors)


def multiplicative_order(u: int, n: int) -> OrderResult:
    """Exact order of u mod n, found by peeling primes off lambda(n).

    Starts from the group exponent and divides out each prime factor while
    the power still lands on 1; never enumerates all divisors.
    """
    check_natural(u, "u")
    check_natural(n, "n")
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    u %= n
    if _gcd(u, n) != 1:
        raise DomainError(f"u = {u} is not a unit mod {n}")
    lam = carmichael_lambda(factor(n))
    order = lam
    for ell, _ in factor(lam).factors:
        while order % ell == 0 and pow(u, order // ell, n) == 1:
            order //= ell
    return OrderResult(n=n, u=u, order=order, group_exponent=lam,
                       is_lambda_primitive=order == lam)


def is_primitive_root_prime(u: int, p: int) -> bool:
    """Test u for primitive root mod prime p.

    True iff u^((p-1)/l) != 1 mod p for every prime l | p-1; one
    exponentiation per distinct prime divisor of p-1.
    """
    _require_prime(p)
    check_natural(u, "u")
    u %= p
    if u == 0:
        raise DomainError(f"u is not coprime to p = {p}")
    for e in _prime_test_exponents(p):
        if pow(u, e, p) == 1:
            return False
    return True


def is_lambda_primitive_root(u: int, n: int) -> bool:
    """True iff u has the maximal order lambda(n) in (Z/nZ)*."""
    check_natural(u, "u")
    check_natural(n, "n")
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    u %= n
    if _gcd(u, n) != 1:
        raise DomainError(f"u = {u} is not a unit mod {n}")
    _, exponents = _lambda_test_exponents(n)
    for e in exponents:
        if pow(u, e, n) == 1:
            return False
    return True


def lift_primitive_root(u: int, f) -> bool:
    """Lift the maximal-order property from prime powers to their product.

    Tests u against every prime-power divisor of f.n; if all pass, the
    conclusion (u has order lambda(n) mod n) is re-verified before
    returning True, so a True answer is the checked claim, not a trusted
    one. The input u must not be 0, +-1 mod n, or a perfect square (the
    global exclusions; squares are never maximal-order elements).
    """
    check_natural(u, "u")
    n = f.n
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    r = u % n
    if _gcd(r, n) != 1:
        raise DomainError(f"u = {u} is not a unit mod {n}")
    if r == 1 or r == n - 1:
        raise DomainError("u = +-1 mod n is excluded from the lift")
    s = isqrt(u)
    if s * s == u:
        raise DomainError(f"u = {u} is a perfect square, excluded from the lift")
    for p, e in f.factors:
        if not is_lambda_primitive_root(u, p**e):
            return False
    if not is_lambda_primitive_root(u, n):
        raise RuntimeError(
            f"lift inconsistency at u = {u}, n = {n}: prime-power tests passed "
            "but u is not maximal-order mod n")
    return True


def least_primitive_root(p: int) -> int:
    """Smallest primitive root of the prime p.

    For p >= 3 this is the least tau >= 2 passing the F_p test (1 never
    generates); for p = 2 the unit group is trivial and 1 generates it.
    """
    _require_prime(p)
    if p == 2:
        return 1
    tau = 2
    while not is_primitive_root_prime(tau, p):
        tau += 1
    return tau


def count_primitive_roots(p: int) -> int:
    """Count primitive roots in [1, p-1] by running the test on each u.

    Deliberately the per-element test, not the phi(p-1) formula: the count
    identity against euler_phi is a cross-check, so both sides stay
    independent.
    """
    _require_prime(p)
    exponents = _prime_test_exponents(p)
    count = 0
    for u in range(1, p):
        for e in exponents:
            if pow(u, e, p) == 1:
                break
        else:
            count += 1
    return count
