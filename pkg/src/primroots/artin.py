"""Artin constant, prime-counting densities, and the least-prime scan.

The density side is deliberately empirical: the correction factor c(q) is
never computed (its closed form is external), so density reports carry the
plain Artin constant as the reference and expose density / a1 as the
measured estimate of c(q).
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .arith import DomainError, check_natural, is_perfect_square
from .primroot import is_primitive_root_prime
from .special_primes import germain_decompose, sieve_primes

DEFAULT_SCAN_CAP = 10**5
_REFERENCE_CUTOFF = 10**6

# Below e^e the (log log q)^3 factor is <= 1 and the conjectured bound is
# degenerate; rows for q < 16 carry the raw least prime and no ratio.
BOUND_MIN_Q = 16


@dataclass(frozen=True)
class ArtinConstant:
    """Truncated Euler product for a1 with a crude rigorous tail envelope."""

    truncation: int
    value: float
    tail_bound: float


@dataclass(frozen=True)
class DensityReport:
    """pi(x), pi_q(x) and their ratio against the Artin reference."""

    q: int
    x: int
    pi_x: int
    pi_q_x: int
    density: float
    artin_reference: float

    @property
    def c_estimate(self) -> float:
        """Empirical stand-in for the correction factor: density / a1."""
        return self.density / self.artin_reference


@dataclass(frozen=True)
class ScanRecord:
    """One row of the least-prime scan.

    least_p is None when the search exhausted its cap (recorded, not
    raised). bound_value and ratio are None below BOUND_MIN_Q where the
    conjectured bound degenerates.
    """

    q: int
    least_p: int
    bound_value: float
    ratio: float
    germain_hit: bool


@dataclass(frozen=True)
class ScanSummary:
    records: int
    exhausted: int
    max_ratio: float
    max_ratio_q: int
    germain_fraction: float


@lru_cache(maxsize=4)
def _cached_primes(limit):
    # Scans re-enter with the same cap thousands of times; sieve once.
    return tuple(sieve_primes(limit))


@lru_cache(maxsize=8)
def artin_constant(prime_cutoff: int) -> ArtinConstant:
    """Partial Euler product prod_{p <= cutoff} (1 - 1/(p(p-1))).

    tail_bound = 1/cutoff dominates the omitted log-product mass since
    sum_{n > N} 1/(n(n-1)) telescopes to 1/N.
    """
    check_natural(prime_cutoff, "prime_cutoff")
    if prime_cutoff < 2:
        raise DomainError(f"prime_cutoff must be >= 2, got {prime_cutoff}")
    value = 1.0
    for p in sieve_primes(prime_cutoff):
        value *= 1.0 - 1.0 / (p * (p - 1))
    return ArtinConstant(truncation=prime_cutoff, value=value,
                         tail_bound=1.0 / prime_cutoff)


def reference_artin_constant() -> float:
    """a1 at the default desk-scale truncation (good to ~1e-7)."""
    return artin_constant(_REFERENCE_CUTOFF).value


def _check_base(q):
    check_natural(q, "q")
    if q < 2:
        raise DomainError(f"q = {q} is excluded (0 and +-1 are never primitive roots)")
    if is_perfect_square(q):
        raise DomainError(f"q = {q} is a perfect square, excluded")


def prime_counts(q: int, x: int) -> DensityReport:
    """Exact pi(x) and pi_q(x) by sieving and testing every prime.

    pi(x) counts every prime <= x; pi_q(x) counts only p >= 3 coprime to q
    (the search domain for primitive-root primes; the degenerate p = 2,
    where every odd q has order 1 = p - 1, is excluded).
    """
    _check_base(q)
    check_natural(x, "x")
    if x < 3:
        raise DomainError(f"x must be >= 3, got {x}")
    primes = sieve_primes(x)
    pi_q = 0
    for p in primes:
        if p >= 3 and q % p != 0 and is_primitive_root_prime(q, p):
            pi_q += 1
    return DensityReport(q=q, x=x, pi_x=len(primes), pi_q_x=pi_q,
                         density=pi_q / len(primes),
                         artin_reference=reference_artin_constant())


def least_prime_with_primitive_root(q: int, cap: int = DEFAULT_SCAN_CAP):
    """Smallest prime p >= 3, coprime to q, with q a primitive root mod p.

    Primes dividing q are skipped, not counted as failures. Returns None
    when no prime <= cap qualifies (explicit exhaustion, not an error).
    """
    _check_base(q)
    check_natural(cap, "cap")
    if cap < 3:
        raise DomainError(f"cap must be >= 3, got {cap}")
    for p in _cached_primes(cap):
        if p < 3 or q % p == 0:
            continue
        if is_primitive_root_prime(q, p):
            return p
    return None


def conjecture_bound(q: int) -> float:
    """(log q)(log log q)^3 in natural logs, for q >= BOUND_MIN_Q."""
    if q < BOUND_MIN_Q:
        raise DomainError(f"bound is only stable for q >= {BOUND_MIN_Q}")
    return math.log(q) * math.log(math.log(q)) ** 3


def _scan_record(q, cap):
    least = least_prime_with_primitive_root(q, cap)
    bound = conjecture_bound(q) if q >= BOUND_MIN_Q else None
    ratio = least / bound if least is not None and bound is not None else None
    hit = least is not None and germain_decompose(least) is not None
    return ScanRecord(q=q, least_p=least, bound_value=bound, ratio=ratio,
                      germain_hit=hit)


def _scan_chunk(args):
    q_lo, q_hi, cap = args
    return [_scan_record(q, cap) for q in range(q_lo, q_hi + 1)
            if q >= 2 and not is_perfect_square(q)]


def conjecture_scan(q_min: int, q_max: int, cap: int = DEFAULT_SCAN_CAP,
                    threads: int = 1, progress=None) -> list:
    """One ScanRecord per admissible q in [q_min, q_max], ascending.

    Squares and q < 2 are skipped automatically. With threads > 1 the
    q-range is partitioned into contiguous chunks across worker processes;
    chunks are merged in order, so output is deterministic either way.
    progress, if given, is called as progress(done, total) after each chunk.
    """
    check_natural(q_min, "q_min")
    check_natural(q_max, "q_max")
    if q_min > q_max:
        raise DomainError(f"empty scan range [{q_min}, {q_max}]")
    check_natural(cap, "cap")
    span = q_max - q_min + 1
    chunk = max(1, min(2048, span // max(1, 4 * threads) + 1))
    bounds = [(lo, min(lo + chunk - 1, q_max), cap)
              for lo in range(q_min, q_max + 1, chunk)]
    records = []
    if threads <= 1:
        for i, b in enumerate(bounds):
            records.extend(_scan_chunk(b))
            if progress:
                progress(min((i + 1) * chunk, span), span)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for i, part in enumerate(pool.map(_scan_chunk, bounds)):
                records.extend(part)
                if progress:
                    progress(min((i + 1) * chunk, span), span)
    return records


def summarize_scan(records) -> ScanSummary:
    """Max ratio (over rows where it is defined) and the Germain-hit rate."""
    exhausted = sum(1 for r in records if r.least_p is None)
    ratios = [(r.ratio, r.q) for r in records if r.ratio is not None]
    max_ratio, max_q = max(ratios) if ratios else (None, None)
    hits = sum(1 for r in records if r.germain_hit)
    frac = hits / len(records) if records else 0.0
    return ScanSummary(records=len(records), exhausted=exhausted,
                       max_ratio=max_ratio, max_ratio_q=max_q,
                       germain_fraction=frac)
