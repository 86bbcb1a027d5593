"""Prime factorization and the arithmetic functions built on it.

Factoring is trial division against a cached prime table, then Pollard rho
with Brent cycling for whatever survives. Primality is deterministic
Miller-Rabin (7-witness set, exact below 2^64), so nothing here is
probabilistic. All functions are pure; the prime table is built once and
never mutated.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import NATURAL_MAX, DomainError, check_natural

# Witnesses proving n < 2^64 composite or prime with no exceptions
# (Sinclair's 7-witness set).
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_TRIAL_LIMIT = 10**6
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_trial_primes_cache = None


def _trial_primes():
    """Primes up to _TRIAL_LIMIT, sieved once and reused."""
    global _trial_primes_cache
    if _trial_primes_cache is None:
        n = _TRIAL_LIMIT
        flags = bytearray([1]) * (n + 1)
        flags[0] = flags[1] = 0
        for p in range(2, math.isqrt(n) + 1):
            if flags[p]:
                flags[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
        _trial_primes_cache = tuple(i for i in range(n + 1) if flags[i])
    return _trial_primes_cache


@dataclass(frozen=True)
class Factorization:
    """An integer with its complete prime-power decomposition.

    ``factors`` is ordered by strictly increasing prime; n = 1 carries the
    empty tuple.
    """

    n: int
    factors: tuple

    def reassemble(self) -> int:
        """Multiply the decomposition back out (round-trip check)."""
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


@lru_cache(maxsize=65536)
def is_prime(n: int) -> bool:
    """Exact primality for naturals below the ceiling."""
    check_natural(n, "n")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 37 * 37:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho_brent(n):
    """One nontrivial factor of an odd composite n, Brent's cycling."""
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            # Backtrack one step at a time from the last saved point.
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
        c += 1  # deterministic restart with the next polynomial


@lru_cache(maxsize=65536)
def factor(n: int) -> Factorization:
    """Complete factorization of n >= 1; factor(1) has the empty list."""
    check_natural(n, "n")
    if n == 0:
        raise DomainError("factor(0) is undefined")
    original = n
    found = {}
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    # Survivors are > 10^12 or prime; split them with rho.
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _pollard_rho_brent(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(original, tuple(sorted(found.items())))


def euler_phi(f: Factorization) -> int:
    """Euler totient from the decomposition: prod p^(e-1) * (p-1)."""
    out = 1
    for p, e in f.factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def carmichael_lambda(f: Factorization) -> int:
    """Carmichael function: lcm of lambda(p^v) over the prime powers.

    lambda(p^v) = phi(p^v) for odd p or v <= 2, and 2^(v-2) for p = 2,
    v >= 3. lambda(1) = lambda(2) = 1.
    """
    out = 1
    for p, e in f.factors:
        if p == 2 and e >= 3:
            block = 2 ** (e - 2)
        else:
            block = p ** (e - 1) * (p - 1)
        out = out * block // math.gcd(out, block)
    return out


def omega(f: Factorization) -> int:
    """Number of distinct prime divisors."""
    return len(f.factors)


def mobius(f: Factorization) -> int:
    """Mobius function: 0 unless squarefree, else (-1)^omega."""
    for _, e in f.factors:
        if e > 1:
            return 0
    return -1 if len(f.factors) % 2 else 1
