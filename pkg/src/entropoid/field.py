"""Prime-field helpers: primality, safe primes, inverses and sampling."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ExhaustedAttempts, ZeroInverse

RandomSource = random.Random

# Deterministic Miller-Rabin witnesses; this set is exact below 3.3e24.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3317044064679887385961981
_RANDOM_ROUNDS = 64

_SMALL_PRIMES = [n for n in range(3, 2000) if all(n % d for d in range(2, math.isqrt(n) + 1))]


def default_rng(seed: Optional[int] = None) -> RandomSource:
    """Seeded PRNG for reproducible runs, OS entropy when seed is None."""
    if seed is None:
        return random.SystemRandom()
    return random.Random(seed)


def _miller_rabin_round(n: int, d: int, s: int, base: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rng: Optional[RandomSource] = None) -> bool:
    """Miller-Rabin. Exact below ~2^81, else 64 random rounds (error < 2^-128)."""
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    for sp in _SMALL_PRIMES:
        if n == sp:
            return True
        if n % sp == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_LIMIT:
        return all(_miller_rabin_round(n, d, s, b) for b in _DETERMINISTIC_BASES)
    rng = rng or random.SystemRandom()
    return all(_miller_rabin_round(n, d, s, rng.randrange(2, n - 1))
               for _ in range(_RANDOM_ROUNDS))


def is_safe_prime(p: int) -> bool:
    if p < 5 or p % 2 == 0:
        return False
    return is_probable_prime((p - 1) // 2) and is_probable_prime(p)


@dataclass(frozen=True)
class PrimeModulus:
    p: int
    q: Optional[int] = None

    @property
    def bits(self) -> int:
        return self.p.bit_length()

    @property
    def byte_width(self) -> int:
        return (self.bits + 7) // 8

    @classmethod
    def of(cls, p: int) -> "PrimeModulus":
        """Wrap a prime, filling in q when p is safe."""
        return cls(p, (p - 1) // 2 if is_safe_prime(p) else None)


def _sieve_ok(q: int) -> bool:
    # q and 2q+1 must both avoid every small prime factor
    for sp in _SMALL_PRIMES:
        if sp >= q:
            return True
        if q % sp == 0 or (2 * q + 1) % sp == 0:
            return False
    return True


def gen_safe_prime(bits: int, rng: RandomSource, max_attempts: int = 10_000_000) -> PrimeModulus:
    """Random safe prime p = 2q + 1 with exactly `bits` bits."""
    if bits < 3:
        raise ValueError("bits must be at least 3")
    qbits = bits - 1
    for _ in range(max_attempts):
        q = rng.getrandbits(qbits) | (1 << (qbits - 1)) | 1
        if q.bit_length() != qbits:
            continue
        if not _sieve_ok(q):
            continue
        if is_probable_prime(q, rng) and is_probable_prime(2 * q + 1, rng):
            return PrimeModulus(2 * q + 1, q)
    raise ExhaustedAttempts(f"no {bits}-bit safe prime after {max_attempts} candidates")


def mod_inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroInverse("0 has no inverse")
    return pow(a, -1, p)


def rand_field_element(p: int, rng: RandomSource, exclude: Iterable[int] = ()) -> int:
    """Uniform residue in [0, p) minus `exclude`, by rejection."""
    banned = set(exclude)
    if len(banned) >= p:
        raise ValueError("exclude covers the whole field")
    while True:
        v = rng.randrange(p)
        if v not in banned:
            return v
