"""Toy-scale solvers for the discrete entropoid logarithm."""

from __future__ import annotations

import itertools
import random
from typing import Optional

from ..algebra import Element, EntropoidParams
from ..errors import TooLarge
from ..powindex import PowerIndex, b_max, pow_fast, to_digits

BRUTE_GUARD = 1 << 20


def delp_random(E: EntropoidParams, g, y, budget: int, rng: random.Random,
                a_bound: Optional[int] = None) -> Optional[PowerIndex]:
    """Guess random indices with base >= 3 until one maps g to y."""
    y = Element(*y)
    top = max(4, b_max(E))
    a_bound = a_bound or (E.p - 1) ** 2 + 1
    for _ in range(budget):
        base = rng.randrange(3, top)
        a = rng.randrange(1, a_bound)
        n = len(to_digits(a, base))
        idx = PowerIndex.from_int(a, [rng.randrange(base - 1) for _ in range(n)], base)
        if pow_fast(E, g, idx) == y:
            return idx
    return None


def patterns(n: int, base: int):
    return itertools.product(range(base - 1), repeat=n)


def largest_odd_base(E: EntropoidParams) -> int:
    """Largest odd base not above b_max (at least 3)."""
    b = b_max(E)
    b -= 1 - b % 2
    return max(b, 3)


def delp_brute(E: EntropoidParams, g, y, base: Optional[int] = None,
               guard: int = BRUTE_GUARD) -> Optional[PowerIndex]:
    """Walk a = 1, 2, ... (p-1)^2 and every pattern for each a.

    The base defaults to the largest odd base not above b_max; small odd
    bases can miss part of the generated set.
    """
    base = base or largest_odd_base(E)
    if base < 3 or base % 2 == 0:
        raise ValueError("base must be odd and at least 3")
    top = (E.p - 1) ** 2
    if top > guard:
        raise TooLarge(f"(p-1)^2={top} exceeds guard {guard}")
    y = Element(*y)
    for a in range(1, top + 1):
        n = len(to_digits(a, base))
        for pat in patterns(n, base):
            idx = PowerIndex.from_int(a, pat, base)
            if pow_fast(E, g, idx) == y:
                return idx
    return None


def delp_brute_all(E: EntropoidParams, g, base: Optional[int] = None,
                   guard: int = BRUTE_GUARD) -> dict[Element, PowerIndex]:
    """First index reaching each element, in the brute-force search order."""
    base = base or largest_odd_base(E)
    top = (E.p - 1) ** 2
    if top > guard:
        raise TooLarge(f"(p-1)^2={top} exceeds guard {guard}")
    found: dict[Element, PowerIndex] = {}
    for a in range(1, top + 1):
        n = len(to_digits(a, base))
        for pat in patterns(n, base):
            idx = PowerIndex.from_int(a, pat, base)
            found.setdefault(pow_fast(E, g, idx), idx)
    return found
