"""Generator search, generated sets and the even/odd parity distinguisher."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional

from .algebra import Element, EntropoidParams, all_units, box_neg, is_unit_member, random_unit, star
from .errors import ExhaustedAttempts, Inconclusive, TooLarge
from .powindex import PowerIndex, pow_fast

SPAN_GUARD = 1 << 20
GEN_ATTEMPTS = 100_000


@dataclass(frozen=True)
class GeneratorCertificate:
    g: Element
    checks_passed: tuple[bool, bool, bool, bool, bool]
    claimed_order: int
    source: Optional[Element] = None  # the full generator a Sylow one was built from


def generator_checks(E: EntropoidParams, g) -> tuple[bool, bool, bool, bool, bool]:
    """The five inequalities a candidate generator must satisfy."""
    p = E.p
    g = Element(*g)
    gg = star(E, g, g)
    g_gg = star(E, g, gg)
    gg_g = star(E, gg, g)
    return (
        g != pow_fast(E, g, PowerIndex.zeros(p, 2)),
        gg != pow_fast(E, g, PowerIndex.zeros(p - 1, 2)),
        g_gg != pow_fast(E, g, PowerIndex.zeros(p - 2, 2)),
        g_gg != gg_g,
        star(E, g, g_gg) != star(E, g_gg, g),
    )


def gen(E: EntropoidParams, rng: random.Random,
        max_attempts: int = GEN_ATTEMPTS) -> GeneratorCertificate:
    """Random element of E* passing all five generator checks."""
    for _ in range(max_attempts):
        g = random_unit(E, rng)
        checks = generator_checks(E, g)
        if all(checks):
            return GeneratorCertificate(g, checks, (E.p - 1) ** 2)
    raise ExhaustedAttempts(f"no generator after {max_attempts} candidates")


def sylow_from(E: EntropoidParams, g) -> Element:
    """g*(g*(g*((g*g)*g)))."""
    g = Element(*g)
    t = star(E, star(E, g, g), g)
    for _ in range(3):
        t = star(E, g, t)
    return t


def gen_q(E: EntropoidParams, rng: random.Random,
          max_attempts: int = GEN_ATTEMPTS) -> GeneratorCertificate:
    """Generator of the order-q^2 subquasigroup for a safe prime p = 2q + 1."""
    q = E.modulus.q
    if q is None:
        raise ValueError("p must be a safe prime")
    cert = gen(E, rng, max_attempts)
    return GeneratorCertificate(sylow_from(E, cert.g), cert.checks_passed, q * q, cert.g)


def span2(E: EntropoidParams, x, guard: int = SPAN_GUARD) -> frozenset[Element]:
    """Powers of x with base 2 and the all-zero pattern."""
    bound = 2 * (E.p - 1)
    if bound > guard:
        raise TooLarge(f"2(p-1)={bound} exceeds guard {guard}")
    x = Element(*x)
    out = {x}
    for a in range(2, bound + 2):
        v = pow_fast(E, x, PowerIndex.zeros(a, 2))
        if v == x:
            break
        out.add(v)
    return frozenset(out)


def span(E: EntropoidParams, x, guard: int = SPAN_GUARD) -> frozenset[Element]:
    """Closure of {x} under the product."""
    p = E.p
    limit = min(guard, p * p)
    if (p - 1) ** 2 > guard:
        raise TooLarge(f"(p-1)^2 exceeds guard {guard}")
    return frozenset(Element(*v) for v in E.kernel.span(tuple(x), limit))


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


def parity_test(E: EntropoidParams, g, y) -> Parity:
    """Even/odd integer part of y = g^A, read off y^(p-1)."""
    t = pow_fast(E, y, PowerIndex.zeros(E.p - 1, 2))
    if t == E.one_star:
        return Parity.EVEN
    if t == box_neg(E, E.one_star):
        return Parity.ODD
    raise Inconclusive(f"y^(p-1) = {tuple(t)} is neither unit root")


def conjecture_gen_census(E: EntropoidParams) -> dict:
    """Exhaustive look at whether passing the checks implies full order.

    Returns counts of candidates that pass, and of those how many actually
    generate E*. Intended for small p only.
    """
    full = (E.p - 1) ** 2
    passed = generated = 0
    for x in all_units(E):
        if all(generator_checks(E, x)):
            passed += 1
            generated += len(span(E, x)) == full
    return {"passed": passed, "generators": generated}


def conjecture_genq_census(E: EntropoidParams) -> dict:
    """Sylow sizes produced from every element passing the checks."""
    q = E.modulus.q
    sizes: dict[int, int] = {}
    for x in all_units(E):
        if all(generator_checks(E, x)):
            n = len(span(E, sylow_from(E, x)))
            sizes[n] = sizes.get(n, 0) + 1
    return {"q_squared": q * q if q else None, "sizes": sizes}


def is_member(E: EntropoidParams, x) -> bool:
    return is_unit_member(E, x)
