"""Diffie-Hellman style key agreement over the order-q^2 subquasigroup."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .algebra import (Element, EntropoidParams, decode_element, encode_element,
                      is_unit_member, params_new)
from .errors import InvalidPeer
from .field import gen_safe_prime
from .generators import GeneratorCertificate, gen_q
from .powindex import PowerIndex, b_max, op_count, pow_fast, to_digits

DEFAULT_BASE = 3
FIELD_OPS_PER_STAR = 6

__all__ = ["KexSuite", "KexKeypair", "CostMetrics", "suite_new", "suite_from_params",
           "kex_keygen", "kex_derive", "cost_metrics", "encode_element", "decode_element"]


@dataclass(frozen=True)
class KexSuite:
    params: EntropoidParams
    g_q: Element
    base: int
    certificate: GeneratorCertificate

    @property
    def bits(self) -> int:
        return self.params.modulus.bits

    @property
    def message_bytes(self) -> int:
        return 2 * self.params.byte_width


@dataclass(frozen=True)
class KexKeypair:
    secret: PowerIndex
    public: Element


@dataclass(frozen=True)
class CostMetrics:
    star_ops: int
    field_mults: int
    field_adds: int


def _check_base(params: EntropoidParams, base: int) -> None:
    if base < 3 or base % 2 == 0:
        raise ValueError(f"base must be odd and at least 3, got {base}")
    if base >= b_max(params):
        raise ValueError(f"base {base} is not below b_max={b_max(params)}")


def suite_from_params(params: EntropoidParams, rng: random.Random,
                      base: int = DEFAULT_BASE) -> KexSuite:
    _check_base(params, base)
    cert = gen_q(params, rng)
    return KexSuite(params, cert.g, base, cert)


def suite_new(bits: int, rng: random.Random, base: int = DEFAULT_BASE,
              backend_name: Optional[str] = None) -> KexSuite:
    """Fresh safe prime, random nonzero constants and a Sylow generator."""
    modulus = gen_safe_prime(bits, rng)
    p = modulus.p
    consts = [rng.randrange(1, p) for _ in range(4)]
    params = params_new(modulus, *consts, backend_name=backend_name)
    return suite_from_params(params, rng, base)


def kex_keygen(suite: KexSuite, rng: random.Random, base: Optional[int] = None) -> KexKeypair:
    """Secret integer in [1, p-1] with a uniform pattern; public = g_q^secret."""
    base = base or suite.base
    _check_base(suite.params, base)
    a = rng.randrange(1, suite.params.p)
    n = len(to_digits(a, base))
    secret = PowerIndex.from_int(a, [rng.randrange(base - 1) for _ in range(n)], base)
    return KexKeypair(secret, pow_fast(suite.params, suite.g_q, secret))


def kex_derive(suite: KexSuite, mine: KexKeypair, theirs) -> Element:
    if not is_unit_member(suite.params, theirs):
        raise InvalidPeer("peer element is outside E*")
    return pow_fast(suite.params, theirs, mine.secret)


def cost_metrics(suite: KexSuite, idx: PowerIndex) -> CostMetrics:
    n = op_count(idx)
    return CostMetrics(n, FIELD_OPS_PER_STAR * n, FIELD_OPS_PER_STAR * n)
