import random

import gmpy2
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entropoid.errors import ZeroInverse
from entropoid.field import (PrimeModulus, gen_safe_prime, is_probable_prime, is_safe_prime,
                             mod_inv, rand_field_element)


@pytest.mark.parametrize("a, expected", [(1, 1), (4, 2), (3, 5)])
def test_mod_inv_small(a, expected):
    assert mod_inv(a, 7) == expected
    # exhaustive search agrees
    assert [b for b in range(1, 7) if a * b % 7 == 1] == [expected]


def test_mod_inv_zero():
    with pytest.raises(ZeroInverse):
        mod_inv(0, 7)
    with pytest.raises(ZeroInverse):
        mod_inv(14, 7)


@given(st.integers(min_value=1, max_value=2**127 - 2))
def test_mod_inv_involution(a):
    p = 2**127 - 1
    assert mod_inv(mod_inv(a, p), p) == a
    assert a * mod_inv(a, p) % p == 1


@pytest.mark.parametrize("p, expected", [(7, True), (23, True), (13, False), (11, True),
                                         (5, True), (9, False), (47, True), (49, False)])
def test_is_safe_prime(p, expected):
    assert is_safe_prime(p) is expected


def test_primality_matches_gmpy2_below_20000():
    for n in range(20000):
        assert is_probable_prime(n) == bool(gmpy2.is_prime(n)), n


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=2**60, max_value=2**300))
def test_primality_matches_gmpy2_large(n):
    assert is_probable_prime(n, random.Random(n)) == bool(gmpy2.is_prime(n, 50))


def test_known_primes_and_composites():
    assert is_probable_prime(2**127 - 1)
    assert is_probable_prime(2**521 - 1)
    assert not is_probable_prime(2**128 + 1)
    # Carmichael numbers
    for n in (561, 1105, 1729, 2465, 2821, 6601, 8911):
        assert not is_probable_prime(n)


def test_gen_safe_prime_three_bits():
    assert gen_safe_prime(3, random.Random(1)).p == 7


def test_gen_safe_prime_five_bits():
    five_bit = {p for p in range(16, 32) if is_safe_prime(p)}
    assert five_bit == {23}
    for seed in range(5):
        assert gen_safe_prime(5, random.Random(seed)).p == 23


@pytest.mark.parametrize("bits", [16, 64, 128])
def test_gen_safe_prime_postcondition(bits):
    m = gen_safe_prime(bits, random.Random(bits))
    assert m.p.bit_length() == bits
    assert m.p == 2 * m.q + 1
    assert is_safe_prime(m.p)
    assert gmpy2.is_prime(m.q, 50) and gmpy2.is_prime(m.p, 50)


def test_gen_safe_prime_deterministic():
    assert gen_safe_prime(64, random.Random(9)) == gen_safe_prime(64, random.Random(9))


def test_prime_modulus_of():
    assert PrimeModulus.of(23) == PrimeModulus(23, 11)
    assert PrimeModulus.of(13).q is None
    assert PrimeModulus.of(7).bits == 3
    assert PrimeModulus(2**128 - 159).byte_width == 16


def test_rand_field_element_respects_exclude():
    rng = random.Random(3)
    seen = {rand_field_element(7, rng, {0}) for _ in range(500)}
    assert seen == set(range(1, 7))
    assert {rand_field_element(7, rng) for _ in range(500)} == set(range(7))


def test_rand_field_element_uniform():
    rng = random.Random(11)
    n = 100_000
    counts = [0] * 7
    for _ in range(n):
        counts[rand_field_element(7, rng)] += 1
    expected = n / 7
    sigma = (n * (1 / 7) * (6 / 7)) ** 0.5
    assert all(abs(c - expected) < 5 * sigma for c in counts)
    chi2 = sum((c - expected) ** 2 / expected for c in counts)
    assert chi2 < 22.46  # 6 dof, p = 0.001


def test_rand_field_element_full_exclude():
    with pytest.raises(ValueError):
        rand_field_element(3, random.Random(0), {0, 1, 2})
