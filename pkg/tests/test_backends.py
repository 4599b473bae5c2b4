import random

import pytest

from entropoid import backend
from entropoid.algebra import params_new, random_element
from entropoid.field import gen_safe_prime
from entropoid.powindex import random_index
from entropoid.presets import preset

from oracles import naive_star

pytestmark = pytest.mark.skipif("native" not in backend.available(),
                                reason="compiled kernel not built")

# primes just under a limb boundary push every carry path in the Montgomery code
EDGE_PRIMES = {64: 2**64 - 59, 128: 2**128 - 159, 192: 2**192 - 237, 256: 2**256 - 189,
               384: 2**384 - 317, 512: 2**512 - 569}


def _pair(p, rng):
    consts = [rng.randrange(1, p) for _ in range(4)]
    return (params_new(p, *consts, backend_name="python"),
            params_new(p, *consts, backend_name="native"), consts)


@pytest.mark.parametrize("bits", sorted(EDGE_PRIMES))
def test_star_matches_naive_edge_primes(bits):
    rng = random.Random(bits)
    p = EDGE_PRIMES[bits]
    slow, fast, consts = _pair(p, rng)
    n = 10_000 if bits == 256 else 2000
    for _ in range(n):
        x, y = random_element(slow, rng), random_element(slow, rng)
        expected = naive_star(p, *consts, x, y)
        assert slow.kernel.star(x, y) == expected
        assert fast.kernel.star(x, y) == expected


@pytest.mark.parametrize("bits", [31, 64, 100, 256, 512])
def test_star_matches_naive_safe_primes(bits):
    rng = random.Random(bits + 1)
    p = gen_safe_prime(bits, rng).p
    slow, fast, consts = _pair(p, rng)
    for _ in range(2000):
        x, y = random_element(slow, rng), random_element(slow, rng)
        assert fast.kernel.star(x, y) == naive_star(p, *consts, x, y)


def test_star_extreme_inputs():
    p = EDGE_PRIMES[256]
    slow, fast, _ = _pair(p, random.Random(0))
    corners = [0, 1, 2, p - 2, p - 1]
    for x1 in corners:
        for x2 in corners:
            for y in [(0, 0), (p - 1, p - 1), (1, p - 1)]:
                assert fast.kernel.star((x1, x2), y) == slow.kernel.star((x1, x2), y)


@pytest.mark.parametrize("bits", [64, 256, 512])
def test_representative_agrees(bits):
    rng = random.Random(bits)
    slow, fast, _ = _pair(EDGE_PRIMES[bits], rng)
    for _ in range(200):
        x = random_element(slow, rng)
        a = rng.randrange(1, 20)
        m = rng.randrange(max(a - 1, 1))
        assert fast.kernel.representative(x, a, m) == slow.kernel.representative(x, a, m)


@pytest.mark.parametrize("bits, base", [(64, 3), (128, 5), (256, 257), (512, 17)])
def test_pow_index_agrees(bits, base):
    rng = random.Random(bits * base)
    slow, fast, _ = _pair(EDGE_PRIMES[bits], rng)
    for _ in range(50):
        x = random_element(slow, rng)
        idx = random_index(base, 1 << bits, rng)
        args = (x, idx.a_digits, idx.pattern, base)
        assert fast.kernel.pow_index(*args) == slow.kernel.pow_index(*args)


@pytest.mark.parametrize("name", ["e7", "e11", "e13", "e19"])
def test_span_agrees(name):
    slow, fast = preset(name, "python"), preset(name, "native")
    for x1 in range(slow.p):
        for x2 in range(slow.p):
            assert (set(fast.kernel.span((x1, x2), 10_000))
                    == set(slow.kernel.span((x1, x2), 10_000)))


def test_span_large_prime_falls_back(rng):
    p = 49223
    slow, fast = preset("e49223", "python"), preset("e49223", "native")
    assert p >= 1 << 13
    x = random_element(slow, rng)
    with pytest.raises(Exception) as slow_err:
        slow.kernel.span(x, 500)
    with pytest.raises(Exception) as fast_err:
        fast.kernel.span(x, 500)
    assert type(slow_err.value) is type(fast_err.value)


def test_native_rejects_oversized_modulus():
    with pytest.raises(ValueError):
        backend.kernel("native").StarContext(2**521 - 1, 1, 1, 1, 1, 0, 0, 0, 0)


def test_forced_backend(monkeypatch):
    monkeypatch.setenv("ENTROPOID_BACKEND", "python")
    assert backend.default_name() == "python"
    monkeypatch.setenv("ENTROPOID_BACKEND", "nonsense")
    with pytest.raises(RuntimeError):
        backend.default_name()
