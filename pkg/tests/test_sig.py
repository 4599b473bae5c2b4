import hashlib
import random

import pytest

from entropoid.algebra import Element, all_units, encode_element, random_unit
from entropoid.errors import BadLength, MalformedSignature
from entropoid.powindex import pow_fast, to_digits
from entropoid.presets import preset
from entropoid.sig import (Scheme, Signature, decode_key, decode_signature, encode_key,
                           encode_signature, hash_name_for, hash_to_index, hash_to_index_q_raw,
                           hash_to_index_raw, id_check, id_round, random_challenge, sig_keygen,
                           sig_params_from, sig_params_new, sign, verify, verify_bytes)

from golden import CDERP_SIZES, CONSERVATIVE_SIZES

ABC_SHA256 = "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"


@pytest.fixture(scope="module")
def p128():
    return sig_params_new(128, Scheme.CDERP, random.Random(128))


@pytest.fixture(scope="module")
def kp128(p128):
    return sig_keygen(p128, random.Random(1))


@pytest.mark.parametrize("bits, scheme, name", [
    (128, Scheme.CDERP, "sha256"), (192, Scheme.CDERP, "sha384"), (256, Scheme.CDERP, "sha512"),
    (256, Scheme.CDERP_TO_DELP, "sha256"), (384, Scheme.CDERP_TO_DELP, "sha384"),
    (512, Scheme.CDERP_TO_DELP, "sha512"), (16, Scheme.CDERP, "sha256"),
])
def test_hash_choice(bits, scheme, name):
    assert hash_name_for(bits, scheme) == name


def test_abc_mapping():
    digest = bytes.fromhex(ABC_SHA256)
    assert hashlib.sha256(b"abc").digest() == digest
    a = int.from_bytes(digest[:16], "little")
    n = len(to_digits(a, 257))
    idx = hash_to_index_raw("sha256", b"abc", 257)
    assert idx.value == a
    assert idx.base == 257
    assert idx.pattern == tuple(digest[16:16 + n])


def test_pattern_digits_in_byte_range():
    rng = random.Random(2)
    for _ in range(500):
        idx = hash_to_index_raw("sha512", rng.randbytes(20), 257)
        assert all(0 <= d <= 255 for d in idx.pattern)
        assert len(idx.pattern) <= 32


def test_nibble_patterns_for_base_17():
    digest = hashlib.sha256(b"abc").digest()
    idx = hash_to_index_raw("sha256", b"abc", 17)
    nibbles = [(b >> s) & 15 for b in digest[16:] for s in (0, 4)]
    assert idx.pattern == tuple(nibbles[:len(idx.pattern)])
    assert idx.value == int.from_bytes(digest[:16], "little")


def test_hash_to_index_no_collisions():
    rng = random.Random(3)
    seen = {hash_to_index_raw("sha256", rng.randbytes(24), 257) for _ in range(100_000)}
    assert len(seen) == 100_000


@pytest.mark.parametrize("bits, name", [(256, "sha256"), (384, "sha384"), (512, "sha512")])
def test_hash_to_index_q_uses_full_digest(bits, name):
    q = (1 << (bits - 1)) - 1
    for msg in (b"", b"abc", b"x" * 100):
        idx = hash_to_index_q_raw(name, q, msg)
        assert idx.value == q
        assert idx.pattern == tuple(hashlib.new(name, msg).digest())


def test_hash_to_index_q_toy():
    P = sig_params_new(24, Scheme.CDERP_TO_DELP, random.Random(24))
    q = P.params.modulus.q
    assert P.B.value == q
    for m in (b"a", b"b", b"c"):
        assert hash_to_index(P, m).value == q
        assert random_challenge(P, random.Random(0)).value == q


def test_seed_root_index(p128):
    assert p128.B == hash_to_index_raw("sha256", b"abc", 257)
    assert p128.k_max == 16


@pytest.mark.parametrize("bits", sorted(CDERP_SIZES))
def test_cderp_sizes(bits):
    P = sig_params_new(bits, Scheme.CDERP, random.Random(bits))
    _check_sizes(P, CDERP_SIZES[bits])


@pytest.mark.parametrize("bits", sorted(CONSERVATIVE_SIZES))
def test_conservative_sizes(bits):
    P = sig_params_new(bits, Scheme.CDERP_TO_DELP, random.Random(bits))
    _check_sizes(P, CONSERVATIVE_SIZES[bits])


def _check_sizes(P, sizes):
    public, private, signature = sizes
    rng = random.Random(0)
    kp = sig_keygen(P, rng)
    sig = sign(P, kp, b"size check", rng)
    assert len(encode_element(P.params, kp.public_y)) == public
    assert len(encode_element(P.params, kp.private_x)) == private
    data = encode_signature(P, sig)
    assert len(data) == signature == P.signature_bytes
    assert verify_bytes(P, kp.public_y, b"size check", data)


def test_roundtrip_and_tamper(p128, kp128, rng):
    for _ in range(100):
        msg = rng.randbytes(rng.randrange(1, 64))
        sig = sign(p128, kp128, msg, rng)
        assert verify(p128, kp128.public_y, msg, sig)
        bit = rng.randrange(8 * len(msg))
        bad = bytearray(msg)
        bad[bit // 8] ^= 1 << (bit % 8)
        assert not verify(p128, kp128.public_y, bytes(bad), sig)


def test_swapped_components_rejected(p128, kp128, rng):
    sig = sign(p128, kp128, b"m", rng)
    assert not verify(p128, kp128.public_y, b"m", Signature(sig.s, sig.I))


def test_unrelated_key_rejected(rng):
    P = sig_params_new(64, Scheme.CDERP, random.Random(64))
    for _ in range(1000):
        kp = sig_keygen(P, rng)
        other = sig_keygen(P, rng)
        msg = rng.randbytes(8)
        assert not verify(P, other.public_y, msg, sign(P, kp, msg, rng))


def test_correctness_identity(p128, kp128, rng):
    msg = b"identity"
    sig = sign(p128, kp128, msg, rng)
    assert id_check(p128, kp128.public_y, sig.I, hash_to_index(p128, _challenge(p128, sig.I, msg)),
                    sig.s)


def _challenge(P, I, msg):
    enc = encode_element(P.params, I)
    return len(enc).to_bytes(4, "little") + enc + msg


def test_distinct_nonces_distinct_signatures(p128, kp128, rng):
    sigs = {sign(p128, kp128, b"same", rng) for _ in range(50)}
    assert len(sigs) == 50


def test_keygen_deterministic(p128):
    assert sig_keygen(p128, random.Random(9)) == sig_keygen(p128, random.Random(9))


def test_public_differs_from_private(rng):
    P = sig_params_from(preset("e23"), Scheme.CDERP)
    fixed = sum(pow_fast(P.params, x, P.B) == x for x in all_units(P.params))
    assert fixed == 1
    same = sum(kp.private_x == kp.public_y for kp in (sig_keygen(P, rng) for _ in range(1000)))
    # expected about 1000/484
    assert same <= 10


def test_signature_encoding(p128, kp128, rng):
    sig = sign(p128, kp128, b"enc", rng)
    data = encode_signature(p128, sig)
    assert decode_signature(p128, data) == sig
    with pytest.raises(MalformedSignature):
        decode_signature(p128, data[:-1])
    bad = p128.params.p.to_bytes(16, "little") + data[16:]
    with pytest.raises(MalformedSignature):
        decode_signature(p128, bad)
    assert not verify_bytes(p128, kp128.public_y, b"enc", data[:-1])


def test_rejects_non_member_components(p128, kp128, rng):
    sig = sign(p128, kp128, b"m", rng)
    z = p128.params.zero_star
    assert not verify(p128, kp128.public_y, b"m", Signature(Element(z.x1, 3), sig.s))
    assert not verify(p128, Element(3, z.x2), b"m", sig)


def test_key_files(p128, kp128):
    data = encode_key(p128, kp128.public_y)
    assert data[0] == 1 and int.from_bytes(data[1:3], "little") == 128
    assert len(data) == 3 + 32
    assert decode_key(p128, data) == kp128.public_y
    with pytest.raises(BadLength):
        decode_key(p128, data[:-1])
    with pytest.raises(ValueError):
        decode_key(p128, bytes([2]) + data[1:])


def test_id_round_honest(p128, kp128):
    rng_p, rng_v = random.Random(1), random.Random(2)
    for _ in range(50):
        t = id_round(p128, kp128, rng_p, rng_v)
        assert t.accepted
        assert id_check(p128, kp128.public_y, t.I, t.H, t.s)


def test_id_random_response_rejected():
    P = sig_params_from(preset("e23"), Scheme.CDERP)
    rng = random.Random(7)
    kp = sig_keygen(P, rng)
    accepted = 0
    trials = 2000
    for _ in range(trials):
        I = pow_fast(P.params, random_unit(P.params, rng), P.B)
        H = random_challenge(P, rng)
        accepted += id_check(P, kp.public_y, I, H, random_unit(P.params, rng))
    # a blind guess passes only when it lands in the right fibre of x -> x^B
    assert accepted / trials < 0.05


def test_commitments_cover_units():
    E = preset("e11")
    P = sig_params_from(E, Scheme.CDERP)
    rng = random.Random(11)
    images = {pow_fast(E, x, P.B) for x in all_units(E)}
    counts = {}
    n = 5000
    for _ in range(n):
        I = pow_fast(E, random_unit(E, rng), P.B)
        counts[I] = counts.get(I, 0) + 1
    assert len(images) == 25
    assert set(counts) == images
    expected = n / len(images)
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    # uniform over the image of x -> x^B; 24 dof, p = 0.001
    assert chi2 < 51.18
