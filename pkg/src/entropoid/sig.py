"""Fiat-Shamir signatures from root finding in the entropoid.

Two schemes share the sign/verify flow:

* ``Scheme.CDERP`` hashes to a full power index (integer part and pattern
  both come from the digest).
* ``Scheme.CDERP_TO_DELP`` pins every integer part to q and only hashes the
  pattern, at twice the modulus size.
"""

from __future__ import annotations

import enum
import hashlib
import random
import struct
from dataclasses import dataclass
from typing import Optional

from .algebra import (Element, EntropoidParams, decode_element, encode_element,
                      is_unit_member, params_new, random_unit, star)
from .errors import BadLength, MalformedSignature, NonCanonical, ZeroDigest
from .field import gen_safe_prime
from .powindex import PowerIndex, pow_fast, random_index, to_digits

DEFAULT_BASE = 257
SEED_MESSAGE = b"abc"
REHASH_LIMIT = 16


class Scheme(enum.IntEnum):
    CDERP = 1
    CDERP_TO_DELP = 2


def hash_name_for(bits: int, scheme: Scheme) -> str:
    """Digest choice by modulus size."""
    if scheme is Scheme.CDERP:
        # half of the digest feeds the integer part
        cutoffs = ((128, "sha256"), (192, "sha384"))
    else:
        cutoffs = ((256, "sha256"), (384, "sha384"))
    for limit, name in cutoffs:
        if bits <= limit:
            return name
    return "sha512"


@dataclass(frozen=True)
class SigParams:
    params: EntropoidParams
    scheme: Scheme
    hash_name: str
    base: int
    B: PowerIndex

    @property
    def bits(self) -> int:
        return self.params.modulus.bits

    @property
    def digest_size(self) -> int:
        return hashlib.new(self.hash_name).digest_size

    @property
    def k_max(self) -> int:
        return self.digest_size // 2

    @property
    def element_bytes(self) -> int:
        return 2 * self.params.byte_width

    @property
    def signature_bytes(self) -> int:
        return 2 * self.element_bytes


@dataclass(frozen=True)
class SigKeyPair:
    private_x: Element
    public_y: Element


@dataclass(frozen=True)
class Signature:
    I: Element
    s: Element


@dataclass(frozen=True)
class IdTranscript:
    I: Element
    H: PowerIndex
    s: Element
    accepted: bool


def _pattern_digits(data: bytes, base: int) -> list[int]:
    """Split bytes into pattern digits of log2(base-1) bits each."""
    width = (base - 1).bit_length() - 1
    if 1 << width != base - 1 or width not in (1, 2, 4, 8):
        raise ValueError(f"base-1 must be 2, 4, 16 or 256, got base={base}")
    if width == 8:
        return list(data)
    per_byte = 8 // width
    mask = (1 << width) - 1
    return [(byte >> (width * j)) & mask for byte in data for j in range(per_byte)]


def _digest(hash_name: str, data: bytes) -> bytes:
    return hashlib.new(hash_name, data).digest()


def _index_from_digest(digest: bytes, base: int) -> Optional[PowerIndex]:
    half = len(digest) // 2
    a = int.from_bytes(digest[:half], "little")
    if a == 0:
        return None
    n = len(to_digits(a, base))
    pattern = _pattern_digits(digest[half:], base)
    if n > len(pattern):
        raise ValueError(f"digest too short for {n} base-{base} pattern digits")
    return PowerIndex.from_int(a, pattern[:n], base)


def hash_to_index_raw(hash_name: str, msg: bytes, base: int = DEFAULT_BASE) -> PowerIndex:
    """Digest split in halves: integer part from the first, pattern from the second."""
    digest = _digest(hash_name, msg)
    for _ in range(REHASH_LIMIT):
        idx = _index_from_digest(digest, base)
        if idx is not None:
            return idx
        # zero integer part: re-hash under a separation byte
        digest = _digest(hash_name, b"\x00" + digest)
    raise ZeroDigest("integer part stayed zero after re-hashing")


def hash_to_index_q_raw(hash_name: str, q: int, msg: bytes,
                        base: int = DEFAULT_BASE) -> PowerIndex:
    """Integer part fixed to q, pattern from the whole digest."""
    digest = _digest(hash_name, msg)
    n = len(to_digits(q, base))
    pattern = _pattern_digits(digest, base)
    if n > len(pattern):
        raise ValueError(f"digest too short for {n} base-{base} pattern digits")
    return PowerIndex.from_int(q, pattern[:n], base)


def hash_to_index(P: SigParams, msg: bytes) -> PowerIndex:
    if P.scheme is Scheme.CDERP:
        return hash_to_index_raw(P.hash_name, msg, P.base)
    return hash_to_index_q(P, msg)


def hash_to_index_q(P: SigParams, msg: bytes) -> PowerIndex:
    return hash_to_index_q_raw(P.hash_name, P.params.modulus.q, msg, P.base)


def sig_params_from(params: EntropoidParams, scheme: Scheme,
                    base: int = DEFAULT_BASE) -> SigParams:
    if params.modulus.q is None:
        raise ValueError("p must be a safe prime")
    hash_name = hash_name_for(params.modulus.bits, scheme)
    if scheme is Scheme.CDERP:
        B = hash_to_index_raw(hash_name, SEED_MESSAGE, base)
    else:
        B = hash_to_index_q_raw(hash_name, params.modulus.q, SEED_MESSAGE, base)
    return SigParams(params, scheme, hash_name, base, B)


def sig_params_new(bits: int, scheme: Scheme, rng: random.Random,
                   base: int = DEFAULT_BASE, backend_name: Optional[str] = None) -> SigParams:
    modulus = gen_safe_prime(bits, rng)
    consts = [rng.randrange(1, modulus.p) for _ in range(4)]
    return sig_params_from(params_new(modulus, *consts, backend_name=backend_name), scheme, base)


def sig_keygen(P: SigParams, rng: random.Random) -> SigKeyPair:
    x = random_unit(P.params, rng)
    return SigKeyPair(x, pow_fast(P.params, x, P.B))


def _challenge_input(P: SigParams, I: Element, msg: bytes) -> bytes:
    enc = encode_element(P.params, I)
    return struct.pack("<I", len(enc)) + enc + msg


def sign(P: SigParams, kp: SigKeyPair, msg: bytes, rng: random.Random) -> Signature:
    E = P.params
    r = random_unit(E, rng)
    I = pow_fast(E, r, P.B)
    H = hash_to_index(P, _challenge_input(P, I, msg))
    s = pow_fast(E, star(E, kp.private_x, r), H)
    return Signature(I, s)


def verify(P: SigParams, y, msg: bytes, sig: Signature) -> bool:
    E = P.params
    if not (is_unit_member(E, y) and is_unit_member(E, sig.I) and is_unit_member(E, sig.s)):
        return False
    H = hash_to_index(P, _challenge_input(P, sig.I, msg))
    return pow_fast(E, sig.s, P.B) == pow_fast(E, star(E, y, sig.I), H)


def encode_signature(P: SigParams, sig: Signature) -> bytes:
    return encode_element(P.params, sig.I) + encode_element(P.params, sig.s)


def decode_signature(P: SigParams, data: bytes) -> Signature:
    n = P.element_bytes
    if len(data) != 2 * n:
        raise MalformedSignature(f"signature must be {2 * n} bytes, got {len(data)}")
    try:
        return Signature(decode_element(P.params, data[:n]), decode_element(P.params, data[n:]))
    except (BadLength, NonCanonical) as exc:
        raise MalformedSignature(str(exc)) from exc


def verify_bytes(P: SigParams, y, msg: bytes, data: bytes) -> bool:
    """Verify an encoded signature; malformed input is simply rejected."""
    try:
        sig = decode_signature(P, data)
    except MalformedSignature:
        return False
    return verify(P, y, msg, sig)


def _key_header(P: SigParams) -> bytes:
    return bytes([int(P.scheme)]) + P.bits.to_bytes(2, "little")


def encode_key(P: SigParams, x) -> bytes:
    """Scheme id byte, 2-byte little-endian modulus bits, element bytes."""
    return _key_header(P) + encode_element(P.params, x)


def decode_key(P: SigParams, data: bytes) -> Element:
    header = _key_header(P)
    if len(data) != len(header) + P.element_bytes:
        raise BadLength(f"key file must be {len(header) + P.element_bytes} bytes")
    if data[:len(header)] != header:
        raise ValueError("key header does not match the parameters")
    return decode_element(P.params, data[len(header):])


def id_round(P: SigParams, kp: SigKeyPair, rng_prover: random.Random,
             rng_verifier: random.Random) -> IdTranscript:
    """One honest run of commit, challenge, response and check."""
    E = P.params
    r = random_unit(E, rng_prover)
    I = pow_fast(E, r, P.B)
    H = random_challenge(P, rng_verifier)
    s = pow_fast(E, star(E, kp.private_x, r), H)
    accepted = pow_fast(E, s, P.B) == pow_fast(E, star(E, kp.public_y, I), H)
    return IdTranscript(I, H, s, accepted)


def random_challenge(P: SigParams, rng: random.Random) -> PowerIndex:
    if P.scheme is Scheme.CDERP:
        return random_index(P.base, 1 << (8 * P.k_max), rng)
    q = P.params.modulus.q
    n = len(to_digits(q, P.base))
    return PowerIndex.from_int(q, [rng.randrange(P.base - 1) for _ in range(n)], P.base)


def id_check(P: SigParams, y, I, H: PowerIndex, s) -> bool:
    E = P.params
    return pow_fast(E, s, P.B) == pow_fast(E, star(E, y, I), H)
