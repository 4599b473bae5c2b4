"""Meet-in-the-middle forgery experiment against toy-size signature parameters."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from ..algebra import Element, random_unit, star
from ..errors import TooLarge
from ..powindex import pow_fast
from ..sig import (Scheme, SigKeyPair, SigParams, Signature, _challenge_input, hash_to_index,
                   sig_keygen, sig_params_new, verify)

TOY_LIMIT = 1 << 14
MESSAGE_BYTES = 16


@dataclass
class MitmReport:
    found_root: bool          # some z^B hit some (y*I)^H
    lucky_root: bool          # some z^B hit y itself
    collisions: int
    table_sizes: tuple[int, int]
    forged_message: Optional[bytes] = None
    forged_signature: Optional[Signature] = None
    forgery_verifies: Optional[bool] = None


def mitm_toy_attack(P: SigParams, rng: random.Random,
                    keypair: Optional[SigKeyPair] = None) -> MitmReport:
    """Build both tables with p-1 rows each and look for a matching pair."""
    E = P.params
    if E.p > TOY_LIMIT:
        raise TooLarge(f"p={E.p} exceeds toy limit {TOY_LIMIT}")
    kp = keypair or sig_keygen(P, rng)
    y = kp.public_y
    rows = E.p - 1

    roots: dict[Element, Element] = {}
    lucky = False
    for _ in range(rows):
        z = random_unit(E, rng)
        zb = pow_fast(E, z, P.B)
        roots.setdefault(zb, z)
        lucky |= zb == y

    collisions = 0
    forged = None
    for _ in range(rows):
        I = random_unit(E, rng)
        msg = rng.randbytes(MESSAGE_BYTES)
        H = hash_to_index(P, _challenge_input(P, I, msg))
        target = pow_fast(E, star(E, y, I), H)
        if target in roots:
            collisions += 1
            if forged is None:
                forged = (msg, Signature(I, roots[target]))

    report = MitmReport(collisions > 0, lucky, collisions, (rows, rows))
    if forged:
        report.forged_message, report.forged_signature = forged
        report.forgery_verifies = verify(P, y, forged[0], forged[1])
    return report


def mitm_success_rate(bits: int, runs: int, rng: random.Random,
                      scheme: Scheme = Scheme.CDERP, base: int = 257) -> dict:
    """Fresh parameters and key per run; counts runs that found a forgery."""
    found = lucky = verified = 0
    for _ in range(runs):
        P = sig_params_new(bits, scheme, rng, base)
        rep = mitm_toy_attack(P, rng)
        found += rep.found_root
        lucky += rep.lucky_root
        verified += bool(rep.forgery_verifies)
    return {"runs": runs, "success_rate": found / runs, "lucky_rate": lucky / runs,
            "verified_forgeries": verified, "found": found}
