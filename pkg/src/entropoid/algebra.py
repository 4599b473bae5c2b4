"""The entropoid ringoid over F_p x F_p: product, box addition, units, inverses."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from . import backend
from .errors import BadLength, InvalidConstant, NonCanonical, NotInvertible, TooLarge
from .field import PrimeModulus, mod_inv


class Element(NamedTuple):
    x1: int
    x2: int


@dataclass(frozen=True)
class EntropoidParams:
    modulus: PrimeModulus
    a3: int
    a8: int
    b2: int
    b7: int
    zero_star: Element
    one_star: Element
    # constant terms of the expanded product
    c1: int
    k1: int
    c2: int
    k2: int
    backend_name: str = "python"
    kernel: object = field(default=None, repr=False, compare=False)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def byte_width(self) -> int:
        return self.modulus.byte_width

    def with_backend(self, name: str) -> "EntropoidParams":
        return params_new(self.modulus, self.a3, self.a8, self.b2, self.b7, backend_name=name)


def params_new(modulus: PrimeModulus | int, a3: int, a8: int, b2: int, b7: int,
               backend_name: Optional[str] = None) -> EntropoidParams:
    if isinstance(modulus, int):
        modulus = PrimeModulus.of(modulus)
    p = modulus.p
    a3, a8, b2, b7 = a3 % p, a8 % p, b2 % p, b7 % p
    for name, value in (("a3", a3), ("a8", a8), ("b2", b2), ("b7", b7)):
        if value == 0:
            raise InvalidConstant(f"{name} must be nonzero mod p")
    inv_a8, inv_b7 = mod_inv(a8, p), mod_inv(b7, p)
    zero = Element(-a3 * inv_a8 % p, -b2 * inv_b7 % p)
    one = Element((inv_b7 - a3 * inv_a8) % p, (inv_a8 - b2 * inv_b7) % p)
    c1 = a3 * (a8 * b2 - b7) * inv_a8 * inv_b7 % p
    k1 = a8 * b2 * inv_b7 % p
    c2 = -b2 * (a8 - a3 * b7) * inv_a8 * inv_b7 % p
    k2 = a3 * b7 * inv_a8 % p
    name = backend_name or backend.default_name()
    ctx = backend.kernel(name).StarContext(p, a3, a8, b2, b7, c1, k1, c2, k2)
    return EntropoidParams(modulus, a3, a8, b2, b7, zero, one, c1, k1, c2, k2, name, ctx)


def star(E: EntropoidParams, x, y) -> Element:
    p = E.p
    x1, x2 = x
    y1, y2 = y
    return Element((E.c1 + E.a3 * x2 + E.k1 * y1 + E.a8 * x2 * y1) % p,
                   (E.c2 + E.k2 * y2 + E.b2 * x1 + E.b7 * x1 * y2) % p)


def box_add(E: EntropoidParams, x, y) -> Element:
    z1, z2 = E.zero_star
    p = E.p
    # x + y - zero, componentwise
    return Element((x[0] + y[0] - z1) % p, (x[1] + y[1] - z2) % p)


def box_sub(E: EntropoidParams, x, y) -> Element:
    z1, z2 = E.zero_star
    p = E.p
    return Element((x[0] - y[0] + z1) % p, (x[1] - y[1] + z2) % p)


def box_neg(E: EntropoidParams, x) -> Element:
    z1, z2 = E.zero_star
    p = E.p
    return Element((2 * z1 - x[0]) % p, (2 * z2 - x[1]) % p)


def is_unit_member(E: EntropoidParams, x) -> bool:
    """Membership in the maximal multiplicative subgroupoid E*."""
    return x[0] % E.p != E.zero_star.x1 and x[1] % E.p != E.zero_star.x2


def inv_star(E: EntropoidParams, x) -> Element:
    p = E.p
    x1, x2 = x
    d1 = E.a8 * (E.b2 + E.b7 * x2) % p
    d2 = E.b7 * (E.a3 + E.a8 * x1) % p
    if d1 == 0 or d2 == 0:
        raise NotInvertible(f"{tuple(x)} lies on the excluded row or column")
    n1 = (1 - E.a3 * E.b2 - E.a3 * E.b7 * x2) % p
    n2 = (1 - E.a3 * E.b2 - E.a8 * E.b2 * x1) % p
    return Element(n1 * mod_inv(d1, p) % p, n2 * mod_inv(d2, p) % p)


def random_element(E: EntropoidParams, rng: random.Random) -> Element:
    return Element(rng.randrange(E.p), rng.randrange(E.p))


def random_unit(E: EntropoidParams, rng: random.Random) -> Element:
    """Uniform element of E*."""
    p = E.p
    z1, z2 = E.zero_star
    x1 = rng.randrange(p - 1)
    x2 = rng.randrange(p - 1)
    # skip over the excluded coordinate
    return Element(x1 + (x1 >= z1), x2 + (x2 >= z2))


def all_elements(E: EntropoidParams):
    p = E.p
    return (Element(i, j) for i in range(p) for j in range(p))


def all_units(E: EntropoidParams):
    return (x for x in all_elements(E) if is_unit_member(E, x))


def check_entropic(E: EntropoidParams, trials: int, rng: random.Random, op=None) -> bool:
    """Randomized test of the interchange law (x*y)*(z*w) = (x*z)*(y*w).

    ``op`` replaces the product, which lets callers test mutated operations.
    The implication "x*y = z*w gives x*z = y*w" is not checked: it fails in
    genuine entropoids, e.g. at p=7 with x=y=(0,0), z=(0,2), w=(3,0).
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    mul = op or (lambda a, b: star(E, a, b))
    for _ in range(trials):
        x, y, z, w = (random_element(E, rng) for _ in range(4))
        if mul(mul(x, y), mul(z, w)) != mul(mul(x, z), mul(y, w)):
            return False
    return True


def check_entropic_exhaustive(E: EntropoidParams, op=None) -> bool:
    """Interchange law over every quadruple. Only sensible for tiny p."""
    mul = op or (lambda a, b: star(E, a, b))
    elems = list(all_elements(E))
    table = {(a, b): mul(a, b) for a in elems for b in elems}
    for x in elems:
        for y in elems:
            xy = table[x, y]
            for z in elems:
                xz = table[x, z]
                for w in elems:
                    if table[xy, table[z, w]] != table[xz, table[y, w]]:
                        return False
    return True


def sqrt_units(E: EntropoidParams, guard: int = 1 << 20) -> set[Element]:
    """All x with x*x equal to the left unit."""
    if E.p > guard:
        raise TooLarge(f"p={E.p} exceeds enumeration guard {guard}")
    one = E.one_star
    return {x for x in all_elements(E) if star(E, x, x) == one}


def encode_element(E: EntropoidParams, x) -> bytes:
    w = E.byte_width
    return int(x[0]).to_bytes(w, "little") + int(x[1]).to_bytes(w, "little")


def decode_element(E: EntropoidParams, data: bytes) -> Element:
    w = E.byte_width
    if len(data) != 2 * w:
        raise BadLength(f"expected {2 * w} bytes, got {len(data)}")
    x1 = int.from_bytes(data[:w], "little")
    x2 = int.from_bytes(data[w:], "little")
    if x1 >= E.p or x2 >= E.p:
        raise NonCanonical("component not reduced mod p")
    return Element(x1, x2)
