"""Pure-Python hot loops: the star product, the exponentiation ladder, closures.

Elements are plain ``(x1, x2)`` tuples here; the public modules wrap them.
"""

from __future__ import annotations

from .errors import TooLarge

BACKEND_NAME = "python"


class StarContext:
    """Precomputed constants for one entropoid.

    The product is evaluated as
    ``(x2*(a3 + a8*y1) + k1*y1 + c1, x1*(b2 + b7*y2) + k2*y2 + c2)``,
    which is six multiplications and six additions mod p.
    """

    __slots__ = ("p", "a3", "a8", "b2", "b7", "c1", "k1", "c2", "k2")

    def __init__(self, p, a3, a8, b2, b7, c1, k1, c2, k2):
        self.p, self.a3, self.a8, self.b2, self.b7 = p, a3, a8, b2, b7
        self.c1, self.k1, self.c2, self.k2 = c1, k1, c2, k2

    def star(self, x, y):
        p = self.p
        x1, x2 = x
        y1, y2 = y
        return ((x2 * (self.a3 + self.a8 * y1) + self.k1 * y1 + self.c1) % p,
                (x1 * (self.b2 + self.b7 * y2) + self.k2 * y2 + self.c2) % p)

    def representative(self, x, a, m):
        """Single entry R_a(x)[m]; costs a - 1 products."""
        star = self.star
        if m == 0:
            t = x
            for _ in range(a - 1):
                t = star(x, t)
            return t
        t = x
        for _ in range(m):
            t = star(x, t)
        t = star(t, x)
        for _ in range(a - 2 - m):
            t = star(x, t)
        return t

    def pow_index(self, x, digits, pattern, base):
        """Ladder exponentiation. Returns (result, number of products)."""
        star = self.star
        rep = self.representative
        ops = 0
        w = x
        acc = None
        prev_digit = 0
        for i, (ai, pi) in enumerate(zip(digits, pattern)):
            if i:
                w = rep(w, base, pi)
                ops += base - 1
            if ai:
                if ai == 1:
                    t = w
                else:
                    t = rep(w, ai, pi % (ai - 1))
                    ops += ai - 1
                if acc is None:
                    acc = t
                else:
                    acc = star(t, acc) if prev_digit % 2 == 0 else star(acc, t)
                    ops += 1
            prev_digit = pi
        return acc, ops

    def span(self, x, limit):
        """Closure of {x} under the product, as a list in discovery order."""
        star = self.star
        seen = {x}
        items = [x]
        n = 0
        while n < len(items):
            z = items[n]
            n += 1
            for k in range(n):
                u = items[k]
                for v in (star(z, u), star(u, z)):
                    if v not in seen:
                        if len(items) >= limit:
                            raise TooLarge(f"closure exceeds {limit} elements")
                        seen.add(v)
                        items.append(v)
        return items
