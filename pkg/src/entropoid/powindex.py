"""Succinct non-associative power indices and fast exponentiation.

A power index ``(a, pattern, base)`` names one bracketing of ``a`` copies of
``x``. The ladder walks the base-``base`` digits of ``a`` and uses the pattern
digits to pick which class representative to take at each level.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Optional, Sequence, Union

from .algebra import Element, EntropoidParams, star
from .entropy import PartitionReport, ShapeClass
from .errors import InvalidIndex, TooLarge

REPRESENTATIVES_GUARD = 1 << 20
TREE_LEAF_GUARD = 1 << 14
CLASS_ENUM_GUARD = 14
MEMBER_LIST_LIMIT = 10


def to_digits(a: int, base: int) -> list[int]:
    """Little-endian digits of a >= 1."""
    out = []
    while a:
        a, r = divmod(a, base)
        out.append(r)
    return out


@dataclass(frozen=True)
class PowerIndex:
    base: int
    a_digits: tuple[int, ...]
    pattern: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise InvalidIndex("base must be at least 2")
        if not self.a_digits or len(self.a_digits) != len(self.pattern):
            raise InvalidIndex("digits and pattern must be non-empty and equally long")
        if any(not 0 <= d < self.base for d in self.a_digits):
            raise InvalidIndex("integer digit out of range")
        if self.a_digits[-1] == 0:
            raise InvalidIndex("leading digit must be nonzero")
        if any(not 0 <= d <= self.base - 2 for d in self.pattern):
            raise InvalidIndex("pattern digit out of range")

    @classmethod
    def from_int(cls, a: int, pattern: Sequence[int], base: int) -> "PowerIndex":
        if a < 1:
            raise InvalidIndex("integer part must be positive")
        digits = to_digits(a, base)
        pattern = tuple(pattern)
        if len(pattern) != len(digits):
            raise InvalidIndex(f"a={a} has {len(digits)} base-{base} digits, "
                               f"pattern has {len(pattern)}")
        return cls(base, tuple(digits), pattern)

    @classmethod
    def zeros(cls, a: int, base: int) -> "PowerIndex":
        """Index with the all-zero pattern."""
        return cls.from_int(a, [0] * len(to_digits(a, base)), base)

    @property
    def value(self) -> int:
        return sum(d * self.base ** i for i, d in enumerate(self.a_digits))

    @property
    def k(self) -> int:
        return len(self.a_digits) - 1

    def format(self) -> str:
        return f"b:{self.base};a:{self.value};p:{','.join(map(str, self.pattern))}"

    @classmethod
    def parse(cls, text: str) -> "PowerIndex":
        fields = {}
        for part in text.strip().split(";"):
            key, sep, val = part.partition(":")
            if not sep:
                raise InvalidIndex(f"malformed field {part!r}")
            fields[key.strip()] = val.strip()
        try:
            base = int(fields["b"])
            a = int(fields["a"])
            pattern = [int(v) for v in fields["p"].split(",")] if fields["p"] else []
        except (KeyError, ValueError) as exc:
            raise InvalidIndex(f"cannot parse {text!r}") from exc
        return cls.from_int(a, pattern, base)

    def __str__(self) -> str:
        return self.format()


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    if not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def b_max(E: Union[EntropoidParams, int]) -> int:
    """Smallest b with Catalan(b-1) > (p-1)^2."""
    p = E if isinstance(E, int) else E.p
    bound = (p - 1) ** 2
    b = 1
    while catalan(b - 1) <= bound:
        b += 1
    return b


def representative(E: EntropoidParams, x, a: int, m: int) -> Element:
    """R_a(x)[m] for 0 <= m <= a-2."""
    if a < 2 or not 0 <= m <= a - 2:
        raise InvalidIndex(f"no representative {m} for a={a}")
    return Element(*E.kernel.representative(tuple(x), a, m))


def representatives(E: EntropoidParams, x, a: int,
                    guard: int = REPRESENTATIVES_GUARD) -> list[Element]:
    """The full list R_a(x), grown one degree at a time from R_2 = [x*x]."""
    if a < 2:
        raise InvalidIndex("representatives need a >= 2")
    if a > guard:
        raise TooLarge(f"a={a} exceeds guard {guard}")
    x = Element(*x)
    reps = [star(E, x, x)]
    for _ in range(2, a):
        reps = [star(E, x, r) for r in reps] + [star(E, reps[0], x)]
    return reps


def pow_fast_counted(E: EntropoidParams, x, idx: PowerIndex) -> tuple[Element, int]:
    """Ladder exponentiation, also returning the number of products used."""
    r, ops = E.kernel.pow_index(tuple(x), idx.a_digits, idx.pattern, idx.base)
    return Element(*r), ops


def pow_fast(E: EntropoidParams, x, idx: PowerIndex) -> Element:
    return pow_fast_counted(E, x, idx)[0]


def op_count(idx: PowerIndex) -> int:
    return idx.k * (idx.base - 1) - 1 + sum(idx.a_digits)


def random_index(base: int, a_bound: int, rng: random.Random) -> PowerIndex:
    """Uniform a in [1, a_bound) with a uniform pattern of matching length."""
    if base < 2 or a_bound < 2:
        raise ValueError("need base >= 2 and a_bound >= 2")
    a = rng.randrange(1, a_bound)
    n = len(to_digits(a, base))
    return PowerIndex.from_int(a, [rng.randrange(base - 1) for _ in range(n)], base)


# Bracketing shapes. A leaf is None, an inner node is a (left, right) pair.
ShapeTree = Optional[tuple]
LEAF: ShapeTree = None


def leaf_count(tree: ShapeTree) -> int:
    count = 0
    stack = [tree]
    while stack:
        t = stack.pop()
        if t is None:
            count += 1
        else:
            stack.extend(t)
    return count


@lru_cache(maxsize=None)
def all_trees(a: int) -> tuple:
    """Every full binary tree with `a` leaves."""
    if a == 1:
        return (LEAF,)
    return tuple((left, right)
                 for k in range(1, a)
                 for left in all_trees(k)
                 for right in all_trees(a - k))


def left_comb(a: int) -> ShapeTree:
    """((x*x)*x)*...*x."""
    t = LEAF
    for _ in range(a - 1):
        t = (t, LEAF)
    return t


def pow_oracle(E: EntropoidParams, x, tree: ShapeTree) -> Element:
    """Evaluate a bracketing shape directly by walking the tree."""
    if leaf_count(tree) > TREE_LEAF_GUARD:
        raise TooLarge("tree too large")
    x = Element(*x)
    # iterative post-order so deep trees do not hit the recursion limit;
    # shared subtree objects are evaluated once
    values: dict[int, Element] = {}
    stack = [(tree, False)]
    while stack:
        node, done = stack.pop()
        if node is None or (not done and id(node) in values):
            continue
        if done:
            left, right = node
            lv = x if left is None else values[id(left)]
            rv = x if right is None else values[id(right)]
            values[id(node)] = star(E, lv, rv)
        else:
            stack.append((node, True))
            stack.append((node[1], False))
            stack.append((node[0], False))
    return x if tree is None else values[id(tree)]


def tree_to_string(tree: ShapeTree) -> str:
    if tree is None:
        return "x"
    return f"({tree_to_string(tree[0])}*{tree_to_string(tree[1])})"


def _all_values(E: EntropoidParams, x: Element, a: int) -> list[Element]:
    # values in the same order as all_trees(a)
    vals = {1: [x]}
    for n in range(2, a + 1):
        vals[n] = [star(E, lv, rv)
                   for k in range(1, n)
                   for lv in vals[k]
                   for rv in vals[n - k]]
    return vals[a]


def equivalence_classes(E: EntropoidParams, g, a: int) -> PartitionReport:
    """Group all Catalan(a-1) bracketings of g by value."""
    if a > CLASS_ENUM_GUARD:
        raise TooLarge(f"a={a} exceeds enumeration guard {CLASS_ENUM_GUARD}")
    if a < 2:
        raise InvalidIndex("need a >= 2")
    g = Element(*g)
    values = _all_values(E, g, a)
    keep_members = a <= MEMBER_LIST_LIMIT
    trees = all_trees(a) if keep_members else None
    groups: dict[Element, list] = {}
    order: list[Element] = []
    for n, v in enumerate(values):
        if v not in groups:
            groups[v] = []
            order.append(v)
        groups[v].append(tree_to_string(trees[n]) if keep_members else n)
    classes = [ShapeClass(v, len(groups[v]), tuple(groups[v]) if keep_members else None)
               for v in order]
    return PartitionReport(base=None, level=a, classes=classes)
