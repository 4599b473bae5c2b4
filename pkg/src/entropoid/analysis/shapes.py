"""Pattern-class census, entropy statistics and the collision-entropy estimate."""

from __future__ import annotations

import csv
import itertools
import math
import random
import statistics
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, TextIO

from ..algebra import Element, EntropoidParams, params_new
from ..entropy import PartitionReport, ShapeClass
from ..errors import TooLarge
from ..field import gen_safe_prime
from ..generators import gen
from ..powindex import PowerIndex, pow_fast, to_digits

PARTITION_GUARD = 1 << 22
MEMBER_LIST_LIMIT = 1 << 12
CSV_COLUMNS = ["base", "i", "r_i", "n_ij", "H1", "H2", "Hmin"]
ESTIMATOR = "mean(2*log2(T) - 1), T = draws up to and including the first repeat"


def partition_xi(E: EntropoidParams, g, base: int, i: int,
                 guard: int = PARTITION_GUARD) -> PartitionReport:
    """Group all length-i patterns at exponent base^(i-1) by the value they give."""
    if i < 1:
        raise ValueError("level must be at least 1")
    total = (base - 1) ** i
    if total > guard:
        raise TooLarge(f"{total} patterns exceed guard {guard}")
    a = base ** (i - 1)
    keep = total <= MEMBER_LIST_LIMIT
    groups: dict[Element, list] = {}
    for pat in itertools.product(range(base - 1), repeat=i):
        v = pow_fast(E, g, PowerIndex.from_int(a, pat, base))
        groups.setdefault(v, []).append(pat)
    classes = [ShapeClass(v, len(m), tuple(m) if keep else None) for v, m in groups.items()]
    return PartitionReport(base=base, level=i, classes=classes)


def largest_class_prediction(base: int, i: int) -> int:
    """Predicted largest class size for an even base."""
    if base % 2:
        raise ValueError("prediction covers even bases only")
    return (base - 1) * ((base - 1) ** (i - 1) - (base - 2) ** (i - 1))


def largest_class_matches_prediction(E: EntropoidParams, g, base: int, i: int) -> bool:
    report = partition_xi(E, g, base, i)
    return max(report.sizes) == largest_class_prediction(base, i)


# names used by the public interface
conjecture3_predict = largest_class_prediction
conjecture3_check = largest_class_matches_prediction


def min_entropy_closed_form(base: int, i: int) -> float:
    """1 - ((b-2)/(b-1))^(i-1), reported next to the measured value."""
    return 1 - ((base - 2) / (base - 1)) ** (i - 1)


def min_entropy_from_prediction(base: int, i: int) -> float:
    """-log2 of the predicted largest class share."""
    return -math.log2(largest_class_prediction(base, i) / (base - 1) ** i)


def write_csv(reports: Iterable[PartitionReport], out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for r in reports:
        writer.writerow(r.csv_row())


@dataclass
class CollisionEstimate:
    mean: float
    samples: list[float] = field(default_factory=list)
    draws: list[int] = field(default_factory=list)
    estimator: str = ESTIMATOR


def collision_entropy_experiment(E: EntropoidParams, g, base: int, rng: random.Random,
                                 trials: int, max_draws: int = 1 << 22) -> CollisionEstimate:
    """Birthday estimate of the collision entropy of pattern outcomes.

    Each trial fixes a random integer part and draws random full-length
    patterns until a value repeats.
    """
    samples, draws = [], []
    for _ in range(trials):
        a = rng.randrange(1, E.p)
        n = len(to_digits(a, base))
        seen = set()
        t = 0
        while t < max_draws:
            t += 1
            pat = [rng.randrange(base - 1) for _ in range(n)]
            v = pow_fast(E, g, PowerIndex.from_int(a, pat, base))
            if v in seen:
                break
            seen.add(v)
        draws.append(t)
        samples.append(2 * math.log2(t) - 1)
    return CollisionEstimate(statistics.fmean(samples), samples, draws)


def random_entropoid(bits: int, rng: random.Random,
                     backend_name: Optional[str] = None) -> tuple[EntropoidParams, Element]:
    """Safe-prime entropoid with random constants, plus a generator of E*."""
    modulus = gen_safe_prime(bits, rng)
    consts = [rng.randrange(1, modulus.p) for _ in range(4)]
    E = params_new(modulus, *consts, backend_name=backend_name)
    return E, gen(E, rng).g


def collision_entropy_sweep(bits_range: Sequence[int], base: int, trials: int,
                            rng: random.Random) -> list[tuple[int, float]]:
    """One fresh entropoid per bit size; returns (bits, estimate) pairs."""
    out = []
    for bits in bits_range:
        E, g = random_entropoid(bits, rng)
        out.append((bits, collision_entropy_experiment(E, g, base, rng, trials).mean))
    return out


def trend_slope(points: Sequence[tuple[float, float]]) -> float:
    xs, ys = zip(*points)
    return statistics.linear_regression(xs, ys).slope
