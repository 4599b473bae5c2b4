"""Time the native and pure-Python kernels side by side.

    python3 benchmarks/bench_kernels.py [--bits 64 128 256 512] [--repeat 5]
"""

import argparse
import random
import timeit

from entropoid import backend
from entropoid.algebra import params_new, random_element
from entropoid.field import gen_safe_prime
from entropoid.powindex import random_index
from entropoid.presets import preset


def _entropoids(bits, rng):
    p = gen_safe_prime(bits, rng).p
    consts = [rng.randrange(1, p) for _ in range(4)]
    return {name: params_new(p, *consts, backend_name=name) for name in backend.available()}


def _best(fn, number, repeat):
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def bench_star(bits, repeat, rng):
    kernels = _entropoids(bits, rng)
    any_E = next(iter(kernels.values()))
    x, y = random_element(any_E, rng), random_element(any_E, rng)
    return {name: _best(lambda: E.kernel.star(x, y), 2000, repeat) for name, E in kernels.items()}


def bench_pow(bits, base, repeat, rng):
    kernels = _entropoids(bits, rng)
    any_E = next(iter(kernels.values()))
    x = random_element(any_E, rng)
    idx = random_index(base, any_E.p, rng)
    args = (x, idx.a_digits, idx.pattern, base)
    return {name: _best(lambda: E.kernel.pow_index(*args), 20, repeat)
            for name, E in kernels.items()}


def bench_span(name, repeat):
    out = {}
    for kernel_name in backend.available():
        E = preset(name, kernel_name)
        out[kernel_name] = _best(lambda: [E.kernel.span((i, 1), 10_000) for i in range(E.p)],
                                 1, repeat)
    return out


def _row(label, timings):
    cells = "  ".join(f"{k}={v * 1e6:10.2f}us" for k, v in sorted(timings.items()))
    speedup = ""
    if "native" in timings and "python" in timings:
        speedup = f"  speedup={timings['python'] / timings['native']:.1f}x"
    print(f"{label:<24}{cells}{speedup}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bits", type=int, nargs="+", default=[64, 128, 256, 512])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"kernels: {', '.join(backend.available())}")
    for bits in args.bits:
        _row(f"star {bits}b", bench_star(bits, args.repeat, rng))
    for bits in args.bits:
        for base in (3, 257):
            _row(f"pow {bits}b base {base}", bench_pow(bits, base, args.repeat, rng))
    for name in ("e13", "e23"):
        _row(f"span row {name}", bench_span(name, args.repeat))


if __name__ == "__main__":
    main()
