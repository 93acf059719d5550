#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the four word-arithmetic primitives and the Hurwitz step on random
workloads, then one end-to-end orbit enumeration.  Run as

    python benchmarks/bench_kernel.py [--repeat N]

The orbit section uses whichever kernel the package selected at import;
rerun with HURWITZ3_KERNEL=py to compare end to end.
"""

import argparse
import random
import time

from hurwitz3 import KERNEL_NAME, _kernel_py

try:
    from hurwitz3 import _kernel
except ImportError:
    _kernel = None


def make_workloads(seed=0, n=4000):
    rng = random.Random(seed)
    words = [tuple(rng.randrange(3) for _ in range(rng.randrange(4, 30)))
             for _ in range(n)]
    pairs = []
    for _ in range(n):
        u1, q1 = _kernel_py.normalize(
            tuple(rng.randrange(3) for _ in range(rng.randrange(20))))
        u2, q2 = _kernel_py.normalize(
            tuple(rng.randrange(3) for _ in range(rng.randrange(20))))
        pairs.append(((u1, q1 - rng.randrange(4)),
                      (u2, q2 - rng.randrange(4))))
    signed = [tuple((rng.randrange(3), rng.choice((1, -1)))
                    for _ in range(rng.randrange(4, 30)))
              for _ in range(n)]
    tuples = []
    for _ in range(n):
        k = rng.randint(2, 6)
        values = tuple(
            _kernel_py.normalize(tuple(rng.randrange(3)
                                       for _ in range(rng.randrange(8))))
            for _ in range(k))
        tuples.append((values, rng.randrange(k - 1), rng.random() < 0.5))
    return words, pairs, signed, tuples


def timed(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_kernel(mod, words, pairs, signed, tuples, repeat):
    out = {}
    out["normalize"] = timed(
        lambda: [mod.normalize(w) for w in words], repeat)
    out["multiply"] = timed(
        lambda: [mod.multiply(a[0], a[1], b[0], b[1]) for a, b in pairs],
        repeat)
    out["invert"] = timed(
        lambda: [mod.invert(a[0], a[1]) for a, _ in pairs], repeat)
    out["evaluate"] = timed(
        lambda: [mod.evaluate_signed(w) for w in signed], repeat)
    out["hurwitz_step"] = timed(
        lambda: [mod.hurwitz_step(v, i, f) for v, i, f in tuples], repeat)
    return out


def bench_orbit():
    from hurwitz3 import Braid, base_vertices, factorization_of_word
    from hurwitz3.factorizations import hurwitz_orbit

    total = 0.0
    nodes = 0
    for u, p in (((2, 0, 1, 1), 1), ((1, 2, 0, 1, 2), 1), ((0, 1, 2, 0), 1)):
        x = Braid(u, p)
        for v in base_vertices(x):
            start = factorization_of_word(v.word)
            t0 = time.perf_counter()
            orbit, _ = hurwitz_orbit(start)
            total += time.perf_counter() - t0
            nodes += len(orbit)
    return total, nodes


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    words, pairs, signed, tuples = make_workloads()
    print(f"{len(words)} calls per primitive, best of {args.repeat}\n")
    py = bench_kernel(_kernel_py, words, pairs, signed, tuples, args.repeat)
    if _kernel is not None:
        cc = bench_kernel(_kernel, words, pairs, signed, tuples, args.repeat)
    else:
        cc = None
        print("compiled kernel not built; timing the fallback only\n")

    header = f"{'primitive':<14} {'pure (ms)':>10}"
    if cc:
        header += f" {'compiled (ms)':>14} {'speedup':>8}"
    print(header)
    for name, t_py in py.items():
        line = f"{name:<14} {t_py * 1e3:>10.2f}"
        if cc:
            line += f" {cc[name] * 1e3:>14.2f} {t_py / cc[name]:>7.1f}x"
        print(line)

    total, nodes = bench_orbit()
    print(f"\norbit enumeration ({KERNEL_NAME} kernel): "
          f"{nodes} tuples in {total * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
