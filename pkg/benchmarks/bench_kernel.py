"""Benchmark the canonical-labeling kernel: compiled extension vs pure twin.

Runs canonical_code on the same batch of seeded random triples at several
degrees and prints microseconds per call for each backend plus the
speedup ratio. The compiled backend is skipped (with a note) when the
extension is not built.

Usage: python3 benchmarks/bench_kernel.py [--sizes 4,8,16,32] [--reps 2000]
"""

import argparse
import random
import time

from checkersurf import _kernel_py

try:
    from checkersurf import _kernel
except ImportError:
    _kernel = None


def make_batch(rng, n, count):
    batch = []
    for _ in range(count):
        arrs = []
        for _ in range(3):
            images = list(range(n))
            rng.shuffle(images)
            arrs.append(tuple(images))
        batch.append(tuple(arrs))
    return batch


def time_backend(func, n, batch, reps):
    # One untimed pass warms caches and surfaces errors early.
    for b, r, y in batch:
        func(n, b, r, y, 0, 0, True)
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        done = 0
        while done < reps:
            for b, r, y in batch:
                func(n, b, r, y, 0, 0, True)
                done += 1
                if done >= reps:
                    break
        best = min(best, (time.perf_counter() - start) / done)
    return best * 1e6


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,16,32,64")
    parser.add_argument("--reps", type=int, default=2000)
    parser.add_argument("--batch", type=int, default=64)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]

    if _kernel is None:
        print("compiled kernel not built; timing the pure backend only")
    header = "%6s  %14s  %14s  %8s" % ("n", "compiled us/op", "python us/op", "ratio")
    print(header)
    print("-" * len(header))
    for n in sizes:
        rng = random.Random(args.seed)
        batch = make_batch(rng, n, args.batch)
        py = time_backend(_kernel_py.canonical_code, n, batch, args.reps)
        if _kernel is not None:
            cy = time_backend(_kernel.canonical_code, n, batch, args.reps)
            for b, r, y in batch:
                assert _kernel.canonical_code(n, b, r, y, 0, 0, True) == (
                    _kernel_py.canonical_code(n, b, r, y, 0, 0, True)
                )
            print("%6d  %14.2f  %14.2f  %7.1fx" % (n, cy, py, py / cy))
        else:
            print("%6d  %14s  %14.2f  %8s" % (n, "-", py, "-"))


if __name__ == "__main__":
    main()
