"""Benchmark the compiled kernels against the pure-Python fallback.

Imports both backends directly, so it runs regardless of which one the
package selected at import.  Usage:

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from gf2lights._kernels import pure

try:
    from gf2lights._kernels import _core as compiled
except ImportError:
    compiled = None


def n_words(bits: int) -> int:
    return max(1, (bits + 63) // 64)


def random_words(rng: random.Random, rows: int, cols: int) -> np.ndarray:
    out = np.zeros((rows, n_words(cols)), dtype=np.uint64)
    for r in range(rows):
        v = rng.getrandbits(cols)
        out[r] = np.frombuffer(v.to_bytes(out.shape[1] * 8, "little"),
                               dtype="<u8")
    return out


def best_of(repeat: int, fn) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rref(impl, repeat: int, size: int) -> float:
    rng = random.Random(1)
    base = random_words(rng, size, size)

    def run():
        work = base.copy()
        impl.rref(work, size, size)

    return best_of(repeat, run)


def bench_matvec(impl, repeat: int, size: int, count: int = 200) -> float:
    rng = random.Random(2)
    mat = random_words(rng, size, size)
    xs = [random_words(rng, 1, size)[0] for _ in range(count)]
    out = np.zeros(n_words(size), dtype=np.uint64)

    def run():
        for x in xs:
            impl.matvec_into(mat, x, out, size)

    return best_of(repeat, run)


def bench_exhaustive(impl, repeat: int, cols: int) -> float:
    rng = random.Random(3)
    masks = np.array([rng.getrandbits(cols) for _ in range(cols)],
                     dtype=np.uint64)
    rhs = rng.getrandbits(cols)

    def run():
        impl.exhaustive_count(masks, cols, rhs, cols)

    return best_of(repeat, run)


CASES = [
    ("rref 128x128", lambda impl, r: bench_rref(impl, r, 128)),
    ("rref 512x512", lambda impl, r: bench_rref(impl, r, 512)),
    ("matvec 256x256 x200", lambda impl, r: bench_matvec(impl, r, 256)),
    ("exhaustive 2^20", lambda impl, r: bench_exhaustive(impl, r, 20)),
    ("exhaustive 2^24", lambda impl, r: bench_exhaustive(impl, r, 24)),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="keep the best of this many runs")
    args = parser.parse_args()

    print(f"{'case':<22} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in CASES:
        t_pure = fn(pure, args.repeat)
        if compiled is None:
            print(f"{name:<22} {t_pure * 1e3:>8.2f}ms {'absent':>10} {'':>8}")
            continue
        t_comp = fn(compiled, args.repeat)
        ratio = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"{name:<22} {t_pure * 1e3:>8.2f}ms {t_comp * 1e3:>8.2f}ms "
              f"{ratio:>7.1f}x")
    if compiled is None:
        print("compiled extension not built; showing pure timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
