"""Time full_detection under the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py --sizes 32 64 128 --repeat 3
"""
import argparse
import time

from walkalg import full_detection, kernels, random_graph


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128])
    ap.add_argument("--arc-prob", type=float, default=0.5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = [b for b in ("compiled", "python") if b in kernels.BACKENDS]
    original = kernels.BACKEND
    print(f"{'n':>5} " + " ".join(f"{b:>10}" for b in backends) + ("    speedup" if len(backends) == 2 else ""))
    try:
        for n in args.sizes:
            g = random_graph(n, args.arc_prob, seed=args.seed + n)
            row = {}
            for b in backends:
                kernels.set_backend(b)
                full_detection(g)  # warm-up
                row[b] = best_of(lambda: full_detection(g), args.repeat)
            line = f"{n:>5} " + " ".join(f"{row[b]:>9.4f}s" for b in backends)
            if len(backends) == 2:
                line += f" {row['python'] / row['compiled']:>9.1f}x"
            print(line)
    finally:
        kernels.set_backend(original)


if __name__ == "__main__":
    main()
