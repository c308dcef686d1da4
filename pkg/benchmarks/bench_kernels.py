"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--skip-h4-python]

Each case runs on every available backend; node counts must agree.
"""

import argparse
import time

from shiftchain_lab import kernels
from shiftchain_lab.constructions import construct_theorem1, random_shift_chain


def flat(h):
    return [v for e in h.edges for v in e]


def cases(skip_h4_python):
    h3, _ = construct_theorem1(3)
    h4, _ = construct_theorem1(4)
    rnd = random_shift_chain(11, 3, 20, seed=7)
    big = random_shift_chain(60, 2, 80, seed=11)
    yield "H_3 exhaustive poly k=3", lambda K: K.exhaustive(h3.n, 3, 3, flat(h3), True), ()
    yield "random n=11 exhaustive proper k=2", lambda K: K.exhaustive(rnd.n, 2, 3, flat(rnd), False), ()
    yield "random n=60 backtrack proper k=2", lambda K: K.backtrack(big.n, 2, 2, flat(big), False), ()
    skip = ("python",) if skip_h4_python else ()
    yield "H_4 backtrack poly k=3", lambda K: K.backtrack(h4.n, 3, 4, flat(h4), True), skip


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--skip-h4-python", action="store_true", help="the pure-Python H_4 run takes minutes")
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':40} {'backend':8} {'seconds':>9} {'nodes':>12}")
    for name, run, skip in cases(args.skip_h4_python):
        seen, times = {}, {}
        for bname, mod in backends.items():
            if bname in skip:
                print(f"{name:40} {bname:8} {'skipped':>9}")
                continue
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                colors, nodes = run(mod)
                best = min(best, time.perf_counter() - t0)
            seen[bname] = (colors, nodes)
            times[bname] = best
            print(f"{name:40} {bname:8} {best:9.3f} {nodes:12d}")
        if len({v for v in seen.values()}) > 1:
            raise SystemExit(f"backends disagree on {name}")
        if {"python", "cython"} <= times.keys():
            print(f"{'':40} speedup  {times['python'] / times['cython']:8.1f}x")


if __name__ == "__main__":
    main()
