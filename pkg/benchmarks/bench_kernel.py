"""Compare the compiled kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernel.py [--reps 2000] [--group GL(4,3)]

Times raw matrix products and vector actions, then a full deterministic
chain build, under each available backend.
"""

import argparse
import time

from bsgs import kernel
from bsgs.chain import compute_bsgs_deterministic
from bsgs.groups import parse_builtin
from bsgs.gf import field_from_order
from bsgs.matrix import act_vector, random_invertible
from bsgs.randomized import make_rng


def _time(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps * 1e6


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=2000)
    ap.add_argument("--group", default="GL(4,3)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    cases = [(5, 4), (9, 4), (49, 6), (2, 8)]
    print(f"backends available: {', '.join(kernel.AVAILABLE)}")
    print(f"{'case':14s} {'backend':8s} {'matmul us':>10s} {'vecmat us':>10s}")
    for q, d in cases:
        F = field_from_order(q)
        rng = make_rng(args.seed)
        a, b = random_invertible(F, d, rng), random_invertible(F, d, rng)
        v = tuple(range(1, d + 1))
        for name in kernel.AVAILABLE:
            with kernel.use_backend(name):
                mm = _time(lambda: a * b, args.reps)
                vm = _time(lambda: act_vector(v, a), args.reps)
            print(f"GF({q}) d={d:<5d} {name:8s} {mm:10.2f} {vm:10.2f}")

    _, _, gens, oracle = parse_builtin(args.group)
    for name in kernel.AVAILABLE:
        with kernel.use_backend(name):
            t0 = time.perf_counter()
            chain = compute_bsgs_deterministic(gens)
            dt = time.perf_counter() - t0
        assert chain.order() == oracle
        print(f"{args.group} chain build [{name}]: {dt * 1000:.1f} ms (order {chain.order()})")


if __name__ == "__main__":
    main()
