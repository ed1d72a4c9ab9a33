#!/usr/bin/env python3
"""Benchmark the search kernels: compiled versus pure Python.

Run directly to time the workloads in the current mode (numba unless
SEMIRIGID_PURE_PYTHON=1), or compare both paths side by side:

    python benchmarks/bench_search.py --compare
"""

import argparse
import json
import os
import subprocess
import sys
import time
from itertools import combinations


def workloads():
    from semirigid import (
        census,
        count_endomorphisms,
        is_semirigid,
        product_system,
        zadori,
    )
    from semirigid.planar import PlanarSet, induced_system

    def zadori_decisions():
        for n in (7, 9, 11):
            assert is_semirigid(zadori(n)).semirigid

    def product_counts():
        assert count_endomorphisms(product_system(2, 3))[0] == 64

    def census4():
        assert census(4) == 0

    def census5():
        assert census(5) == 480

    def grid_sweep():
        grid = [(x, y) for x in range(3) for y in range(3)]
        hits = 0
        for size in range(3, 7):
            for combo in combinations(grid, size):
                if is_semirigid(induced_system(PlanarSet(combo))).semirigid:
                    hits += 1
        assert hits > 0

    return [
        ("zadori decisions n=7,9,11", zadori_decisions),
        ("product(2,3) endo count", product_counts),
        ("census n=4", census4),
        ("census n=5", census5),
        ("3x3 grid semirigid sweep", grid_sweep),
    ]


def run_current(repeat: int, as_json: bool) -> None:
    import semirigid._kernels as kernels

    mode = "numba" if kernels.NUMBA_ENABLED else "pure-python"
    results = {}
    for name, fn in workloads():
        fn()  # warm up (and compile, in numba mode)
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        results[name] = best
    if as_json:
        print(json.dumps({"mode": mode, "results": results}))
        return
    print(f"mode: {mode}")
    for name, secs in results.items():
        print(f"  {name:<30s} {secs * 1000:10.2f} ms")


def run_compare(repeat: int) -> None:
    rows = {}
    modes = []
    for flag in ("0", "1"):
        env = dict(os.environ, SEMIRIGID_PURE_PYTHON=flag)
        out = subprocess.run(
            [sys.executable, __file__, "--repeat", str(repeat), "--json"],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        data = json.loads(out.stdout.splitlines()[-1])
        modes.append(data["mode"])
        for name, secs in data["results"].items():
            rows.setdefault(name, []).append(secs)
    print(f"{'workload':<30s} {modes[0]:>12s} {modes[1]:>14s} {'speedup':>9s}")
    for name, (fast, slow) in rows.items():
        ratio = slow / fast if fast > 0 else float("inf")
        print(
            f"{name:<30s} {fast * 1000:10.2f}ms {slow * 1000:12.2f}ms {ratio:8.1f}x"
        )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--compare", action="store_true")
    args = parser.parse_args()
    if args.compare:
        run_compare(args.repeat)
    else:
        run_current(args.repeat, args.json)


if __name__ == "__main__":
    main()
