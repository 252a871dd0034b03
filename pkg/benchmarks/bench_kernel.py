"""Compare the compiled kernel against the pure-Python fallback.

Runs the same Groebner workloads in two subprocesses, one with
MULTIGB_PURE_PYTHON=1, and prints a timing table.  Usage:

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, time
import multigb
from multigb.determinantal import minors, variable_matrix, build_column_graded
from multigb.groebner import Ideal
from multigb.ring import BlockRing, lex

def workloads():
    A = variable_matrix(3, 4, grading="row")
    yield "2-minors 3x4 variables, degrevlex", Ideal(A.ring, minors(A, 2)), None
    yield "2-minors 3x4 variables, lex", Ideal(A.ring, minors(A, 2)), lex(A.ring)
    B = build_column_graded(3, (3, 3, 3, 3, 3), seed=7)
    yield "maximal minors 3x5 generic, degrevlex", Ideal(B.ring, minors(B, 3)), None
    C = variable_matrix(3, 3, grading="row")
    I = Ideal(C.ring, minors(C, 2))
    yield "2-minors 3x3 variables, 30 sampled orders", I, "sampled"

repeat = int(sys.argv[1])
rows = []
for name, I, order in workloads():
    best = None
    for _ in range(repeat):
        # fresh ideal per run: the per-ideal basis cache must not short-circuit
        J = Ideal(I.ring, list(I.gens), I.limits)
        start = time.perf_counter()
        if order == "sampled":
            from multigb.csideals import sample_orders
            for o in sample_orders(J.ring, 30, include_permutations=False):
                J.groebner_basis(o)
        else:
            J.groebner_basis(order)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    rows.append({"name": name, "seconds": best})
print(json.dumps({"kernel": multigb.KERNEL_IMPLEMENTATION, "rows": rows}))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["MULTIGB_PURE_PYTHON"] = "1"
    else:
        env.pop("MULTIGB_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="best-of-N timing per workload")
    args = parser.parse_args()

    started = time.perf_counter()
    compiled = run(pure=False, repeat=args.repeat)
    pure = run(pure=True, repeat=args.repeat)

    if compiled["kernel"] != "compiled":
        print("note: compiled extension unavailable; comparing pure vs pure")

    width = max(len(r["name"]) for r in pure["rows"])
    print(f"{'workload'.ljust(width)}  {'pure':>10}  {'compiled':>10}  speedup")
    for rp, rc in zip(pure["rows"], compiled["rows"]):
        assert rp["name"] == rc["name"]
        ratio = rp["seconds"] / rc["seconds"] if rc["seconds"] else float("inf")
        print(f"{rp['name'].ljust(width)}  {rp['seconds']:>9.4f}s "
              f"{rc['seconds']:>9.4f}s  {ratio:>6.2f}x")
    print(f"total wall time {time.perf_counter() - started:.1f}s "
          f"(best of {args.repeat})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
