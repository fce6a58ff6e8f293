"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]

Both backends must return identical values and node counts; the script
exits nonzero if they ever disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from qtrd import kernels
from qtrd.corpus import gnp
from qtrd.families import build_graph
from qtrd.solvers import Parameter, solve

CASES = [
    ("figure1", ["gamma", "gamma_R", "gamma_qtR", "gamma_tR", "rho"]),
    ("g1:t=1", ["gamma_R", "gamma_qtR", "gamma_tR"]),
    ("g2k:base=classic:cycle:3,k=3", ["gamma_R", "gamma_qtR"]),
    ("gprime_k:base=classic:cycle:3,k=3", ["gamma_qtR", "gamma_tR"]),
    ("g3k:base=classic:complete:4,k=3", ["gamma_qtR"]),
    ("classic:cycle:24", ["gamma_qtR", "gamma_t", "rho"]),
]


def _time(g, p, backend, repeat):
    best = float("inf")
    res = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = solve(g, p, budget=None, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return res, best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--random", type=int, default=20, help="random G(14, 0.3) graphs to add")
    ap.add_argument("--json", help="write the rows here")
    args = ap.parse_args(argv)
    if not kernels.has_compiled():
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1

    graphs = [(spec, build_graph(spec), params) for spec, params in CASES]
    graphs += [(f"gnp-14-0.3-{i}", gnp(14, 0.3, 1, i), ["gamma_R", "gamma_qtR"])
               for i in range(args.random)]

    rows, mismatches = [], 0
    print(f"{'graph':38} {'param':9} {'value':>5} {'nodes':>9} {'python ms':>10} "
          f"{'compiled ms':>11} {'speedup':>8}")
    for name, g, params in graphs:
        for pname in params:
            p = Parameter.parse(pname)
            rp, tp = _time(g, p, "python", args.repeat)
            rc, tc = _time(g, p, "compiled", args.repeat)
            same = (rp.value, rp.nodes_explored) == (rc.value, rc.nodes_explored)
            mismatches += not same
            row = {"graph": name, "n": g.n, "parameter": p.value, "value": rc.value,
                   "nodes": rc.nodes_explored, "python_ms": tp * 1e3, "compiled_ms": tc * 1e3,
                   "agree": same}
            rows.append(row)
            print(f"{name[:38]:38} {p.value:9} {rc.value:5d} {rc.nodes_explored:9d} "
                  f"{tp * 1e3:10.2f} {tc * 1e3:11.2f} {tp / max(tc, 1e-9):8.1f}"
                  + ("" if same else "  MISMATCH"))
    tot_p = sum(r["python_ms"] for r in rows)
    tot_c = sum(r["compiled_ms"] for r in rows)
    print(f"total: python {tot_p:.1f} ms, compiled {tot_c:.1f} ms, "
          f"speedup {tot_p / max(tot_c, 1e-9):.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
