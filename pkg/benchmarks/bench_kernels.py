"""Time the hot kernels compiled (numba) and uncompiled (DEGTURAN_PURE=1).

Each mode runs in its own interpreter because the flag is read at import.
Compilation is excluded: every workload runs once untimed first.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from degturan import _jit
from degturan import constructions as C
from degturan.graph import Graph, canonical_form
from degturan.detectors import contains_path, contains_even_cycle, contains_subgraph
from degturan.patterns import Pattern
from degturan.search import enumerate_codes

repeat = int(sys.argv[1])
rng = np.random.default_rng(0)
rand = [Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        for n in rng.integers(8, 16, size=200)]
sparse = [Graph.from_edges(14, [(u, v) for u in range(14) for v in range(u + 1, 14) if rng.random() < 0.15])
          for _ in range(200)]
paw = C.paw()

work = {
    "canonical_form x200": lambda: [canonical_form(g) for g in rand],
    "contains_path(P7) x200": lambda: [contains_path(g, 7) for g in sparse],
    "contains_even_cycle x200": lambda: [contains_even_cycle(g) for g in sparse],
    "generic embed(paw) x200": lambda: [contains_subgraph(g, paw) for g in sparse],
    "enumerate K3-free n=7": lambda: enumerate_codes(7, Pattern.clique(3)),
    "enumerate C*-free n=7": lambda: enumerate_codes(7, Pattern.even_cycles()),
}
out = {"jit": _jit.JIT_ENABLED, "times": {}}
for name, fn in work.items():
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    out["times"][name] = best
print(json.dumps(out))
"""


def run_mode(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("DEGTURAN_PURE", None)
    if pure:
        env["DEGTURAN_PURE"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True,
                         check=True)
    return json.loads(res.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    jit = run_mode(False, args.repeat)
    pure = run_mode(True, args.repeat)
    rows = []
    for name, tj in jit["times"].items():
        tp = pure["times"][name]
        rows.append({"workload": name, "numba_s": tj, "pure_s": tp, "speedup": tp / tj if tj else float("inf")})
    if args.json:
        print(json.dumps({"numba_enabled": jit["jit"], "rows": rows}, indent=1))
        return
    if not jit["jit"]:
        print("numba unavailable: both columns ran uncompiled")
    print(f"{'workload':28s} {'numba':>10s} {'pure':>10s} {'speedup':>9s}")
    for r in rows:
        print(f"{r['workload']:28s} {r['numba_s']:10.4f} {r['pure_s']:10.4f} {r['speedup']:8.1f}x")


if __name__ == "__main__":
    main()
