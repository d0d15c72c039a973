"""Benchmark the numba kernels against the pure-Python fallback.

Each workload runs in a fresh subprocess with ORIGAMI_NUMBA=1 and then
ORIGAMI_NUMBA=0; JIT compilation is excluded by a warm-up call inside
the child.  Usage::

    python benchmarks/bench_kernels.py [--squares N] [--mc-steps S]
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json
import sys
import time

squares = int(sys.argv[1])
mc_steps = int(sys.argv[2])

from origamis.jit import NUMBA_ENABLED
from origamis.orbits import enumerate_stratum, sl2z_orbit
from origamis.origami import make_origami
from origamis.montecarlo import build_cocycle_tables, estimate_spectrum

timings = {"numba": NUMBA_ENABLED}

# warm-up: compile every kernel on tiny inputs
enumerate_stratum(3)
L = make_origami((1, 0, 2), (2, 1, 0))
tables = build_cocycle_tables(L)
estimate_spectrum(L, 10**4, 1, tables=tables)

t0 = time.perf_counter()
orbits = enumerate_stratum(squares)
timings["enumerate"] = time.perf_counter() - t0
timings["enumerate_orbits"] = len(orbits)

t0 = time.perf_counter()
for _ in range(200):
    sl2z_orbit(make_origami((1, 2, 3, 0), (2, 1, 0, 3)))
timings["orbit_closure_x200"] = time.perf_counter() - t0

t0 = time.perf_counter()
est = estimate_spectrum(L, mc_steps, 7, tables=tables)
timings["mc_walk"] = time.perf_counter() - t0
timings["mc_lambda2"] = est.exponents[1]

print(json.dumps(timings))
"""


def run(numba_flag, squares, mc_steps):
    env = dict(os.environ)
    env["ORIGAMI_NUMBA"] = numba_flag
    res = subprocess.run(
        [sys.executable, "-c", CHILD, str(squares), str(mc_steps)],
        capture_output=True,
        text=True,
        env=env,
    )
    if res.returncode != 0:
        raise RuntimeError(res.stderr)
    return json.loads(res.stdout.splitlines()[-1])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--squares", type=int, default=7,
                        help="square count for the enumeration workload")
    parser.add_argument("--mc-steps", type=int, default=10**5,
                        help="steps for the Monte Carlo workload")
    args = parser.parse_args()

    print(f"workloads: enumerate(n={args.squares}), 200 orbit closures, "
          f"mc({args.mc_steps:.0e} steps)")
    fast = run("1", args.squares, args.mc_steps)
    slow = run("0", args.squares, args.mc_steps)
    if not fast["numba"]:
        print("warning: numba unavailable; both runs used the fallback")

    rows = ["enumerate", "orbit_closure_x200", "mc_walk"]
    print(f"{'workload':<22}{'numba':>10}{'python':>10}{'speedup':>9}")
    for row in rows:
        a, b = fast[row], slow[row]
        print(f"{row:<22}{a:>9.3f}s{b:>9.3f}s{b / a:>8.1f}x")
    assert fast["enumerate_orbits"] == slow["enumerate_orbits"]
    assert abs(fast["mc_lambda2"] - slow["mc_lambda2"]) < 1e-9


if __name__ == "__main__":
    main()
