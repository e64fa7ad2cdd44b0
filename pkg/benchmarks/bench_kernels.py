"""Compare the compiled and numpy prefilter kernels.

For each case the prefilter tensor is built once, then both backends scan
every support block of the enumeration.  The script checks that they keep
the same candidates and reports the best of ``--repeat`` timings, followed
by the wall time of a full ``ua_refute`` run per backend.

    python3 benchmarks/bench_kernels.py --repeat 5
"""

from __future__ import annotations

import argparse
import itertools
import time

import numpy as np

from uat import kernels
from uat.files import load_ideal
from uat.search import CandidateSearch, parse_pool
from uat.unit_additivity import ua_refute

CASES = [
    ("xyz_z.ideal", 2, "small"),
    ("circle_q.ideal", 2, "small"),
    ("circle_qi.ideal", 2, "gauss"),
    ("xy_axes.ideal", 3, "small"),
    ("f2_x3_x.ideal", 2, "all"),
]


def blocks(search: CandidateSearch):
    m = len(search.monomials)
    for s in range(1, m + 1):
        for support in itertools.combinations(range(m), s):
            yield np.ascontiguousarray(search.vals[:, list(support), :, :])


def scan(search: CandidateSearch, subs, backend: str):
    kept = 0
    t0 = time.perf_counter()
    for sub in subs:
        kept += len(kernels.survivors(sub, search.anchor, search.modulus, backend))
    return time.perf_counter() - t0, kept


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-search", action="store_true", help="Only time the kernels.")
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {kernels.BACKEND})")
    if "cython" not in backends:
        print("compiled kernel not built; only the numpy timings are shown")
    header = f"{'case':<24}{'deg':>4}{'cands':>10}{'pts':>5}" + "".join(f"{b + ' ms':>12}" for b in backends)
    print(header)
    for name, deg, pool_spec in CASES:
        I = load_ideal(name).ideal()
        pool = parse_pool(pool_spec, I.ring.field)
        search = CandidateSearch(I, deg, pool)
        subs = list(blocks(search))
        row, kept = [], set()
        for b in backends:
            best = min(scan(search, subs, b) for _ in range(args.repeat))
            row.append(best[0] * 1000)
            kept.add(best[1])
        if len(kept) != 1:
            raise SystemExit(f"{name}: backends disagree on survivor counts {sorted(kept)}")
        print(f"{name:<24}{deg:>4}{search.total:>10}{search.points_used:>5}" + "".join(f"{t:>12.2f}" for t in row))
    if args.skip_search:
        return
    print()
    print("full ua_refute wall time (s)")
    for name, deg, pool_spec in CASES:
        I = load_ideal(name).ideal()
        times = []
        for b in backends:
            t0 = time.perf_counter()
            rep = ua_refute(I, deg, pool_spec, backend=b)
            times.append(f"{b}={time.perf_counter() - t0:.2f} ({rep.outcome})")
        print(f"  {name:<22} " + "  ".join(times))


if __name__ == "__main__":
    main()
