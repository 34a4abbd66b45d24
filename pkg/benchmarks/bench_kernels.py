#!/usr/bin/env python3
"""Compare the compiled and pure-Python enumeration kernels.

Times exhaustive proper/interval/cyclic counting over every tree with
``--edges`` edges plus a few cycles, for each palette size t <= |E|.

    python benchmarks/bench_kernels.py --edges 7 --repeat 3
"""

import argparse
import statistics
import time

from intcyc import backend
from intcyc import fixtures as F
from intcyc.catalog import trees


def workload(edges: int):
    graphs = trees(edges + 1) + [F.cycle(edges), F.complete_bipartite(3, 2)]
    jobs = []
    for g in graphs:
        eu, ev = [u for u, _ in g.edges], [v for _, v in g.edges]
        for t in range(1, g.m + 1):
            for kind in (0, 1, 2):
                jobs.append((g.n, eu, ev, t, kind))
    return jobs


def run(kernel, jobs) -> int:
    return sum(kernel.count_colorings(*job) for job in jobs)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--edges", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    jobs = workload(args.edges)
    results = {}
    for name, kernel in sorted(backend.KERNELS.items()):
        times = []
        for _ in range(args.repeat):
            start = time.perf_counter()
            total = run(kernel, jobs)
            times.append(time.perf_counter() - start)
        results[name] = (statistics.median(times), total)
        print(f"{name:>9}: {results[name][0]:8.3f}s median of {args.repeat}, {total} colorings counted")
    totals = {total for _, total in results.values()}
    assert len(totals) == 1, f"kernels disagree: {results}"
    if "compiled" in results:
        print(f"  speedup: {results['python'][0] / results['compiled'][0]:.1f}x")
    else:
        print("  compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
