"""Compare the compiled and pure-Python combination search.

Workloads are the T2 queries the oracle actually issues: every lattice
vector of the degree window of a set of seeded graphs, searched with a
fresh searcher (so the failure memo starts empty) at a fixed cap.

    python3 benchmarks/bench_search.py --graphs 60 --bound 4 --cap 24
"""
import argparse
import statistics
import time

from edgering._kernels_py import CombinationSearch as PySearch
from edgering.model import edge_vectors, parse_graph
from edgering.oracle.lattice import lattice_member
from edgering.oracle.semigroup import window
from edgering.random_graphs import seeded_graphs

try:
    from edgering._kernels import CombinationSearch as CySearch
except ImportError:
    CySearch = None


def workload(n_graphs: int, seed: int, bound: int):
    jobs = []
    graphs = seeded_graphs("mixed", n_graphs, seed, max_vertices=7, max_edges=12)
    # one hard negative: the Figure-1 style pair has no representation at any cap
    graphs.append(parse_graph("vertices 3\n+ 1 1\n+ 1 2\n+ 2 3\n- 3 3\n"))
    for g in graphs:
        vecs = edge_vectors(g)
        if not vecs:
            continue
        targets = [a for a in window(g, bound) if lattice_member(g, a) is not None]
        jobs.append((vecs, targets))
    return jobs


def run(cls, jobs, cap):
    t = time.perf_counter()
    found = 0
    for vecs, targets in jobs:
        s = cls(vecs)
        for a in targets:
            found += s.search(a, cap) is not None
    return time.perf_counter() - t, found


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--graphs", type=int, default=60)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--cap", type=int, default=24)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    jobs = workload(args.graphs, args.seed, args.bound)
    n_queries = sum(len(t) for _, t in jobs)
    print(f"{len(jobs)} graphs, {n_queries} queries, cap {args.cap}")
    results = {}
    for name, cls in (("python", PySearch), ("cython", CySearch)):
        if cls is None:
            print(f"{name:>7}: not built")
            continue
        times = []
        for _ in range(args.repeat):
            dt, found = run(cls, jobs, args.cap)
            times.append(dt)
        results[name] = (statistics.median(times), found)
        print(f"{name:>7}: median {results[name][0]:.3f}s over {args.repeat} runs, {found} found")
    if len(results) == 2:
        (tp, fp), (tc, fc) = results["python"], results["cython"]
        assert fp == fc, "backends disagree"
        print(f"speedup: {tp / tc:.1f}x")


if __name__ == "__main__":
    main()
