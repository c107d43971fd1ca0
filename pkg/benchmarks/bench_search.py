"""Compare the compiled and pure-Python search kernels on fixed decision instances.

    python3 benchmarks/bench_search.py [--full] [--repeat N]

Both kernels walk the same search tree, so node counts must agree; the table
reports wall time per kernel and the speedup.  ``--full`` adds the long
double-wheel instance with a load floor (about two minutes in pure Python).
"""
from __future__ import annotations

import argparse
import time

from arbor.classes import ForestClass as FC
from arbor.generators import complete, complete_bipartite, double_wheel, prop2_gadget
from arbor.solver import Budget, SolveRequest, decide_cover
from arbor.solver import kernel

UNBOUNDED = Budget(nodes=1 << 40, seconds=3600.0)


def instances(full: bool):
    dw5 = double_wheel(5).graph
    yield "K6 if k=14", SolveRequest(complete(6), FC.INDUCED_FOREST, k=14, budget=UNBOUNDED)
    yield "K3,4 if k=2", SolveRequest(complete_bipartite(3, 4), FC.INDUCED_FOREST, k=2, budget=UNBOUNDED)
    yield "gadget if partition k=2", SolveRequest(prop2_gadget(2).graph, FC.INDUCED_FOREST, "partition",
                                                  k=2, budget=UNBOUNDED)
    yield "DW5 if k=6", SolveRequest(dw5, FC.INDUCED_FOREST, k=6, budget=UNBOUNDED)
    yield "DW5 if k=7 cap 3", SolveRequest(dw5, FC.INDUCED_FOREST, k=7, budget=UNBOUNDED,
                                           load_caps={v: 3 for v in dw5.vertices})
    yield "DW5 isf k=7", SolveRequest(dw5, FC.INDUCED_STAR_FOREST, k=7, budget=UNBOUNDED)
    if full:
        dw7 = double_wheel(7)
        yield "DW7 if k=7 floor 4", SolveRequest(dw7.graph, FC.INDUCED_FOREST, k=7, budget=UNBOUNDED,
                                                 load_floors={dw7.hubs[0]: 4})


def timed(req: SolveRequest, name: str, repeat: int):
    best, res = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = decide_cover(SolveRequest(**{**req.__dict__, "kernel": name}))
        best = min(best, time.perf_counter() - t0)
    return res, best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if "cython" not in kernel.available():
        raise SystemExit("compiled kernel not built; reinstall with Cython available")
    print(f"{'instance':28} {'status':11} {'nodes':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, req in instances(args.full):
        py, tp = timed(req, "python", 1 if args.full else args.repeat)
        cy, tc = timed(req, "cython", args.repeat)
        assert (py.status, py.nodes) == (cy.status, cy.nodes), f"kernels disagree on {label}"
        print(f"{label:28} {cy.status:11} {cy.nodes:>10} {tp:>10.4f} {tc:>10.4f} {tp / max(tc, 1e-9):>7.0f}x")


if __name__ == "__main__":
    main()
