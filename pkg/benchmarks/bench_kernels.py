"""Compare the pure-Python and compiled search kernels on full GF(p) scans.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends must return identical hit lists; the script exits non-zero otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time

from dendri import kernels
from dendri.algebra import DendriformAlgebra, direct_sum
from dendri.field import Field
from dendri.fixtures import e1_algebra
from dendri.search import SearchSpace, _flat

CASES = [("d-equation", 3, 2), ("d-equation", 7, 2), ("d-equation", 3, 3),
         ("rota-baxter", 7, 2), ("rota-baxter", 3, 3)]


def algebra(p: int, dim: int):
    """E1, padded with a product-free direct summand when ``dim`` is 3."""
    A = e1_algebra(Field.gf(p))
    return A if dim == 2 else direct_sum(A, DendriformAlgebra.zero(A.field, dim - 2))


def run(kind: str, p: int, dim: int, backend: str) -> tuple[list[int], float]:
    A = algebra(p, dim)
    size = SearchSpace(A, "two-tensor").size
    star, prec, succ = _flat(A.star), _flat(A.prec), _flat(A.succ)
    t0 = time.perf_counter()
    if kind == "d-equation":
        hits = kernels.d_solutions(A.dim, p, star, prec, succ, 0, size, backend)
    else:
        hits = kernels.rb_solutions(A.dim, p, prec, succ, 1, 0, size, backend)
    return hits, time.perf_counter() - t0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = sorted(kernels.BACKENDS)
    print(f"backends available: {', '.join(backends)}")
    print(f"{'kernel':<12} {'p':>3} {'dim':>3} {'candidates':>11} " + " ".join(f"{b + ' (s)':>14}" for b in backends) + "  speedup")
    status = 0
    for kind, p, dim in CASES:
        best, hits = {}, {}
        for b in backends:
            times = []
            for _ in range(args.repeat):
                h, dt = run(kind, p, dim, b)
                times.append(dt)
            best[b], hits[b] = min(times), h
        if len({tuple(h) for h in hits.values()}) != 1:
            print(f"MISMATCH between backends for {kind} p={p} dim={dim}", file=sys.stderr)
            status = 1
        speed = f"{best['python'] / best['compiled']:8.1f}x" if "compiled" in best else "      n/a"
        print(f"{kind:<12} {p:>3} {dim:>3} {p ** (dim * dim):>11} " + " ".join(f"{best[b]:>14.4f}" for b in backends) + f" {speed}"
              f"   ({len(hits['python'])} hits)")
    return status


if __name__ == "__main__":
    sys.exit(main())
