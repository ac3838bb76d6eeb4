"""Exhaustive enumeration over GF(p) and the independent D-equation oracle."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import kernels
from .algebra import DendriformAlgebra
from .bialgebra import ClassificationResult, classify, d_equation_defect
from .linalg import Matrix, Tensor3, transpose
from .rotabaxter import check_rb, tilde

DEFAULT_CAP = 10 ** 7
THREADS_ENV = "DENDRI_THREADS"


class SearchSpaceTooLarge(ValueError):
    pass


class OracleDisagreement(AssertionError):
    pass


@dataclass(frozen=True)
class SearchSpace:
    """Candidate matrices over GF(p), indexed by the base-p digits of their row-major entries.

    Optional constraints cut the space down: ``symmetric`` or ``skew`` tie entry ``(j, i)``
    to ``(i, j)``, and ``fixed`` pins entries as 0-based ``(i, j, value)`` triples.  The cap
    applies to the number of candidates left after the constraints.
    """

    algebra: DendriformAlgebra
    kind: str                      # "two-tensor" | "rb-operator"
    cap: int = DEFAULT_CAP
    symmetric: bool = False
    skew: bool = False
    fixed: tuple = ()

    def __post_init__(self):
        f = self.algebra.field
        if f.kind != "gf" or f.p == 2:
            raise ValueError("search needs an algebra over GF(p) with p an odd prime")
        if self.kind not in ("two-tensor", "rb-operator"):
            raise ValueError(f"unknown search kind {self.kind!r}")
        if self.symmetric and self.skew:
            raise ValueError("symmetric and skew together force the zero matrix; pick one")
        object.__setattr__(self, "fixed", tuple((int(i), int(j), f(v)) for i, j, v in self.fixed))
        self._pinned()                 # validates the fixed entries
        if self.size > self.cap:
            raise SearchSpaceTooLarge(f"{self.p}^{len(self.free)} = {self.size} candidates exceeds cap {self.cap}")

    @property
    def p(self) -> int:
        return self.algebra.field.p

    @property
    def entries(self) -> int:
        return self.algebra.dim ** 2

    @property
    def constrained(self) -> bool:
        return self.symmetric or self.skew or bool(self.fixed)

    def _pinned(self) -> dict:
        n, f = self.algebra.dim, self.algebra.field
        pinned = {}

        def pin(i, j, v):
            if pinned.get((i, j), v) != v:
                raise ValueError(f"conflicting constraints on entry ({i + 1}, {j + 1})")
            pinned[(i, j)] = v

        if self.skew:
            for i in range(n):
                pin(i, i, f.zero)
        for i, j, v in self.fixed:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"fixed entry ({i + 1}, {j + 1}) out of range")
            pin(i, j, v)
            if self.symmetric:
                pin(j, i, v)
            elif self.skew:
                pin(j, i, -v)
        return pinned

    @property
    def free(self) -> list[tuple[int, int]]:
        """Positions whose value is enumerated, in row-major order."""
        n = self.algebra.dim
        pinned = self._pinned()
        tied = self.symmetric or self.skew
        return [(i, j) for i in range(n) for j in range(n)
                if (i, j) not in pinned and not (tied and j < i)]

    @property
    def size(self) -> int:
        return self.p ** len(self.free)

    def contains(self, M: Matrix) -> bool:
        if any(M[i, j] != v for (i, j), v in self._pinned().items()):
            return False
        if self.symmetric:
            return M == transpose(M)
        if self.skew:
            return M == -transpose(M)
        return True

    def indices(self) -> list[int]:
        """Full-space indices of every candidate, ascending."""
        if not self.constrained:
            return list(range(self.size))
        n, p = self.algebra.dim, self.p
        free = self.free
        base = [0] * (n * n)
        for (i, j), v in self._pinned().items():
            base[i * n + j] = int(v)
        out = []
        for digits in product(range(p), repeat=len(free)):
            flat = list(base)
            for (i, j), d in zip(free, digits):
                flat[i * n + j] = d
                if self.symmetric:
                    flat[j * n + i] = d
                elif self.skew:
                    flat[j * n + i] = (-d) % p
            t = 0
            for d in flat:
                t = t * p + d
            out.append(t)
        out.sort()
        return out

    def shards(self, count: int) -> list[tuple[int, int]]:
        """Contiguous ``[lo, hi)`` ranges over candidate positions (full indices when unconstrained)."""
        count = max(1, min(count, self.size))
        step, extra = divmod(self.size, count)
        out, lo = [], 0
        for s in range(count):
            hi = lo + step + (1 if s < extra else 0)
            out.append((lo, hi))
            lo = hi
        return out

    def decode(self, t: int) -> Matrix:
        n = self.algebra.dim
        digits = kernels._kernels_py.decode(t, n, self.p)
        return Matrix(self.algebra.field, [digits[i * n:(i + 1) * n] for i in range(n)])


def _flat(c: Tensor3) -> list[int]:
    return [int(v) for m in c.entries for row in m for v in row]


def _workers(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _run(fn, jobs: list[tuple], workers: int) -> list[int]:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(fn, *zip(*jobs)))
    else:
        parts = [fn(*job) for job in jobs]
    # merge in canonical order whatever order shards complete in
    return sorted(t for part in parts for t in part)


def _d_job(n, p, star, prec, succ, lo, hi, backend):
    return kernels.d_solutions(n, p, star, prec, succ, lo, hi, backend)


def _rb_job(n, p, prec, succ, lam, lo, hi, backend):
    return kernels.rb_solutions(n, p, prec, succ, lam, lo, hi, backend)


def _d_list_job(n, p, star, prec, succ, ts, backend):
    return [t for t in ts if kernels.d_solutions(n, p, star, prec, succ, t, t + 1, backend)]


def _rb_list_job(n, p, prec, succ, lam, ts, backend):
    return [t for t in ts if kernels.rb_solutions(n, p, prec, succ, lam, t, t + 1, backend)]


def _space(A, kind, cap, constraints) -> SearchSpace:
    return SearchSpace(A, kind, cap, **(constraints or {}))


def _jobs(space: SearchSpace, shards: int, head: tuple, tail: tuple) -> tuple[bool, list[tuple]]:
    if not space.constrained:
        return False, [head + (lo, hi) + tail for lo, hi in space.shards(shards)]
    ts = space.indices()
    return True, [head + (ts[lo:hi],) + tail for lo, hi in space.shards(shards)]


def scan_d_indices(A: DendriformAlgebra, cap: int = DEFAULT_CAP, shards: int = 1,
                   workers: Optional[int] = None, backend: Optional[str] = None,
                   constraints: Optional[dict] = None) -> list[int]:
    space = _space(A, "two-tensor", cap, constraints)
    head = (A.dim, space.p, _flat(A.star), _flat(A.prec), _flat(A.succ))
    listed, jobs = _jobs(space, shards, head, (backend,))
    return _run(_d_list_job if listed else _d_job, jobs, _workers(workers))


def scan_rb_indices(A: DendriformAlgebra, lam, cap: int = DEFAULT_CAP, shards: int = 1,
                    workers: Optional[int] = None, backend: Optional[str] = None,
                    constraints: Optional[dict] = None) -> list[int]:
    space = _space(A, "rb-operator", cap, constraints)
    head = (A.dim, space.p, _flat(A.prec), _flat(A.succ), int(A.field(lam)))
    listed, jobs = _jobs(space, shards, head, (backend,))
    return _run(_rb_list_job if listed else _rb_job, jobs, _workers(workers))


# --- independent oracle -------------------------------------------------------------------

def oracle_defect(A: DendriformAlgebra, r) -> Tensor3:
    """The D-equation defect paired against ``xi (x) eta (x) zeta`` through ``r_+`` and ``r_-``:

    ``<D, e_p* (x) e_q* (x) e_s*> = <r_-(e_q*) * r_-(e_s*), e_p*> - <r_+(e_p*) < r_+(e_q*), e_s*>
    - <r_-(e_s*) > r_+(e_p*), e_q*>``,

    each product evaluated as a left multiplication operator applied to a vector.
    """
    R = r if isinstance(r, Matrix) else (r.R if hasattr(r, "R") else Matrix(A.field, r))
    n = A.dim
    rplus = transpose(R)
    plus = [rplus.column(i) for i in range(n)]
    minus = [R.column(i) for i in range(n)]
    Ls = [A.L_star(v) for v in minus]
    Lp = [A.L_prec(v) for v in plus]
    Lsu = [A.L_succ(v) for v in minus]

    def entry(p_, q, s):
        return (Ls[q].apply(minus[s])[p_] - Lp[p_].apply(plus[q])[s] - Lsu[s].apply(plus[p_])[q])

    return Tensor3.from_function(A.field, (n, n, n), entry)


# --- public enumerations --------------------------------------------------------------------

@dataclass
class DSolution:
    r: Matrix
    classification: ClassificationResult
    index: int

    def certificate(self, field) -> dict:
        ev = dict(self.classification.evidence)
        return {
            "index": self.index,
            "r": [[field.format(v) for v in row] for row in self.r.entries],
            "classification": self.classification.kind,
            "defect_index_formula": "zero",
            "defect_oracle": "zero",
            "evidence": {k: v for k, v in ev.items() if k != "coboundary_conditions"},
            "coboundary_conditions_as_printed": ev.get("coboundary_conditions"),
        }


def enumerate_d_solutions(A: DendriformAlgebra, cap: int = DEFAULT_CAP, shards: int = 1,
                          workers: Optional[int] = None, backend: Optional[str] = None,
                          constraints: Optional[dict] = None) -> list[DSolution]:
    """Every ``r`` over GF(p) with zero D-equation defect, lexicographic order, each classified.

    Hits come from the kernel and are re-verified by both exact code paths."""
    space = _space(A, "two-tensor", cap, constraints)
    out = []
    for t in scan_d_indices(A, cap, shards, workers, backend, constraints):
        R = space.decode(t)
        if not (d_equation_defect(A, R).is_zero() and oracle_defect(A, R).is_zero()):
            raise OracleDisagreement(f"kernel hit {t} is not confirmed by the exact defect paths")
        out.append(DSolution(R, classify(A, R), t))
    return out


def enumerate_rb(A: DendriformAlgebra, lam, cap: int = DEFAULT_CAP, shards: int = 1,
                 workers: Optional[int] = None, backend: Optional[str] = None,
                 constraints: Optional[dict] = None) -> list[Matrix]:
    """Every Rota-Baxter operator of weight ``lam`` over GF(p), lexicographic order.

    The forced members ``0`` and ``-lam Id`` and closure under ``P -> -lam Id - P`` are
    asserted as far as the constrained space contains them."""
    space = _space(A, "rb-operator", cap, constraints)
    lam = A.field(lam)
    out = []
    for t in scan_rb_indices(A, lam, cap, shards, workers, backend, constraints):
        P = space.decode(t)
        if not check_rb(A, P, lam).ok:
            raise OracleDisagreement(f"kernel hit {t} fails the exact Rota-Baxter check")
        out.append(P)
    found = set(out)
    n = A.dim
    for must in (Matrix.zeros(A.field, n), tilde(Matrix.zeros(A.field, n), lam)):
        if space.contains(must) and must not in found:
            raise OracleDisagreement(f"forced solution {must} missing from the enumeration")
    for P in out:
        partner = tilde(P, lam)
        if space.contains(partner) and partner not in found:
            raise OracleDisagreement(f"closure under P -> -lam Id - P fails at {P}")
    return out


def rescan_d(A: DendriformAlgebra, cap: int = DEFAULT_CAP, constraints: Optional[dict] = None) -> list[int]:
    """Full-space re-scan with the exact checker only (no kernel); for exhaustiveness tests."""
    space = _space(A, "two-tensor", cap, constraints)
    return [t for t in space.indices() if d_equation_defect(A, space.decode(t)).is_zero()]


def rescan_rb(A: DendriformAlgebra, lam, cap: int = DEFAULT_CAP, constraints: Optional[dict] = None) -> list[int]:
    space = _space(A, "rb-operator", cap, constraints)
    return [t for t in space.indices() if check_rb(A, space.decode(t), lam).ok]
