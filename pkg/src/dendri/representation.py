"""Representations and actions of dendriform algebras."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .algebra import DendriformAlgebra, bilinear, check_dendriform_hom
from .linalg import Matrix, ShapeError, Vector
from .report import Report

SLOTS = ("l_succ", "r_succ", "l_prec", "r_prec")

__all__ = [
    "DendriformRep", "DendriformAction", "check_representation", "regular_rep", "coregular_rep",
    "semidirect", "check_action", "action_semidirect", "check_dendriform_hom", "InvalidRepresentationError",
]


class InvalidRepresentationError(ValueError):
    pass


def _combine(family: Sequence[Matrix], x: Sequence, m: int, field) -> Matrix:
    acc = Matrix.zeros(field, m)
    for xi, mat in zip(x, family):
        if xi:
            acc = acc + xi * mat
    return acc


@dataclass(frozen=True)
class DendriformRep:
    """Four families of ``m x m`` matrices indexed by the basis of ``algebra``,
    in the fixed slot order ``(l_succ, r_succ, l_prec, r_prec)``."""

    algebra: DendriformAlgebra
    dim: int
    l_succ: tuple[Matrix, ...]
    r_succ: tuple[Matrix, ...]
    l_prec: tuple[Matrix, ...]
    r_prec: tuple[Matrix, ...]

    def __post_init__(self):
        n = self.algebra.dim
        for s in SLOTS:
            fam = tuple(getattr(self, s))
            object.__setattr__(self, s, fam)
            if len(fam) != n:
                raise ShapeError(f"{s} has {len(fam)} matrices, algebra has dimension {n}")
            for mat in fam:
                if mat.shape != (self.dim, self.dim):
                    raise ShapeError(f"{s} matrix of shape {mat.shape}, carrier dimension {self.dim}")

    @classmethod
    def zero(cls, A: DendriformAlgebra, m: int) -> "DendriformRep":
        z = tuple(Matrix.zeros(A.field, m) for _ in range(A.dim))
        return cls(A, m, z, z, z, z)

    @property
    def field(self):
        return self.algebra.field

    def op(self, slot: str, x) -> Matrix:
        """The matrix ``slot(x)`` for a basis index or a vector ``x``; ``slot`` may be
        one of the four families or ``l_star`` / ``r_star``."""
        x = self.algebra.vec(x)
        if slot == "l_star":
            return self.op("l_prec", x) + self.op("l_succ", x)
        if slot == "r_star":
            return self.op("r_prec", x) + self.op("r_succ", x)
        return _combine(getattr(self, slot), x, self.dim, self.field)

    def replace(self, **families) -> "DendriformRep":
        kw = {s: getattr(self, s) for s in SLOTS}
        kw.update(families)
        return DendriformRep(self.algebra, self.dim, **kw)


REP_IDENTITIES = (
    "l<(x<y) = l<(x) l*(y)",
    "r<(x) l<(y) = l<(y) r*(x)",
    "r<(x) r<(y) = r<(y*x)",
    "l<(x>y) = l>(x) l<(y)",
    "r<(x) l>(y) = l>(y) r<(x)",
    "r<(x) r>(y) = r>(y<x)",
    "l>(x*y) = l>(x) l>(y)",
    "r>(x) l*(y) = l>(y) r>(x)",
    "r>(x) r*(y) = r>(y>x)",
)


def check_representation(rep: DendriformRep) -> Report:
    """The nine representation identities as matrix equations on all basis pairs ``(x, y)``."""
    A = rep.algebra
    out = Report("representation")
    for name in REP_IDENTITIES:
        out.mark(name)
    n = A.dim
    ops = {s: [rep.op(s, i) for i in range(n)] for s in SLOTS + ("l_star", "r_star")}
    lp, rp, ls, rs = ops["l_prec"], ops["r_prec"], ops["l_succ"], ops["r_succ"]
    la, ra = ops["l_star"], ops["r_star"]
    for i, j in product(range(n), repeat=2):
        x_prec_y = A.prec.entries[i][j]
        x_succ_y = A.succ.entries[i][j]
        x_star_y = A.star.entries[i][j]
        y_star_x = A.star.entries[j][i]
        y_prec_x = A.prec.entries[j][i]
        y_succ_x = A.succ.entries[j][i]
        pairs = (
            (rep.op("l_prec", x_prec_y), lp[i] @ la[j]),
            (rp[i] @ lp[j], lp[j] @ ra[i]),
            (rp[i] @ rp[j], rep.op("r_prec", y_star_x)),
            (rep.op("l_prec", x_succ_y), ls[i] @ lp[j]),
            (rp[i] @ ls[j], ls[j] @ rp[i]),
            (rp[i] @ rs[j], rep.op("r_succ", y_prec_x)),
            (rep.op("l_succ", x_star_y), ls[i] @ ls[j]),
            (rs[i] @ la[j], ls[j] @ rs[i]),
            (rs[i] @ ra[j], rep.op("r_succ", y_succ_x)),
        )
        for name, (lhs, rhs) in zip(REP_IDENTITIES, pairs):
            if lhs != rhs:
                out.add(name, (i, j), lhs - rhs)
    return out


def regular_rep(A: DendriformAlgebra) -> DendriformRep:
    n = A.dim
    return DendriformRep(A, n,
                         tuple(A.L_succ(i) for i in range(n)), tuple(A.R_succ(i) for i in range(n)),
                         tuple(A.L_prec(i) for i in range(n)), tuple(A.R_prec(i) for i in range(n)))


def coregular_rep(A: DendriformAlgebra) -> DendriformRep:
    """Carrier ``A*`` with ``(R*_star, -L*_prec, -R*_succ, L*_star)``; adjoints are transposes."""
    n = A.dim
    return DendriformRep(A, n,
                         tuple(A.R_star(i).T for i in range(n)),
                         tuple(-A.L_prec(i).T for i in range(n)),
                         tuple(-A.R_succ(i).T for i in range(n)),
                         tuple(A.L_star(i).T for i in range(n)))


def _semidirect_items(rep: DendriformRep):
    n = rep.algebra.dim
    prec, succ = [], []
    for dst, fam_l, fam_r in ((prec, rep.l_prec, rep.r_prec), (succ, rep.l_succ, rep.r_succ)):
        for i in range(n):
            for b, a, v in fam_l[i].nonzero():
                dst.append((i, n + a, n + b, v))      # e_i o u_a = l(e_i) u_a
            for b, a, v in fam_r[i].nonzero():
                dst.append((n + a, i, n + b, v))      # u_a o e_i = r(e_i) u_a
    return prec, succ


def semidirect(A: DendriformAlgebra, rep: DendriformRep, check: bool = True,
               names: Optional[Sequence[str]] = None) -> DendriformAlgebra:
    """The dendriform algebra on ``A (+) V`` built from a representation."""
    if rep.algebra != A:
        raise ShapeError("representation belongs to a different algebra")
    if check:
        r = check_representation(rep)
        if not r.ok:
            raise InvalidRepresentationError(str(r.violations[0]))
    n, m = A.dim, rep.dim
    prec, succ = _semidirect_items(rep)
    prec += list(A.prec.nonzero())
    succ += list(A.succ.nonzero())
    names = names or tuple(A.names) + tuple(f"v{a + 1}" for a in range(m))
    return DendriformAlgebra.from_sparse(A.field, n + m, prec, succ, names)


@dataclass(frozen=True)
class DendriformAction:
    """A representation whose carrier is itself the dendriform algebra ``target``."""

    rep: DendriformRep
    target: DendriformAlgebra

    def __post_init__(self):
        if self.target.dim != self.rep.dim:
            raise ShapeError("action carrier dimension differs from the target algebra")


ACTION_IDENTITIES = (
    "r<(x)(u>v) = u>(r<(x)v)",
    "(l>(x)u)<v = l>(x)(u<v)",
    "(r>(x)u)<v = u>(l<(x)v)",
    "r<(x)(u<v) = u<(r*(x)v)",
    "(l<(x)u)<v = l<(x)(u*v)",
    "(r<(x)u)<v = u<(l*(x)v)",
    "l>(x)(u>v) = (l*(x)u)>v",
    "u>(l>(x)v) = (r*(x)u)>v",
    "u>(r>(x)v) = r>(x)(u*v)",
)


def check_action(act: DendriformAction, include_rep: bool = True) -> Report:
    """Verify the nine compatibility identities between an action and the target products
    on every ``(x, u, v)`` basis triple (plus the representation identities by default)."""
    rep, B = act.rep, act.target
    A = rep.algebra
    out = Report("action")
    if include_rep:
        out.merge(check_representation(rep), "rep: ")
    for name in ACTION_IDENTITIES:
        out.mark(name)
    n, m = A.dim, B.dim
    ops = {s: [rep.op(s, i) for i in range(n)] for s in SLOTS + ("l_star", "r_star")}
    ub = [B.vec(a) for a in range(m)]

    def bp(x, y):
        return bilinear(B.prec, x, y)

    def bs(x, y):
        return bilinear(B.succ, x, y)

    def bst(x, y):
        return bilinear(B.star, x, y)

    for i in range(n):
        lp, rp, ls, rs = ops["l_prec"][i], ops["r_prec"][i], ops["l_succ"][i], ops["r_succ"][i]
        la, ra = ops["l_star"][i], ops["r_star"][i]
        for a, b in product(range(m), repeat=2):
            u, v = ub[a], ub[b]
            pairs = (
                (rp @ bs(u, v), bs(u, rp @ v)),
                (bp(ls @ u, v), ls @ bp(u, v)),
                (bp(rs @ u, v), bs(u, lp @ v)),
                (rp @ bp(u, v), bp(u, ra @ v)),
                (bp(lp @ u, v), lp @ bst(u, v)),
                (bp(rp @ u, v), bp(u, la @ v)),
                (ls @ bs(u, v), bs(la @ u, v)),
                (bs(u, ls @ v), bs(ra @ u, v)),
                (bs(u, rs @ v), rs @ bst(u, v)),
            )
            for name, (lhs, rhs) in zip(ACTION_IDENTITIES, pairs):
                if lhs != rhs:
                    out.add(name, (i, a, b), tuple(p - q for p, q in zip(lhs, rhs)))
    return out


def action_semidirect(act: DendriformAction) -> DendriformAlgebra:
    """``A (+) B`` with ``(x+u) o (y+v) = x o y + l_o(x)v + r_o(y)u + u o_B v``.

    This is a dendriform algebra exactly when the action conditions hold; used as an
    independent check of :func:`check_action`.
    """
    rep, B = act.rep, act.target
    A = rep.algebra
    n = A.dim
    prec, succ = _semidirect_items(rep)
    prec += list(A.prec.nonzero()) + [(n + i, n + j, n + k, v) for i, j, k, v in B.prec.nonzero()]
    succ += list(A.succ.nonzero()) + [(n + i, n + j, n + k, v) for i, j, k, v in B.succ.nonzero()]
    return DendriformAlgebra.from_sparse(A.field, n + B.dim, prec, succ)


def apply_family(fam: Sequence[Matrix], x: Sequence, m: int, field) -> Matrix:
    return _combine(fam, x, m, field)


def rep_vector_action(rep: DendriformRep, slot: str, x, u: Sequence) -> Vector:
    return rep.op(slot, x) @ tuple(u)
