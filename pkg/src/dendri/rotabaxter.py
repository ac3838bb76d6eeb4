"""Rota-Baxter operators of weight lambda, quadratic Rota-Baxter dendriform algebras,
Connes cocycles and the correspondence with factorizable D-bialgebras.

Bilinear forms are stored as matrices ``W[i][j] = omega(e_i, e_j)``.  With this
convention ``omega_sharp`` (``<omega_sharp x, y> = omega(x, y)``) and ``J^{-1}``
(``<J^{-1} x, y> = omega(x, y)``) both have matrix ``W.T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .algebra import (AssociativeAlgebra, DendriformAlgebra, bilinear, check_associative, check_dendriform,
                      check_dendriform_hom)
from .bialgebra import TwoTensor, classify, dual_products, skew_part_invariant
from .linalg import Matrix, ShapeError, Tensor3, inverse, rank, transpose
from .report import Report
from .representation import (DendriformAction, DendriformRep, SLOTS, check_action, check_representation,
                             coregular_rep, semidirect)


class NotRotaBaxterError(ValueError):
    pass


class NotQuadraticError(ValueError):
    pass


class ZeroWeightError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def _mat(A, M) -> Matrix:
    M = M if isinstance(M, Matrix) else Matrix(A.field, M)
    if M.shape != (A.dim, A.dim):
        raise ShapeError(f"expected a {A.dim}x{A.dim} matrix, got {M.shape}")
    return M


def _nonzero_weight(field, lam):
    lam = field(lam)
    if not lam:
        raise ZeroWeightError("weight must be nonzero")
    return lam


# --- Rota-Baxter identities ----------------------------------------------------------------

def _rb_residuals(c: Tensor3, P: Matrix, lam, label: str, rep: Report):
    n = P.rows
    f = P.field
    cols = [P.column(i) for i in range(n)]
    e = [tuple(f.one if k == i else f.zero for k in range(n)) for i in range(n)]
    rep.mark(label)
    for i, j in product(range(n), repeat=2):
        lhs = bilinear(c, cols[i], cols[j])
        inner = tuple(a + b + lam * d for a, b, d in
                      zip(bilinear(c, cols[i], e[j]), bilinear(c, e[i], cols[j]), c.entries[i][j]))
        d = tuple(a - b for a, b in zip(lhs, P.apply(inner)))
        if any(d):
            rep.add(label, (i, j), d)


def check_rb(A: DendriformAlgebra, P, lam) -> Report:
    """``P(x) o P(y) = P(P(x) o y + x o P(y) + lam x o y)`` for ``o`` in ``<, >``."""
    P = _mat(A, P)
    lam = A.field(lam)
    rep = Report(f"Rota-Baxter weight {A.field.format(lam)}")
    _rb_residuals(A.prec, P, lam, "prec", rep)
    _rb_residuals(A.succ, P, lam, "succ", rep)
    return rep


def check_rb_associative(B: AssociativeAlgebra, P, lam) -> Report:
    P = _mat(B, P)
    lam = B.field(lam)
    rep = Report("associative Rota-Baxter")
    _rb_residuals(B.mult, P, lam, "mult", rep)
    return rep


def tilde(P: Matrix, lam) -> Matrix:
    """``-lam Id - P``, again Rota-Baxter of weight ``lam``."""
    return -(Matrix.identity(P.field, P.rows) * P.field(lam)) - P


def descendent(A: DendriformAlgebra, P, lam, check: bool = True) -> DendriformAlgebra:
    """``x o_P y = P(x) o y + x o P(y) + lam x o y`` for both products."""
    P = _mat(A, P)
    lam = A.field(lam)
    if check:
        r = check_rb(A, P, lam)
        if not r.ok:
            raise NotRotaBaxterError(str(r.violations[0]))
    n = A.dim
    cols = [P.column(i) for i in range(n)]
    items = {"prec": [], "succ": []}
    for name in items:
        c = getattr(A, name)
        for i, j in product(range(n), repeat=2):
            v = tuple(a + b + lam * d for a, b, d in
                      zip(bilinear(c, cols[i], A.vec(j)), bilinear(c, A.vec(i), cols[j]), c.entries[i][j]))
            items[name] += [(i, j, k, x) for k, x in enumerate(v) if x]
    return DendriformAlgebra.from_sparse(A.field, n, items["prec"], items["succ"], A.names)


# --- relative Rota-Baxter operators ---------------------------------------------------------

def check_relative_rb(T, act: DendriformAction, lam, check: bool = True) -> Report:
    """``(Tx) o_A (Ty) = T(l_o(Tx) y + r_o(Ty) x + lam x o_B y)`` for ``o`` in ``>, <``,
    all basis pairs of ``B``; ``T`` maps ``B -> A``."""
    rep_, B = act.rep, act.target
    A = rep_.algebra
    T = T if isinstance(T, Matrix) else Matrix(A.field, T)
    if T.shape != (A.dim, B.dim):
        raise ShapeError(f"T must be {A.dim}x{B.dim}, got {T.shape}")
    if check:
        a = check_action(act)
        if not a.ok:
            raise PreconditionError(f"invalid action: {a.violations[0]}")
    lam = A.field(lam)
    out = Report("relative Rota-Baxter")
    tcols = [T.column(i) for i in range(B.dim)]
    for label, ca, cb, ls, rs in (("succ", A.succ, B.succ, "l_succ", "r_succ"),
                                  ("prec", A.prec, B.prec, "l_prec", "r_prec")):
        out.mark(label)
        for i, j in product(range(B.dim), repeat=2):
            lhs = bilinear(ca, tcols[i], tcols[j])
            inner = tuple(a + b + lam * d for a, b, d in zip(
                rep_.op(ls, tcols[i]) @ B.vec(j), rep_.op(rs, tcols[j]) @ B.vec(i), cb.entries[i][j]))
            d = tuple(x - y for x, y in zip(lhs, T.apply(inner)))
            if any(d):
                out.add(label, (i, j), d)
    return out


def _require_invariant(A, r):
    inv = skew_part_invariant(A, r)
    if not inv.ok:
        raise PreconditionError(f"skew part of r is not (L>,R<)-invariant: {inv.violations[0]}")


def plus_products(A: DendriformAlgebra, r, check: bool = True) -> DendriformAlgebra:
    """``xi >+ eta = L*_<(I eta) xi`` and ``xi <+ eta = R*_>(I xi) eta`` on ``A*``."""
    t = TwoTensor.of(A, r)
    if check:
        _require_invariant(A, t)
    n = A.dim
    Ic = [t.I.column(i) for i in range(n)]
    prec, succ = [], []
    for i, j in product(range(n), repeat=2):
        s = A.L_prec(Ic[j]).T.column(i)
        p = A.R_succ(Ic[i]).T.column(j)
        succ += [(i, j, k, v) for k, v in enumerate(s) if v]
        prec += [(i, j, k, v) for k, v in enumerate(p) if v]
    return DendriformAlgebra.from_sparse(A.field, n, prec, succ, tuple(f"{m}*" for m in A.names))


def minus_products(A: DendriformAlgebra, r, check: bool = True) -> DendriformAlgebra:
    """``xi >- eta = R*_star(I xi) eta`` and ``xi <- eta = L*_star(I eta) xi`` on ``A*``."""
    t = TwoTensor.of(A, r)
    if check:
        _require_invariant(A, t)
    n = A.dim
    Ic = [t.I.column(i) for i in range(n)]
    prec, succ = [], []
    for i, j in product(range(n), repeat=2):
        s = A.R_star(Ic[i]).T.column(j)
        p = A.L_star(Ic[j]).T.column(i)
        succ += [(i, j, k, v) for k, v in enumerate(s) if v]
        prec += [(i, j, k, v) for k, v in enumerate(p) if v]
    return DendriformAlgebra.from_sparse(A.field, n, prec, succ, tuple(f"{m}*" for m in A.names))


def coregular_action(A: DendriformAlgebra, target: DendriformAlgebra) -> DendriformAction:
    """The coregular maps ``(R*_star, -L*_<, -R*_>, L*_star)`` viewed as an action on ``target``."""
    return DendriformAction(coregular_rep(A), target)


# --- quadratic forms and Connes cocycles -----------------------------------------------------

def _form(A, W) -> Matrix:
    return _mat(A, W)


def _omega(W: Matrix, x: Sequence, y: Sequence):
    f = W.field
    s = f.zero
    for i, a in enumerate(x):
        if a:
            row = W.entries[i]
            for j, b in enumerate(y):
                if b:
                    s = s + a * row[j] * b
    return s


def _antisymmetry(W: Matrix, rep: Report):
    rep.mark("antisymmetric")
    if not (W + transpose(W)).is_zero():
        for i, j in product(range(W.rows), repeat=2):
            if W.entries[i][j] + W.entries[j][i]:
                rep.add("antisymmetric", (i, j), W.entries[i][j] + W.entries[j][i])
                break


def check_quadratic(A: DendriformAlgebra, W) -> Report:
    """Antisymmetry, nondegeneracy and ``omega(x>y,z) = -omega(x,y<z) = omega(y,z*x)``."""
    W = _form(A, W)
    rep = Report("quadratic dendriform")
    _antisymmetry(W, rep)
    rep.mark("nondegenerate")
    if rank(W) != A.dim:
        rep.add("nondegenerate", (), rank(W))
    rep.mark("invariance")
    n = A.dim
    for x, y, z in product(range(n), repeat=3):
        a = _omega(W, A.succ_mul(x, y), A.vec(z))
        b = -_omega(W, A.vec(x), A.prec_mul(y, z))
        c = _omega(W, A.vec(y), A.star_mul(z, x))
        if not (a == b == c):
            rep.add("invariance", (x, y, z), (a, b, c))
    return rep


def check_connes(B: AssociativeAlgebra, W) -> Report:
    """Antisymmetry and the cyclic identity; nondegeneracy is recorded in ``evidence``."""
    W = _form(B, W)
    rep = Report("Connes cocycle")
    _antisymmetry(W, rep)
    rep.mark("cyclic")
    n = B.dim
    for x, y, z in product(range(n), repeat=3):
        s = (_omega(W, B.mul(x, y), B.vec(z)) + _omega(W, B.mul(y, z), B.vec(x))
             + _omega(W, B.mul(z, x), B.vec(y)))
        if s:
            rep.add("cyclic", (x, y, z), s)
    rep.evidence["nondegenerate"] = rank(W) == n
    return rep


def dendriform_from_connes(B: AssociativeAlgebra, W, check: bool = True) -> DendriformAlgebra:
    """Solve ``omega(x>y,z) = omega(y,z*x)`` and ``omega(x<y,z) = omega(x,y*z)``."""
    W = _form(B, W)
    if check:
        c = check_connes(B, W)
        if not c.ok:
            raise NotQuadraticError(f"not a Connes cocycle: {c.violations[0]}")
    Winv_t = inverse(transpose(W))
    if Winv_t is None:
        raise NotQuadraticError("degenerate form")
    n = B.dim
    prec, succ = [], []
    for x, y in product(range(n), repeat=2):
        cs = tuple(_omega(W, B.vec(y), B.mul(z, x)) for z in range(n))
        cp = tuple(_omega(W, B.vec(x), B.mul(y, z)) for z in range(n))
        succ += [(x, y, k, v) for k, v in enumerate(Winv_t.apply(cs)) if v]
        prec += [(x, y, k, v) for k, v in enumerate(Winv_t.apply(cp)) if v]
    return DendriformAlgebra.from_sparse(B.field, n, prec, succ, B.names)


def _compat(W: Matrix, P: Matrix, lam, rep: Report, label: str = "omega compatibility"):
    """``omega(Px,y) + omega(x,Py) + lam omega(x,y) = 0``, i.e. ``P.T W + W P + lam W = 0``."""
    rep.mark(label)
    D = transpose(P) @ W + W @ P + W * lam
    for i, j, v in D.nonzero():
        rep.add(label, (i, j), v)


def check_quadratic_rb(A: DendriformAlgebra, P, W, lam) -> Report:
    P, W = _mat(A, P), _form(A, W)
    lam = A.field(lam)
    rep = Report("quadratic Rota-Baxter dendriform")
    rep.merge(check_dendriform(A), "dendriform: ")
    rep.merge(check_rb(A, P, lam), "RB: ")
    rep.merge(check_quadratic(A, W), "quadratic: ")
    _compat(W, P, lam, rep)
    return rep


def check_rb_connes(B: AssociativeAlgebra, P, W, lam) -> Report:
    """Rota-Baxter associative algebra with a nondegenerate Connes cocycle."""
    P, W = _mat(B, P), _form(B, W)
    lam = B.field(lam)
    rep = Report("Rota-Baxter associative with Connes cocycle")
    rep.merge(check_associative(B.mult), "associative: ")
    rep.merge(check_rb_associative(B, P, lam), "RB: ")
    c = check_connes(B, W)
    rep.merge(c, "Connes: ")
    rep.mark("nondegenerate")
    if not c.evidence["nondegenerate"]:
        rep.add("nondegenerate", (), rank(W))
    _compat(W, P, lam, rep)
    return rep


# --- the correspondence with factorizable D-bialgebras --------------------------------------------

def J_from_omega(W: Matrix) -> Matrix:
    """``J: A* -> A`` with ``<J^{-1} x, y> = omega(x, y)``; ``J^{-1}`` has matrix ``W.T``."""
    J = inverse(transpose(W))
    if J is None:
        raise NotQuadraticError("degenerate form")
    return J


def factorizable_to_qrb(A: DendriformAlgebra, r, lam, tilde_variant: bool = False,
                        check: bool = True) -> tuple[Matrix, Matrix]:
    """``P = lam r_- I^{-1}`` (or ``P~ = -lam r_+ I^{-1}``) and ``omega_I(x,y) = <I^{-1}x, y>``."""
    t = TwoTensor.of(A, r)
    lam = _nonzero_weight(A.field, lam)
    if check:
        c = classify(A, t)
        if c.kind != "factorizable":
            raise PreconditionError(f"r is {c.kind}, not factorizable")
    Iinv = inverse(t.I)
    if Iinv is None:
        raise PreconditionError("I is singular")
    P = (t.r_plus @ Iinv) * (-lam) if tilde_variant else (t.r_minus @ Iinv) * lam
    W = transpose(Iinv)
    return P, W


def qrb_to_factorizable(A: DendriformAlgebra, P, W, lam, check: bool = True) -> TwoTensor:
    """``r_+ = (1/lam)(P + lam Id) J_omega``; the coefficient matrix of ``r`` is ``r_+.T``."""
    P, W = _mat(A, P), _form(A, W)
    lam = _nonzero_weight(A.field, lam)
    if check:
        q = check_quadratic_rb(A, P, W, lam)
        if not q.ok:
            raise PreconditionError(f"not a quadratic Rota-Baxter dendriform algebra: {q.failed()}")
    J = J_from_omega(W)
    rp = (P + Matrix.identity(A.field, A.dim) * lam) @ J * (A.field.one / lam)
    return TwoTensor(A, transpose(rp))


def dual_to_descendent_map(A: DendriformAlgebra, P, W, lam) -> Matrix:
    """``(1/lam) J_omega``, a dendriform isomorphism ``A*_r -> A_P``."""
    lam = _nonzero_weight(A.field, lam)
    return J_from_omega(_form(A, W)) * (A.field.one / lam)


def check_dual_to_descendent(A: DendriformAlgebra, P, W, lam) -> Report:
    t = qrb_to_factorizable(A, P, W, lam, check=False)
    return check_dendriform_hom(dual_to_descendent_map(A, P, W, lam), dual_products(A, t),
                                descendent(A, P, lam, check=False))


# --- the Connes semidirect product on A (+) A* ----------------------------------------------

@dataclass
class ConnesBundle:
    algebra: AssociativeAlgebra
    P: Matrix
    omega: Matrix
    lam: object
    report: Report = dc_field(default_factory=lambda: Report("bundle"))


def semidirect_connes(A: DendriformAlgebra, lam, variant: str = "P1") -> ConnesBundle:
    """``(x+xi) o (y+eta) = x*y + R*_<(x) eta + L*_>(y) xi`` with
    ``omega(x+xi, y+eta) = <xi,y> - <eta,x>`` and ``P1(x+xi) = -lam x`` or ``P2(x+xi) = -lam xi``."""
    if variant not in ("P1", "P2"):
        raise ValueError(f"variant must be P1 or P2, got {variant!r}")
    f = A.field
    lam = f(lam)
    n = A.dim
    items = list(A.star.nonzero())
    for i in range(n):
        for b, a, v in A.R_prec(i).T.nonzero():
            items.append((i, n + a, n + b, v))      # e_i o e_a* = R*_<(e_i) e_a*
        for b, a, v in A.L_succ(i).T.nonzero():
            items.append((n + a, i, n + b, v))      # e_a* o e_i = L*_>(e_i) e_a*
    mult = Tensor3.from_sparse(f, (2 * n,) * 3, items)
    B = AssociativeAlgebra(f, mult, tuple(A.names) + tuple(f"{m}*" for m in A.names))
    W = Matrix(f, [[(-1 if j == i + n else 1 if i == j + n else 0) for j in range(2 * n)] for i in range(2 * n)])
    first = variant == "P1"
    P = Matrix(f, [[(-lam if i == j and (i < n) == first else 0) for j in range(2 * n)] for i in range(2 * n)])
    bundle = ConnesBundle(B, P, W, lam)
    bundle.report = check_rb_connes(B, P, W, lam)
    return bundle


# --- Rota-Baxter representations -------------------------------------------------------------

@dataclass(frozen=True)
class RBRepresentation:
    rep: DendriformRep
    T: Matrix


def check_rb_representation(A: DendriformAlgebra, P, lam, rep: DendriformRep, T) -> Report:
    """``f(Px) T = T(f(Px) + f(x) T + lam f(x))`` for each of the four families ``f``."""
    P = _mat(A, P)
    lam = A.field(lam)
    T = T if isinstance(T, Matrix) else Matrix(A.field, T)
    if T.shape != (rep.dim, rep.dim):
        raise ShapeError(f"T must be {rep.dim}x{rep.dim}")
    out = Report("Rota-Baxter representation")
    out.merge(check_representation(rep), "rep: ")
    for slot in SLOTS:
        out.mark(slot)
        for x in range(A.dim):
            fx = rep.op(slot, x)
            fpx = rep.op(slot, P.column(x))
            d = fpx @ T - T @ (fpx + fx @ T + fx * lam)
            if not d.is_zero():
                out.add(slot, (x,), d)
    return out


def regular_rb_rep(A: DendriformAlgebra, P) -> RBRepresentation:
    from .representation import regular_rep
    return RBRepresentation(regular_rep(A), _mat(A, P))


def coregular_rb_rep(A: DendriformAlgebra, P, lam) -> RBRepresentation:
    return RBRepresentation(coregular_rep(A), tilde(transpose(_mat(A, P)), lam))


def rb_semidirect(A: DendriformAlgebra, P, lam, rep: DendriformRep, T,
                  check: bool = True) -> tuple[DendriformAlgebra, Matrix]:
    """``(A (x| V, P (+) T)``; the result is verified to be Rota-Baxter of weight ``lam``."""
    P = _mat(A, P)
    T = T if isinstance(T, Matrix) else Matrix(A.field, T)
    if check:
        c = check_rb_representation(A, P, lam, rep, T)
        if not check_rb(A, P, lam).ok or not c.ok:
            raise PreconditionError(f"invalid Rota-Baxter representation: {c.failed()}")
    S = semidirect(A, rep, check=False)
    n, m = A.dim, rep.dim
    f = A.field
    rows = [list(P.entries[i]) + [f.zero] * m for i in range(n)]
    rows += [[f.zero] * n + list(T.entries[a]) for a in range(m)]
    PT = Matrix(f, rows)
    if check:
        r = check_rb(S, PT, lam)
        if not r.ok:
            raise AssertionError(f"semidirect product is not Rota-Baxter: {r.violations[0]}")
    return S, PT


OMEGA_SHARP_FAMILIES = (
    "w L>(x) = R*_star(x) w",
    "w R>(x) = -L*_<(x) w",
    "w R<(x) = L*_star(x) w",
    "w L<(x) = -R*_>(x) w",
    "w P = (-lam - P*) w",
)


def omega_sharp_iso(A: DendriformAlgebra, P, W, lam, check: bool = True) -> tuple[Matrix, Report]:
    """``omega_sharp`` (matrix ``W.T``) and the verification of the five intertwining families."""
    P, W = _mat(A, P), _form(A, W)
    lam = A.field(lam)
    if check:
        q = check_quadratic_rb(A, P, W, lam)
        if not q.ok:
            raise PreconditionError(f"not a quadratic Rota-Baxter dendriform algebra: {q.failed()}")
    w = transpose(W)
    out = Report("omega-sharp")
    for name in OMEGA_SHARP_FAMILIES:
        out.mark(name)
    for x in range(A.dim):
        pairs = (
            (w @ A.L_succ(x), A.R_star(x).T @ w),
            (w @ A.R_succ(x), -(A.L_prec(x).T @ w)),
            (w @ A.R_prec(x), A.L_star(x).T @ w),
            (w @ A.L_prec(x), -(A.R_succ(x).T @ w)),
        )
        for name, (lhs, rhs) in zip(OMEGA_SHARP_FAMILIES, pairs):
            if lhs != rhs:
                out.add(name, (x,), lhs - rhs)
    d = w @ P - tilde(transpose(P), lam) @ w
    if not d.is_zero():
        out.add(OMEGA_SHARP_FAMILIES[4], (), d)
    return w, out
