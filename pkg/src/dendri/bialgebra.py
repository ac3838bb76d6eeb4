"""Dendriform D-bialgebras, the D-equation, invariance, classification and the double.

Two-tensors ``r = sum R[i][j] e_i (x) e_j`` are stored as coefficient matrices.
The induced maps ``A* -> A`` are fixed by ``r(xi, eta) = <r_+(xi), eta> = <xi, r_-(eta)>``,
so the matrix of ``r_+`` is ``R.T`` and the matrix of ``r_-`` is ``R``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product
from typing import Sequence

from .algebra import (DendriformAlgebra, NotDendriformError, check_dendriform,
                      check_dendriform_hom, direct_sum)
from .field import FieldError
from .linalg import Matrix, ShapeError, Tensor3, Vector, rank, inverse, tensor_apply, transpose
from .report import Report


class NotFactorizableError(ValueError):
    pass


class NotBialgebraError(ValueError):
    pass


@dataclass(frozen=True)
class TwoTensor:
    algebra: DendriformAlgebra
    R: Matrix

    def __post_init__(self):
        if self.R.shape != (self.algebra.dim, self.algebra.dim):
            raise ShapeError(f"two-tensor of shape {self.R.shape} on a {self.algebra.dim}-dim algebra")

    @classmethod
    def of(cls, A: DendriformAlgebra, R) -> "TwoTensor":
        return R if isinstance(R, TwoTensor) else cls(A, R if isinstance(R, Matrix) else Matrix(A.field, R))

    @property
    def field(self):
        return self.algebra.field

    @cached_property
    def r_plus(self) -> Matrix:
        return transpose(self.R)

    @property
    def r_minus(self) -> Matrix:
        return self.R

    @cached_property
    def I(self) -> Matrix:
        return self.r_plus - self.r_minus

    @property
    def sigma(self) -> Matrix:
        return transpose(self.R)

    @cached_property
    def antisym(self) -> Matrix:
        """``r - sigma(r)``: twice the skew part, usable in any characteristic."""
        return self.R - transpose(self.R)

    @cached_property
    def skew(self) -> Matrix:
        self.field.require_odd_characteristic()
        return self.antisym * (self.field.one / 2)

    @cached_property
    def symmetric(self) -> Matrix:
        self.field.require_odd_characteristic()
        return (self.R + transpose(self.R)) * (self.field.one / 2)

    def is_symmetric(self) -> bool:
        return self.antisym.is_zero()


def _tt(A: DendriformAlgebra, r) -> TwoTensor:
    return TwoTensor.of(A, r)


# --- cobrackets -------------------------------------------------------------------------

@dataclass(frozen=True)
class Cobracket:
    """``delta_prec[k]`` / ``delta_succ[k]`` are the two-tensors ``Delta(e_k)`` as ``n x n`` slices."""

    delta_prec: Tensor3
    delta_succ: Tensor3

    @classmethod
    def from_dual(cls, B: DendriformAlgebra) -> "Cobracket":
        """Cobracket whose adjoints are the products of ``B`` (living on the dual space)."""
        return cls(B.prec.permute((1, 2, 0)), B.succ.permute((1, 2, 0)))

    def dual_algebra(self, names=()) -> DendriformAlgebra:
        f = self.delta_prec.field
        return DendriformAlgebra(f, self.delta_prec.permute((2, 0, 1)), self.delta_succ.permute((2, 0, 1)),
                                 tuple(names))

    def prec_at(self, x: Sequence) -> Matrix:
        return _combine_slices(self.delta_prec, x)

    def succ_at(self, x: Sequence) -> Matrix:
        return _combine_slices(self.delta_succ, x)


def _combine_slices(t: Tensor3, x: Sequence) -> Matrix:
    n = t.dims[1]
    acc = Matrix.zeros(t.field, n, t.dims[2])
    for i, xi in enumerate(x):
        if xi:
            acc = acc + xi * t.slice0(i)
    return acc


def _stack(field, mats: Sequence[Matrix]) -> Tensor3:
    return Tensor3._raw(field, tuple(m.entries for m in mats),
                        (len(mats), mats[0].rows if mats else 0, mats[0].cols if mats else 0))


def cobracket_from_r(A: DendriformAlgebra, r) -> Cobracket:
    """Coboundary cobracket of ``r``:
    ``Delta_succ(x) = (Id (x) L_*(x) - R_<(x) (x) Id) r_succ`` and
    ``Delta_prec(x) = (Id (x) L_>(x) - R_*(x) (x) Id) r_prec`` with
    ``r_prec = r``, ``r_succ = -sigma(r)``.

    Its adjoint is ``dual_products(A, -sigma(r))``, not ``dual_products(A, r)``: the two
    displayed constructions differ by the substitution ``r -> -sigma(r)``.  Both give a
    D-bialgebra for exactly the same ``r`` (see :func:`induced_bialgebra`).
    """
    t = _tt(A, r)
    n = A.dim
    r_prec = t.R
    r_succ = -t.sigma
    ident = Matrix.identity(A.field, n)
    dp, ds = [], []
    for k in range(n):
        ds.append(tensor_apply(ident, A.L_star(k), r_succ) - tensor_apply(A.R_prec(k), ident, r_succ))
        dp.append(tensor_apply(ident, A.L_succ(k), r_prec) - tensor_apply(A.R_star(k), ident, r_prec))
    return Cobracket(_stack(A.field, dp), _stack(A.field, ds))


def dual_products(A: DendriformAlgebra, r, names=None) -> DendriformAlgebra:
    """Products on ``A*`` induced by ``r``:
    ``xi > eta = R*_star(r_+ xi) eta - L*_<(r_- eta) xi`` and
    ``xi < eta = L*_star(r_+ eta) xi - R*_>(r_- xi) eta``.
    """
    t = _tt(A, r)
    n = A.dim
    rp = [t.r_plus.column(i) for i in range(n)]
    rm = [t.r_minus.column(i) for i in range(n)]
    Rs = [A.R_star(v).T for v in rp]
    Lp = [A.L_prec(v).T for v in rm]
    Ls = [A.L_star(v).T for v in rp]
    Rsu = [A.R_succ(v).T for v in rm]
    prec, succ = [], []
    for i, j in product(range(n), repeat=2):
        s = tuple(a - b for a, b in zip(Rs[i].column(j), Lp[j].column(i)))
        p = tuple(a - b for a, b in zip(Ls[j].column(i), Rsu[i].column(j)))
        succ += [(i, j, k, v) for k, v in enumerate(s) if v]
        prec += [(i, j, k, v) for k, v in enumerate(p) if v]
    names = names or tuple(f"{nm}*" for nm in A.names)
    return DendriformAlgebra.from_sparse(A.field, n, prec, succ, names)


def dual_products_lambda_form(A: DendriformAlgebra, r) -> DendriformAlgebra:
    """The same products written with the symmetric part only (valid when the skew
    part is invariant): ``xi < eta = L*_star(S eta) xi - R*_>(S xi) eta``,
    ``xi > eta = R*_star(S xi) eta - L*_<(S eta) xi`` with ``S = Lambda_+``."""
    t = _tt(A, r)
    n = A.dim
    S = t.symmetric  # symmetric, so Lambda_+ = S.T = S
    sp = [S.column(i) for i in range(n)]
    prec, succ = [], []
    for i, j in product(range(n), repeat=2):
        s = tuple(a - b for a, b in zip(A.R_star(sp[i]).T.column(j), A.L_prec(sp[j]).T.column(i)))
        p = tuple(a - b for a, b in zip(A.L_star(sp[j]).T.column(i), A.R_succ(sp[i]).T.column(j)))
        succ += [(i, j, k, v) for k, v in enumerate(s) if v]
        prec += [(i, j, k, v) for k, v in enumerate(p) if v]
    return DendriformAlgebra.from_sparse(A.field, n, prec, succ)


# --- D-equation ---------------------------------------------------------------------------

def d_equation_defect(A: DendriformAlgebra, r) -> Tensor3:
    """``r12 * r13 - r13 < r23 - r23 > r12`` by direct index contraction."""
    t = _tt(A, r)
    n = A.dim
    R = t.R.entries
    f = A.field
    z = f.zero
    star, prec, succ = A.star.entries, A.prec.entries, A.succ.entries
    out = [[[z] * n for _ in range(n)] for _ in range(n)]
    nz = [(i, i2, R[i][i2]) for i in range(n) for i2 in range(n) if R[i][i2]]
    for (i, i2, a), (j, j2, b) in product(nz, repeat=2):
        w = a * b
        # r12 * r13: (e_i * e_j) (x) e_i2 (x) e_j2
        for p, c in enumerate(star[i][j]):
            if c:
                out[p][i2][j2] = out[p][i2][j2] + w * c
        # r13 < r23: e_i (x) e_j (x) (e_i2 < e_j2)
        for s, c in enumerate(prec[i2][j2]):
            if c:
                out[i][j][s] = out[i][j][s] - w * c
        # r23 > r12: e_j (x) (e_i > e_j2) (x) e_i2
        for q, c in enumerate(succ[i][j2]):
            if c:
                out[j][q][i2] = out[j][q][i2] - w * c
    return Tensor3._raw(f, tuple(tuple(tuple(c) for c in m) for m in out), (n, n, n))


LEG_OPS = {"*": "star", "<": "prec", ">": "succ"}


def leg_product(A: DendriformAlgebra, r, legs1: tuple[int, int], op: str, legs2: tuple[int, int]) -> Tensor3:
    """``r_{ab} o r_{cd}`` in ``A^{(x)3}`` (1-based slots): the first tensor factor of ``r``
    goes to slot ``a`` (resp. ``c``), the second to slot ``b`` (resp. ``d``); the shared slot
    receives the product of the two elements placed there, first operand from ``r_{ab}``."""
    t = _tt(A, r)
    n = A.dim
    c = getattr(A, LEG_OPS[op]).entries
    R = t.R.entries
    f = A.field
    z = f.zero
    shared = set(legs1) & set(legs2)
    if len(shared) != 1 or len(set(legs1) | set(legs2)) != 3:
        raise ValueError(f"legs {legs1} and {legs2} must share exactly one slot")
    (sh,) = shared
    out = [[[z] * n for _ in range(n)] for _ in range(n)]
    nz = [(i, i2, R[i][i2]) for i in range(n) for i2 in range(n) if R[i][i2]]
    for (i, i2, a), (j, j2, b) in product(nz, repeat=2):
        slots = {}
        place1 = dict(zip(legs1, (i, i2)))
        place2 = dict(zip(legs2, (j, j2)))
        for s in (1, 2, 3):
            if s != sh:
                slots[s] = place1.get(s, place2.get(s))
        w = a * b
        for k, cv in enumerate(c[place1[sh]][place2[sh]]):
            if cv:
                slots[sh] = k
                idx = (slots[1], slots[2], slots[3])
                out[idx[0]][idx[1]][idx[2]] = out[idx[0]][idx[1]][idx[2]] + w * cv
    return Tensor3._raw(f, tuple(tuple(tuple(cc) for cc in m) for m in out), (n, n, n))


# --- invariance ---------------------------------------------------------------------------

class InvarianceCrossCheckError(AssertionError):
    pass


def check_lr_invariance(A: DendriformAlgebra, t) -> Report:
    """``(Id (x) L_*(x) - R_<(x) (x) Id) t = 0`` and ``(Id (x) L_>(x) - R_*(x) (x) Id) sigma(t) = 0``
    for every basis ``x``; violations name the witness ``x``.

    The r_+-form (``x * t_+(xi) = t_+(R*_<(x) xi)``, ``t_+(xi) * x = t_+(L*_>(x) xi)``) and,
    for skew ``t``, the ``I``-forms are evaluated too and must agree with the definition.
    """
    T = t.R if isinstance(t, TwoTensor) else (t if isinstance(t, Matrix) else Matrix(A.field, t))
    rep = Report("(L>,R<)-invariance")
    rep.mark("left")
    rep.mark("right")
    Tt = transpose(T)
    tp = Tt  # matrix of t_+
    skew = (T + Tt).is_zero()
    I = Tt - T
    for x in range(A.dim):
        Ls, Rp, Lsu, Rs = A.L_star(x), A.R_prec(x), A.L_succ(x), A.R_star(x)
        d1 = T @ Ls.T - Rp @ T
        d2 = Tt @ Lsu.T - Rs @ Tt
        if not d1.is_zero():
            rep.add("left", (x,), d1)
        if not d2.is_zero():
            rep.add("right", (x,), d2)
        v1 = Ls @ tp == tp @ Rp.T
        v2 = Rs @ tp == tp @ Lsu.T
        if v1 != d1.is_zero() or v2 != d2.is_zero():
            raise InvarianceCrossCheckError(f"r_+ reformulation disagrees with the definition at x={x}")
        if skew and A.field.characteristic != 2:
            w = (I @ Rp.T == Ls @ I, I @ Lsu.T == Rs @ I)
            u = (Rp @ I == I @ Ls.T, Lsu @ I == I @ Rs.T)
            if w != (v1, v2) or u != w:
                raise InvarianceCrossCheckError(f"I-form reformulation disagrees at x={x}")
    return rep


def skew_part_invariant(A: DendriformAlgebra, r) -> Report:
    """Invariance of the skew part, evaluated on ``r - sigma(r)`` (no halving)."""
    return check_lr_invariance(A, _tt(A, r).antisym)


# --- coboundary conditions ------------------------------------------------------------------

def _left3(F: Matrix, T: Tensor3) -> Tensor3:
    n1, n2, n3 = T.dims
    z = T.field.zero
    E = T.entries
    out = []
    for p in range(F.rows):
        row = F.entries[p]
        out.append(tuple(tuple(_sum(z, (row[a] * E[a][q][s] for a in range(n1) if row[a])) for s in range(n3))
                         for q in range(n2)))
    return Tensor3._raw(T.field, tuple(out), (F.rows, n2, n3))


def _right3(G: Matrix, T: Tensor3) -> Tensor3:
    n1, n2, n3 = T.dims
    z = T.field.zero
    out = tuple(tuple(tuple(_sum(z, (G.entries[s][a] * T.entries[p][q][a] for a in range(n3) if G.entries[s][a]))
                            for s in range(G.rows)) for q in range(n2)) for p in range(n1))
    return Tensor3._raw(T.field, out, (n1, n2, G.rows))


def _sum(z, it):
    s = z
    for v in it:
        s = s + v
    return s


def _outer_vm(u: Sequence, M: Matrix) -> Tensor3:
    """``u (x) M``."""
    return Tensor3._raw(M.field, tuple(tuple(tuple(a * b for b in row) for row in M.entries) for a in u),
                        (len(u), M.rows, M.cols))


def _outer_mv(M: Matrix, w: Sequence) -> Tensor3:
    """``M (x) w``."""
    return Tensor3._raw(M.field, tuple(tuple(tuple(a * b for b in w) for a in row) for row in M.entries),
                        (M.rows, M.cols, len(w)))


COBOUNDARY_CONDITIONS = ("skew bimodule", "skew balance", "triple 21-31-23", "triple D", "triple 31-32-12")


def check_coboundary_conditions(A: DendriformAlgebra, r) -> Report:
    """The five tensor identities characterising when ``r`` induces a coboundary D-bialgebra.

    With ``t = r - sigma(r)`` and ``Q(x) = Id (x) L_>(x) - R_<(x) (x) Id``:

    * skew bimodule: ``(L_>(x) (x) Id - Id (x) R_<(x)) Q(y) t = 0``
    * skew balance: ``(R_<(x) (x) L_>(y) - Id (x) L_>(y<x) - R_<(y>x) (x) Id) t = 0``
    * triple 21-31-23: ``(R_<(x) (x) Id (x) Id - Id (x) Id (x) L_>(x))(-r23*r21 + r21<r31 + r31>r23) = 0``
    * triple D: ``(R_*(x) (x) Id (x) Id - Id (x) Id (x) L_>(x)) D(r)
      + sum_i (a_i*x) (x) Q(b_i) t - a_i (x) Q(x>b_i) t = 0``
    * triple 31-32-12: ``(R_<(x) (x) Id (x) Id - Id (x) Id (x) L_*(x))(-r31*r32 + r32<r12 + r12>r31)
      + sum_i Q(b_i) t (x) (x*a_i) - Q(b_i<x) t (x) a_i = 0``
    """
    tt = _tt(A, r)
    n = A.dim
    t = tt.antisym
    rep = Report("coboundary conditions")
    for c in COBOUNDARY_CONDITIONS:
        rep.mark(c)

    def Q(v, m):
        return m @ A.L_succ(v).T - A.R_prec(v) @ m

    Qt = [Q(i, t) for i in range(n)]
    for x, y in product(range(n), repeat=2):
        d13 = A.L_succ(x) @ Qt[y] - Qt[y] @ A.R_prec(x).T
        if not d13.is_zero():
            rep.add("skew bimodule", (x, y), d13)
        d14 = (A.R_prec(x) @ t @ A.L_succ(y).T - t @ A.L_succ(A.prec_mul(y, x)).T
               - A.R_prec(A.succ_mul(y, x)) @ t)
        if not d14.is_zero():
            rep.add("skew balance", (x, y), d14)

    D = d_equation_defect(A, tt)
    E15 = (leg_product(A, tt, (2, 1), "<", (3, 1)) + leg_product(A, tt, (3, 1), ">", (2, 3))
           - leg_product(A, tt, (2, 3), "*", (2, 1)))
    E17 = (leg_product(A, tt, (3, 2), "<", (1, 2)) + leg_product(A, tt, (1, 2), ">", (3, 1))
           - leg_product(A, tt, (3, 1), "*", (3, 2)))
    rows = [tt.R.entries[i] for i in range(n)]   # b_i for a_i = e_i
    e = [A.vec(i) for i in range(n)]
    for x in range(n):
        d15 = _left3(A.R_prec(x), E15) - _right3(A.L_succ(x), E15)
        if not d15.is_zero():
            rep.add("triple 21-31-23", (x,), d15)
        d16 = _left3(A.R_star(x), D) - _right3(A.L_succ(x), D)
        for i in range(n):
            d16 = d16 + _outer_vm(A.star_mul(i, x), Q(rows[i], t)) - _outer_vm(e[i], Q(A.succ_mul(x, rows[i]), t))
        if not d16.is_zero():
            rep.add("triple D", (x,), d16)
        d17 = _left3(A.R_prec(x), E17) - _right3(A.L_star(x), E17)
        for i in range(n):
            d17 = d17 + _outer_mv(Q(rows[i], t), A.star_mul(x, i)) - _outer_mv(Q(A.prec_mul(rows[i], x), t), e[i])
        if not d17.is_zero():
            rep.add("triple 31-32-12", (x,), d17)
    return rep


D_BIALGEBRA_AXIOMS = ("prec cocycle", "succ cocycle", "mixed",
                      "dual prec cocycle", "dual succ cocycle", "dual mixed")


# --- D-bialgebra axioms -----------------------------------------------------------------------

def _cocycle_conditions(X: DendriformAlgebra, cob: Cobracket, labels: tuple[str, str, str]) -> Report:
    """Cocycle conditions of a cobracket on ``X`` (first two) and their compatibility (third)."""
    n = X.dim
    rep = Report("cobracket")
    for lb in labels:
        rep.mark(lb)
    dp = [cob.delta_prec.slice0(k) for k in range(n)]
    ds = [cob.delta_succ.slice0(k) for k in range(n)]
    for x, y in product(range(n), repeat=2):
        xy = X.star_mul(x, y)
        c1 = cob.prec_at(xy) - dp[y] @ X.L_succ(x).T - X.R_star(y) @ dp[x]
        if not c1.is_zero():
            rep.add(labels[0], (x, y), c1)
        c2 = cob.succ_at(xy) - ds[y] @ X.L_star(x).T - X.R_prec(y) @ ds[x]
        if not c2.is_zero():
            rep.add(labels[1], (x, y), c2)
        inner = X.L_succ(y) @ ds[x] - ds[x] @ X.R_star(y).T
        c5 = X.L_star(x) @ dp[y] - dp[y] @ X.R_prec(x).T + transpose(inner)
        if not c5.is_zero():
            rep.add(labels[2], (x, y), c5)
    return rep


def check_cobracket_conditions(A: DendriformAlgebra, cob: Cobracket) -> Report:
    """The two cocycle conditions and the mixed condition for a free cobracket on ``A``."""
    return _cocycle_conditions(A, cob, D_BIALGEBRA_AXIOMS[0:3])


def check_d_bialgebra(A: DendriformAlgebra, Astar: DendriformAlgebra) -> Report:
    """Verify the six D-bialgebra axioms for ``(A, A*)``; cobrackets are the adjoints of the products."""
    if A.dim != Astar.dim:
        raise ShapeError(f"dimension mismatch {A.dim} vs {Astar.dim}")
    if A.field != Astar.field:
        raise FieldError("algebras over different fields")
    rep = Report("D-bialgebra")
    for X, what in ((A, "A"), (Astar, "A*")):
        d = check_dendriform(X)
        if not d.ok:
            raise NotDendriformError(f"{what} is not dendriform: {d.violations[0]}")
    rep.merge(_cocycle_conditions(A, Cobracket.from_dual(Astar), ("prec cocycle", "succ cocycle", "mixed")))
    rep.merge(_cocycle_conditions(Astar, Cobracket.from_dual(A), ("dual prec cocycle", "dual succ cocycle", "dual mixed")))
    rep.checks = {k: rep.checks[k] for k in D_BIALGEBRA_AXIOMS}
    return rep


# --- classification -----------------------------------------------------------------------------

CLASSES = ("invalid-products", "coboundary", "triangular", "quasi-triangular", "factorizable")


@dataclass
class ClassificationResult:
    kind: str
    evidence: dict = dc_field(default_factory=dict)

    def __str__(self):
        return self.kind

    def at_least(self, kind: str) -> bool:
        order = {"invalid-products": 0, "coboundary": 1, "quasi-triangular": 2, "triangular": 3, "factorizable": 3}
        if kind in ("triangular", "factorizable"):
            return self.kind == kind
        return order[self.kind] >= order[kind]


def induced_bialgebra(A: DendriformAlgebra, r) -> Report:
    """Direct verification that ``(A, A*_r)`` is a D-bialgebra, ``A*_r = dual_products(A, r)``."""
    B = dual_products(A, r)
    rep = Report("induced D-bialgebra")
    d = check_dendriform(B)
    rep.merge(d, "A*_r: ")
    if d.ok:
        rep.merge(check_d_bialgebra(A, B))
    return rep


def classify(A: DendriformAlgebra, r) -> ClassificationResult:
    """Coboundary is decided by :func:`induced_bialgebra`; the five displayed conditions
    are reported as evidence only, since they are not equivalent to it in general."""
    tt = _tt(A, r)
    ev: dict = {}
    if not check_dendriform(A).ok:
        ev["reason"] = "base algebra is not dendriform"
        return ClassificationResult("invalid-products", ev)
    A.field.require_odd_characteristic()
    cob = check_coboundary_conditions(A, tt)
    direct = induced_bialgebra(A, tt)
    defect = d_equation_defect(A, tt)
    inv = skew_part_invariant(A, tt)
    rk = rank(tt.I)
    ev.update({
        "coboundary_conditions": dict(cob.checks),
        "d_equation": defect.is_zero(),
        "skew_invariant": inv.ok,
        "symmetric": tt.is_symmetric(),
        "rank_I": rk,
    })
    ev["induced_bialgebra"] = direct.ok
    quasi = defect.is_zero() and inv.ok
    if quasi and not direct.ok:
        raise AssertionError("quasi-triangular r failed to induce a D-bialgebra")
    if quasi:
        if tt.is_symmetric():
            return ClassificationResult("triangular", ev)
        if rk == A.dim:
            return ClassificationResult("factorizable", ev)
        return ClassificationResult("quasi-triangular", ev)
    if direct.ok:
        return ClassificationResult("coboundary", ev)
    ev["reason"] = "r does not induce a D-bialgebra"
    return ClassificationResult("invalid-products", ev)


def factorize(A: DendriformAlgebra, r, x: Sequence) -> tuple[Vector, Vector]:
    """``x = x_+ - x_-`` with ``x_+ = r_+ I^{-1} x`` and ``x_- = r_- I^{-1} x``."""
    tt = _tt(A, r)
    c = classify(A, tt)
    if c.kind != "factorizable":
        raise NotFactorizableError(f"r is {c.kind}, not factorizable")
    Iinv = inverse(tt.I)
    xi = Iinv.apply(A.vec(x))
    return tt.r_plus.apply(xi), tt.r_minus.apply(xi)


# --- the double ------------------------------------------------------------------------------

def double(A: DendriformAlgebra, Astar: DendriformAlgebra, check: bool = True) -> tuple[DendriformAlgebra, TwoTensor]:
    """The dendriform double on ``A (+) A*`` (basis ``e_1..e_n, e_1*..e_n*``) and its
    canonical two-tensor ``r = sum_i e_i (x) e_i*``."""
    if check:
        rep = check_d_bialgebra(A, Astar)
        if not rep.ok:
            raise NotBialgebraError(f"not a D-bialgebra: {rep.failed()}")
    n = A.dim
    f = A.field
    prec, succ = [], []
    zero = (f.zero,) * n
    basis = [(A.vec(i), zero) for i in range(n)] + [(zero, A.vec(i)) for i in range(n)]
    for a, (x, xi) in enumerate(basis):
        for b, (y, eta) in enumerate(basis):
            s_a = _vsum(A.succ_mul(x, y), _neg(Astar.L_prec(eta).T @ x), Astar.R_star(xi).T @ y)
            s_d = _vsum(Astar.succ_mul(xi, eta), A.R_star(x).T @ eta, _neg(A.L_prec(y).T @ xi))
            p_a = _vsum(A.prec_mul(x, y), Astar.L_star(eta).T @ x, _neg(Astar.R_succ(xi).T @ y))
            p_d = _vsum(Astar.prec_mul(xi, eta), _neg(A.R_succ(x).T @ eta), A.L_star(y).T @ xi)
            succ += [(a, b, k, v) for k, v in enumerate(s_a + s_d) if v]
            prec += [(a, b, k, v) for k, v in enumerate(p_a + p_d) if v]
    names = tuple(A.names) + tuple(f"{nm}*" for nm in A.names)
    d = DendriformAlgebra.from_sparse(f, 2 * n, prec, succ, names)
    R = Matrix(f, [[1 if (i < n and j == n + i) else 0 for j in range(2 * n)] for i in range(2 * n)])
    return d, TwoTensor(d, R)


def _vsum(*vs):
    return tuple(sum(col[1:], col[0]) for col in zip(*vs))


def _neg(v):
    return tuple(-a for a in v)


def componentwise_dual_of_double(A: DendriformAlgebra, Astar: DendriformAlgebra) -> DendriformAlgebra:
    """``(xi, x) o (eta, y) = (xi o eta, x o y)`` on ``A* (+) A``."""
    return direct_sum(Astar, A)


def quasi_triangular_conditions(A: DendriformAlgebra, r) -> tuple[bool, bool]:
    tt = _tt(A, r)
    return d_equation_defect(A, tt).is_zero(), skew_part_invariant(A, tt).ok


def hom_characterization(A: DendriformAlgebra, r) -> bool:
    """Dual products dendriform and both ``r_+``, ``r_-`` homomorphisms into ``A``."""
    tt = _tt(A, r)
    B = dual_products(A, tt)
    if not check_dendriform(B).ok:
        return False
    return check_dendriform_hom(tt.r_plus, B, A).ok and check_dendriform_hom(tt.r_minus, B, A).ok


def check_bialgebra_hom(phi, A: DendriformAlgebra, Astar: DendriformAlgebra,
                        B: DendriformAlgebra, Bstar: DendriformAlgebra) -> Report:
    """``phi: A -> B`` is a D-bialgebra homomorphism.

    Compatibility with the cobrackets, ``(phi (x) phi) Delta_A = Delta_B phi``, is the
    statement that the dual map ``phi^T: B* -> A*`` preserves both products, which is
    how it is checked here.
    """
    phi = phi if isinstance(phi, Matrix) else Matrix(A.field, phi)
    rep = Report("D-bialgebra homomorphism")
    rep.merge(check_dendriform_hom(phi, A, B), "products: ")
    rep.merge(check_dendriform_hom(transpose(phi), Bstar, Astar), "coproducts: ")
    return rep
