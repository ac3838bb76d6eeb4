"""Dendriform and associative algebras given by structure constants.

A product tensor ``c`` means ``e_i o e_j = sum_k c[i][j][k] e_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Optional, Sequence, Union

from .field import Field
from .linalg import Matrix, ShapeError, Tensor3, Vector, basis_vector
from .report import Report

VecLike = Union[int, Sequence]


def bilinear(c: Tensor3, x: Sequence, y: Sequence) -> Vector:
    """Evaluate the bilinear product with structure constants ``c`` on vectors."""
    n = c.dims[2]
    z = c.field.zero
    out = [z] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        ci = c.entries[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            w = xi * yj
            for k, a in enumerate(ci[j]):
                if a:
                    out[k] = out[k] + w * a
    return tuple(out)


def left_matrix(c: Tensor3, x: Sequence) -> Matrix:
    """Matrix of ``y -> x o y``."""
    n = c.dims[2]
    f = c.field
    z = f.zero
    rows = [[z] * c.dims[1] for _ in range(n)]
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, col in enumerate(c.entries[i]):
            for k, a in enumerate(col):
                if a:
                    rows[k][j] = rows[k][j] + xi * a
    return Matrix._raw(f, tuple(tuple(r) for r in rows), c.dims[1])


def right_matrix(c: Tensor3, x: Sequence) -> Matrix:
    """Matrix of ``y -> y o x``."""
    n = c.dims[2]
    f = c.field
    z = f.zero
    rows = [[z] * c.dims[0] for _ in range(n)]
    for j in range(c.dims[0]):
        cj = c.entries[j]
        for i, xi in enumerate(x):
            if not xi:
                continue
            for k, a in enumerate(cj[i]):
                if a:
                    rows[k][j] = rows[k][j] + xi * a
    return Matrix._raw(f, tuple(tuple(r) for r in rows), c.dims[0])


def _square_product(c: Tensor3, n: int, what: str):
    if c.dims != (n, n, n):
        raise ShapeError(f"{what} tensor has dims {c.dims}, expected {(n, n, n)}")


def default_names(n: int, prefix: str = "e") -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


@dataclass(frozen=True)
class AssociativeAlgebra:
    field: Field
    mult: Tensor3
    names: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.mult.dims[0]
        _square_product(self.mult, n, "multiplication")
        if not self.names:
            object.__setattr__(self, "names", default_names(n))

    @property
    def dim(self) -> int:
        return self.mult.dims[0]

    def vec(self, x: VecLike) -> Vector:
        return basis_vector(self.field, self.dim, x) if isinstance(x, int) else tuple(self.field(a) for a in x)

    def mul(self, x: VecLike, y: VecLike) -> Vector:
        return bilinear(self.mult, self.vec(x), self.vec(y))

    def L(self, x: VecLike) -> Matrix:
        return left_matrix(self.mult, self.vec(x))

    def R(self, x: VecLike) -> Matrix:
        return right_matrix(self.mult, self.vec(x))


@dataclass(frozen=True)
class DendriformAlgebra:
    """A pair of products ``prec`` (the left product) and ``succ`` (the right product)."""

    field: Field
    prec: Tensor3
    succ: Tensor3
    names: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.prec.dims[0]
        _square_product(self.prec, n, "prec")
        _square_product(self.succ, n, "succ")
        if self.prec.field != self.field or self.succ.field != self.field:
            raise ShapeError("structure constants live in a different field")
        if not self.names:
            object.__setattr__(self, "names", default_names(n))
        if len(self.names) != n:
            raise ShapeError(f"{len(self.names)} basis names for dimension {n}")

    @classmethod
    def from_sparse(cls, field: Field, n: int, prec=(), succ=(), names=()) -> "DendriformAlgebra":
        """Build from 0-based ``(i, j, k, value)`` items."""
        return cls(field, Tensor3.from_sparse(field, (n, n, n), prec),
                   Tensor3.from_sparse(field, (n, n, n), succ), tuple(names))

    @classmethod
    def zero(cls, field: Field, n: int) -> "DendriformAlgebra":
        return cls.from_sparse(field, n)

    @property
    def dim(self) -> int:
        return self.prec.dims[0]

    @cached_property
    def star(self) -> Tensor3:
        return self.prec + self.succ

    def vec(self, x: VecLike) -> Vector:
        return basis_vector(self.field, self.dim, x) if isinstance(x, int) else tuple(self.field(a) for a in x)

    def prec_mul(self, x: VecLike, y: VecLike) -> Vector:
        return bilinear(self.prec, self.vec(x), self.vec(y))

    def succ_mul(self, x: VecLike, y: VecLike) -> Vector:
        return bilinear(self.succ, self.vec(x), self.vec(y))

    def star_mul(self, x: VecLike, y: VecLike) -> Vector:
        return bilinear(self.star, self.vec(x), self.vec(y))

    # multiplication operators: L_succ(x) y = x > y, R_prec(x) y = y < x, ...
    def L_prec(self, x: VecLike) -> Matrix:
        return left_matrix(self.prec, self.vec(x))

    def R_prec(self, x: VecLike) -> Matrix:
        return right_matrix(self.prec, self.vec(x))

    def L_succ(self, x: VecLike) -> Matrix:
        return left_matrix(self.succ, self.vec(x))

    def R_succ(self, x: VecLike) -> Matrix:
        return right_matrix(self.succ, self.vec(x))

    def L_star(self, x: VecLike) -> Matrix:
        return left_matrix(self.star, self.vec(x))

    def R_star(self, x: VecLike) -> Matrix:
        return right_matrix(self.star, self.vec(x))

    def with_names(self, names) -> "DendriformAlgebra":
        return DendriformAlgebra(self.field, self.prec, self.succ, tuple(names))


@dataclass(frozen=True)
class MultOperators:
    L_succ: Matrix
    R_succ: Matrix
    L_prec: Matrix
    R_prec: Matrix
    L_star: Matrix
    R_star: Matrix


def mult_operators(A: DendriformAlgebra, x: Sequence) -> MultOperators:
    if len(x) != A.dim:
        raise ShapeError(f"vector of length {len(x)} for a {A.dim}-dimensional algebra")
    L_succ, R_succ = A.L_succ(x), A.R_succ(x)
    L_prec, R_prec = A.L_prec(x), A.R_prec(x)
    return MultOperators(L_succ, R_succ, L_prec, R_prec, L_prec + L_succ, R_prec + R_succ)


def _compose(c_outer: Tensor3, c_inner: Tensor3, i: int, j: int, k: int, inner_left: bool) -> list:
    """``(e_i o_inner e_j) o_outer e_k`` or ``e_i o_outer (e_j o_inner e_k)`` on basis triples."""
    n = c_outer.dims[2]
    out = [c_outer.field.zero] * n
    if inner_left:
        for m, a in enumerate(c_inner.entries[i][j]):
            if a:
                for t, b in enumerate(c_outer.entries[m][k]):
                    if b:
                        out[t] = out[t] + a * b
    else:
        for m, a in enumerate(c_inner.entries[j][k]):
            if a:
                for t, b in enumerate(c_outer.entries[i][m]):
                    if b:
                        out[t] = out[t] + a * b
    return out


DENDRIFORM_AXIOMS = (
    "(x<y)<z = x<(y*z)",
    "(x>y)<z = x>(y<z)",
    "x>(y>z) = (x*y)>z",
)


def check_dendriform(A: DendriformAlgebra) -> Report:
    """Verify the three dendriform axioms on every basis triple.

    Violations carry ``(axiom, (i, j, k), defect)`` with the axiom named as in
    ``DENDRIFORM_AXIOMS`` and 0-based basis indices, in lexicographic triple order.
    """
    rep = Report("dendriform")
    prec, succ, star = A.prec, A.succ, A.star
    n = A.dim
    for ax in DENDRIFORM_AXIOMS:
        rep.mark(ax)
    for i, j, k in product(range(n), repeat=3):
        d1 = [a - b for a, b in zip(_compose(prec, prec, i, j, k, True), _compose(prec, star, i, j, k, False))]
        d2 = [a - b for a, b in zip(_compose(prec, succ, i, j, k, True), _compose(succ, prec, i, j, k, False))]
        d3 = [a - b for a, b in zip(_compose(succ, succ, i, j, k, False), _compose(succ, star, i, j, k, True))]
        for ax, d in zip(DENDRIFORM_AXIOMS, (d1, d2, d3)):
            if any(d):
                rep.add(ax, (i, j, k), tuple(d))
    return rep


def check_associative(mult: Tensor3) -> Report:
    rep = Report("associative")
    rep.mark("(x*y)*z = x*(y*z)")
    n = mult.dims[0]
    for i, j, k in product(range(n), repeat=3):
        d = [a - b for a, b in zip(_compose(mult, mult, i, j, k, True), _compose(mult, mult, i, j, k, False))]
        if any(d):
            rep.add("(x*y)*z = x*(y*z)", (i, j, k), tuple(d))
    return rep


class NotDendriformError(ValueError):
    pass


def require_dendriform(A: DendriformAlgebra, what: str = "input"):
    rep = check_dendriform(A)
    if not rep.ok:
        raise NotDendriformError(f"{what} is not dendriform: {rep.violations[0]}")


def sub_adjacent(A: DendriformAlgebra, check: bool = True) -> AssociativeAlgebra:
    """The associative algebra ``x * y = x < y + x > y``."""
    if check:
        require_dendriform(A)
    return AssociativeAlgebra(A.field, A.star, A.names)


def to_pre_lie(A: DendriformAlgebra) -> Tensor3:
    """``x . y = x > y - y < x``."""
    n = A.dim
    return Tensor3.from_function(A.field, (n, n, n), lambda i, j, k: A.succ[i, j, k] - A.prec[j, i, k])


def check_pre_lie(c: Tensor3) -> Report:
    """Left-symmetric identity ``(x.y).z - x.(y.z) = (y.x).z - y.(x.z)``."""
    rep = Report("pre-Lie")
    rep.mark("left-symmetry")
    n = c.dims[0]
    for i, j, k in product(range(n), repeat=3):
        lhs = [a - b for a, b in zip(_compose(c, c, i, j, k, True), _compose(c, c, i, j, k, False))]
        rhs = [a - b for a, b in zip(_compose(c, c, j, i, k, True), _compose(c, c, j, i, k, False))]
        d = [a - b for a, b in zip(lhs, rhs)]
        if any(d):
            rep.add("left-symmetry", (i, j, k), tuple(d))
    return rep


def to_lie(B: Union[AssociativeAlgebra, Tensor3]) -> Tensor3:
    """Commutator bracket of an associative product, or of a pre-Lie product."""
    c = B.mult if isinstance(B, AssociativeAlgebra) else B
    n = c.dims[0]
    return Tensor3.from_function(c.field, (n, n, n), lambda i, j, k: c[i, j, k] - c[j, i, k])


def check_lie(c: Tensor3) -> Report:
    rep = Report("Lie")
    rep.mark("antisymmetry")
    rep.mark("Jacobi")
    n = c.dims[0]
    for i, j in product(range(n), repeat=2):
        d = [a + b for a, b in zip(c.entries[i][j], c.entries[j][i])]
        if any(d):
            rep.add("antisymmetry", (i, j), tuple(d))
    for i, j, k in product(range(n), repeat=3):
        d = [a + b + e for a, b, e in zip(_compose(c, c, i, j, k, False), _compose(c, c, j, k, i, False),
                                          _compose(c, c, k, i, j, False))]
        if any(d):
            rep.add("Jacobi", (i, j, k), tuple(d))
    return rep


def check_dendriform_hom(f: Matrix, A: DendriformAlgebra, B: DendriformAlgebra) -> Report:
    """``f(x<y) = f(x)<f(y)`` and ``f(x>y) = f(x)>f(y)`` on basis pairs of ``A``."""
    if f.shape != (B.dim, A.dim):
        raise ShapeError(f"map of shape {f.shape} between dims {A.dim} -> {B.dim}")
    rep = Report("homomorphism")
    rep.mark("prec")
    rep.mark("succ")
    cols = [f.column(j) for j in range(A.dim)]
    for i, j in product(range(A.dim), repeat=2):
        for name, ca, cb in (("prec", A.prec, B.prec), ("succ", A.succ, B.succ)):
            lhs = f.apply(ca.entries[i][j])
            rhs = bilinear(cb, cols[i], cols[j])
            if lhs != rhs:
                rep.add(name, (i, j), tuple(a - b for a, b in zip(lhs, rhs)))
    return rep


def direct_sum(A: DendriformAlgebra, B: DendriformAlgebra, names: Optional[Sequence[str]] = None) -> DendriformAlgebra:
    n, m = A.dim, B.dim
    items_p = [(i, j, k, a) for i, j, k, a in A.prec.nonzero()]
    items_p += [(n + i, n + j, n + k, a) for i, j, k, a in B.prec.nonzero()]
    items_s = [(i, j, k, a) for i, j, k, a in A.succ.nonzero()]
    items_s += [(n + i, n + j, n + k, a) for i, j, k, a in B.succ.nonzero()]
    if not names:
        names = tuple(A.names) + tuple(B.names)
        if len(set(names)) < len(names):
            names = default_names(n + m)
    return DendriformAlgebra.from_sparse(A.field, n + m, items_p, items_s, names)
