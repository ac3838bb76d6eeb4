"""Worked examples used throughout the tests, the CLI demos and the benchmarks."""

from __future__ import annotations

from .algebra import DendriformAlgebra
from .field import QQ, Field
from .linalg import Matrix


def e1_algebra(field: Field = QQ) -> DendriformAlgebra:
    """The 2-dimensional dendriform algebra with
    ``e1 > e2 = e2``, ``e2 > e1 = -e2``, ``e1 < e1 = e1``, ``e2 < e1 = e2``.

    Its sub-adjacent associative algebra is ``e1*e1 = e1``, ``e1*e2 = e2``.
    """
    return DendriformAlgebra.from_sparse(
        field, 2,
        prec=[(0, 0, 0, 1), (1, 0, 1, 1)],
        succ=[(0, 1, 1, 1), (1, 0, 1, -1)],
    )


def e1_r(field: Field = QQ) -> Matrix:
    """``r = e2 (x) e1``."""
    return Matrix.unit(field, 2, 1, 0)


def e1_rb_operator(lam, field: Field = QQ) -> Matrix:
    """``P(e1) = 0``, ``P(e2) = -lam e2``."""
    lam = field(lam)
    return Matrix(field, [[0, 0], [0, -lam]])


def e1_omega(field: Field = QQ) -> Matrix:
    """``omega = e1* ^ e2*``, i.e. ``omega(e1, e2) = 1``."""
    return Matrix(field, [[0, 1], [-1, 0]])
