"""Dense exact matrices, rank-3 tensors and the elimination kernel.

Matrix entries follow ``m[k][j]`` = coefficient of output basis vector ``k``
when the map is applied to input basis vector ``j``.  An element of
``A (x) A`` is stored as its coefficient matrix ``R[i][j]`` (coefficient of
``e_i (x) e_j``); under that convention ``(F (x) G) t`` is ``F @ t @ G.T``.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .field import Field, FieldError, Scalar

Vector = tuple


class ShapeError(ValueError):
    pass


def _check_field(a: Field, b: Field):
    if a != b:
        raise FieldError(f"field mismatch: {a} vs {b}")


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries: Sequence[Sequence], cols: Optional[int] = None):
        rows = tuple(tuple(field(x) for x in row) for row in entries)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged matrix")
        self.field = field
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    @classmethod
    def _raw(cls, field: Field, rows: tuple, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.field, m.rows, m.cols, m.entries = field, len(rows), cols, rows
        return m

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: Optional[int] = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = field.zero
        return cls._raw(field, tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        if not columns:
            return cls.zeros(field, rows or 0, 0)
        return cls(field, list(zip(*columns)), len(columns))

    @classmethod
    def unit(cls, field: Field, n: int, i: int, j: int) -> "Matrix":
        """The matrix with a single 1 at ``(i, j)``; as a 2-tensor this is ``e_i (x) e_j``."""
        rows = [[0] * n for _ in range(n)]
        rows[i][j] = 1
        return cls(field, rows)

    def __getitem__(self, idx):
        k, j = idx
        return self.entries[k][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ShapeError(f"vector of length {len(v)} applied to {self.rows}x{self.cols} matrix")
        z = self.field.zero
        out = []
        for row in self.entries:
            s = z
            for a, b in zip(row, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def _zip(self, other: "Matrix", op) -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_field(self.field, other.field)
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(self.field, tuple(tuple(op(a, b) for a, b in zip(r, s))
                                             for r, s in zip(self.entries, other.entries)), self.cols)

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return Matrix._raw(self.field, tuple(tuple(-a for a in r) for r in self.entries), self.cols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self.entries), self.cols)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def nonzero(self) -> Iterator[tuple[int, int, Scalar]]:
        for k, row in enumerate(self.entries):
            for j, a in enumerate(row):
                if a:
                    yield k, j, a

    def __repr__(self):
        body = ", ".join("[" + ", ".join(self.field.format(a) for a in r) + "]" for r in self.entries)
        return f"Matrix([{body}])"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_field(a.field, b.field)
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    z = a.field.zero
    bt = b.entries
    out = []
    for row in a.entries:
        acc = [z] * b.cols
        for t, x in enumerate(row):
            if x:
                brow = bt[t]
                for j in range(b.cols):
                    if brow[j]:
                        acc[j] = acc[j] + x * brow[j]
        out.append(tuple(acc))
    return Matrix._raw(a.field, tuple(out), b.cols)


def transpose(m: Matrix) -> Matrix:
    rows = tuple(tuple(m.entries[k][j] for k in range(m.rows)) for j in range(m.cols))
    return Matrix._raw(m.field, rows, m.rows)


def exchange_sigma(r: Matrix) -> Matrix:
    """The flip ``x (x) y -> y (x) x`` on a coefficient matrix."""
    if r.rows != r.cols:
        raise ShapeError("two-tensor coefficient matrix must be square")
    return transpose(r)


def tensor_apply(f: Matrix, g: Matrix, t: Matrix) -> Matrix:
    """``(f (x) g) t`` for a two-tensor ``t``."""
    return mat_mul(mat_mul(f, t), transpose(g))


def rank(m: Matrix) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    prev = m.field.one
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            for j in range(c, cols):
                a[i][j] = (p * a[i][j] - f * a[r][j]) / prev
        prev = p
        r += 1
        if r == rows:
            break
    return r


def inverse(m: Matrix) -> Optional[Matrix]:
    """Exact inverse by Gauss-Jordan elimination, or ``None`` when singular."""
    if m.rows != m.cols:
        raise ShapeError("inverse of a non-square matrix")
    n = m.rows
    z, o = m.field.zero, m.field.one
    a = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(m.entries)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        inv = o / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return Matrix._raw(m.field, tuple(tuple(r[n:]) for r in a), n)


def rank_and_inverse(m: Matrix) -> tuple[int, Optional[Matrix]]:
    rk = rank(m)
    if m.rows != m.cols or rk < m.rows:
        return rk, None
    return rk, inverse(m)


def solve(m: Matrix, b: Sequence) -> Optional[Vector]:
    """Unique solution of ``m x = b`` for invertible square ``m``."""
    inv = inverse(m)
    return None if inv is None else inv.apply(tuple(m.field(x) for x in b))


class Tensor3:
    """Dense rank-3 tensor with ``t[i][j][k]`` indexing."""

    __slots__ = ("field", "dims", "entries")

    def __init__(self, field: Field, entries):
        ent = tuple(tuple(tuple(field(x) for x in col) for col in mat) for mat in entries)
        d1 = len(ent)
        d2 = len(ent[0]) if d1 else 0
        d3 = len(ent[0][0]) if d2 else 0
        if any(len(m) != d2 or any(len(c) != d3 for c in m) for m in ent):
            raise ShapeError("ragged rank-3 tensor")
        self.field = field
        self.dims = (d1, d2, d3)
        self.entries = ent

    @classmethod
    def _raw(cls, field: Field, entries: tuple, dims: tuple) -> "Tensor3":
        t = object.__new__(cls)
        t.field, t.entries, t.dims = field, entries, dims
        return t

    @classmethod
    def zeros(cls, field: Field, d1: int, d2: Optional[int] = None, d3: Optional[int] = None) -> "Tensor3":
        d2 = d1 if d2 is None else d2
        d3 = d1 if d3 is None else d3
        z = field.zero
        return cls._raw(field, tuple(tuple((z,) * d3 for _ in range(d2)) for _ in range(d1)), (d1, d2, d3))

    @classmethod
    def from_sparse(cls, field: Field, dims: tuple, items: Iterable[tuple]) -> "Tensor3":
        d1, d2, d3 = dims
        z = field.zero
        buf = [[[z] * d3 for _ in range(d2)] for _ in range(d1)]
        for i, j, k, v in items:
            buf[i][j][k] = buf[i][j][k] + field(v)
        return cls._raw(field, tuple(tuple(tuple(c) for c in m) for m in buf), tuple(dims))

    @classmethod
    def from_function(cls, field: Field, dims: tuple, fn) -> "Tensor3":
        d1, d2, d3 = dims
        return cls._raw(field, tuple(tuple(tuple(field(fn(i, j, k)) for k in range(d3))
                                           for j in range(d2)) for i in range(d1)), tuple(dims))

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j, k = idx
            return self.entries[i][j][k]
        return self.entries[idx]

    def slice0(self, i: int) -> Matrix:
        """The matrix ``t[i][.][.]``."""
        return Matrix._raw(self.field, self.entries[i], self.dims[2])

    def _zip(self, other, op):
        if not isinstance(other, Tensor3):
            return NotImplemented
        _check_field(self.field, other.field)
        if self.dims != other.dims:
            raise ShapeError(f"tensor dims {self.dims} vs {other.dims}")
        return Tensor3._raw(self.field, tuple(tuple(tuple(op(a, b) for a, b in zip(c1, c2))
                                                    for c1, c2 in zip(m1, m2))
                                              for m1, m2 in zip(self.entries, other.entries)), self.dims)

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return Tensor3._raw(self.field, tuple(tuple(tuple(-a for a in c) for c in m) for m in self.entries),
                            self.dims)

    def __mul__(self, c):
        c = self.field(c)
        return Tensor3._raw(self.field, tuple(tuple(tuple(c * a for a in col) for col in m)
                                              for m in self.entries), self.dims)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.field == other.field and self.dims == other.dims and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def is_zero(self) -> bool:
        return not any(a for m in self.entries for c in m for a in c)

    def nonzero(self) -> Iterator[tuple[int, int, int, Scalar]]:
        for i, m in enumerate(self.entries):
            for j, c in enumerate(m):
                for k, a in enumerate(c):
                    if a:
                        yield i, j, k, a

    def permute(self, perm: tuple[int, int, int]) -> "Tensor3":
        """Move slot ``s`` of ``self`` to slot ``perm[s]`` of the result."""
        dims = [0, 0, 0]
        for s, d in enumerate(self.dims):
            dims[perm[s]] = d
        items = []
        for idx in product(*(range(d) for d in self.dims)):
            a = self.entries[idx[0]][idx[1]][idx[2]]
            if a:
                new = [0, 0, 0]
                for s, x in enumerate(idx):
                    new[perm[s]] = x
                items.append((*new, a))
        return Tensor3.from_sparse(self.field, tuple(dims), items)

    def __repr__(self):
        terms = [f"{self.field.format(a)}*e{i + 1}(x)e{j + 1}(x)e{k + 1}" for i, j, k, a in self.nonzero()]
        return "Tensor3(" + (" + ".join(terms) or "0") + ")"


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def basis_vector(field: Field, n: int, i: int) -> Vector:
    z, o = field.zero, field.one
    return tuple(o if k == i else z for k in range(n))


def dot(u: Sequence, v: Sequence):
    it = iter(zip(u, v))
    a, b = next(it)
    s = a * b
    for a, b in it:
        s = s + a * b
    return s
