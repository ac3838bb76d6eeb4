"""The canonical line-based file format for algebras and their attachments.

A document is a sequence of lines ``keyword arg...``; ``#`` starts a comment.  Indices are
1-based.  Example::

    field rational
    dim 2
    basis e1 e2
    prec 1 1 1 1          # e1 < e1 = 1 e1
    succ 1 2 2 1          # e1 > e2 = 1 e2
    r 2 1 1               # r = e2 (x) e1
    P 2 2 -1              # P(e2) = -1 e2   (row = output, column = input)
    omega 1 2 1           # omega(e1, e2) = 1
    lambda 1
    rep-dim 2
    rep l_succ 1 2 2 1    # l_succ(e1) has entry 1 at (2, 2)
    T 1 1 -1

``field`` and ``dim`` must come first.  Values are exact strings (``-1/2``, ``3``).
Serialization is canonical: fixed keyword order, sorted entries, zero entries omitted, values
reduced, so ``serialize(parse(serialize(d))) == serialize(d)``.  A present-but-zero matrix is
written as a single explicit zero entry so that its presence survives the round trip.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from pathlib import Path
from typing import Optional

from .algebra import DendriformAlgebra, default_names
from .field import Field, FieldError, Scalar
from .linalg import Matrix, Tensor3
from .representation import SLOTS, DendriformRep

KEYWORDS = ("field", "dim", "basis", "prec", "succ", "r", "P", "omega", "lambda", "rep-dim", "rep", "T")
_MATRIX_KEYS = {"r": "r", "P": "P", "omega": "omega", "T": "T"}


class FormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


@dataclass
class Document:
    field: Field
    dim: int
    names: tuple[str, ...] = ()
    prec: dict = dc_field(default_factory=dict)     # (i, j, k) -> scalar, 0-based
    succ: dict = dc_field(default_factory=dict)
    r: Optional[Matrix] = None
    P: Optional[Matrix] = None
    omega: Optional[Matrix] = None
    lam: Optional[Scalar] = None
    rep_dim: Optional[int] = None
    rep: dict = dc_field(default_factory=dict)      # (slot, i, a, b) -> scalar
    T: Optional[Matrix] = None

    def __post_init__(self):
        if not self.names:
            self.names = default_names(self.dim)

    @property
    def algebra(self) -> DendriformAlgebra:
        items = lambda d: [(i, j, k, v) for (i, j, k), v in d.items()]
        return DendriformAlgebra.from_sparse(self.field, self.dim, items(self.prec), items(self.succ), self.names)

    @property
    def representation(self) -> Optional[DendriformRep]:
        if self.rep_dim is None:
            return None
        m, n, f = self.rep_dim, self.dim, self.field
        fams = {s: [[[f.zero] * m for _ in range(m)] for _ in range(n)] for s in SLOTS}
        for (s, i, a, b), v in self.rep.items():
            fams[s][i][a][b] = v
        return DendriformRep(self.algebra, m, **{s: tuple(Matrix(f, M) for M in fams[s]) for s in SLOTS})

    @classmethod
    def from_objects(cls, A: DendriformAlgebra, *, r=None, P=None, omega=None, lam=None,
                     rep: Optional[DendriformRep] = None, T=None) -> "Document":
        f = A.field
        doc = cls(f, A.dim, tuple(A.names),
                  {(i, j, k): v for i, j, k, v in A.prec.nonzero()},
                  {(i, j, k): v for i, j, k, v in A.succ.nonzero()})
        doc.r = _as_matrix(f, r)
        doc.P = _as_matrix(f, P)
        doc.omega = _as_matrix(f, omega)
        doc.lam = None if lam is None else f(lam)
        doc.T = _as_matrix(f, T)
        if rep is not None:
            doc.rep_dim = rep.dim
            for s in SLOTS:
                for i, M in enumerate(getattr(rep, s)):
                    for a, b, v in M.nonzero():
                        doc.rep[(s, i, a, b)] = v
        return doc

    def with_attachments(self, **kw) -> "Document":
        f = self.field
        conv = {k: (f(v) if k == "lam" and v is not None else _as_matrix(f, v) if k in _MATRIX_KEYS.values() else v)
                for k, v in kw.items()}
        return replace(self, **conv)

    def require(self, *attrs: str, source: str = "<input>"):
        for a in attrs:
            if getattr(self, a) is None:
                key = "lambda" if a == "lam" else "rep-dim" if a == "rep_dim" else a
                raise FormatError(f"missing required '{key}' entries", None, source)


def _as_matrix(f: Field, m) -> Optional[Matrix]:
    if m is None or isinstance(m, Matrix):
        return m
    if hasattr(m, "R"):
        return m.R
    return Matrix(f, m)


# --- parsing -------------------------------------------------------------------------------------

def parse(text: str, source: str = "<input>") -> Document:
    """Parse a document; every error carries the source name and line number."""
    field: Optional[Field] = None
    dim: Optional[int] = None
    names: tuple[str, ...] = ()
    prec: dict = {}
    succ: dict = {}
    mats: dict[str, dict] = {}
    lam = None
    rep_dim = None
    rep: dict = {}
    seen_single: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()

        def fail(msg):
            raise FormatError(msg, lineno, source)

        def index(tok, bound, what="index"):
            try:
                v = int(tok)
            except ValueError:
                fail(f"{what} {tok!r} is not an integer")
            if not 1 <= v <= bound:
                fail(f"{what} {v} out of range 1..{bound}")
            return v - 1

        def value(tok):
            try:
                return field.parse(tok)
            except FieldError as e:
                fail(f"{e} in field {field}")

        def arity(k):
            if len(args) != k:
                fail(f"'{key}' takes {k} argument(s), got {len(args)}")

        if key not in KEYWORDS:
            fail(f"unknown key {key!r}")
        if key in ("field", "dim", "basis", "lambda", "rep-dim"):
            if key in seen_single:
                fail(f"duplicate '{key}' line")
            seen_single.add(key)
        if key == "field":
            if dim is not None:
                fail("'field' must precede 'dim'")
            if args == ["rational"]:
                field = Field()
            elif len(args) == 2 and args[0] == "gf":
                try:
                    field = Field.gf(int(args[1]))
                except (ValueError, FieldError) as e:
                    fail(f"bad prime field: {e}")
            else:
                fail("field must be 'rational' or 'gf <prime>'")
            continue
        if field is None:
            fail("the first entry must be 'field'")
        if key == "dim":
            arity(1)
            try:
                dim = int(args[0])
            except ValueError:
                fail(f"dimension {args[0]!r} is not an integer")
            if dim < 0:
                fail("dimension must be non-negative")
            continue
        if dim is None:
            fail("'dim' must precede all other entries")
        n = dim
        if key == "basis":
            arity(n)
            if len(set(args)) != n:
                fail("basis names must be distinct")
            names = tuple(args)
        elif key in ("prec", "succ"):
            arity(4)
            ijk = tuple(index(t, n) for t in args[:3])
            store = prec if key == "prec" else succ
            if ijk in store:
                fail(f"duplicate {key} entry {tuple(a + 1 for a in ijk)}")
            store[ijk] = value(args[3])
        elif key in _MATRIX_KEYS:
            arity(3)
            if key == "T":
                if rep_dim is None:
                    fail("'T' needs a preceding 'rep-dim'")
                bound = rep_dim
            else:
                bound = n
            ij = (index(args[0], bound), index(args[1], bound))
            store = mats.setdefault(key, {})
            if ij in store:
                fail(f"duplicate {key} entry {(ij[0] + 1, ij[1] + 1)}")
            store[ij] = value(args[2])
        elif key == "lambda":
            arity(1)
            lam = value(args[0])
        elif key == "rep-dim":
            arity(1)
            try:
                rep_dim = int(args[0])
            except ValueError:
                fail(f"rep-dim {args[0]!r} is not an integer")
            if rep_dim < 0:
                fail("rep-dim must be non-negative")
        elif key == "rep":
            arity(5)
            if rep_dim is None:
                fail("'rep' needs a preceding 'rep-dim'")
            slot = args[0]
            if slot not in SLOTS:
                fail(f"unknown representation slot {slot!r}; expected one of {', '.join(SLOTS)}")
            k = (slot, index(args[1], n), index(args[2], rep_dim), index(args[3], rep_dim))
            if k in rep:
                fail(f"duplicate rep entry {args[:4]}")
            rep[k] = value(args[4])

    if field is None or dim is None:
        raise FormatError("document needs 'field' and 'dim'", None, source)

    def build(key):
        if key not in mats:
            return None
        m = rep_dim if key == "T" else dim
        rows = [[field.zero] * m for _ in range(m)]
        for (i, j), v in mats[key].items():
            rows[i][j] = v
        return Matrix(field, rows, m)

    return Document(field, dim, names,
                    {k: v for k, v in prec.items() if v},
                    {k: v for k, v in succ.items() if v},
                    build("r"), build("P"), build("omega"), lam, rep_dim,
                    {k: v for k, v in rep.items() if v}, build("T"))


def load(path) -> Document:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read file: {e.strerror}", None, str(path)) from None
    return parse(text, str(path))


# --- serialization -------------------------------------------------------------------------------

def _matrix_lines(key: str, M: Matrix, fmt) -> list[str]:
    nz = sorted((i, j, v) for i, j, v in M.nonzero())
    if not nz:
        return [f"{key} 1 1 0"] if M.rows else []
    return [f"{key} {i + 1} {j + 1} {fmt(v)}" for i, j, v in nz]


def serialize(doc: Document) -> str:
    f = doc.field
    fmt = f.format
    out = [f"field {f}", f"dim {doc.dim}"]
    if doc.dim:
        out.append("basis " + " ".join(doc.names))
    for key, store in (("prec", doc.prec), ("succ", doc.succ)):
        out += [f"{key} {i + 1} {j + 1} {k + 1} {fmt(v)}" for (i, j, k), v in sorted(store.items()) if v]
    for key in ("r", "P", "omega"):
        M = getattr(doc, key)
        if M is not None:
            out += _matrix_lines(key, M, fmt)
    if doc.lam is not None:
        out.append(f"lambda {fmt(doc.lam)}")
    if doc.rep_dim is not None:
        out.append(f"rep-dim {doc.rep_dim}")
        order = {s: n for n, s in enumerate(SLOTS)}
        for (s, i, a, b), v in sorted(doc.rep.items(), key=lambda kv: (order[kv[0][0]], kv[0][1:])):
            if v:
                out.append(f"rep {s} {i + 1} {a + 1} {b + 1} {fmt(v)}")
        if doc.T is not None:
            out += _matrix_lines("T", doc.T, fmt)
    return "\n".join(out) + "\n"


def dump(doc: Document, path) -> None:
    Path(path).write_text(serialize(doc), encoding="utf-8")


# --- JSON-friendly views of derived objects -----------------------------------------------------

def matrix_entries(M: Matrix) -> list[list]:
    """Sparse 1-based ``[i, j, value]`` entries, sorted."""
    fmt = M.field.format
    return [[i + 1, j + 1, fmt(v)] for i, j, v in sorted(M.nonzero())]


def algebra_entries(A: DendriformAlgebra) -> dict:
    fmt = A.field.format
    tri = lambda t: [[i + 1, j + 1, k + 1, fmt(v)] for i, j, k, v in sorted(t.nonzero())]
    return {"field": str(A.field), "dim": A.dim, "basis": list(A.names),
            "prec": tri(A.prec), "succ": tri(A.succ)}


def tensor3_entries(t: Tensor3) -> list[list]:
    fmt = t.field.format
    return [[i + 1, j + 1, k + 1, fmt(v)] for i, j, k, v in sorted(t.nonzero())]
