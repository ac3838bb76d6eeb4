"""Command line interface.

Exit codes: 0 every check passed, 1 a mathematical check failed (the report is still
emitted), 2 malformed input or bad usage.  ``--out`` writes a JSON report; ``--emit``
writes the derived object (if any) in the canonical file format so it can be fed back in.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import fileio
from .algebra import NotDendriformError, check_dendriform, sub_adjacent
from .bialgebra import (NotFactorizableError, check_d_bialgebra, classify, double, dual_products,
                        factorize, induced_bialgebra)
from .field import FieldError, Mod
from .fileio import Document, FormatError, algebra_entries, matrix_entries
from .linalg import Matrix, ShapeError
from .report import Report
from .rotabaxter import (PreconditionError, ZeroWeightError, check_quadratic_rb, factorizable_to_qrb,
                         omega_sharp_iso, qrb_to_factorizable)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Outcome:
    """What a command produced: verdicts, free-form results and an optional derived document."""

    def __init__(self, command: str):
        self.command = command
        self.reports: list[Report] = []
        self.results: dict = {}
        self.derived: Optional[Document] = None
        self.failures: list[str] = []

    def add(self, rep: Report):
        self.reports.append(rep)
        return rep

    def fail(self, why: str):
        self.failures.append(why)

    @property
    def ok(self) -> bool:
        return not self.failures and all(r.ok for r in self.reports)

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "ok": self.ok,
            "reports": [{
                "name": r.name,
                "ok": r.ok,
                "checks": dict(r.checks),
                "violations": [{"check": v.check, "where": _witness(v.where), "defect": _jsonable(v.defect)}
                               for v in r.violations],
            } for r in self.reports],
            "results": _jsonable(self.results),
            "failures": list(self.failures),
        }
        if self.derived is not None:
            d = self.derived
            out["derived"] = {"algebra": algebra_entries(d.algebra)}
            for key in ("r", "P", "omega", "T"):
                if getattr(d, key) is not None:
                    out["derived"][key] = matrix_entries(getattr(d, key))
            if d.lam is not None:
                out["derived"]["lambda"] = d.field.format(d.lam)
            out["derived"]["document"] = fileio.serialize(d)
        return out

    def summary(self) -> str:
        lines = [f"{self.command}: {'ok' if self.ok else 'FAILED'}"]
        for r in self.reports:
            lines.append(f"  {r.name}: {'ok' if r.ok else 'FAILED'}")
            for v in r.violations[:20]:
                where = ", ".join(str(w) for w in _witness(v.where))
                lines.append(f"    {v.check} fails at ({where})")
            if len(r.violations) > 20:
                lines.append(f"    ... {len(r.violations) - 20} more")
        for k, v in self.results.items():
            lines.append(f"  {k}: {_show(v)}")
        for f in self.failures:
            lines.append(f"  failure: {f}")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, Mod):
        return str(v.v)
    if isinstance(v, Matrix):
        return matrix_entries(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    return str(v)


def _witness(where: tuple):
    # basis indices are reported 1-based, like every index in the file format
    return [w + 1 if isinstance(w, int) and not isinstance(w, bool) else _jsonable(w) for w in where]


def _show(v) -> str:
    j = _jsonable(v)
    return j if isinstance(j, str) else json.dumps(j)


# --- input helpers -------------------------------------------------------------------------------

def _load(path: str) -> Document:
    return fileio.load(path)


def _r_from(doc: Document, with_r: Optional[str], source: str) -> Matrix:
    if with_r:
        rd = _load(with_r)
        if rd.field != doc.field or rd.dim != doc.dim:
            raise FormatError(f"two-tensor is over {rd.field}, dim {rd.dim}; algebra is over {doc.field}, dim {doc.dim}",
                              None, with_r)
        rd.require("r", source=with_r)
        return rd.r
    doc.require("r", source=source)
    return doc.r


def _lam(doc: Document, text: Optional[str], source: str):
    if text is not None:
        try:
            return doc.field.parse(text)
        except FieldError as e:
            raise UsageError(f"--lambda: {e}") from None
    doc.require("lam", source=source)
    return doc.lam


def _vector(doc: Document, text: str):
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != doc.dim:
        raise UsageError(f"--x needs {doc.dim} comma-separated coordinates, got {len(parts)}")
    try:
        return tuple(doc.field.parse(p) for p in parts)
    except FieldError as e:
        raise UsageError(f"--x: {e}") from None


def _base_dendriform(out: Outcome, doc: Document):
    A = doc.algebra
    rep = check_dendriform(A)
    rep.name = "input dendriform"
    out.add(rep)
    return A if rep.ok else None


# --- commands --------------------------------------------------------------------------------------

def cmd_check_dendriform(a) -> Outcome:
    out = Outcome("check dendriform")
    doc = _load(a.file)
    A = doc.algebra
    out.add(check_dendriform(A))
    if out.ok:
        S = sub_adjacent(A, check=False)
        fmt = A.field.format
        out.results["sub-adjacent"] = [[i + 1, j + 1, k + 1, fmt(v)] for i, j, k, v in sorted(S.mult.nonzero())]
    return out


def cmd_check_dbialgebra(a) -> Outcome:
    out = Outcome("check d-bialgebra")
    A, B = _load(a.file).algebra, _load(a.file_star).algebra
    try:
        out.add(check_d_bialgebra(A, B))
    except NotDendriformError as e:
        out.fail(str(e))
    except (ShapeError, FieldError) as e:
        raise UsageError(str(e)) from None
    return out


def cmd_check_qrb(a) -> Outcome:
    out = Outcome("check qrb")
    doc = _load(a.file)
    doc.require("P", "omega", source=a.file)
    lam = _lam(doc, a.lam, a.file)
    if _base_dendriform(out, doc) is None:
        return out
    out.add(check_quadratic_rb(doc.algebra, doc.P, doc.omega, lam))
    return out


def cmd_classify(a) -> Outcome:
    out = Outcome("classify")
    doc = _load(a.file)
    r = _r_from(doc, a.with_r, a.file)
    A = doc.algebra
    c = classify(A, r)
    out.results["classification"] = c.kind
    out.results["evidence"] = c.evidence
    if c.kind == "invalid-products":
        out.fail(c.evidence.get("reason", "invalid"))
    return out


def cmd_dual_products(a) -> Outcome:
    out = Outcome("dual-products")
    doc = _load(a.file)
    r = _r_from(doc, a.with_r, a.file)
    if _base_dendriform(out, doc) is None:
        return out
    A = doc.algebra
    B = dual_products(A, r)
    d = check_dendriform(B)
    d.name = "dual products dendriform"
    out.add(d)
    if d.ok:
        bi = induced_bialgebra(A, r)
        out.results["induced D-bialgebra"] = bi.ok
        out.results["induced D-bialgebra checks"] = bi.checks
    out.derived = Document.from_objects(B)
    return out


def cmd_double(a) -> Outcome:
    out = Outcome("double")
    doc = _load(a.file)
    r = _r_from(doc, a.with_r, a.file)
    if _base_dendriform(out, doc) is None:
        return out
    A = doc.algebra
    B = dual_products(A, r)
    if not check_dendriform(B).ok or not check_d_bialgebra(A, B).ok:
        out.fail("r does not induce a D-bialgebra, so there is no double")
        return out
    D, R = double(A, B, check=False)
    d = check_dendriform(D)
    d.name = "double dendriform"
    out.add(d)
    c = classify(D, R)
    out.results["canonical r classification"] = c.kind
    if c.kind != "factorizable":
        out.fail(f"canonical r of the double is {c.kind}, expected factorizable")
    out.derived = Document.from_objects(D, r=R)
    return out


def cmd_factorize(a) -> Outcome:
    out = Outcome("factorize")
    doc = _load(a.file)
    r = _r_from(doc, a.with_r, a.file)
    x = _vector(doc, a.x)
    try:
        xp, xm = factorize(doc.algebra, r, x)
    except NotFactorizableError as e:
        out.fail(str(e))
        return out
    out.results["x_plus"] = list(xp)
    out.results["x_minus"] = list(xm)
    out.results["x_plus - x_minus == x"] = all(p - m == v for p, m, v in zip(xp, xm, x))
    return out


def cmd_to_qrb(a) -> Outcome:
    out = Outcome("to-qrb")
    doc = _load(a.file)
    r = _r_from(doc, a.with_r, a.file)
    lam = _lam(doc, a.lam, a.file)
    if _base_dendriform(out, doc) is None:
        return out
    A = doc.algebra
    try:
        P, W = factorizable_to_qrb(A, r, lam, tilde_variant=a.tilde)
    except (NotFactorizableError, PreconditionError) as e:
        out.fail(str(e))
        return out
    out.add(check_quadratic_rb(A, P, W, lam))
    out.derived = Document.from_objects(A, P=P, omega=W, lam=lam)
    return out


def cmd_from_qrb(a) -> Outcome:
    out = Outcome("from-qrb")
    doc = _load(a.file)
    doc.require("P", "omega", source=a.file)
    lam = _lam(doc, a.lam, a.file)
    if _base_dendriform(out, doc) is None:
        return out
    A = doc.algebra
    try:
        tt = qrb_to_factorizable(A, doc.P, doc.omega, lam)
    except PreconditionError as e:
        out.fail(str(e))
        return out
    c = classify(A, tt)
    out.results["classification"] = c.kind
    if c.kind != "factorizable":
        out.fail(f"resulting r is {c.kind}, expected factorizable")
    out.derived = Document.from_objects(A, r=tt.R)
    return out


def cmd_omega_sharp(a) -> Outcome:
    out = Outcome("omega-sharp")
    doc = _load(a.file)
    doc.require("P", "omega", source=a.file)
    lam = _lam(doc, a.lam, a.file)
    if _base_dendriform(out, doc) is None:
        return out
    try:
        w, rep = omega_sharp_iso(doc.algebra, doc.P, doc.omega, lam)
    except PreconditionError as e:
        out.fail(str(e))
        return out
    out.add(rep)
    out.results["omega_sharp"] = w
    return out


def _reduced(doc: Document, p: int) -> Document:
    from .field import Field
    F = Field.gf(p)
    try:
        return Document(F, doc.dim, doc.names,
                        {k: F(v) for k, v in doc.prec.items()}, {k: F(v) for k, v in doc.succ.items()})
    except FieldError as e:
        raise UsageError(f"cannot reduce the structure constants mod {p}: {e}") from None


def _fixed_entry(A, text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--fix expects i,j,value, got {text!r}")
    try:
        i, j = int(parts[0]) - 1, int(parts[1]) - 1
        v = A.field.parse(parts[2])
    except (ValueError, FieldError) as e:
        raise UsageError(f"--fix {text!r}: {e}") from None
    return i, j, v


def cmd_search(a) -> Outcome:
    from .field import Field
    from . import search
    out = Outcome(f"search {a.target}")
    doc = _load(a.file)
    try:
        Field.gf(a.p)
    except FieldError as e:
        raise UsageError(f"--p: {e}") from None
    if doc.field.kind == "gf" and doc.field.p != a.p:
        raise UsageError(f"file is over {doc.field} but --p is {a.p}")
    A = _reduced(doc, a.p).algebra
    if not check_dendriform(A).ok:
        out.fail(f"algebra is not dendriform over GF({a.p})")
        return out
    constraints = {"symmetric": a.symmetric, "skew": a.skew, "fixed": [_fixed_entry(A, t) for t in a.fix]}
    kw = dict(cap=a.cap, shards=a.shards, workers=a.workers, backend=a.backend, constraints=constraints)
    try:
        if a.target == "d-solutions":
            sols = search.enumerate_d_solutions(A, **kw)
            out.results["count"] = len(sols)
            out.results["certificates"] = [s.certificate(A.field) for s in sols]
        else:
            if a.lam is None:
                raise UsageError("search rb needs --lambda")
            try:
                lam = A.field.parse(a.lam)
            except FieldError as e:
                raise UsageError(f"--lambda: {e}") from None
            ops = search.enumerate_rb(A, lam, **kw)
            out.results["count"] = len(ops)
            out.results["operators"] = [matrix_entries(P) for P in ops]
    except ValueError as e:           # too large a space, or inconsistent constraints
        raise UsageError(str(e)) from None
    except search.OracleDisagreement as e:
        out.fail(str(e))
    return out


# --- argument parsing -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write a JSON report to this path")
    common.add_argument("--emit", help="write the derived object (if any) in the canonical file format")
    common.add_argument("--quiet", action="store_true", help="suppress the human summary")

    with_r = argparse.ArgumentParser(add_help=False)
    with_r.add_argument("--with-r", dest="with_r", help="file holding the two-tensor r (default: r in FILE)")
    lam = argparse.ArgumentParser(add_help=False)
    lam.add_argument("--lambda", dest="lam", help="weight (default: lambda in FILE)")

    p = argparse.ArgumentParser(prog="dendri", description="Exact dendriform algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    chk = sub.add_parser("check", help="verify a structure")
    chk_sub = chk.add_subparsers(dest="what", required=True)
    c = chk_sub.add_parser("dendriform", parents=[common], help="dendriform axioms")
    c.add_argument("file")
    c.set_defaults(fn=cmd_check_dendriform)
    c = chk_sub.add_parser("d-bialgebra", parents=[common], help="bialgebra compatibility of FILE with FILE_STAR")
    c.add_argument("file")
    c.add_argument("file_star")
    c.set_defaults(fn=cmd_check_dbialgebra)
    c = chk_sub.add_parser("qrb", parents=[common, lam], help="quadratic Rota-Baxter data P, omega, lambda")
    c.add_argument("file")
    c.set_defaults(fn=cmd_check_qrb)

    for name, fn, parents, text in (
            ("classify", cmd_classify, [common, with_r], "classify a two-tensor r"),
            ("dual-products", cmd_dual_products, [common, with_r], "products induced on the dual space by r"),
            ("double", cmd_double, [common, with_r], "the double built from A and its dual"),
            ("factorize", cmd_factorize, [common, with_r], "split x through the factorizable r"),
            ("to-qrb", cmd_to_qrb, [common, with_r, lam], "factorizable r to a quadratic Rota-Baxter pair"),
            ("from-qrb", cmd_from_qrb, [common, lam], "quadratic Rota-Baxter pair to a factorizable r"),
            ("omega-sharp", cmd_omega_sharp, [common, lam], "verify the isomorphism induced by omega")):
        c = sub.add_parser(name, parents=parents, help=text)
        c.add_argument("file")
        c.set_defaults(fn=fn)
        if name == "factorize":
            c.add_argument("--x", required=True, help="coordinates, e.g. 1,0")
        if name == "to-qrb":
            c.add_argument("--tilde", action="store_true", help="use the -lambda - P variant")

    s = sub.add_parser("search", parents=[common], help="exhaustive search over GF(p)")
    s.add_argument("target", choices=("d-solutions", "rb"))
    s.add_argument("file")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--lambda", dest="lam")
    s.add_argument("--cap", type=int, default=10 ** 7)
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--workers", type=int, default=None, help="processes (default: DENDRI_THREADS or 1)")
    s.add_argument("--backend", choices=("python", "compiled"), default=None)
    s.add_argument("--symmetric", action="store_true", help="only symmetric matrices")
    s.add_argument("--skew", action="store_true", help="only skew-symmetric matrices")
    s.add_argument("--fix", action="append", default=[], metavar="I,J,V",
                   help="pin entry (I, J) (1-based) to V; repeatable")
    s.set_defaults(fn=cmd_search)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.fn(args)
    except (FormatError, UsageError, ZeroWeightError, ShapeError, FieldError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(out.to_json(), fh, indent=2, sort_keys=True)
                fh.write("\n")
        if args.emit and out.derived is not None:
            fileio.dump(out.derived, args.emit)
    except OSError as e:
        print(f"error: cannot write output: {e}", file=sys.stderr)
        return EXIT_USAGE
    if not args.quiet:
        print(out.summary())
    return EXIT_OK if out.ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
