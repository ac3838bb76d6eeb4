"""Backend selection for the GF(p) search kernels.

The compiled ``_kernels`` extension is used when it was built; otherwise the pure-Python
module with the identical contract is used.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

from types import ModuleType

from . import _kernels_py

try:  # pragma: no cover - depends on the build
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

BACKEND = "compiled" if _compiled is not None else "python"
_active = BACKENDS[BACKEND]


def get_backend(name: str | None = None) -> ModuleType:
    if name is None:
        return _active
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


def d_solutions(n, p, star, prec, succ, lo, hi, backend: str | None = None) -> list[int]:
    return list(get_backend(backend).d_solutions(n, p, star, prec, succ, lo, hi))


def rb_solutions(n, p, prec, succ, lam, lo, hi, backend: str | None = None) -> list[int]:
    return list(get_backend(backend).rb_solutions(n, p, prec, succ, lam, lo, hi))
