"""Exact scalar fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

P_MAX = 1 << 16


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class modulo a prime ``p``; values are kept reduced to ``0..p-1``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o) -> int:
        if isinstance(o, Mod):
            if o.p != self.p:
                raise FieldError(f"cannot mix GF({self.p}) and GF({o.p})")
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Mod(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Mod(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Mod(w - self.v, self.p)

    def __mul__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Mod(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        if w % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __eq__(self, o):
        if isinstance(o, Mod):
            return self.p == o.p and self.v == o.v
        if isinstance(o, int):
            return self.v == o % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, Mod]


@dataclass(frozen=True)
class Field:
    """Either the rationals (``kind='rational'``) or GF(p) (``kind='gf'``)."""

    kind: str = "rational"
    p: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            if self.p:
                raise FieldError("rational field takes no modulus")
        elif self.kind == "gf":
            if not _is_prime(self.p):
                raise FieldError(f"modulus {self.p} is not prime")
            if self.p >= P_MAX:
                raise FieldError(f"modulus {self.p} exceeds 2^16")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls("gf", p)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "gf" else 0

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction, Mod or exact numeric string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "rational":
            if isinstance(value, Mod):
                raise FieldError("cannot coerce a GF(p) element to a rational")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise FieldError(f"not an exact scalar: {value!r}")
        if isinstance(value, Mod):
            if value.p != self.p:
                raise FieldError(f"element of GF({value.p}) used in GF({self.p})")
            return value
        if isinstance(value, int):
            return Mod(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"{value} has no image in GF({self.p})")
            return Mod(value.numerator * pow(value.denominator, -1, self.p), self.p)
        raise FieldError(f"not an exact scalar: {value!r}")

    def parse(self, text: str) -> Scalar:
        s = text.strip().replace("−", "-")
        try:
            if "." in s or "e" in s.lower():
                raise ValueError
            q = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise FieldError(f"malformed value {text!r}") from None
        return self(q)

    def format(self, x: Scalar) -> str:
        if self.kind == "gf":
            return str(self(x).v)
        q = self(x)
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    def require_odd_characteristic(self):
        if self.characteristic == 2:
            raise FieldError("operation needs characteristic != 2")

    def __str__(self):
        return "rational" if self.kind == "rational" else f"gf {self.p}"


QQ = Field()
