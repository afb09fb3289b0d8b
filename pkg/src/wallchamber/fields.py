"""Exact scalar fields: the rationals and prime fields F_p.

Elements are plain Python objects (``Fraction`` for Q, ``int`` in ``range(p)``
for F_p).  The field object owns normalisation and inversion so that the
linear algebra in :mod:`wallchamber.linalg` can stay generic.
"""
from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class RationalField:
    kind = "rational"
    is_finite = False
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def norm(self, x):
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def elements(self):
        raise FieldError("the rational field cannot be enumerated")

    def descriptor(self) -> dict:
        return {"kind": "rational"}

    def to_json(self, x) -> str | int:
        x = Fraction(x)
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    kind = "fp"
    is_finite = True
    zero = 0
    one = 1

    def __init__(self, p: int = 2):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"{p} is not a prime")
        self.p = p

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x):
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def elements(self):
        return range(self.p)

    def descriptor(self) -> dict:
        return {"kind": "fp", "p": self.p}

    def to_json(self, x) -> int:
        return int(x) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_descriptor(desc: dict | None):
    if desc is None:
        return QQ
    kind = desc.get("kind", "rational")
    if kind == "rational":
        return QQ
    if kind == "fp":
        return PrimeField(int(desc.get("p", 2)))
    raise FieldError(f"unknown field kind {kind!r}")
