"""Exact arithmetic in Q(sqrt(q)) for a fixed prime power q.

Every scalar produced by the algebra modules lives here: Euler-form values
are integer powers of ``v = sqrt(q)`` and all counting data is rational.
When ``q`` is a perfect square the surd part is folded into the rational
part, so ``Coeff`` stays a field for every valid ``q``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache


class DivisionByZero(ZeroDivisionError):
    pass


def _prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


class GroundParams:
    """The ground data ``q``; instances are interned per ``q``."""

    _cache: dict[int, "GroundParams"] = {}

    def __new__(cls, q: int):
        if q in cls._cache:
            return cls._cache[q]
        if not isinstance(q, int) or _prime_power(q) is None:
            raise ValueError(f"q must be a prime power >= 2, got {q!r}")
        self = super().__new__(cls)
        self.q = q
        self.p, self.k = _prime_power(q)
        r = math.isqrt(q)
        self.is_square = r * r == q
        self.sqrt_q_int = r if self.is_square else None
        self.zero = Coeff(0, 0, self)
        self.one = Coeff(1, 0, self)
        cls._cache[q] = self
        return self

    def __reduce__(self):
        return (GroundParams, (self.q,))

    def __repr__(self):
        return f"GroundParams(q={self.q})"

    def coeff(self, a=0, b=0) -> "Coeff":
        return Coeff(a, b, self)

    def vpow(self, k: int) -> "Coeff":
        """``(sqrt q)**k`` in canonical form."""
        return _vpow(self, k)

    def parse(self, text: str) -> "Coeff":
        return parse_coeff(text, self)


@lru_cache(maxsize=None)
def _vpow(ground: GroundParams, k: int) -> "Coeff":
    q = Fraction(ground.q)
    if k % 2 == 0:
        return Coeff(q ** (k // 2), 0, ground)
    return Coeff(0, q ** ((k - 1) // 2), ground)


class Coeff:
    """The number ``a + b*v`` with ``v = sqrt(q)`` and rational ``a, b``."""

    __slots__ = ("a", "b", "ground")

    def __init__(self, a, b, ground: GroundParams):
        a = a if isinstance(a, Fraction) else Fraction(a)
        b = b if isinstance(b, Fraction) else Fraction(b)
        if b and ground.is_square:
            a += b * ground.sqrt_q_int
            b = Fraction(0)
        self.a = a
        self.b = b
        self.ground = ground

    def _lift(self, other) -> "Coeff":
        if isinstance(other, Coeff):
            if other.ground is not self.ground:
                raise ValueError("coefficients over different q")
            return other
        if isinstance(other, (int, Fraction)):
            return Coeff(other, 0, self.ground)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Coeff(self.a + o.a, self.b + o.b, self.ground)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Coeff(self.a - o.a, self.b - o.b, self.ground)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Coeff(-self.a, -self.b, self.ground)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Coeff(self.a * other, self.b * other, self.ground)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        if not b and not d:
            return Coeff(a * c, 0, self.ground)
        return Coeff(a * c + b * d * self.ground.q, a * d + b * c, self.ground)

    __rmul__ = __mul__

    def inv(self) -> "Coeff":
        a, b = self.a, self.b
        if not a and not b:
            raise DivisionByZero("inverse of zero coefficient")
        if not b:
            return Coeff(1 / a, 0, self.ground)
        # q is not a square here, so the norm is nonzero
        norm = a * a - b * b * self.ground.q
        return Coeff(a / norm, -b / norm, self.ground)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = self.ground.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, Coeff):
            return self.a == other.a and self.b == other.b and self.ground is other.ground
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.ground.q))

    def is_rational(self) -> bool:
        return not self.b

    def __repr__(self):
        return f"Coeff({render_coeff(self)}; q={self.ground.q})"

    def __str__(self):
        return render_coeff(self)

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}


def coeff_from_json(obj: dict, ground: GroundParams) -> Coeff:
    return Coeff(Fraction(obj["a"]), Fraction(obj["b"]), ground)


def render_coeff(x: Coeff) -> str:
    """Render as ``a + b*v``; ``v`` stands for ``sqrt(q)``."""
    if not x.b:
        return str(x.a)
    surd = "v" if x.b == 1 else "-v" if x.b == -1 else f"{x.b}*v"
    if not x.a:
        return surd
    if surd.startswith("-"):
        return f"{x.a} - {surd[1:]}"
    return f"{x.a} + {surd}"


_ATOM = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>[vq])(?:\s*\^\s*(?P<exp>-?\d+))?)\s*")


def parse_coeff(text: str, ground: GroundParams) -> Coeff:
    """Parse sums/products of rationals, ``v`` and ``q`` (``q`` = ``v^2``).

    Accepted: ``"3/2"``, ``"v"``, ``"v^-2"``, ``"q"``, ``"1 + 2*v"``, ``"-v^3"``.
    """
    s = text.replace(" ", "").replace("^-", "^~")
    if not s or not re.fullmatch(r"[+-]?[^+-]+(?:[+-][^+-]+)*", s):
        raise ValueError(f"bad coefficient {text!r}")
    total = ground.zero
    for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
        val = ground.one
        for factor in term.replace("~", "-").split("*"):
            m = _ATOM.fullmatch(factor)
            if not m:
                raise ValueError(f"bad coefficient factor {factor!r} in {text!r}")
            if m["num"]:
                val = val * Fraction(m["num"])
            else:
                k = int(m["exp"]) if m["exp"] else 1
                val = val * ground.vpow(k if m["sym"] == "v" else 2 * k)
        total = total - val if sign == "-" else total + val
    return total
