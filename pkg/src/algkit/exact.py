"""Exact scalars: rationals, polynomials in t over Q, and rational functions.

A rational is `fractions.Fraction` (always normalized, denominator > 0).
A :class:`Polynomial` stores a coefficient tuple, ``coeffs[i]`` being the
coefficient of ``t^i``, with no trailing zeros; the zero polynomial is the
empty tuple.  A :class:`RatFunc` keeps numerator and denominator coprime
with a monic denominator, so equal values always have identical
representations and ``==`` is plain tuple comparison.

Text syntax, shared by all file formats: a rational is ``p`` or ``p/q``;
a rational function is ``<poly>`` or ``(<poly>)/(<poly>)`` where a poly is
a sum of ``c``, ``c*t`` and ``c*t^k`` terms, e.g. ``(t^2+3*t)/(t+1)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import BothZero, LimitDiverges, ParseError

FIELD_Q = "Q"
FIELD_QT = "Qt"

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Polynomial:
    """Univariate polynomial over Q, coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((Fraction(c),))

    @classmethod
    def t_power(cls, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("t_power expects k >= 0")
        return cls((0,) * k + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.leading == 1:
            return self
        lc = self.leading
        return Polynomial(tuple(c / lc for c in self.coeffs))

    def eval(self, x: Fraction) -> Fraction:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [_ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lc = other.leading
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            f = rem[-1] / lc
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= f * c
            rem.pop()
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(tuple(a * c for a in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return format_poly(self)

    __repr__ = __str__


POLY_ZERO = Polynomial()
POLY_ONE = Polynomial((1,))
POLY_T = Polynomial((0, 1))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) is rejected."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


class RatFunc:
    """Rational function in t over Q, kept coprime with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=POLY_ONE):
        if not isinstance(num, Polynomial):
            num = Polynomial((num,)) if isinstance(num, (int, Fraction)) else Polynomial(num)
        if not isinstance(den, Polynomial):
            den = Polynomial((den,)) if isinstance(den, (int, Fraction)) else Polynomial(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = POLY_ZERO, POLY_ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.leading
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num, self.den = num, den

    @classmethod
    def from_rational(cls, q) -> "RatFunc":
        return cls(Polynomial((Fraction(q),)))

    @classmethod
    def t_power(cls, k: int) -> "RatFunc":
        """t^k, with negative k giving 1/t^|k|."""
        if k >= 0:
            return cls(Polynomial.t_power(k))
        return cls(POLY_ONE, Polynomial.t_power(-k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(Polynomial((other,)))
        if isinstance(other, Polynomial):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc(self.den, self.num) ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def limit_at_zero(self) -> Fraction:
        """Value at t=0 when it exists; a pole raises LimitDiverges."""
        d0 = self.den.eval(_ZERO)
        if d0 == 0:
            raise LimitDiverges(f"pole at t=0 in {self}")
        return self.num.eval(_ZERO) / d0

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at t={x} in {self}")
        return self.num.eval(x) / d

    def __str__(self):
        if self.den == POLY_ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    __repr__ = __str__


RF_ZERO = RatFunc(POLY_ZERO)
RF_ONE = RatFunc(POLY_ONE)
RF_T = RatFunc(POLY_T)


# ---------------------------------------------------------------------------
# field helpers: the rest of the package is generic over {Q, Qt}
# ---------------------------------------------------------------------------

def zero(field: str):
    return _ZERO if field == FIELD_Q else RF_ZERO


def one(field: str):
    return _ONE if field == FIELD_Q else RF_ONE


def coerce(x, field: str):
    """Bring x into the given field; Q values lift into Q(t)."""
    if field == FIELD_Q:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, RatFunc):
            if x.is_constant():
                return x.num.eval(_ZERO)
            raise ParseError(f"{x} is not a rational number")
        raise ParseError(f"cannot interpret {x!r} over Q")
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.from_rational(x)
    if isinstance(x, Polynomial):
        return RatFunc(x)
    raise ParseError(f"cannot interpret {x!r} over Q(t)")


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)?(?:(?<=\d)\*)?(t(?:\^(\d+))?)?$")


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational {s!r}: {e}") from None


def parse_poly(s: str) -> Polynomial:
    s = s.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    out = {}
    for term in re.findall(r"[+-]?[^+-]+", s):
        m = _TERM_RE.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ParseError(f"bad polynomial term {term!r}")
        coeff_s, t_part, exp_s = m.group(1), m.group(2), m.group(3)
        coeff = Fraction(coeff_s) if coeff_s not in (None, "+", "-") else (
            Fraction(-1) if coeff_s == "-" else Fraction(1))
        if t_part is None:
            k = 0
        else:
            k = int(exp_s) if exp_s is not None else 1
        out[k] = out.get(k, _ZERO) + coeff
    deg = max(out)
    return Polynomial(tuple(out.get(i, _ZERO) for i in range(deg + 1)))


_FRACTION_FORM = re.compile(r"^\(([^()]+)\)/\(([^()]+)\)$")


def parse_ratfunc(s: str) -> RatFunc:
    s = s.replace(" ", "")
    m = _FRACTION_FORM.match(s)
    if m:
        return RatFunc(parse_poly(m.group(1)), parse_poly(m.group(2)))
    if "(" in s or ")" in s:
        raise ParseError(f"bad rational function {s!r}")
    # a bare "/" can only belong to a rational coefficient, e.g. "1/2*t"
    return RatFunc(parse_poly(s))


def parse_scalar(s: str, field: str):
    return parse_rational(s) if field == FIELD_Q else parse_ratfunc(s)


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(f"t^{k}" if k > 1 else "t")
        elif c == -1:
            parts.append(f"-t^{k}" if k > 1 else "-t")
        else:
            parts.append(f"{c}*t^{k}" if k > 1 else f"{c}*t")
    return "+".join(parts).replace("+-", "-")


def format_scalar(x) -> str:
    return str(x)
