"""Exact Gaussian-rational scalars, 2x2 matrices and dense polynomials.

Every value here is immutable and every operation is exact. Rational parts
are GMP rationals (``gmpy2.mpq``), always kept in lowest terms with a
positive denominator; ``int`` and ``fractions.Fraction`` are accepted
wherever a scalar is expected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from gmpy2 import mpq

__all__ = [
    "Scalar",
    "Mat2",
    "Poly",
    "ScalarLike",
    "as_scalar",
    "parse_scalar",
    "format_scalar",
    "trace",
    "det",
    "mix",
    "ddet",
    "poly_add",
    "poly_mul",
    "poly_eval",
]

ScalarLike = Union["Scalar", int, Fraction, str]

_RAT = r"\d+(?:/\d+)?"
_FULL_RE = re.compile(rf"^([+-]?{_RAT})(?:([+-])({_RAT})?i)?$")
_IMAG_RE = re.compile(rf"^([+-]?)({_RAT})?i$")


class Scalar:
    """A Gaussian rational ``real + imag*i``.

    Instances are hashable and compare equal to plain ints and Fractions
    when the imaginary part is zero.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, real: int | Fraction | str = 0, imag: int | Fraction | str = 0):
        self._re = _rat(real)
        self._im = _rat(imag)

    @classmethod
    def _make(cls, re_: mpq, im: mpq) -> "Scalar":
        obj = object.__new__(cls)
        obj._re = re_
        obj._im = im
        return obj

    @property
    def real(self) -> mpq:
        return self._re

    @property
    def imag(self) -> mpq:
        return self._im

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def conjugate(self) -> "Scalar":
        return Scalar._make(self._re, -self._im)

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._make(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._make(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        if not b and not d:
            return Scalar._make(a * c, b)
        return Scalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        c, d = o._re, o._im
        if not d:
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar._make(self._re / c, self._im / c)
        norm = c * c + d * d
        a, b = self._re, self._im
        return Scalar._make((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self) -> "Scalar":
        return Scalar._make(-self._re, -self._im)

    def __pos__(self) -> "Scalar":
        return self

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction, type(_Q0))):
            return not self._im and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self) -> str:
        return f"Scalar('{format_scalar(self)}')"

    def __str__(self) -> str:
        return format_scalar(self)


_Q0 = mpq(0)


def _rat(value) -> mpq:
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(_parse_rational(value.strip()))
    return mpq(value)


def _coerce(value) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int):
        return Scalar._make(mpq(value), _Q0)
    if isinstance(value, (Fraction, type(_Q0))):
        return Scalar._make(_rat(value), _Q0)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)


def _parse_rational(text: str) -> mpq:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in scalar {text!r}")
    return mpq(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"n"``, ``"p/q"``, ``"p/q+r/si"`` or a pure imaginary ``"r/si"``.

    >>> parse_scalar("3/4-1/2i")
    Scalar('3/4-1/2i')
    """
    s = text.strip().replace(" ", "")
    m = _FULL_RE.match(s)
    if m:
        real = _parse_rational(m.group(1).lstrip("+-"))
        if m.group(1).startswith("-"):
            real = -real
        imag = _Q0
        if m.group(2):
            imag = _parse_rational(m.group(3)) if m.group(3) else mpq(1)
            if m.group(2) == "-":
                imag = -imag
        return Scalar._make(real, imag)
    m = _IMAG_RE.match(s)
    if m:
        imag = _parse_rational(m.group(2)) if m.group(2) else mpq(1)
        return Scalar._make(_Q0, -imag if m.group(1) == "-" else imag)
    raise ValueError(f"cannot parse scalar {text!r}")


def format_scalar(x: Scalar) -> str:
    """Canonical string form; the imaginary part is written only when nonzero."""
    if not x.imag:
        return str(x.real)
    sign = "-" if x.imag < 0 else "+"
    return f"{x.real}{sign}{abs(x.imag)}i"


def as_scalar(value: ScalarLike) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (int, Fraction, type(_Q0))) and not isinstance(value, bool):
        return Scalar._make(_rat(value), _Q0)
    raise TypeError(f"not a scalar: {value!r}")


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix; ``a12`` is the entry in row 1, column 2."""

    a11: Scalar
    a12: Scalar
    a21: Scalar
    a22: Scalar

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> "Mat2":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("a Mat2 needs exactly two rows of two entries")
        (p, q), (r, s) = rows
        return cls(as_scalar(p), as_scalar(q), as_scalar(r), as_scalar(s))

    @classmethod
    def zero(cls) -> "Mat2":
        return cls(ZERO, ZERO, ZERO, ZERO)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(ONE, ZERO, ZERO, ONE)

    @property
    def rows(self) -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a11 + other.a11, self.a12 + other.a12,
                    self.a21 + other.a21, self.a22 + other.a22)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def scale(self, k: ScalarLike) -> "Mat2":
        k = as_scalar(k)
        return Mat2(k * self.a11, k * self.a12, k * self.a21, k * self.a22)

    def __str__(self) -> str:
        return "[[{}, {}], [{}, {}]]".format(*map(format_scalar, (self.a11, self.a12, self.a21, self.a22)))


def trace(m: Mat2) -> Scalar:
    return m.a11 + m.a22


def det(m: Mat2) -> Scalar:
    return m.a11 * m.a22 - m.a12 * m.a21


def mix(ai: Mat2, aj: Mat2) -> Mat2:
    """First column from ``ai``, second column from ``aj``."""
    return Mat2(ai.a11, aj.a12, ai.a21, aj.a22)


def ddet(ai: Mat2, aj: Mat2) -> Scalar:
    """Symmetric mixed determinant ``det(mix(ai, aj)) + det(mix(aj, ai))``."""
    return det(mix(ai, aj)) + det(mix(aj, ai))


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, coefficients stored constant term first.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[Scalar, ...] = ()

    def __post_init__(self):
        cs = tuple(as_scalar(c) for c in self.coeffs)
        end = len(cs)
        while end and cs[end - 1].is_zero():
            end -= 1
        object.__setattr__(self, "coeffs", cs[:end])

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[ScalarLike]) -> "Poly":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "Poly") -> "Poly":
        return poly_add(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_mul(self, other)

    def __call__(self, x: ScalarLike) -> Scalar:
        return poly_eval(self, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c.is_zero():
                continue
            if c.imag:
                body, sign = f"({format_scalar(c)})", "+"
            else:
                sign = "-" if c.real < 0 else "+"
                body = str(abs(c.real))
            if power and body == "1":
                body = ""
            var = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            terms.append((sign, body + var))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in terms[1:]:
            out += f" {sign} {term}"
        return out


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (ZERO,) * (n - len(p.coeffs))
    b = q.coeffs + (ZERO,) * (n - len(q.coeffs))
    return Poly(tuple(x + y for x, y in zip(a, b)))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p.coeffs or not q.coeffs:
        return Poly()
    out = [ZERO] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, x in enumerate(p.coeffs):
        if x.is_zero():
            continue
        for j, y in enumerate(q.coeffs):
            out[i + j] = out[i + j] + x * y
    return Poly(tuple(out))


def poly_eval(p: Poly, x: ScalarLike) -> Scalar:
    """Horner evaluation."""
    x = as_scalar(x)
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
