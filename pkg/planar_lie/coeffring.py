"""
Exact exponential-polynomials in two variables over the Gaussian rationals.

An :class:`ExpPoly` is a finite sum of terms ``c * x^a * y^b * exp(l*x + m*y)`` with
``c, l, m`` in Q(i). Scalars are elements of sympy's ``QQ_I`` domain; the ring is
closed under multiplication and partial differentiation, and zero testing is
structural because distinct monomials are linearly independent functions.
"""

from __future__ import annotations

import cmath
import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from math import comb
from types import MappingProxyType
from typing import Any

from sympy import Rational
from sympy.polys.domains import QQ, QQ_I

from .exceptions import InvalidInputError, RingEscape

GaussianRational = QQ_I.dtype

ZERO: GaussianRational = QQ_I.zero
ONE: GaussianRational = QQ_I.one

ScalarLike = GaussianRational | int | str


def _rational(value: Any) -> Any:
    if isinstance(value, str):
        return QQ.from_sympy(Rational(value.strip()))
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def gq(re_part: Any = 0, im_part: Any = 0) -> GaussianRational:
    """Build a Gaussian rational from rational-like real and imaginary parts."""
    return QQ_I(_rational(re_part), _rational(im_part))


def to_scalar(value: ScalarLike) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, int):
        return gq(value)
    raise InvalidInputError(f"Cannot interpret {value!r} as a Gaussian rational.")


def scalar_key(c: GaussianRational) -> tuple[Any, Any]:
    """Total order on Q(i) used for deterministic output: by (re, im)."""
    return (c.x, c.y)


def is_real(c: GaussianRational) -> bool:
    return not c.y


def conjugate(c: GaussianRational) -> GaussianRational:
    return QQ_I(c.x, -c.y)


def _format_rational(q: Any) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_scalar(c: GaussianRational) -> str:
    """Compact JSON form: ``"3/2"``, ``"1/2*i"``, ``"3/2-1/2*i"``."""
    if not c.y:
        return _format_rational(c.x)
    imag = "i" if c.y == 1 else ("-i" if c.y == -1 else f"{_format_rational(c.y)}*i")
    if not c.x:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{_format_rational(c.x)}{sign}{imag}"


_SCALAR_RE = re.compile(
    r"^\s*(?:(?P<re>[+-]?\d+(?:/\d+)?)(?=\s*(?:[+-]|$)))?\s*"
    r"(?:(?P<isign>[+-])?\s*(?:(?P<im>\d+(?:/\d+)?)\s*\*\s*)?i)?\s*$"
)


def parse_scalar(text: str) -> GaussianRational:
    """Inverse of :func:`format_scalar`; also accepts surrounding whitespace."""
    match = _SCALAR_RE.match(text)
    if match is None or not text.strip():
        raise InvalidInputError(f"Malformed Gaussian rational '{text}'.")
    re_text = match.group("re")
    real = _rational(re_text) if re_text else QQ(0)
    imag = QQ(0)
    if text.strip().endswith("i"):
        magnitude = _rational(match.group("im")) if match.group("im") else QQ(1)
        imag = -magnitude if match.group("isign") == "-" else magnitude
    return QQ_I(real, imag)


@dataclass(frozen=True)
class ExpMonomial:
    """The function ``x^xdeg * y^ydeg * exp(xfreq*x + yfreq*y)``."""

    xdeg: int = 0
    ydeg: int = 0
    xfreq: GaussianRational = ZERO
    yfreq: GaussianRational = ZERO

    def __mul__(self, other: ExpMonomial) -> ExpMonomial:
        return ExpMonomial(
            self.xdeg + other.xdeg,
            self.ydeg + other.ydeg,
            self.xfreq + other.xfreq,
            self.yfreq + other.yfreq,
        )

    def sort_key(self) -> tuple[Any, ...]:
        return (self.xdeg, self.ydeg, scalar_key(self.xfreq), scalar_key(self.yfreq))

    @property
    def is_y_only(self) -> bool:
        return self.xdeg == 0 and not self.xfreq

    @property
    def is_one(self) -> bool:
        return self.xdeg == 0 and self.ydeg == 0 and not self.xfreq and not self.yfreq


UNIT = ExpMonomial()


class ExpPoly:
    """Immutable canonical map ``ExpMonomial -> GaussianRational`` with no zero values."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExpMonomial, GaussianRational] | None = None):
        self._terms: dict[ExpMonomial, GaussianRational] = {
            m: c for m, c in (terms or {}).items() if c
        }
        self._hash: int | None = None

    @classmethod
    def _accumulate(
        cls, pairs: Iterable[tuple[ExpMonomial, GaussianRational]]
    ) -> ExpPoly:
        acc: dict[ExpMonomial, GaussianRational] = {}
        for m, c in pairs:
            acc[m] = acc[m] + c if m in acc else c
        return cls(acc)

    # constructors

    @classmethod
    def zero(cls) -> ExpPoly:
        return cls()

    @classmethod
    def const(cls, c: ScalarLike) -> ExpPoly:
        return cls({UNIT: to_scalar(c)})

    @classmethod
    def monomial(
        cls,
        c: ScalarLike = 1,
        xdeg: int = 0,
        ydeg: int = 0,
        xfreq: ScalarLike = 0,
        yfreq: ScalarLike = 0,
    ) -> ExpPoly:
        if xdeg < 0 or ydeg < 0:
            raise InvalidInputError("Monomial degrees must be non-negative.")
        m = ExpMonomial(xdeg, ydeg, to_scalar(xfreq), to_scalar(yfreq))
        return cls({m: to_scalar(c)})

    @classmethod
    def x(cls) -> ExpPoly:
        return cls.monomial(xdeg=1)

    @classmethod
    def y(cls) -> ExpPoly:
        return cls.monomial(ydeg=1)

    @classmethod
    def exp(cls, xfreq: ScalarLike = 0, yfreq: ScalarLike = 0) -> ExpPoly:
        return cls.monomial(xfreq=xfreq, yfreq=yfreq)

    # mapping view

    @property
    def terms(self) -> Mapping[ExpMonomial, GaussianRational]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[ExpMonomial, GaussianRational]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def __iter__(self) -> Iterator[ExpMonomial]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExpPoly):
            return self._terms == other._terms
        if isinstance(other, (int, GaussianRational)):
            return self._terms == ExpPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ring operations

    def _coerce(self, other: Any) -> ExpPoly:
        if isinstance(other, ExpPoly):
            return other
        if isinstance(other, (int, GaussianRational)):
            return ExpPoly.const(other)
        return NotImplemented

    def __add__(self, other: Any) -> ExpPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExpPoly._accumulate([*self._terms.items(), *other._terms.items()])

    __radd__ = __add__

    def __neg__(self) -> ExpPoly:
        return ExpPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> ExpPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> ExpPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> ExpPoly:
        if isinstance(other, (int, GaussianRational)):
            c = to_scalar(other)
            return ExpPoly({m: v * c for m, v in self._terms.items()})
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return ExpPoly._accumulate(
            (m1 * m2, c1 * c2)
            for m1, c1 in self._terms.items()
            for m2, c2 in other._terms.items()
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ExpPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidInputError("ExpPoly powers must be non-negative integers.")
        result = ExpPoly.const(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, c: ScalarLike) -> ExpPoly:
        return self * to_scalar(c)

    # calculus

    def diff(self, var: str) -> ExpPoly:
        """Exact partial derivative with respect to ``"x"`` or ``"y"``."""
        if var not in ("x", "y"):
            raise InvalidInputError(f"Unknown variable '{var}'; expected 'x' or 'y'.")
        pairs: list[tuple[ExpMonomial, GaussianRational]] = []
        for m, c in self._terms.items():
            deg, freq = (m.xdeg, m.xfreq) if var == "x" else (m.ydeg, m.yfreq)
            if deg:
                lowered = (
                    ExpMonomial(m.xdeg - 1, m.ydeg, m.xfreq, m.yfreq)
                    if var == "x"
                    else ExpMonomial(m.xdeg, m.ydeg - 1, m.xfreq, m.yfreq)
                )
                pairs.append((lowered, c * deg))
            if freq:
                pairs.append((m, c * freq))
        return ExpPoly._accumulate(pairs)

    # structural predicates

    @property
    def is_y_only(self) -> bool:
        return all(m.is_y_only for m in self._terms)

    @property
    def is_constant(self) -> bool:
        return all(m.is_one for m in self._terms)

    def constant_value(self) -> GaussianRational:
        """Coefficient of the unit monomial (the value when the poly is constant)."""
        return self._terms.get(UNIT, ZERO)

    def max_total_degree(self) -> int:
        return max((m.xdeg + m.ydeg for m in self._terms), default=0)

    def split_x_linear(self) -> tuple[GaussianRational, ExpPoly] | None:
        """Write the poly as ``c*x + K(y)``; None when it has another x-dependence."""
        c = ZERO
        rest: dict[ExpMonomial, GaussianRational] = {}
        for m, v in self._terms.items():
            if m.is_y_only:
                rest[m] = v
            elif m.xdeg == 1 and m.ydeg == 0 and not m.xfreq and not m.yfreq:
                c = v
            else:
                return None
        return c, ExpPoly(rest)

    # substitutions

    def substitute_x_affine(self, alpha: ScalarLike, f: ExpPoly) -> ExpPoly:
        """Replace x by ``(x - f(y)) / alpha``."""
        alpha = to_scalar(alpha)
        if not alpha:
            raise InvalidInputError("substitute_x_affine needs alpha != 0.")
        if not f.is_y_only:
            raise InvalidInputError("substitute_x_affine needs f to depend on y only.")
        if any(m.xfreq for m in self._terms):
            raise RingEscape(
                "Substituting into an exponential in x leaves the ring."
            )
        inv = ONE / alpha
        shifted = (ExpPoly.x() - f) * inv
        powers: dict[int, ExpPoly] = {}
        result = ExpPoly.zero()
        for m, c in self._terms.items():
            if m.xdeg not in powers:
                powers[m.xdeg] = shifted**m.xdeg
            rest = ExpPoly({ExpMonomial(0, m.ydeg, ZERO, m.yfreq): c})
            result = result + powers[m.xdeg] * rest
        return result

    def substitute_y_affine(self, beta: ScalarLike, c: ScalarLike = 0) -> ExpPoly:
        """Replace y by ``(y - c) / beta``."""
        beta, c = to_scalar(beta), to_scalar(c)
        if not beta:
            raise InvalidInputError("substitute_y_affine needs beta != 0.")
        if c and any(m.yfreq for m in self._terms):
            raise RingEscape(
                "Translating y inside an exponential produces a transcendental constant."
            )
        inv = ONE / beta
        result = ExpPoly.zero()
        for m, v in self._terms.items():
            base = ExpPoly(
                {ExpMonomial(m.xdeg, 0, m.xfreq, m.yfreq * inv): v}
            )
            expansion = ExpPoly._accumulate(
                (
                    ExpMonomial(0, k, ZERO, ZERO),
                    _int_power(inv, m.ydeg)
                    * comb(m.ydeg, k)
                    * _int_power(-c, m.ydeg - k),
                )
                for k in range(m.ydeg + 1)
            )
            result = result + base * expansion
        return result

    def swap_xy(self) -> ExpPoly:
        return ExpPoly(
            {
                ExpMonomial(m.ydeg, m.xdeg, m.yfreq, m.xfreq): c
                for m, c in self._terms.items()
            }
        )

    # evaluation

    def evaluate(self, x0: ScalarLike, y0: ScalarLike) -> complex:
        """Floating-point value at ``(x0, y0)``; approximate, for test oracles only."""
        xv = _to_complex(to_scalar(x0))
        yv = _to_complex(to_scalar(y0))
        total = 0j
        for m, c in self._terms.items():
            total += (
                _to_complex(c)
                * xv**m.xdeg
                * yv**m.ydeg
                * cmath.exp(_to_complex(m.xfreq) * xv + _to_complex(m.yfreq) * yv)
            )
        return total

    # rendering

    def __str__(self) -> str:
        return format_exppoly(self)

    def __repr__(self) -> str:
        return f"ExpPoly('{self}')"


def _int_power(c: GaussianRational, n: int) -> GaussianRational:
    result = ONE
    for _ in range(n):
        result = result * c
    return result


def _to_complex(c: GaussianRational) -> complex:
    return complex(float(c.x), float(c.y))


def _signed_scalar(c: GaussianRational) -> tuple[bool, str, bool]:
    """Split a coefficient into (negative, body, is_unit) for printing."""
    if not c.y:
        negative = c.x < 0
        magnitude = -c.x if negative else c.x
        return negative, _format_rational(magnitude), magnitude == 1
    if not c.x:
        negative = c.y < 0
        magnitude = -c.y if negative else c.y
        body = "i" if magnitude == 1 else f"{_format_rational(magnitude)}*i"
        return negative, body, False
    imag = -c.y if c.y < 0 else c.y
    imag_text = "i" if imag == 1 else f"{_format_rational(imag)}*i"
    op = "-" if c.y < 0 else "+"
    return False, f"({_format_rational(c.x)} {op} {imag_text})", False


def _linear_form(xfreq: GaussianRational, yfreq: GaussianRational) -> ExpPoly:
    return ExpPoly({ExpMonomial(1, 0): xfreq, ExpMonomial(0, 1): yfreq})


def format_term(m: ExpMonomial, c: GaussianRational) -> tuple[bool, str]:
    factors: list[str] = []
    if m.xdeg:
        factors.append("x" if m.xdeg == 1 else f"x^{m.xdeg}")
    if m.ydeg:
        factors.append("y" if m.ydeg == 1 else f"y^{m.ydeg}")
    if m.xfreq or m.yfreq:
        factors.append(f"exp({format_exppoly(_linear_form(m.xfreq, m.yfreq))})")
    negative, scalar, unit = _signed_scalar(c)
    if not factors:
        return negative, scalar
    if unit:
        return negative, "*".join(factors)
    return negative, "*".join([scalar, *factors])


def format_exppoly(p: ExpPoly) -> str:
    """Canonical text, e.g. ``(3/2 + 1/2*i)*x^2*y*exp(2*y)``."""
    if not p:
        return "0"
    pieces: list[str] = []
    for index, (m, c) in enumerate(p.sorted_terms()):
        negative, body = format_term(m, c)
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
