from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .coeffring import ExpPoly, GaussianRational, ScalarLike, format_term, to_scalar
from .exceptions import NotTriangular


@dataclass(frozen=True)
class VectorField:
    """The planar vector field ``p*Dx + q*Dy`` with exponential-polynomial coefficients."""

    p: ExpPoly = field(default_factory=ExpPoly.zero)
    q: ExpPoly = field(default_factory=ExpPoly.zero)

    @classmethod
    def dx(cls, coefficient: ExpPoly | None = None) -> VectorField:
        return cls(coefficient if coefficient is not None else ExpPoly.const(1))

    @classmethod
    def dy(cls, coefficient: ExpPoly | None = None) -> VectorField:
        return cls(
            ExpPoly.zero(), coefficient if coefficient is not None else ExpPoly.const(1)
        )

    @classmethod
    def zero(cls) -> VectorField:
        return cls()

    def __bool__(self) -> bool:
        return bool(self.p) or bool(self.q)

    def __add__(self, other: VectorField) -> VectorField:
        if not isinstance(other, VectorField):
            return NotImplemented
        return VectorField(self.p + other.p, self.q + other.q)

    def __sub__(self, other: VectorField) -> VectorField:
        if not isinstance(other, VectorField):
            return NotImplemented
        return VectorField(self.p - other.p, self.q - other.q)

    def __neg__(self) -> VectorField:
        return VectorField(-self.p, -self.q)

    def __mul__(self, other: Any) -> VectorField:
        if isinstance(other, (int, GaussianRational, ExpPoly)):
            return VectorField(self.p * other, self.q * other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c: ScalarLike) -> VectorField:
        return self * to_scalar(c)

    def apply(self, f: ExpPoly) -> ExpPoly:
        """Directional derivative ``p*f_x + q*f_y``."""
        return self.p * f.diff("x") + self.q * f.diff("y")

    def __str__(self) -> str:
        return format_field(self)


def bracket(v: VectorField, w: VectorField) -> VectorField:
    """Lie bracket ``[v, w] = v(w) - w(v)`` computed componentwise."""
    return VectorField(v.apply(w.p) - w.apply(v.p), v.apply(w.q) - w.apply(v.q))


def is_triangular(v: VectorField) -> bool:
    return v.q.is_y_only


def project_y(v: VectorField) -> ExpPoly:
    """The projection onto ``eta(y)*d/dy``; defined on triangular fields only."""
    if not is_triangular(v):
        raise NotTriangular(f"Field {v} has an x-dependent Dy coefficient.")
    return v.q


def line_bracket(eta1: ExpPoly, eta2: ExpPoly) -> ExpPoly:
    """Bracket of the one-dimensional fields ``eta1*d/dy`` and ``eta2*d/dy``."""
    return eta1 * eta2.diff("y") - eta2 * eta1.diff("y")


def _format_component(p: ExpPoly, basis: str) -> tuple[bool, str]:
    if len(p) == 1:
        ((m, c),) = p.sorted_terms()
        negative, body = format_term(m, c)
        if body == "1":
            return negative, basis
        return negative, f"{body}*{basis}"
    return False, f"({p})*{basis}"


def format_field(v: VectorField) -> str:
    """Render as ``P*Dx + Q*Dy``; the zero field prints as ``0*Dx``."""
    pieces: list[str] = []
    for component, basis in ((v.p, "Dx"), (v.q, "Dy")):
        if not component:
            continue
        negative, body = _format_component(component, basis)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0*Dx"
