"""
Point transformations of the plane and their exact action on vector fields.

Only three moves are supported: x-shears with a y-dependent offset, affine changes
of y, and the swap of the two coordinates. Each has a closed-form inverse and maps
the exponential-polynomial ring into itself (up to :class:`RingEscape`).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from math import factorial
from typing import Any

from .algebra import AlgebraSpan
from .coeffring import (
    ONE,
    ZERO,
    ExpMonomial,
    ExpPoly,
    GaussianRational,
    ScalarLike,
    format_scalar,
    to_scalar,
)
from .exceptions import InvalidInputError
from .fields import VectorField
from .utils.logging import setup_logging

logger = setup_logging(__name__)


@dataclass(frozen=True)
class ShearX:
    """``x~ = alpha*x + f(y)``, ``y~ = y``."""

    alpha: GaussianRational = ONE
    f: ExpPoly = field(default_factory=ExpPoly.zero)

    def __post_init__(self) -> None:
        if not self.alpha:
            raise InvalidInputError("ShearX needs alpha != 0.")
        if not self.f.is_y_only:
            raise InvalidInputError("ShearX offset must depend on y only.")

    def pushforward(self, v: VectorField) -> VectorField:
        p = v.p * self.alpha + self.f.diff("y") * v.q
        return VectorField(
            p.substitute_x_affine(self.alpha, self.f),
            v.q.substitute_x_affine(self.alpha, self.f),
        )

    def inverse(self) -> ShearX:
        inv = ONE / self.alpha
        return ShearX(inv, -self.f * inv)

    @property
    def is_identity(self) -> bool:
        return self.alpha == ONE and not self.f

    def to_json(self) -> dict[str, str]:
        return {"kind": "ShearX", "alpha": format_scalar(self.alpha), "f": str(self.f)}


@dataclass(frozen=True)
class AffineY:
    """``x~ = x``, ``y~ = beta*y + c``."""

    beta: GaussianRational = ONE
    c: GaussianRational = ZERO

    def __post_init__(self) -> None:
        if not self.beta:
            raise InvalidInputError("AffineY needs beta != 0.")

    def pushforward(self, v: VectorField) -> VectorField:
        return VectorField(
            v.p.substitute_y_affine(self.beta, self.c),
            (v.q * self.beta).substitute_y_affine(self.beta, self.c),
        )

    def inverse(self) -> AffineY:
        inv = ONE / self.beta
        return AffineY(inv, -self.c * inv)

    @property
    def is_identity(self) -> bool:
        return self.beta == ONE and not self.c

    def to_json(self) -> dict[str, str]:
        return {
            "kind": "AffineY",
            "beta": format_scalar(self.beta),
            "c": format_scalar(self.c),
        }


@dataclass(frozen=True)
class Swap:
    """``x~ = y``, ``y~ = x``."""

    def pushforward(self, v: VectorField) -> VectorField:
        return VectorField(v.q.swap_xy(), v.p.swap_xy())

    def inverse(self) -> Swap:
        return self

    @property
    def is_identity(self) -> bool:
        return False

    def to_json(self) -> dict[str, str]:
        return {"kind": "Swap"}


PointTransform = ShearX | AffineY | Swap


@dataclass(frozen=True)
class TransformChain:
    """Steps applied left to right."""

    steps: tuple[PointTransform, ...] = ()

    def __iter__(self) -> Iterator[PointTransform]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def pushforward(self, v: VectorField) -> VectorField:
        for step in self.steps:
            v = step.pushforward(v)
        return v

    def inverse(self) -> TransformChain:
        return TransformChain(tuple(step.inverse() for step in reversed(self.steps)))

    def then(self, other: PointTransform | TransformChain) -> TransformChain:
        extra = other.steps if isinstance(other, TransformChain) else (other,)
        return TransformChain(self.steps + tuple(extra))

    def to_json(self) -> list[dict[str, str]]:
        return [step.to_json() for step in self.steps]

    @classmethod
    def from_json(cls, data: Iterable[dict[str, Any]]) -> TransformChain:
        from .expr import parse_exppoly

        steps: list[PointTransform] = []
        for entry in data:
            if not isinstance(entry, dict) or "kind" not in entry:
                raise InvalidInputError(f"Malformed transform step: {entry!r}")
            kind = entry["kind"]
            if kind == "ShearX":
                steps.append(
                    ShearX(
                        to_scalar(entry.get("alpha", "1")),
                        parse_exppoly(entry.get("f", "0")),
                    )
                )
            elif kind == "AffineY":
                steps.append(
                    AffineY(to_scalar(entry.get("beta", "1")), to_scalar(entry.get("c", "0")))
                )
            elif kind == "Swap":
                steps.append(Swap())
            else:
                raise InvalidInputError(f"Unknown transform kind '{kind}'.")
        return cls(tuple(steps))


def shear_x(alpha: ScalarLike = 1, f: ExpPoly | None = None) -> ShearX:
    return ShearX(to_scalar(alpha), f if f is not None else ExpPoly.zero())


def affine_y(beta: ScalarLike = 1, c: ScalarLike = 0) -> AffineY:
    return AffineY(to_scalar(beta), to_scalar(c))


def as_chain(t: PointTransform | TransformChain) -> TransformChain:
    return t if isinstance(t, TransformChain) else TransformChain((t,))


def pushforward(t: PointTransform | TransformChain, v: VectorField) -> VectorField:
    return t.pushforward(v)


def pushforward_algebra(
    t: PointTransform | TransformChain, g: AlgebraSpan
) -> AlgebraSpan:
    """Push every basis element forward; basis order and dimension are preserved."""
    chain = as_chain(t)
    logger.debug(f"Pushing a {g.dimension}-dimensional span through {len(chain)} step(s)")
    return AlgebraSpan([chain.pushforward(v) for v in g.basis])


def solve_antiderivative(h: ExpPoly) -> ExpPoly:
    """``F`` with ``dF/dy = h`` and zero integration constant."""
    if not h.is_y_only:
        raise InvalidInputError("solve_antiderivative needs a function of y only.")
    pairs: list[tuple[ExpMonomial, GaussianRational]] = []
    for m, c in h.terms.items():
        b, mu = m.ydeg, m.yfreq
        if not mu:
            pairs.append((ExpMonomial(0, b + 1), c / to_scalar(b + 1)))
            continue
        # e^(mu*y) * sum_k (-1)^k * b!/(b-k)! * y^(b-k) / mu^(k+1)
        inv = ONE / mu
        power = inv
        for k in range(b + 1):
            coefficient = c * power * to_scalar((-1) ** k * (factorial(b) // factorial(b - k)))
            pairs.append((ExpMonomial(0, b - k, ZERO, mu), coefficient))
            power = power * inv
    return ExpPoly._accumulate(pairs)
