"""
Generators for the canonical families of solvable planar algebras.

Every family is a frozen dataclass whose fields are its exact parameters. A family
knows how to validate itself, emit its canonical basis, predict its fingerprint and
normalise its parameters (``canonical()``) so that two equivalent parameter sets
compare equal.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, ClassVar

from .algebra import AlgebraSpan
from .coeffring import (
    ONE,
    UNIT,
    ZERO,
    ExpPoly,
    GaussianRational,
    format_scalar,
    parse_scalar,
    scalar_key,
)
from .exceptions import InvalidParameters, PlanarLieError
from .fields import VectorField
from .fingerprint import OPERATOR_DY, OPERATOR_XDX_DY, InvariantFingerprint
from .linalg import rref
from .utils.constants import MAX_EXPONENT
from .utils.logging import setup_logging

logger = setup_logging(__name__)

I = parse_scalar("i")

Spectrum = tuple[tuple[GaussianRational, int], ...]


def _dx(p: ExpPoly) -> VectorField:
    return VectorField(p, ExpPoly.zero())


def _y_power_dx(j: int, yfreq: GaussianRational = ZERO) -> VectorField:
    return _dx(ExpPoly.monomial(1, ydeg=j, yfreq=yfreq))


DX = _dx(ExpPoly.const(1))
DY = VectorField.dy()
X_DX = _dx(ExpPoly.x())
Y_DY = VectorField(ExpPoly.zero(), ExpPoly.y())
Y_DX = _dx(ExpPoly.y())
X_DY = VectorField(ExpPoly.zero(), ExpPoly.x())


def _modulus_key(c: GaussianRational) -> tuple[Any, ...]:
    return (c.x * c.x + c.y * c.y, c.x, c.y)


def _abelian_fp(dim: int, rank: int) -> InvariantFingerprint:
    return InvariantFingerprint(
        dim=dim,
        derived_series=(dim, 0),
        lower_central_series=(dim, 0),
        is_abelian=True,
        is_nilpotent=True,
        is_solvable=True,
        center_dim=dim,
        rank=rank,
        derived_rank=0,
        derived_abelian=True,
        quotient_dim=dim,
    )


class CanonicalFamily(ABC):
    """Base class of every family in the catalog."""

    tag: ClassVar[str]
    cli_name: ClassVar[str]

    @abstractmethod
    def validate(self) -> None:
        """Raise :class:`InvalidParameters` when a side condition fails."""

    @abstractmethod
    def basis(self) -> list[VectorField]: ...

    @abstractmethod
    def expected_invariants(self) -> InvariantFingerprint: ...

    @abstractmethod
    def params_json(self) -> dict[str, Any]: ...

    def canonical(self) -> CanonicalFamily:
        return self

    def generate(self) -> AlgebraSpan:
        self.validate()
        return AlgebraSpan(self.basis())

    def to_json(self) -> dict[str, Any]:
        return {"tag": self.tag, "params": self.params_json()}

    def invalid(self, message: str) -> InvalidParameters:
        return InvalidParameters(self.tag, f"{self.tag}: {message}")

    def check_degree(self, name: str, degree: int) -> None:
        """Keep emitted fields within the exponents an algebra file may carry."""
        if degree > MAX_EXPONENT:
            raise self.invalid(
                f"{name} needs y^{degree}, algebra files allow at most y^{MAX_EXPONENT}."
            )


@dataclass(frozen=True)
class AbelianRank2(CanonicalFamily):
    tag: ClassVar[str] = "AbelianRank2"
    cli_name: ClassVar[str] = "abelian-rank2"

    def validate(self) -> None:
        return None

    def basis(self) -> list[VectorField]:
        return [DX, DY]

    def expected_invariants(self) -> InvariantFingerprint:
        return _abelian_fp(2, 2)

    def params_json(self) -> dict[str, Any]:
        return {}


@dataclass(frozen=True)
class AbelianRank1(CanonicalFamily):
    """``<Dx, y*Dx, ..., y^(dim-1)*Dx>``."""

    dim: int = 1
    tag: ClassVar[str] = "AbelianRank1"
    cli_name: ClassVar[str] = "abelian-rank1"

    def validate(self) -> None:
        if self.dim < 1:
            raise self.invalid(f"dim must be >= 1, got {self.dim}.")
        self.check_degree("dim", self.dim - 1)

    def basis(self) -> list[VectorField]:
        return [_y_power_dx(j) for j in range(self.dim)]

    def expected_invariants(self) -> InvariantFingerprint:
        self.validate()
        return _abelian_fp(self.dim, 1)

    def params_json(self) -> dict[str, Any]:
        return {"dim": self.dim}


@dataclass(frozen=True)
class NilpotentNonAbelian(CanonicalFamily):
    """``<Dy> + <Dx, y*Dx, ..., y^N*Dx>``."""

    N: int = 1
    tag: ClassVar[str] = "NilpotentNonAbelian"
    cli_name: ClassVar[str] = "nilpotent"

    def validate(self) -> None:
        if self.N < 1:
            raise self.invalid(f"N must be >= 1, got {self.N}.")
        self.check_degree("N", self.N)

    def basis(self) -> list[VectorField]:
        return [DY, *(_y_power_dx(j) for j in range(self.N + 1))]

    def expected_invariants(self) -> InvariantFingerprint:
        self.validate()
        n = self.N
        return InvariantFingerprint(
            dim=n + 2,
            derived_series=(n + 2, n, 0),
            lower_central_series=(n + 2, *range(n, -1, -1)),
            is_abelian=False,
            is_nilpotent=True,
            is_solvable=True,
            center_dim=1,
            rank=2,
            derived_rank=1,
            derived_abelian=True,
            quotient_dim=2,
        )

    def params_json(self) -> dict[str, Any]:
        return {"N": self.N}


def _nonabelian_ideal(k: int) -> list[VectorField]:
    return [DX, DY, *(_y_power_dx(j) for j in range(1, k + 1))]


def _nonabelian_fp(k: int, quotient: int) -> InvariantFingerprint:
    dim = k + 2 + quotient
    return InvariantFingerprint(
        dim=dim,
        derived_series=(dim, k + 2, k, 0),
        lower_central_series=(dim, k + 2),
        is_abelian=False,
        is_nilpotent=False,
        is_solvable=True,
        center_dim=0,
        rank=2,
        derived_rank=2,
        derived_abelian=False,
        quotient_dim=quotient,
    )


@dataclass(frozen=True)
class NonAbelianDerivedFull(CanonicalFamily):
    """``<x*Dx, y*Dy> + <Dx, Dy, y*Dx, ..., y^k*Dx>``."""

    k: int = 1
    tag: ClassVar[str] = "NonAbelianDerivedFull"
    cli_name: ClassVar[str] = "nonabelian-full"

    def validate(self) -> None:
        if self.k < 1:
            raise self.invalid(f"k must be >= 1, got {self.k}.")
        self.check_degree("k", self.k)

    def basis(self) -> list[VectorField]:
        return [X_DX, Y_DY, *_nonabelian_ideal(self.k)]

    def expected_invariants(self) -> InvariantFingerprint:
        self.validate()
        return _nonabelian_fp(self.k, 2)

    def params_json(self) -> dict[str, Any]:
        return {"k": self.k}


@dataclass(frozen=True)
class NonAbelianDerivedLine(CanonicalFamily):
    """``<a*x*Dx + y*Dy> + <Dx, Dy, y*Dx, ..., y^k*Dx>`` with ``a`` not in ``{0, k}``."""

    k: int = 1
    a: GaussianRational = -ONE
    tag: ClassVar[str] = "NonAbelianDerivedLine"
    cli_name: ClassVar[str] = "nonabelian-line"

    def validate(self) -> None:
        if self.k < 1:
            raise self.invalid(f"k must be >= 1, got {self.k}.")
        self.check_degree("k", self.k)
        if not self.a or self.a == parse_scalar(str(self.k)):
            raise self.invalid(f"a must differ from 0 and k={self.k}.")

    def basis(self) -> list[VectorField]:
        return [X_DX * self.a + Y_DY, *_nonabelian_ideal(self.k)]

    def expected_invariants(self) -> InvariantFingerprint:
        self.validate()
        return _nonabelian_fp(self.k, 1)

    def params_json(self) -> dict[str, Any]:
        return {"k": self.k, "a": format_scalar(self.a)}


@dataclass(frozen=True)
class Rank2Abelian(CanonicalFamily):
    """The four extensions of ``<Dx, Dy>`` by linear fields.

    Subtypes 3 and 4 carry ``lam``; over C, subtypes 2 and 4 are conjugate to 1 and 3
    and are told apart by the real structure of the coordinates.
    """

    subtype: int = 1
    lam: GaussianRational | None = None
    tag: ClassVar[str] = "Rank2Abelian"
    cli_name: ClassVar[str] = "rank2-abelian"

    def validate(self) -> None:
        if self.subtype not in (1, 2, 3, 4):
            raise self.invalid(f"subtype must be 1-4, got {self.subtype}.")
        if self.subtype in (1, 2):
            if self.lam is not None:
                raise self.invalid(f"subtype {self.subtype} takes no lambda.")
            return
        if self.lam is None:
            raise self.invalid(f"subtype {self.subtype} needs lambda.")
        if self.subtype == 3 and not self.lam:
            raise self.invalid("subtype 3 needs lambda != 0.")
        if self.subtype == 4 and self.lam in (I, -I):
            raise self.invalid("subtype 4 needs lambda != +-i.")

    def basis(self) -> list[VectorField]:
        rotation = Y_DX - X_DY
        euler = X_DX + Y_DY
        linear = {
            1: [X_DX, Y_DY],
            2: [euler, rotation],
            3: [X_DX + Y_DY * (self.lam or ONE)],
            4: [euler * (self.lam or ZERO) + rotation],
        }[self.subtype]
        return [*linear, DX, DY]

    def canonical(self) -> Rank2Abelian:
        if self.lam is None:
            return self
        if self.subtype == 3 and self.lam:
            lam = min(self.lam, ONE / self.lam, key=_modulus_key)
            return Rank2Abelian(3, lam)
        if self.subtype == 4:
            return Rank2Abelian(4, max(self.lam, -self.lam, key=scalar_key))
        return self

    def expected_invariants(self) -> InvariantFingerprint:
        self.validate()
        quotient = 2 if self.subtype in (1, 2) else 1
        dim = quotient + 2
        return InvariantFingerprint(
            dim=dim,
            derived_series=(dim, 2, 0),
            lower_central_series=(dim, 2),
            is_abelian=False,
            is_nilpotent=False,
            is_solvable=True,
            center_dim=0,
            rank=2,
            derived_rank=2,
            derived_abelian=True,
            quotient_dim=quotient,
        )

    def params_json(self) -> dict[str, Any]:
        return {
            "subtype": self.subtype,
            "lambda": None if self.lam is None else format_scalar(self.lam),
        }


def reduced_spectrum(functions: Sequence[ExpPoly]) -> tuple[ExpPoly, ...]:
    """Reduced echelon basis of ``span(functions)`` with the constant column first."""
    keys = {m for f in functions for m in f}
    keys.discard(UNIT)
    order = [UNIT, *sorted(keys, key=lambda m: m.sort_key())]
    rows = [tuple(f.terms.get(m, ZERO) for m in order) for f in functions]
    reduced, pivots = rref(rows, len(order))
    return tuple(
        ExpPoly({m: c for m, c in zip(order, reduced[r], strict=True)})
        for r in range(len(pivots))
    )


@dataclass(frozen=True)
class Rank1Solvable(CanonicalFamily):
    """``<x*Dx> + <phi_1*Dx, ..., phi_m*Dx>`` with ``phi_1 = 1``."""

    spectrum: tuple[ExpPoly, ...] = field(default_factory=lambda: (ExpPoly.const(1),))
    tag: ClassVar[str] = "Rank1Solvable"
    cli_name: ClassVar[str] = "rank1"

    def validate(self) -> None:
        if not self.spectrum or self.spectrum[0] != ExpPoly.const(1):
            raise self.invalid("the first spectrum function must be 1.")
        if any(not phi.is_y_only for phi in self.spectrum):
            raise self.invalid("spectrum functions must depend on y only.")
        if len(reduced_spectrum(self.spectrum)) != len(self.spectrum):
            raise self.invalid("spectrum functions must be linearly independent.")
        self.check_degree("spectrum", max(m.ydeg for phi in self.spectrum for m in phi))

    def basis(self) -> list[VectorField]:
        return [X_DX, *(_dx(phi) for phi in self.spectrum)]

    def canonical(self) -> Rank1Solvable:
        self.validate()
        return Rank1Solvable(reduced_spectrum(self.spectrum))

    def expected_invariants(self) -> InvariantFingerprint:
        self.validate()
        m = len(self.spectrum)
        return InvariantFingerprint(
            dim=m + 1,
            derived_series=(m + 1, m, 0),
            lower_central_series=(m + 1, m),
            is_abelian=False,
            is_nilpotent=False,
            is_solvable=True,
            center_dim=0,
            rank=1,
            derived_rank=1,
            derived_abelian=True,
            quotient_dim=1,
        )

    def params_json(self) -> dict[str, Any]:
        return {"spectrum": [str(phi) for phi in self.spectrum]}


_SHIFTED_VARIANTS = (4, 5)
_EXTRA_VARIANTS = (2, 3, 5, 6)


@dataclass(frozen=True)
class SpectralType(CanonicalFamily):
    """``g = h + (one or two extra fields)`` with ``h`` the sum of ``e^(lam*y)*P(y)*Dx``.

    ``S`` lists the exponents ``lam`` of ``h`` with the bound ``n`` on ``deg P + 1``.
    ``N`` is the multiplicity read off ``S`` for variants 3, 5 and 6.
    """

    variant: int = 1
    S: Spectrum = ()
    N: int | None = None
    tag: ClassVar[str] = "SpectralType"
    cli_name: ClassVar[str] = "spectral"

    def multiplicity(self, lam: GaussianRational) -> int:
        return sum(n for mu, n in self.S if mu == lam)

    @property
    def shift(self) -> int:
        return 1 if self.variant in _SHIFTED_VARIANTS else 0

    @property
    def central_exponent(self) -> GaussianRational:
        return ONE if self.variant in (4, 5, 6) else ZERO

    def validate(self) -> None:
        if self.variant not in range(1, 7):
            raise self.invalid(f"variant must be 1-6, got {self.variant}.")
        if not self.S:
            raise self.invalid("S must be non-empty.")
        exponents = [lam for lam, _ in self.S]
        if len(set(exponents)) != len(exponents):
            raise self.invalid("exponents in S must be distinct.")
        if any(n < 1 for _, n in self.S):
            raise self.invalid("multiplicities must be >= 1.")
        if self.variant == 1 and self.multiplicity(ZERO):
            raise self.invalid("variant 1 needs 0 not in S.")
        if self.variant == 4 and self.multiplicity(ONE):
            raise self.invalid("variant 4 needs 1 not in S.")
        self.check_degree("S", max(n for _, n in self.S) - 1)
        if self.variant in (1, 2, 4):
            if self.N is not None:
                raise self.invalid(f"variant {self.variant} takes no N.")
            return
        expected = self.multiplicity(self.central_exponent)
        if self.N is not None and self.N != expected:
            raise self.invalid(
                f"N must equal the multiplicity {expected} of "
                f"{format_scalar(self.central_exponent)} in S, got {self.N}."
            )
        if self.variant == 6 and expected < 1:
            raise self.invalid("variant 6 needs N > 0.")
        self.check_degree("N", self.resolved_n)

    @property
    def resolved_n(self) -> int:
        return self.N if self.N is not None else self.multiplicity(self.central_exponent)

    def h_basis(self) -> list[VectorField]:
        return [_y_power_dx(j, lam) for lam, n in self.S for j in range(n)]

    def extra_basis(self) -> list[VectorField]:
        n = self.resolved_n
        euler_flow = X_DX + DY
        top = _y_power_dx(n, ONE)
        return {
            1: [DY],
            2: [DY, X_DX],
            3: [DY, _y_power_dx(n)],
            4: [euler_flow],
            5: [euler_flow, top],
            6: [euler_flow, X_DX + top],
        }[self.variant]

    def basis(self) -> list[VectorField]:
        return [*self.h_basis(), *self.extra_basis()]

    def canonical(self) -> SpectralType:
        ordered = tuple(sorted(self.S, key=lambda item: scalar_key(item[0])))
        n = self.resolved_n if self.variant in (3, 5, 6) else None
        return SpectralType(self.variant, ordered, n)

    def _center_dim(self) -> int:
        if self.variant in (3, 5):
            return 1
        # <exp(lam*y)*Dx, Dy, x*Dx> has the central element Dy + lam*x*Dx
        if self.variant in (2, 6) and len(self.S) == 1 and self.S[0][1] == 1:
            return 1
        return 0

    def expected_invariants(self) -> InvariantFingerprint:
        self.validate()
        h = sum(n for _, n in self.S)
        quotient = 2 if self.variant in _EXTRA_VARIANTS else 1
        dim = h + quotient
        z = self.resolved_n if self.variant in (3, 5) else 0
        nilpotent = h - z == 0
        spectrum = None
        operator = None
        if not nilpotent:
            spectrum = tuple(
                sorted(
                    ((lam - self.shift, n) for lam, n in self.S),
                    key=lambda item: scalar_key(item[0]),
                )
            )
            operator = OPERATOR_XDX_DY if self.variant in _SHIFTED_VARIANTS else OPERATOR_DY
        return InvariantFingerprint(
            dim=dim,
            derived_series=(dim, h, 0),
            lower_central_series=(dim, *range(h, h - z - 1, -1)),
            is_abelian=False,
            is_nilpotent=nilpotent,
            is_solvable=True,
            center_dim=self._center_dim(),
            rank=2,
            derived_rank=1,
            derived_abelian=True,
            quotient_dim=quotient,
            spectrum=spectrum,
            operator_kind=operator,
        )

    def params_json(self) -> dict[str, Any]:
        return {
            "variant": self.variant,
            "S": [
                {"lambda": format_scalar(lam), "multiplicity": n} for lam, n in self.S
            ],
            "N": self.N,
        }


FAMILIES: tuple[type[CanonicalFamily], ...] = (
    AbelianRank2,
    AbelianRank1,
    NilpotentNonAbelian,
    NonAbelianDerivedFull,
    NonAbelianDerivedLine,
    Rank2Abelian,
    Rank1Solvable,
    SpectralType,
)
BY_TAG = {cls.tag: cls for cls in FAMILIES}
BY_CLI_NAME = {cls.cli_name: cls for cls in FAMILIES}


def generate(fam: CanonicalFamily) -> AlgebraSpan:
    span = fam.generate()
    logger.info(f"Generated {fam.tag} of dimension {span.dimension}")
    return span


def expected_invariants(fam: CanonicalFamily) -> InvariantFingerprint:
    return fam.expected_invariants()


def _int_param(family: str, params: Mapping[str, Any], name: str) -> int:
    try:
        return int(params[name])
    except KeyError:
        raise InvalidParameters(family, f"{family}: missing parameter '{name}'.") from None
    except (TypeError, ValueError):
        raise InvalidParameters(
            family, f"{family}: parameter '{name}' must be an integer."
        ) from None


def _scalar_param(family: str, value: Any) -> GaussianRational:
    try:
        return parse_scalar(str(value))
    except PlanarLieError:
        raise InvalidParameters(family, f"{family}: malformed scalar '{value}'.") from None


def _parse_s(family: str, value: Any) -> Spectrum:
    """``S`` either as ``"lam:n,lam:n"`` or as a JSON list of ``{lambda, multiplicity}``."""
    entries: list[tuple[GaussianRational, int]] = []
    if isinstance(value, str):
        for chunk in filter(None, (c.strip() for c in value.split(","))):
            lam, _, n = chunk.partition(":")
            entries.append((_scalar_param(family, lam), _int_param(family, {"n": n or 1}, "n")))
    else:
        for item in value:
            entries.append(
                (
                    _scalar_param(family, item["lambda"]),
                    _int_param(family, item, "multiplicity"),
                )
            )
    return tuple(entries)


def from_params(name: str, params: Mapping[str, Any]) -> CanonicalFamily:
    """Build a family from a tag or CLI name and string/JSON parameters."""
    from .expr import parse_exppoly

    cls = BY_TAG.get(name) or BY_CLI_NAME.get(name)
    if cls is None:
        raise InvalidParameters(name, f"Unknown family '{name}'.")
    tag = cls.tag
    fam: CanonicalFamily
    if cls is AbelianRank2:
        fam = AbelianRank2()
    elif cls is AbelianRank1:
        fam = AbelianRank1(_int_param(tag, params, "dim"))
    elif cls is NilpotentNonAbelian:
        fam = NilpotentNonAbelian(_int_param(tag, params, "N"))
    elif cls is NonAbelianDerivedFull:
        fam = NonAbelianDerivedFull(_int_param(tag, params, "k"))
    elif cls is NonAbelianDerivedLine:
        fam = NonAbelianDerivedLine(
            _int_param(tag, params, "k"), _scalar_param(tag, params.get("a", ""))
        )
    elif cls is Rank2Abelian:
        raw = params.get("lambda")
        fam = Rank2Abelian(
            _int_param(tag, params, "subtype"),
            None if raw is None else _scalar_param(tag, raw),
        )
    elif cls is Rank1Solvable:
        raw = params.get("spectrum", "1")
        texts = raw.split(";") if isinstance(raw, str) else list(raw)
        fam = Rank1Solvable(tuple(parse_exppoly(t) for t in texts))
    else:
        n = params.get("N")
        fam = SpectralType(
            _int_param(tag, params, "variant"),
            _parse_s(tag, params.get("S", "")),
            None if n is None else _int_param(tag, params, "N"),
        )
    fam.validate()
    return fam


def from_json(data: Mapping[str, Any]) -> CanonicalFamily:
    return from_params(data["tag"], data.get("params", {}))
