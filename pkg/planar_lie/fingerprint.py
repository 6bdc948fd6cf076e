"""
Invariant fingerprints of closed spans.

A fingerprint collects every exactly computable quantity the classifier branches on:
series dimensions, center, ranks and, when the commutator is an abelian line of
``G(y)*Dx`` fields, the spectrum of a distinguished ad-operator on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra import (
    AlgebraSpan,
    center,
    derived_series,
    is_abelian,
    lower_central_series,
    make_span,
    rank,
    verify_closure,
)
from .coeffring import ONE, ZERO, GaussianRational, format_scalar
from .exceptions import NotSolvable
from .fields import VectorField
from .linalg import independent_columns, nullspace, solve_in_span
from .spectral import ad_matrix, spectral_decompose
from .utils.logging import setup_logging

logger = setup_logging(__name__)

OPERATOR_DY = "Dy"
OPERATOR_XDX_DY = "xDx+Dy"


@dataclass(frozen=True)
class InvariantFingerprint:
    dim: int
    derived_series: tuple[int, ...]
    lower_central_series: tuple[int, ...]
    is_abelian: bool
    is_nilpotent: bool
    is_solvable: bool
    center_dim: int
    rank: int
    derived_rank: int
    derived_abelian: bool
    quotient_dim: int
    spectrum: tuple[tuple[GaussianRational, int], ...] | None = None
    operator_kind: str | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "derived_series": list(self.derived_series),
            "lower_central_series": list(self.lower_central_series),
            "is_abelian": self.is_abelian,
            "is_nilpotent": self.is_nilpotent,
            "is_solvable": self.is_solvable,
            "center_dim": self.center_dim,
            "rank": self.rank,
            "derived_rank": self.derived_rank,
            "derived_abelian": self.derived_abelian,
            "quotient_dim": self.quotient_dim,
            "spectrum": None
            if self.spectrum is None
            else [
                {"lambda": format_scalar(lam), "multiplicity": n}
                for lam, n in self.spectrum
            ],
            "operator": self.operator_kind,
        }


@dataclass(frozen=True)
class DistinguishedOperator:
    """The complement of ``g'`` reduced to one operator plus Dx-proportional extras.

    ``operator`` is ``K(y)*Dx + Dy`` in the ``Dy`` case and
    ``(x + K(y))*Dx + beta*Dy`` in the ``x*Dx + Dy`` case.
    """

    kind: str
    operator: VectorField
    beta: GaussianRational
    extras: tuple[VectorField, ...]
    c_rank: int
    secondary: VectorField | None = None

    @property
    def shift(self) -> int:
        return 1 if self.kind == OPERATOR_XDX_DY else 0


def complement(g: AlgebraSpan, h: AlgebraSpan) -> list[VectorField]:
    """Basis elements of ``g`` extending the basis of the subspace ``h``, in order."""
    extended = make_span([*h.basis, *g.basis], allow_zero=True)
    return list(extended.basis[h.dimension :])


def is_dx_line(h: AlgebraSpan) -> bool:
    return all(not v.q and v.p.is_y_only for v in h.basis)


def distinguished_operator(
    g: AlgebraSpan, gprime: AlgebraSpan
) -> DistinguishedOperator | None:
    """Pick the ``Dy`` or ``x*Dx + Dy`` representative among complement elements.

    Returns None when ``g'`` is not made of ``G(y)*Dx`` fields or some complement
    element is not ``(c*x + K(y))*Dx + b*Dy`` with constant ``b`` and ``c``.
    """
    if not is_dx_line(gprime):
        return None
    comp = complement(g, gprime)
    vectors: list[tuple[GaussianRational, GaussianRational]] = []
    for z in comp:
        split = z.p.split_x_linear()
        if split is None or not z.q.is_constant:
            return None
        vectors.append((z.q.constant_value(), split[0]))
    columns = [tuple(v) for v in vectors]
    c_rank = len(independent_columns(columns, 2))
    if c_rank == 0:
        return None

    def combine(coords) -> VectorField:
        out = VectorField.zero()
        for coefficient, z in zip(coords, comp, strict=True):
            if coefficient:
                out = out + z * coefficient
        return out

    rows = [tuple(v[r] for v in vectors) for r in range(2)]
    extras = tuple(combine(vec) for vec in nullspace(rows, len(comp)))
    if c_rank == 2:
        x_part = combine(solve_in_span_general(columns, (ONE, ZERO)))
        scaling = combine(solve_in_span_general(columns, (ZERO, ONE)))
        return DistinguishedOperator(OPERATOR_DY, x_part, ONE, extras, 2, scaling)
    pivot = independent_columns(columns, 2)[0]
    b, c = vectors[pivot]
    w = comp[pivot]
    if not b:
        return None
    if not c:
        return DistinguishedOperator(OPERATOR_DY, w * (ONE / b), ONE, extras, 1)
    return DistinguishedOperator(OPERATOR_XDX_DY, w * (ONE / c), b / c, extras, 1)


def solve_in_span_general(
    columns: list[tuple[GaussianRational, ...]], target: tuple[GaussianRational, ...]
) -> tuple[GaussianRational, ...]:
    """Coordinates of ``target`` over possibly dependent ``columns``."""
    pivots = independent_columns(columns, len(target))
    coords = solve_in_span([columns[j] for j in pivots], target)
    full = [ZERO] * len(columns)
    for j, c in zip(pivots, coords or (), strict=False):
        full[j] = c
    return tuple(full)


def fingerprint(g: AlgebraSpan) -> InvariantFingerprint:
    """Compute every structural invariant of a closed span.

    Raises:
        NotClosed: If the span is not a Lie algebra.
        NotSolvable: If the derived series stops above zero.
        IrrationalSpectrum: If the distinguished operator has a non Q(i) eigenvalue.
    """
    verify_closure(g)
    dseries = derived_series(g)
    if dseries[-1].dimension:
        raise NotSolvable(
            f"Derived series stabilises at dimension {dseries[-1].dimension}."
        )
    lcs = lower_central_series(g)
    gprime = dseries[1] if len(dseries) > 1 else AlgebraSpan.zero()
    derived_rank = rank(gprime)
    derived_abelian = is_abelian(gprime)
    g_rank = rank(g)
    nilpotent = lcs[-1].dimension == 0

    spectrum = None
    operator_kind = None
    if derived_abelian and derived_rank == 1 and g_rank == 2 and not nilpotent:
        chosen = distinguished_operator(g, gprime)
        if chosen is not None:
            data = spectral_decompose(ad_matrix(chosen.operator, gprime))
            spectrum = tuple(data.pairs())
            operator_kind = chosen.kind

    fp = InvariantFingerprint(
        dim=g.dimension,
        derived_series=tuple(h.dimension for h in dseries),
        lower_central_series=tuple(h.dimension for h in lcs),
        is_abelian=gprime.dimension == 0,
        is_nilpotent=nilpotent,
        is_solvable=True,
        center_dim=center(g).dimension,
        rank=g_rank,
        derived_rank=derived_rank,
        derived_abelian=derived_abelian,
        quotient_dim=g.dimension - gprime.dimension,
        spectrum=spectrum,
        operator_kind=operator_kind,
    )
    logger.debug(f"Fingerprint: {fp}")
    return fp
