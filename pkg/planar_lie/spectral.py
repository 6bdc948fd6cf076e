"""Exact spectral analysis of ad-operators acting on an invariant span."""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import Poly, Symbol, factor_list
from sympy.polys.domains import QQ_I

from .algebra import AlgebraSpan
from .coeffring import GaussianRational, scalar_key
from .exceptions import FormMismatch, IrrationalSpectrum, NotInvariant
from .fields import VectorField, bracket
from .linalg import Rows, Vector, charpoly, matpow, nullspace, shifted
from .utils.logging import setup_logging

logger = setup_logging(__name__)

_t = Symbol("t")


@dataclass(frozen=True)
class AdMatrix:
    """Matrix of ``ad_X`` on ``target``; column ``j`` holds the coordinates of ``[X, e_j]``."""

    operator: VectorField
    target: AlgebraSpan
    m: tuple[Vector, ...]

    @property
    def size(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class SpectralBlock:
    eigenvalue: GaussianRational
    multiplicity: int
    geometric_multiplicity: int
    basis: tuple[Vector, ...]


@dataclass(frozen=True)
class SpectralData:
    blocks: tuple[SpectralBlock, ...]
    operator: VectorField | None = field(default=None, compare=False)

    def pairs(self) -> list[tuple[GaussianRational, int]]:
        return [(b.eigenvalue, b.multiplicity) for b in self.blocks]

    @property
    def dimension(self) -> int:
        return sum(b.multiplicity for b in self.blocks)


def ad_matrix(x: VectorField, target: AlgebraSpan) -> AdMatrix:
    n = target.dimension
    columns: list[Vector] = []
    for j, e in enumerate(target.basis):
        w = bracket(x, e)
        coords = target.member(w)
        if coords is None:
            raise NotInvariant(j, w)
        columns.append(coords)
    rows = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
    return AdMatrix(operator=x, target=target, m=rows)


def eigenvalues(m: Rows) -> list[tuple[GaussianRational, int]]:
    """Roots of the characteristic polynomial with algebraic multiplicities.

    Raises:
        IrrationalSpectrum: If a factor over Q(i) has degree above one.
    """
    if not m:
        return []
    coeffs = charpoly(m)
    expr = Poly.from_list([QQ_I.to_sympy(c) for c in coeffs], _t).as_expr()
    _, factors = factor_list(expr, _t, gaussian=True)
    roots: dict[GaussianRational, int] = {}
    for factor, mult in factors:
        poly = Poly(factor, _t)
        if poly.degree() != 1:
            raise IrrationalSpectrum(str(factor))
        lead, const = poly.all_coeffs()
        root = QQ_I.from_sympy(-const / lead)
        roots[root] = roots.get(root, 0) + mult
    return sorted(roots.items(), key=lambda item: scalar_key(item[0]))


def spectral_decompose(m: AdMatrix | Rows) -> SpectralData:
    """Generalized eigenspaces ``ker (m - lambda)^n`` for every eigenvalue."""
    operator = m.operator if isinstance(m, AdMatrix) else None
    rows = m.m if isinstance(m, AdMatrix) else tuple(tuple(r) for r in m)
    size = len(rows)
    blocks: list[SpectralBlock] = []
    for lam, mult in eigenvalues(rows):
        reduced = shifted(rows, lam)
        basis = nullspace(matpow(reduced, mult), size)
        geometric = len(nullspace(reduced, size))
        blocks.append(SpectralBlock(lam, mult, geometric, tuple(basis)))
    logger.debug(
        "Spectrum: "
        + ", ".join(f"{b.eigenvalue}^{b.multiplicity}" for b in blocks)
    )
    return SpectralData(tuple(blocks), operator)


def operator_form(x: VectorField) -> tuple[GaussianRational, GaussianRational] | None:
    """``(b, c)`` when ``x = (c*x + H(y))*Dx + b*Dy`` with constants ``b != 0`` and ``c``."""
    split = x.p.split_x_linear()
    if split is None or not x.q.is_constant or not x.q:
        return None
    return x.q.constant_value(), split[0]


def exponent(
    lam: GaussianRational, b: GaussianRational, c: GaussianRational
) -> GaussianRational:
    return (lam + c) / b


def eigenfunction_form(
    d: SpectralData, target: AlgebraSpan, operator: VectorField | None = None
) -> list[tuple[GaussianRational, int]]:
    """Check that each block is spanned by ``e^(mu*y)*P(y)*Dx`` with ``deg P < n``.

    For the operator ``(c*x + H)*Dx + b*Dy`` the exponent is ``mu = (lambda + c)/b``;
    ``Dy`` gives ``mu = lambda`` and ``x*Dx + Dy`` gives ``mu = lambda + 1``.
    """
    operator = operator if operator is not None else d.operator
    if operator is None:
        raise FormMismatch("Spectral data carries no operator.")
    form = operator_form(operator)
    if form is None:
        raise FormMismatch(f"Operator {operator} is not (c*x + H(y))*Dx + b*Dy.")
    b, c = form
    result: list[tuple[GaussianRational, int]] = []
    for block in d.blocks:
        mu = exponent(block.eigenvalue, b, c)
        for coords in block.basis:
            v = target.combination(coords)
            if v.q or not v.p.is_y_only:
                raise FormMismatch(f"{v} is not of the form G(y)*Dx.")
            for m in v.p:
                if m.yfreq != mu or m.ydeg >= block.multiplicity:
                    raise FormMismatch(
                        f"{v} is not e^({mu}*y)*P(y)*Dx with deg P < {block.multiplicity}."
                    )
        result.append((block.eigenvalue, block.multiplicity))
    return result
