"""
The classification decision tree.

``classify`` reads only the fingerprint and the spectra of ad-operators, so the tag
it assigns does not depend on the basis order of the input. ``canonicalize_triangular``
additionally replays the constructive normalisations (y-rescaling followed by an
x-shear) and returns them as a verified :class:`TransformChain`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra import AlgebraSpan, center, derived, make_span, rank, same_span
from .catalog import (
    AbelianRank1,
    AbelianRank2,
    CanonicalFamily,
    NilpotentNonAbelian,
    NonAbelianDerivedFull,
    NonAbelianDerivedLine,
    Rank1Solvable,
    Rank2Abelian,
    SpectralType,
    reduced_spectrum,
)
from .coeffring import (
    ONE,
    ZERO,
    ExpMonomial,
    ExpPoly,
    GaussianRational,
    conjugate,
    parse_scalar,
    scalar_key,
)
from .exceptions import (
    FormMismatch,
    InvalidParameters,
    NormalizationOutOfScope,
    NotTriangular,
    UnclassifiableForm,
)
from .fields import VectorField, bracket, is_triangular
from .fingerprint import (
    OPERATOR_DY,
    DistinguishedOperator,
    InvariantFingerprint,
    complement,
    distinguished_operator,
    fingerprint,
    is_dx_line,
)
from .linalg import Rows, Vector, nullspace, shifted
from .spectral import ad_matrix, eigenfunction_form, eigenvalues, spectral_decompose
from .transform import AffineY, ShearX, TransformChain, solve_antiderivative
from .utils.logging import setup_logging

logger = setup_logging(__name__)

I = parse_scalar("i")


@dataclass(frozen=True)
class ClassificationRecord:
    family: CanonicalFamily
    fingerprint: InvariantFingerprint
    witness: TransformChain | None = None
    canonical_basis: tuple[VectorField, ...] | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "family": self.family.to_json(),
            "fingerprint": self.fingerprint.to_json(),
            "witness": None if self.witness is None else self.witness.to_json(),
            "canonical_basis": None
            if self.canonical_basis is None
            else [str(v) for v in self.canonical_basis],
        }


def _unclassifiable(fp: InvariantFingerprint, reason: str) -> UnclassifiableForm:
    return UnclassifiableForm(fp, f"Algebra matches no canonical family: {reason}")


def _conjugate_poly(p: ExpPoly) -> ExpPoly:
    return ExpPoly(
        {
            ExpMonomial(m.xdeg, m.ydeg, conjugate(m.xfreq), conjugate(m.yfreq)): conjugate(c)
            for m, c in p.terms.items()
        }
    )


def _conjugate_field(v: VectorField) -> VectorField:
    return VectorField(_conjugate_poly(v.p), _conjugate_poly(v.q))


def _eigenvector(m: Rows, lam: GaussianRational) -> Vector | None:
    kernel = nullspace(shifted(m, lam), len(m))
    return kernel[0] if len(kernel) == 1 else None


def _lines_are_conjugate(target: AlgebraSpan, lines: list[Vector]) -> bool:
    """True when the two eigenlines are swapped by complex conjugation of coefficients."""
    first, second = (target.combination(v) for v in lines)
    mirrored = _conjugate_field(first)
    self_conjugate = make_span([first, mirrored]).dimension == 1
    return not self_conjugate and make_span([second, mirrored]).dimension == 1


def _common_eigenlines(mats: list[Rows]) -> list[Vector] | None:
    """Eigenlines of a commuting pair, read off a generic combination."""
    size = len(mats[0])
    for t in range(size + 2):
        combo = [
            tuple(a + b * parse_scalar(str(t)) for a, b in zip(r1, r2, strict=True))
            for r1, r2 in zip(mats[0], mats[1], strict=True)
        ]
        eig = eigenvalues(combo)
        if len(eig) == size:
            vectors = [_eigenvector(combo, lam) for lam, _ in eig]
            if all(v is not None for v in vectors):
                return vectors  # type: ignore[return-value]
    return None


def _nonabelian_derived(
    g: AlgebraSpan, gprime: AlgebraSpan, fp: InvariantFingerprint
) -> CanonicalFamily:
    k = gprime.dimension - 2
    if fp.quotient_dim == 2:
        return NonAbelianDerivedFull(k)
    if fp.quotient_dim != 1:
        raise _unclassifiable(fp, f"quotient by g' has dimension {fp.quotient_dim}.")
    (x,) = complement(g, gprime)
    z_span = center(gprime)
    if z_span.dimension != 1:
        raise _unclassifiable(fp, "the center of g' is not a line.")
    z = z_span.basis[0]
    coords = z_span.member(bracket(x, z))
    if coords is None:
        raise _unclassifiable(fp, "the center of g' is not invariant.")
    w_c = coords[0]
    m = ad_matrix(x, gprime).m
    transversal = set()
    for lam, _ in eigenvalues(m):
        for vec in nullspace(shifted(m, lam), len(m)):
            if rank([z, gprime.combination(vec)]) == 2:
                transversal.add(lam)
    if len(transversal) != 1:
        raise _unclassifiable(fp, "no unique transversal eigenvalue in g'.")
    (w_y,) = transversal
    if not w_y:
        raise _unclassifiable(fp, "the transversal eigenvalue vanishes.")
    return NonAbelianDerivedLine(k, w_c / w_y)


def _rank2_abelian(
    g: AlgebraSpan, gprime: AlgebraSpan, fp: InvariantFingerprint
) -> CanonicalFamily:
    comp = complement(g, gprime)
    mats = [ad_matrix(z, gprime).m for z in comp]
    if len(comp) == 2:
        lines = _common_eigenlines(mats)
        if lines is None:
            raise _unclassifiable(fp, "the linear part is not diagonalisable.")
        return Rank2Abelian(2 if _lines_are_conjugate(gprime, lines) else 1)
    if len(comp) != 1:
        raise _unclassifiable(fp, f"quotient by g' has dimension {len(comp)}.")
    m = mats[0]
    data = spectral_decompose(m)
    if any(not block.eigenvalue for block in data.blocks):
        raise _unclassifiable(fp, "the linear part is singular.")
    if len(data.blocks) == 1:
        if data.blocks[0].geometric_multiplicity != 2:
            raise _unclassifiable(fp, "the linear part is not diagonalisable.")
        return Rank2Abelian(3, ONE)
    mu1, mu2 = (block.eigenvalue for block in data.blocks)
    lines = [block.basis[0] for block in data.blocks]
    ratio = mu1 / mu2
    if _lines_are_conjugate(gprime, lines):
        return Rank2Abelian(4, I * (ONE + ratio) / (ONE - ratio))
    return Rank2Abelian(3, mu2 / mu1)


def _rank1_solvable(
    g: AlgebraSpan, gprime: AlgebraSpan, fp: InvariantFingerprint
) -> tuple[CanonicalFamily, GaussianRational]:
    """Family plus the exponent of the fixed line that the spectrum was divided by."""
    if fp.quotient_dim != 1 or not is_dx_line(gprime):
        raise _unclassifiable(fp, "g is not <(c*x + H)*Dx> + <phi(y)*Dx>.")
    (z,) = complement(g, gprime)
    m = ad_matrix(z, gprime).m
    scalar = m[0][0]
    identity_like = all(
        entry == (scalar if i == j else ZERO)
        for i, row in enumerate(m)
        for j, entry in enumerate(row)
    )
    if not scalar or not identity_like:
        raise _unclassifiable(fp, "the complement does not act by a nonzero scalar.")
    exponents = {
        mono.yfreq
        for v in gprime.basis
        for mono in v.p
        if mono.ydeg == 0
    }
    for mu in sorted(exponents, key=lambda c: (bool(c), scalar_key(c))):
        line = VectorField(ExpPoly.exp(yfreq=mu), ExpPoly.zero())
        if gprime.member(line) is not None:
            shift = ExpPoly.exp(yfreq=-mu)
            return Rank1Solvable(reduced_spectrum([v.p * shift for v in gprime.basis])), mu
    raise _unclassifiable(fp, "g' has no line of the form exp(mu*y)*Dx.")


def _spectral_type(
    g: AlgebraSpan, gprime: AlgebraSpan, fp: InvariantFingerprint
) -> CanonicalFamily:
    chosen = distinguished_operator(g, gprime)
    if chosen is None:
        raise _unclassifiable(fp, "no complement element of the form (c*x + K)*Dx + b*Dy.")
    data = spectral_decompose(ad_matrix(chosen.operator, gprime))
    try:
        eigenfunction_form(data, gprime)
    except FormMismatch as e:
        raise _unclassifiable(fp, e.message) from e
    shift = ONE if chosen.shift else ZERO
    S = tuple((lam + shift, n) for lam, n in data.pairs())

    def mult(value: GaussianRational) -> int:
        return sum(n for lam, n in S if lam == value)

    d = fp.quotient_dim
    if chosen.kind == OPERATOR_DY:
        if d == 1:
            return SpectralType(1, S)
        if d == 2 and chosen.c_rank == 2:
            return SpectralType(2, S)
        if d == 2:
            return SpectralType(3, S, mult(ZERO))
    elif d == 1:
        return SpectralType(4, S)
    elif d == 2:
        return SpectralType(5, S, mult(ONE))
    raise _unclassifiable(fp, f"quotient by g' has dimension {d}.")


def _decide(g: AlgebraSpan, fp: InvariantFingerprint) -> CanonicalFamily:
    if fp.is_abelian:
        return AbelianRank2() if fp.rank == 2 else AbelianRank1(fp.dim)
    if fp.is_nilpotent:
        return NilpotentNonAbelian(fp.dim - 2)
    gprime = derived(g)
    if not fp.derived_abelian:
        return _nonabelian_derived(g, gprime, fp)
    if fp.derived_rank == 2:
        return _rank2_abelian(g, gprime, fp)
    if fp.rank == 1:
        return _rank1_solvable(g, gprime, fp)[0]
    return _spectral_type(g, gprime, fp)


def classify(g: AlgebraSpan) -> ClassificationRecord:
    """Assign ``g`` its canonical family and exact parameters.

    Raises:
        NotClosed: If ``g`` is not closed under the bracket.
        NotSolvable: If the derived series does not reach zero.
        IrrationalSpectrum: If a needed eigenvalue lies outside Q(i).
        UnclassifiableForm: If no family's structural profile matches.
    """
    fp = fingerprint(g)
    try:
        family = _decide(g, fp).canonical()
        expected = family.expected_invariants()
    except InvalidParameters as e:
        raise _unclassifiable(fp, e.message) from e
    if expected != fp:
        logger.debug(f"Expected {expected}, computed {fp}")
        raise _unclassifiable(fp, f"fingerprint differs from {family.tag}.")
    logger.info(f"Classified a {fp.dim}-dimensional algebra as {family.tag}")
    return ClassificationRecord(family=family, fingerprint=fp)


def _append(steps: list, step: ShearX | AffineY) -> None:
    if not step.is_identity:
        steps.append(step)


def _absorb_dy(steps: list, operator: VectorField) -> None:
    """Shear ``H(y)*Dx + Dy`` to ``Dy``."""
    _append(steps, ShearX(ONE, -solve_antiderivative(operator.p)))


def _normalise_spectral(
    g: AlgebraSpan, gprime: AlgebraSpan, chosen: DistinguishedOperator
) -> list:
    steps: list = []
    if chosen.kind == OPERATOR_DY:
        _absorb_dy(steps, chosen.operator)
        if chosen.secondary is not None:
            pushed = TransformChain(tuple(steps)).pushforward(chosen.secondary)
            split = pushed.p.split_x_linear()
            if split is None or split[0] != ONE:
                raise NormalizationOutOfScope("shear-x", "x*Dx partner is not (x + K(y))*Dx.")
            _append(steps, ShearX(ONE, split[1]))
        return steps
    # (x + K)*Dx + beta*Dy: rescale y so beta = 1, then x~ = x + e^y*F with F' = -e^(-y)*K
    scaling = AffineY(ONE / chosen.beta, ZERO)
    _append(steps, scaling)
    normalised = scaling.pushforward(chosen.operator)
    split = normalised.p.split_x_linear()
    if split is None or split[0] != ONE or normalised.q != ExpPoly.const(1):
        raise NormalizationOutOfScope("affine-y", "operator is not x*Dx + Dy after rescaling.")
    k = split[1]
    f = solve_antiderivative(-(k * ExpPoly.exp(yfreq=-1)))
    _append(steps, ShearX(ONE, ExpPoly.exp(yfreq=1) * f))
    return steps


def canonicalize_triangular(g: AlgebraSpan) -> ClassificationRecord:
    """Classify ``g`` and construct a transform chain onto the canonical basis.

    Raises:
        NotTriangular: If some basis field has an x-dependent Dy coefficient.
        NormalizationOutOfScope: If the normalisation needs a move outside
            x-shears, affine y-changes and swaps.
    """
    for v in g.basis:
        if not is_triangular(v):
            raise NotTriangular(f"Field {v} has an x-dependent Dy coefficient.")
    record = classify(g)
    family = record.family
    gprime = derived(g)
    steps: list = []

    if isinstance(family, (NilpotentNonAbelian, SpectralType)):
        chosen = distinguished_operator(g, gprime)
        if chosen is None:
            raise NormalizationOutOfScope("distinguished-operator")
        if isinstance(family, NilpotentNonAbelian) and chosen.kind != OPERATOR_DY:
            raise NormalizationOutOfScope(
                "rescale-x", "nilpotent algebra presented with an x*Dx + Dy operator."
            )
        steps = _normalise_spectral(g, gprime, chosen)
    elif isinstance(family, Rank1Solvable):
        _, mu = _rank1_solvable(g, gprime, record.fingerprint)
        if mu:
            raise NormalizationOutOfScope("rescale-x", "fixed line is exp(mu*y)*Dx with mu != 0.")
        (z,) = complement(g, gprime)
        split = z.p.split_x_linear()
        if split is None or not split[0]:
            raise NormalizationOutOfScope("shear-x")
        _append(steps, ShearX(ONE, split[1] * (ONE / split[0])))
    elif isinstance(family, AbelianRank2):
        dx = VectorField.dx()
        if g.member(dx) is None:
            raise NormalizationOutOfScope("rectify", "Dx is not in the algebra.")
        (other,) = complement(g, make_span([dx]))
        if not other.q.is_constant or not other.q:
            raise NormalizationOutOfScope("rectify")
        _absorb_dy(steps, other * (ONE / other.q.constant_value()))
    elif isinstance(family, AbelianRank1):
        raise NormalizationOutOfScope("rectify", "no finer normal form within the transform family.")
    else:
        raise NormalizationOutOfScope(
            "rectify", f"{family.tag} needs a linear rectification outside the transform family."
        )

    witness = TransformChain(tuple(steps))
    canonical = family.generate()
    pushed = AlgebraSpan([witness.pushforward(v) for v in g.basis])
    if not same_span(pushed, canonical):
        raise NormalizationOutOfScope("verify", "pushed-forward span differs from the canonical basis.")
    logger.info(f"Canonicalised {family.tag} with {len(witness)} transform step(s)")
    return ClassificationRecord(
        family=family,
        fingerprint=record.fingerprint,
        witness=witness,
        canonical_basis=canonical.basis,
    )
