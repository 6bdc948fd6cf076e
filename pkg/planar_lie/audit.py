"""
Executable audit of the catalog.

Each family instance is generated, checked for closure and solvability, compared
against its predicted fingerprint and a brute-force derived algebra, and pushed
through the classifier. Discrepancies are returned as diagnostics, never corrected.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, fields

from .algebra import (
    AlgebraSpan,
    derived,
    is_solvable,
    make_span,
    same_span,
    verify_closure,
)
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
)
from .classify import classify
from .coeffring import ExpPoly, parse_scalar
from .exceptions import InvalidParameters, NotClosed, PlanarLieError
from .expr import parse_exppoly
from .fields import VectorField, bracket
from .fingerprint import fingerprint
from .utils.logging import setup_logging

logger = setup_logging(__name__)


@dataclass(frozen=True)
class Diagnostic:
    family: CanonicalFamily
    kind: str
    message: str

    def to_json(self) -> dict[str, object]:
        return {"family": self.family.to_json(), "kind": self.kind, "message": self.message}


def naive_derived(g: AlgebraSpan) -> AlgebraSpan:
    """Span of ``[e_i, e_j]`` over all ordered pairs, grown one bracket at a time."""
    span = AlgebraSpan.zero()
    for v in g.basis:
        for w in g.basis:
            b = bracket(v, w)
            if b and span.member(b) is None:
                span = AlgebraSpan([*span.basis, b])
    return span


def _printed_ideal(k: int) -> AlgebraSpan:
    one = ExpPoly.const(1)
    return make_span(
        [
            VectorField(one),
            VectorField.dy(),
            *(VectorField(ExpPoly.monomial(ydeg=j)) for j in range(1, k + 1)),
        ]
    )


def audit_family(fam: CanonicalFamily) -> list[Diagnostic]:
    """Run every catalog check on one family instance."""
    out: list[Diagnostic] = []

    def report(kind: str, message: str) -> None:
        logger.warning(f"{fam.tag} {fam.params_json()}: {kind}: {message}")
        out.append(Diagnostic(fam, kind, message))

    g = fam.generate()
    try:
        verify_closure(g)
    except NotClosed as e:
        report("not-closed", e.message)
        return out
    if not is_solvable(g):
        report("not-solvable", "derived series does not reach zero")
        return out

    try:
        computed = fingerprint(g)
    except PlanarLieError as e:
        report("fingerprint-error", f"{type(e).__name__}: {e.message}")
        return out
    expected = fam.expected_invariants()
    if computed != expected:
        differing = [
            f.name
            for f in fields(computed)
            if getattr(computed, f.name) != getattr(expected, f.name)
        ]
        report("fingerprint-mismatch", f"differs in {', '.join(differing)}")

    gprime = derived(g)
    if not same_span(gprime, naive_derived(g)):
        report("derived-oracle", "derived() disagrees with the brute-force span")
    if isinstance(fam, SpectralType) and not same_span(gprime, make_span(fam.h_basis())):
        report("derived-not-h", f"g' has dimension {gprime.dimension}")
    if isinstance(fam, NonAbelianDerivedLine) and not same_span(
        gprime, _printed_ideal(fam.k)
    ):
        report("derived-not-ideal", f"g' has dimension {gprime.dimension} for a={fam.a}")

    try:
        record = classify(g)
    except PlanarLieError as e:
        report("classify-error", f"{type(e).__name__}: {e.message}")
        return out
    if record.family != fam.canonical():
        report(
            "round-trip",
            f"classified as {record.family.tag} {record.family.params_json()}",
        )
    return out


def _spectral_samples() -> list[tuple[tuple[str, int], ...]]:
    return [
        (("2", 1),),
        (("-2", 1),),
        (("i", 1),),
        (("1+i", 1),),
        (("1", 2),),
        (("0", 2),),
        (("0", 1), ("2", 1)),
        (("1", 1), ("i", 1)),
        (("-2", 1), ("1+i", 2)),
        (("-1", 2), ("1", 1)),
        (("0", 1), ("1", 1), ("1/2", 3)),
    ]


def parameter_sweep(max_order: int = 5) -> Iterator[CanonicalFamily]:
    """Valid instances of every family over a small parameter grid."""
    candidates: list[CanonicalFamily] = [AbelianRank2()]
    candidates += [AbelianRank1(d) for d in range(1, 4)]
    candidates += [NilpotentNonAbelian(n) for n in range(1, max_order + 1)]
    candidates += [NonAbelianDerivedFull(k) for k in range(1, max_order + 1)]
    candidates += [
        NonAbelianDerivedLine(k, parse_scalar(a))
        for k in range(1, 4)
        for a in ("-1", "1/2", "1", "2", "i", "1+i")
    ]
    candidates += [Rank2Abelian(1), Rank2Abelian(2)]
    candidates += [Rank2Abelian(3, parse_scalar(s)) for s in ("2", "-1", "1/2", "i", "1+i")]
    candidates += [Rank2Abelian(4, parse_scalar(s)) for s in ("0", "1", "2", "1/2")]
    for spectrum in ("1", "1;y", "1;exp(y)", "1;y;y^2", "1;exp(2*y);y*exp(2*y)"):
        candidates.append(Rank1Solvable(tuple(parse_exppoly(t) for t in spectrum.split(";"))))
    for variant in range(1, 7):
        for sample in _spectral_samples():
            S = tuple((parse_scalar(lam), n) for lam, n in sample)
            candidates.append(SpectralType(variant, S).canonical())
    for fam in candidates:
        try:
            fam.validate()
        except InvalidParameters:
            continue
        yield fam


def audit_sweep(
    families: Iterable[CanonicalFamily] | None = None,
) -> list[Diagnostic]:
    diagnostics: list[Diagnostic] = []
    count = 0
    for fam in families if families is not None else parameter_sweep():
        diagnostics.extend(audit_family(fam))
        count += 1
    logger.info(f"Audited {count} family instances, {len(diagnostics)} diagnostic(s)")
    return diagnostics
