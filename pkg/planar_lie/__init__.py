from ._client import PlanarLieClient
from ._version import __version__
from .algebra import AlgebraSpan, derived, make_span, verify_closure
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
from .classify import ClassificationRecord, canonicalize_triangular, classify
from .coeffring import ExpPoly, GaussianRational
from .exceptions import (
    EmptyInput,
    EmptySpan,
    ExprSyntaxError,
    FormMismatch,
    InvalidInputError,
    InvalidParameters,
    IrrationalSpectrum,
    MixedBasis,
    NormalizationOutOfScope,
    NotClosed,
    NotInvariant,
    NotSolvable,
    NotTriangular,
    PlanarLieError,
    RingEscape,
    RingViolation,
    UnclassifiableForm,
)
from .expr import parse_algebra_file, parse_field, print_field
from .fields import VectorField, bracket
from .fingerprint import InvariantFingerprint, fingerprint
from .transform import AffineY, ShearX, Swap, TransformChain

__all__ = [
    "PlanarLieClient",
    "__version__",
    "ExpPoly",
    "GaussianRational",
    "VectorField",
    "bracket",
    "AlgebraSpan",
    "make_span",
    "verify_closure",
    "derived",
    "InvariantFingerprint",
    "fingerprint",
    "CanonicalFamily",
    "AbelianRank2",
    "AbelianRank1",
    "NilpotentNonAbelian",
    "NonAbelianDerivedFull",
    "NonAbelianDerivedLine",
    "Rank2Abelian",
    "Rank1Solvable",
    "SpectralType",
    "ClassificationRecord",
    "classify",
    "canonicalize_triangular",
    "ShearX",
    "AffineY",
    "Swap",
    "TransformChain",
    "parse_field",
    "parse_algebra_file",
    "print_field",
    "PlanarLieError",
    "InvalidInputError",
    "RingEscape",
    "NotTriangular",
    "EmptySpan",
    "EmptyInput",
    "NotClosed",
    "NotInvariant",
    "IrrationalSpectrum",
    "FormMismatch",
    "InvalidParameters",
    "NotSolvable",
    "UnclassifiableForm",
    "NormalizationOutOfScope",
    "ExprSyntaxError",
    "RingViolation",
    "MixedBasis",
]
