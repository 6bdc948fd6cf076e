from __future__ import annotations

from typing import Any


class PlanarLieError(Exception):
    def __init__(self, message="An unspecified error occurred in planar-lie"):
        self.message = message
        super().__init__(self.message)


class InvalidInputError(PlanarLieError):
    def __init__(self, message="Invalid input provided."):
        super().__init__(message)


class RingEscape(PlanarLieError):
    def __init__(
        self, message="Substitution leaves the exponential-polynomial ring."
    ):
        super().__init__(message)


class NotTriangular(PlanarLieError):
    def __init__(self, message="Vector field is not of the form xi(x,y)*Dx + eta(y)*Dy."):
        super().__init__(message)


class EmptySpan(PlanarLieError):
    def __init__(self, message="All input vector fields are zero."):
        super().__init__(message)


class EmptyInput(PlanarLieError):
    def __init__(self, message="Input contains no vector fields."):
        super().__init__(message)


class NotClosed(PlanarLieError):
    def __init__(self, i: int, j: int, witness: Any, message: str | None = None):
        self.i = i
        self.j = j
        self.witness = witness
        if message is None:
            message = (
                f"Bracket of basis elements {i} and {j} leaves the span: {witness}"
            )
        super().__init__(message)


class NotInvariant(PlanarLieError):
    def __init__(self, j: int, witness: Any, message: str | None = None):
        self.j = j
        self.witness = witness
        if message is None:
            message = f"ad image of target basis element {j} leaves the target: {witness}"
        super().__init__(message)


class IrrationalSpectrum(PlanarLieError):
    def __init__(self, factor: str, message: str | None = None):
        self.factor = factor
        if message is None:
            message = (
                f"Characteristic polynomial has the factor {factor} "
                "with no Gaussian-rational root."
            )
        super().__init__(message)


class FormMismatch(PlanarLieError):
    def __init__(
        self, message="Generalized eigenvector is not of the form e^(mu*y)*P(y)*Dx."
    ):
        super().__init__(message)


class InvalidParameters(PlanarLieError):
    def __init__(self, family: str, message: str | None = None):
        self.family = family
        if message is None:
            message = f"Invalid parameters for family '{family}'."
        super().__init__(message)


class NotSolvable(PlanarLieError):
    def __init__(self, message="Derived series does not terminate at zero."):
        super().__init__(message)


class UnclassifiableForm(PlanarLieError):
    def __init__(self, fingerprint: Any = None, message: str | None = None):
        self.fingerprint = fingerprint
        if message is None:
            message = "Algebra matches no canonical family."
        super().__init__(message)


class NormalizationOutOfScope(PlanarLieError):
    def __init__(self, step: str, message: str | None = None):
        self.step = step
        if message is None:
            message = f"Normalization step '{step}' needs a transformation outside the supported family."
        super().__init__(message)


class ExprSyntaxError(PlanarLieError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"{message} (line {line}, column {column})")


class RingViolation(ExprSyntaxError):
    pass


class MixedBasis(ExprSyntaxError):
    pass
