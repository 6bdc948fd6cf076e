from typing import Any, TypedDict

from .analysis import FingerprintReport


class FamilyReport(TypedDict):
    tag: str
    params: dict[str, Any]


class TransformStepReport(TypedDict, total=False):
    kind: str
    alpha: str
    f: str
    beta: str
    c: str


class ClassificationReport(TypedDict):
    schema_version: str
    input: list[str]
    family: FamilyReport
    fingerprint: FingerprintReport
    witness: list[TransformStepReport] | None
    canonical_basis: list[str] | None
    witness_error: str | None
