from typing import TypedDict

SpectrumEntry = TypedDict("SpectrumEntry", {"lambda": str, "multiplicity": int})


class FingerprintReport(TypedDict):
    dim: int
    derived_series: list[int]
    lower_central_series: list[int]
    is_abelian: bool
    is_nilpotent: bool
    is_solvable: bool
    center_dim: int
    rank: int
    derived_rank: int
    derived_abelian: bool
    quotient_dim: int
    spectrum: list[SpectrumEntry] | None
    operator: str | None


class BracketEntry(TypedDict):
    i: int
    j: int
    bracket: str
    coordinates: list[str]


class DiagnosticReport(TypedDict):
    kind: str
    message: str


class AnalysisReport(TypedDict):
    schema_version: str
    input: list[str]
    dimension: int
    basis: list[str]
    closed: bool
    structure_constants: list[BracketEntry]
    fingerprint: FingerprintReport | None
    diagnostics: list[DiagnosticReport]
