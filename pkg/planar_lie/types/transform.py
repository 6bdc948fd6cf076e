from typing import TypedDict

from .classification import FamilyReport, TransformStepReport


class TransformReport(TypedDict):
    schema_version: str
    input: list[str]
    chain: list[TransformStepReport]
    output: list[str]


class StabilityCase(TypedDict):
    chain: list[TransformStepReport]
    recovered: FamilyReport | None
    error: str | None
    skipped: bool


class StabilityReport(TypedDict):
    schema_version: str
    family: FamilyReport
    seed: int
    cases: list[StabilityCase]
    skipped: int
    stable: bool
