from typing import TypedDict

from .classification import FamilyReport


class CatalogReport(TypedDict):
    schema_version: str
    family: FamilyReport
    basis: list[str]
    text: str
    verified: bool | None
    recovered: FamilyReport | None


class AuditDiagnostic(TypedDict):
    family: FamilyReport
    kind: str
    message: str
