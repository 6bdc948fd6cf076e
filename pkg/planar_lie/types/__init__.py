from typing import Any

from .analysis import (
    AnalysisReport,
    BracketEntry,
    DiagnosticReport,
    FingerprintReport,
    SpectrumEntry,
)
from .catalog import AuditDiagnostic, CatalogReport
from .classification import ClassificationReport, FamilyReport, TransformStepReport
from .transform import StabilityCase, StabilityReport, TransformReport

# Common types
JSON = dict[str, Any]
Source = str | bytes

__all__ = [
    "JSON",
    "Source",
    "SpectrumEntry",
    "FingerprintReport",
    "BracketEntry",
    "DiagnosticReport",
    "AnalysisReport",
    "FamilyReport",
    "TransformStepReport",
    "ClassificationReport",
    "CatalogReport",
    "AuditDiagnostic",
    "TransformReport",
    "StabilityCase",
    "StabilityReport",
]
