from collections.abc import Mapping
from typing import Any, cast

from ..algebra import make_span
from ..audit import audit_sweep, parameter_sweep
from ..catalog import BY_CLI_NAME, from_params, generate
from ..classify import classify
from ..expr import parse_algebra_file, print_field
from ..types import AuditDiagnostic, CatalogReport, FamilyReport
from ..utils.constants import REPORT_SCHEMA_VERSION
from ..utils.decorators import required_args
from ..utils.logging import setup_logging
from .base import BaseResource

logger = setup_logging(__name__)


class Catalog(BaseResource):
    def families(self) -> list[str]:
        """Names accepted by :meth:`emit`, in catalog order."""
        return list(BY_CLI_NAME)

    @required_args(["family"], types={"family": str, "verify": bool})
    def emit(
        self,
        family: str,
        params: Mapping[str, Any] | None = None,
        verify: bool = False,
    ) -> CatalogReport:
        """
        Generates the canonical algebra of a family as an algebra file.

        Args:
            family: A family tag (``SpectralType``) or CLI name (``spectral``).
            params: Family parameters as strings or JSON values, e.g.
                ``{"variant": 3, "S": "0:2"}``.
            verify: Re-parse the emitted text and classify it; the recovered
                family is reported next to the requested one.

        Returns:
            A dictionary with the family, its basis and the file text.

            Structure:
            {
                "schema_version": str,
                "family": {"tag": str, "params": dict},
                "basis": list[str],
                "text": str,
                "verified": bool | None,
                "recovered": {"tag": str, "params": dict} | None
            }

        Raises:
            InvalidParameters: If the family is unknown or a side condition fails.
        """
        logger.info(f"Attempting to emit catalog family '{family}'...")
        fam = from_params(family, params or {})
        span = generate(fam)
        basis = [print_field(v) for v in span.basis]
        text = "".join(f"{line}\n" for line in basis)

        verified: bool | None = None
        recovered: FamilyReport | None = None
        if verify:
            record = classify(make_span(parse_algebra_file(text)))
            recovered = cast(FamilyReport, record.family.to_json())
            verified = record.family == fam.canonical()
            if not verified:
                logger.warning(
                    f"{fam.tag} {fam.params_json()} classified back as"
                    f" {record.family.tag} {record.family.params_json()}"
                )

        logger.info(f"Emitted {fam.tag} with {len(basis)} basis field(s).")
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "family": cast(FamilyReport, fam.to_json()),
            "basis": basis,
            "text": text,
            "verified": verified,
            "recovered": recovered,
        }

    def audit(self, max_order: int = 5) -> list[AuditDiagnostic]:
        """
        Runs every catalog check over a parameter grid.

        Args:
            max_order: Largest ``N`` / ``k`` swept for the graded families.

        Returns:
            One entry per discrepancy; an empty list means the catalog is consistent.
        """
        logger.info(f"Auditing the catalog up to order {max_order}...")
        diagnostics = audit_sweep(parameter_sweep(max_order))
        return [cast(AuditDiagnostic, d.to_json()) for d in diagnostics]
