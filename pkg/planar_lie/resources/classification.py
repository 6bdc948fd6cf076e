from typing import cast

from ..classify import ClassificationRecord, canonicalize_triangular, classify
from ..exceptions import NormalizationOutOfScope, NotTriangular
from ..types import ClassificationReport, Source
from ..utils.constants import REPORT_SCHEMA_VERSION
from ..utils.decorators import required_args
from ..utils.logging import setup_logging
from .base import BaseResource

logger = setup_logging(__name__)


class Classification(BaseResource):
    @required_args(["source"], types={"source": (str, bytes), "witness": bool})
    def classify(self, source: Source, witness: bool = False) -> ClassificationReport:
        """
        Assigns an algebra file its canonical family and exact parameters.

        Args:
            source: Algebra file contents, one vector field per line.
            witness: Also try to build a transform chain onto the canonical basis.
                A normalisation that falls outside the supported transforms is
                reported in ``witness_error`` instead of failing the call.

        Returns:
            A dictionary with the family, fingerprint and optional witness.

            Structure:
            {
                "schema_version": str,
                "input": list[str],
                "family": {"tag": str, "params": dict},
                "fingerprint": dict,
                "witness": list[dict] | None,
                "canonical_basis": list[str] | None,
                "witness_error": str | None
            }

        Raises:
            ExprSyntaxError: If a line does not parse.
            NotClosed: If the span is not a Lie algebra.
            NotSolvable: If the derived series stops above zero.
            IrrationalSpectrum: If a needed eigenvalue lies outside Q(i).
            UnclassifiableForm: If no family matches.
        """
        echo, g = self._load(source)
        logger.info(f"Attempting to classify a span of dimension {g.dimension}...")
        record: ClassificationRecord = classify(g)
        witness_error: str | None = None
        if witness:
            try:
                record = canonicalize_triangular(g)
            except NormalizationOutOfScope as e:
                logger.info(f"No witness chain at step {e.step}: {e.message}")
                witness_error = f"{e.step}: {e.message}"
            except NotTriangular as e:
                logger.info(f"No witness chain: {e.message}")
                witness_error = e.message

        data = record.to_json()
        logger.info(f"Classified as {record.family.tag} {record.family.params_json()}")
        return cast(
            ClassificationReport,
            {
                "schema_version": REPORT_SCHEMA_VERSION,
                "input": echo,
                **data,
                "witness_error": witness_error,
            },
        )
