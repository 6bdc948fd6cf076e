from typing import cast

from ..coeffring import format_scalar
from ..exceptions import IrrationalSpectrum, NotSolvable
from ..expr import parse_field, print_field
from ..fields import bracket
from ..fingerprint import fingerprint
from ..types import (
    AnalysisReport,
    BracketEntry,
    DiagnosticReport,
    FingerprintReport,
    Source,
)
from ..utils.constants import REPORT_SCHEMA_VERSION
from ..utils.decorators import required_args
from ..utils.logging import setup_logging
from .base import BaseResource

logger = setup_logging(__name__)


class Analysis(BaseResource):
    @required_args(["source"], types={"source": (str, bytes)})
    def analyze(self, source: Source) -> AnalysisReport:
        """
        Checks closure of an algebra file and computes its invariants.

        Args:
            source: Algebra file contents, one vector field per line.

        Returns:
            A dictionary with the echoed input, the bracket table and the fingerprint.

            Structure:
            {
                "schema_version": str,
                "input": list[str],
                "dimension": int,
                "basis": list[str],
                "closed": bool,
                "structure_constants": [
                    {"i": int, "j": int, "bracket": str, "coordinates": list[str]}
                ],
                "fingerprint": dict | None,
                "diagnostics": [{"kind": str, "message": str}]
            }

        Raises:
            ExprSyntaxError: If a line does not parse.
            EmptyInput: If the file contains no fields.
            NotClosed: If some bracket leaves the span.
        """
        echo, g = self._load(source)
        logger.info(f"Analyzing a span of dimension {g.dimension}...")
        constants = g.structure_constants

        table: list[BracketEntry] = []
        for i in range(g.dimension):
            for j in range(i + 1, g.dimension):
                table.append(
                    {
                        "i": i,
                        "j": j,
                        "bracket": print_field(bracket(g.basis[i], g.basis[j])),
                        "coordinates": [format_scalar(c) for c in constants.c[i][j]],
                    }
                )

        diagnostics: list[DiagnosticReport] = []
        fp: FingerprintReport | None = None
        try:
            fp = cast(FingerprintReport, fingerprint(g).to_json())
        except (NotSolvable, IrrationalSpectrum) as e:
            logger.warning(f"Fingerprint unavailable: {e.message}")
            diagnostics.append({"kind": type(e).__name__, "message": e.message})

        logger.info(f"Analysis finished with {len(diagnostics)} diagnostic(s).")
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "input": echo,
            "dimension": g.dimension,
            "basis": [print_field(v) for v in g.basis],
            "closed": True,
            "structure_constants": table,
            "fingerprint": fp,
            "diagnostics": diagnostics,
        }

    @required_args(["source"], types={"source": (str, bytes)})
    def fingerprint(self, source: Source) -> FingerprintReport:
        """
        Computes the invariant fingerprint of a closed solvable algebra.

        Raises:
            NotClosed: If the span is not a Lie algebra.
            NotSolvable: If the derived series stops above zero.
            IrrationalSpectrum: If a needed eigenvalue lies outside Q(i).
        """
        _, g = self._load(source)
        return cast(FingerprintReport, fingerprint(g).to_json())

    @required_args(["first", "second"], types={"first": str, "second": str})
    def bracket(self, first: str, second: str) -> str:
        """Bracket of two fields given in the expression language, printed canonically."""
        result = print_field(bracket(parse_field(first), parse_field(second)))
        logger.debug(f"[{first}, {second}] = {result}")
        return result
