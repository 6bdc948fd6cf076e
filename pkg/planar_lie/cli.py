"""
Command-line front end.

    planar-lie analyze FILE [--json]
    planar-lie classify FILE [--json] [--witness]
    planar-lie catalog FAMILY [KEY=VALUE ...] [--emit PATH] [--verify] [--json]
    planar-lie transform FILE --chain JSON_FILE [--inverse] [--json]
    planar-lie audit [--max-order N] [--json]
    planar-lie stability FAMILY [KEY=VALUE ...] [--trials N] [--json]

Every command prints a report; failures print an error report and exit with the
codes in ``utils/constants.py``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from ._client import PlanarLieClient
from ._version import __version__
from .exceptions import (
    EmptyInput,
    EmptySpan,
    ExprSyntaxError,
    InvalidInputError,
    InvalidParameters,
    IrrationalSpectrum,
    NormalizationOutOfScope,
    NotClosed,
    NotSolvable,
    PlanarLieError,
    UnclassifiableForm,
)
from .expr import print_field
from .fields import VectorField
from .utils.constants import (
    EXIT_FAILURE,
    EXIT_INVALID_PARAMETERS,
    EXIT_IRRATIONAL_SPECTRUM,
    EXIT_NOT_CLOSED,
    EXIT_NOT_SOLVABLE,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_UNCLASSIFIABLE,
    REPORT_SCHEMA_VERSION,
)
from .utils.logging import configure_cli_logging, setup_logging

logger = setup_logging(__name__)

# Most specific first: RingViolation and MixedBasis are ExprSyntaxError.
_EXIT_CODES: tuple[tuple[type[PlanarLieError], int], ...] = (
    (NotClosed, EXIT_NOT_CLOSED),
    (ExprSyntaxError, EXIT_PARSE_ERROR),
    (EmptyInput, EXIT_PARSE_ERROR),
    (EmptySpan, EXIT_PARSE_ERROR),
    (NotSolvable, EXIT_NOT_SOLVABLE),
    (IrrationalSpectrum, EXIT_IRRATIONAL_SPECTRUM),
    (UnclassifiableForm, EXIT_UNCLASSIFIABLE),
    (InvalidParameters, EXIT_INVALID_PARAMETERS),
)


def exit_code_for(error: PlanarLieError) -> int:
    for cls, code in _EXIT_CODES:
        if isinstance(error, cls):
            return code
    return EXIT_FAILURE


def error_report(error: PlanarLieError) -> dict[str, Any]:
    """Structured body for a failure; carries the exception's context attributes."""
    body: dict[str, Any] = {"type": type(error).__name__, "message": error.message}
    if isinstance(error, NotClosed):
        body.update(i=error.i, j=error.j)
        if isinstance(error.witness, VectorField):
            body["witness"] = print_field(error.witness)
    elif isinstance(error, ExprSyntaxError):
        body.update(line=error.line, column=error.column, reason=error.reason)
    elif isinstance(error, IrrationalSpectrum):
        body["factor"] = str(error.factor)
    elif isinstance(error, InvalidParameters):
        body["family"] = error.family
    elif isinstance(error, UnclassifiableForm) and error.fingerprint is not None:
        body["fingerprint"] = error.fingerprint.to_json()
    elif isinstance(error, NormalizationOutOfScope):
        body["step"] = error.step
    return body


def parse_params(pairs: Sequence[str]) -> dict[str, str]:
    params: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise InvalidInputError(f"Parameter '{pair}' is not KEY=VALUE.")
        params[key.strip()] = value.strip()
    return params


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise InvalidInputError(f"Cannot read '{path}': {e.strerror}") from e


def _read_algebra(path: str) -> bytes:
    data = _read(path)
    if not data:
        raise EmptyInput(f"'{path}' is empty.")
    return data


# text renderers


def _render_fingerprint(fp: dict[str, Any] | None) -> list[str]:
    if fp is None:
        return ["fingerprint: unavailable"]
    lines = [
        f"dimension: {fp['dim']}",
        f"derived series: {fp['derived_series']}",
        f"lower central series: {fp['lower_central_series']}",
        f"abelian: {fp['is_abelian']}  nilpotent: {fp['is_nilpotent']}"
        f"  solvable: {fp['is_solvable']}",
        f"center dimension: {fp['center_dim']}  rank: {fp['rank']}"
        f"  derived rank: {fp['derived_rank']}",
    ]
    if fp["spectrum"] is not None:
        spectrum = ", ".join(f"{e['lambda']}:{e['multiplicity']}" for e in fp["spectrum"])
        lines.append(f"spectrum ({fp['operator']}): {spectrum}")
    return lines


def _render(command: str, report: dict[str, Any]) -> str:
    if "error" in report:
        error = report["error"]
        details = [f"  {key}: {value}" for key, value in error.items() if key not in ("type", "message")]
        return "\n".join([f"error: {error['type']}: {error['message']}", *details])
    lines: list[str] = []
    if command == "analyze":
        lines.append(f"basis ({report['dimension']}):")
        lines += [f"  e{i} = {v}" for i, v in enumerate(report["basis"])]
        lines.append("brackets:")
        lines += [
            f"  [e{b['i']}, e{b['j']}] = {b['bracket']}  ({', '.join(b['coordinates'])})"
            for b in report["structure_constants"]
        ]
        lines += _render_fingerprint(report["fingerprint"])
        lines += [f"diagnostic: {d['kind']}: {d['message']}" for d in report["diagnostics"]]
    elif command == "classify":
        family = report["family"]
        lines.append(f"family: {family['tag']} {json.dumps(family['params'])}")
        lines += _render_fingerprint(report["fingerprint"])
        if report["witness"] is not None:
            lines.append(f"witness: {json.dumps(report['witness'])}")
            lines += [f"  {v}" for v in report["canonical_basis"]]
        if report["witness_error"]:
            lines.append(f"no witness: {report['witness_error']}")
    elif command == "catalog":
        lines.append(report["text"].rstrip("\n"))
        if report["verified"] is not None:
            lines.append(f"# verified: {report['verified']}")
    elif command == "transform":
        lines += report["output"]
    elif command == "audit":
        lines += [
            f"{d['family']['tag']} {json.dumps(d['family']['params'])}: {d['kind']}: {d['message']}"
            for d in report["diagnostics"]
        ]
        lines.append(f"{len(report['diagnostics'])} diagnostic(s)")
    elif command == "stability":
        lines.append(f"stable: {report['stable']} (seed {report['seed']}, {report['skipped']} skipped)")
        lines += [
            f"  {json.dumps(c['chain'])} -> {c['error'] or c['recovered']['tag']}"
            for c in report["cases"]
        ]
    return "\n".join(lines)


# commands


def cmd_analyze(client: PlanarLieClient, args: argparse.Namespace) -> dict[str, Any]:
    return dict(client.run("analyze", client.analysis.analyze, _read_algebra(args.path)))


def cmd_classify(client: PlanarLieClient, args: argparse.Namespace) -> dict[str, Any]:
    return dict(
        client.run(
            "classify",
            client.classification.classify,
            _read_algebra(args.path),
            witness=args.witness,
        )
    )


def cmd_catalog(client: PlanarLieClient, args: argparse.Namespace) -> dict[str, Any]:
    report = client.run(
        "catalog",
        client.catalog.emit,
        args.family,
        parse_params(args.params),
        verify=args.verify,
    )
    if args.emit:
        Path(args.emit).write_text(report["text"], encoding="utf-8")
        logger.info(f"Wrote {args.emit}")
    return dict(report)


def cmd_transform(client: PlanarLieClient, args: argparse.Namespace) -> dict[str, Any]:
    chain = _read(args.chain).decode("utf-8", errors="replace")
    return dict(
        client.run(
            "transform",
            client.transforms.apply,
            _read_algebra(args.path),
            chain,
            inverse=args.inverse,
        )
    )


def cmd_audit(client: PlanarLieClient, args: argparse.Namespace) -> dict[str, Any]:
    diagnostics = client.run("audit", client.catalog.audit, args.max_order)
    return {"schema_version": REPORT_SCHEMA_VERSION, "diagnostics": diagnostics}


def cmd_stability(client: PlanarLieClient, args: argparse.Namespace) -> dict[str, Any]:
    return dict(
        client.run(
            "stability",
            client.transforms.stability,
            args.family,
            parse_params(args.params),
            trials=args.trials,
        )
    )


COMMANDS: dict[str, Callable[[PlanarLieClient, argparse.Namespace], dict[str, Any]]] = {
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "catalog": cmd_catalog,
    "transform": cmd_transform,
    "audit": cmd_audit,
    "stability": cmd_stability,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planar-lie",
        description="Classify finite-dimensional Lie algebras of planar vector fields.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Logging level (default: $PLANAR_LIE_LOG_LEVEL or WARNING)")
    parser.add_argument("--seed", type=int, help="Seed for randomized checks (default: $PLANAR_LIE_SEED)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help)
        sub.add_argument("--json", action="store_true", help="Print the JSON report")
        return sub

    analyze = add("analyze", "Check closure and print the bracket table and invariants")
    analyze.add_argument("path")

    classify = add("classify", "Assign the canonical family")
    classify.add_argument("path")
    classify.add_argument("--witness", action="store_true", help="Also build a transform chain")

    catalog = add("catalog", "Emit the canonical algebra of a family")
    catalog.add_argument("family")
    catalog.add_argument("params", nargs="*", metavar="KEY=VALUE")
    catalog.add_argument("--emit", metavar="PATH", help="Write the algebra file here")
    catalog.add_argument("--verify", action="store_true", help="Classify the emitted file")

    transform = add("transform", "Apply a serialised transform chain to an algebra file")
    transform.add_argument("path")
    transform.add_argument("--chain", required=True, metavar="JSON_FILE", help="File holding the chain as a JSON list")
    transform.add_argument("--inverse", action="store_true")

    audit = add("audit", "Run the catalog audit sweep")
    audit.add_argument("--max-order", type=int, default=5)

    stability = add("stability", "Classify random transforms of a catalog instance")
    stability.add_argument("family")
    stability.add_argument("params", nargs="*", metavar="KEY=VALUE")
    stability.add_argument("--trials", type=int, default=10)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_cli_logging(args.log_level)

    started = time.perf_counter()
    code = EXIT_OK
    try:
        client = PlanarLieClient(seed=args.seed, log_level=args.log_level)
        report = COMMANDS[args.command](client, args)
        if args.command == "catalog" and report.get("verified") is False:
            code = EXIT_UNCLASSIFIABLE
    except PlanarLieError as e:
        code = exit_code_for(e)
        report = {"schema_version": REPORT_SCHEMA_VERSION, "error": error_report(e)}
    report["command"] = args.command
    report["elapsed_seconds"] = round(time.perf_counter() - started, 6)

    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(_render(args.command, report))
    return code


if __name__ == "__main__":
    sys.exit(main())
