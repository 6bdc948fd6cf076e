import json
import random
from collections.abc import Mapping
from typing import Any, cast

from ..catalog import Rank1Solvable, SpectralType, from_params, generate
from ..classify import classify
from ..coeffring import parse_scalar
from ..exceptions import InvalidInputError, PlanarLieError, RingEscape
from ..expr import parse_exppoly, print_field
from ..transform import AffineY, PointTransform, ShearX, TransformChain, pushforward_algebra
from ..types import (
    FamilyReport,
    Source,
    StabilityCase,
    StabilityReport,
    TransformReport,
    TransformStepReport,
)
from ..utils.constants import REPORT_SCHEMA_VERSION
from ..utils.decorators import required_args
from ..utils.logging import setup_logging
from .base import BaseResource

logger = setup_logging(__name__)

_ALPHAS = ("1", "2", "-1/2")
_OFFSETS = ("0", "y", "1/2*y^2", "-y^3", "2*y + 1")
_BETAS = ("1", "2", "-1")
_SHIFTS = ("0", "1", "-2")


def _load_chain(chain: str | list[dict[str, Any]]) -> TransformChain:
    if isinstance(chain, str):
        try:
            chain = json.loads(chain)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"Transform chain is not valid JSON: {e}") from e
    if not isinstance(chain, list):
        raise InvalidInputError("Transform chain must be a JSON list of steps.")
    return TransformChain.from_json(chain)


class Transforms(BaseResource):
    @required_args(["source", "chain"], types={"source": (str, bytes), "inverse": bool})
    def apply(
        self,
        source: Source,
        chain: str | list[dict[str, Any]],
        inverse: bool = False,
    ) -> TransformReport:
        """
        Pushes every field of an algebra file through a serialised transform chain.

        Args:
            source: Algebra file contents, one vector field per line.
            chain: JSON text or list of steps such as
                ``{"kind": "ShearX", "alpha": "1", "f": "y^2"}``.
            inverse: Apply the inverse chain instead.

        Returns:
            A dictionary with the echoed input, the applied chain and the image basis.

        Raises:
            InvalidInputError: If the chain is malformed.
            RingEscape: If a substitution leaves the coefficient ring.
        """
        echo, g = self._load(source)
        transform = _load_chain(chain)
        if inverse:
            transform = transform.inverse()
        logger.info(f"Applying {len(transform)} transform step(s) to {g.dimension} field(s)...")
        image = pushforward_algebra(transform, g)
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "input": echo,
            "chain": cast(list[TransformStepReport], transform.to_json()),
            "output": [print_field(v) for v in image.basis],
        }

    @required_args(["family"], types={"family": str, "trials": int})
    def stability(
        self,
        family: str,
        params: Mapping[str, Any] | None = None,
        trials: int = 10,
    ) -> StabilityReport:
        """
        Checks that classification is unchanged by random x-shears and affine y-changes.

        Chains are drawn from ``random.Random(client.seed)``, so a seed reproduces
        the run. Families whose spectrum depends on the scale of y only see
        translations of y.

        Returns:
            The cases tried, how many left the coefficient ring and were skipped,
            and whether every remaining case recovered the input family.
        """
        fam = from_params(family, params or {})
        span = generate(fam)
        rng = random.Random(self._client.seed)
        y_scaling = not isinstance(fam, (SpectralType, Rank1Solvable))
        has_y_exp = any(m.yfreq for v in span.basis for m in (*v.p, *v.q))
        logger.info(f"Running {trials} stability trial(s) for {fam.tag} (seed {self._client.seed})...")

        cases: list[StabilityCase] = []
        for _ in range(trials):
            steps: list[PointTransform] = []
            for _ in range(rng.randint(1, 3)):
                if rng.random() < 0.5:
                    steps.append(
                        ShearX(
                            parse_scalar(rng.choice(_ALPHAS)),
                            parse_exppoly(rng.choice(_OFFSETS)),
                        )
                    )
                else:
                    beta = rng.choice(_BETAS) if y_scaling else "1"
                    shift = "0" if has_y_exp else rng.choice(_SHIFTS)
                    steps.append(AffineY(parse_scalar(beta), parse_scalar(shift)))
            chain = TransformChain(tuple(steps))
            case: StabilityCase = {
                "chain": cast(list[TransformStepReport], chain.to_json()),
                "recovered": None,
                "error": None,
                "skipped": False,
            }
            try:
                pushed = pushforward_algebra(chain, span)
            except RingEscape as e:
                logger.info(f"Skipping chain {chain.to_json()}: {e.message}")
                case["error"] = f"RingEscape: {e.message}"
                case["skipped"] = True
                cases.append(case)
                continue
            try:
                record = classify(pushed)
                case["recovered"] = cast(FamilyReport, record.family.to_json())
                if record.family != fam.canonical():
                    logger.warning(f"{fam.tag} moved to {record.family.tag} under {chain.to_json()}")
            except PlanarLieError as e:
                logger.warning(f"{fam.tag} failed under {chain.to_json()}: {e.message}")
                case["error"] = f"{type(e).__name__}: {e.message}"
            cases.append(case)

        expected = fam.canonical().to_json()
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "family": cast(FamilyReport, fam.to_json()),
            "seed": self._client.seed,
            "cases": cases,
            "skipped": sum(c["skipped"] for c in cases),
            "stable": all(c["recovered"] == expected for c in cases if not c["skipped"]),
        }
