"""Self-validation shared by every constructor."""

from __future__ import annotations

from errors import ConstructionError
from labeling.model import Labeling, LabelingKind
from labeling.verify import verify
from logging_config import get_logger

logger = get_logger(__name__)


def ensure_valid(labeling: Labeling, kind: LabelingKind, construction: str) -> Labeling:
    """Return labeling unchanged when it verifies as kind.

    Raises:
        ConstructionError: naming every violated condition
    """
    report = verify(labeling, kind)
    if not report.valid:
        conditions = "; ".join(f"{v.condition}: {v.detail}" for v in report.violations)
        logger.error(f"{construction} produced an invalid {kind} labeling: {conditions}")
        raise ConstructionError(
            f"{construction} produced an invalid {kind} labeling: {conditions}",
            violations=list(report.violations),
        )
    logger.debug(f"{construction} verified as {kind} (n={labeling.graph.n}, m={labeling.graph.m})")
    return labeling
