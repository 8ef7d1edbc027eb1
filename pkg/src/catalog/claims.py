"""Catalog entries, their machine-checkable claims and claim evaluation."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, Optional

import pandas as pd

import config
from catalog import figures
from errors import UnknownEntryError
from graphs.core import Graph
from graphs.structure import hamiltonian_cycle, is_regular, is_tree, tree_stats
from labeling.io import serialize_labeled, to_dot
from labeling.model import (
    Labeling,
    LabelingKind,
    check_alphabet,
    induced_vertex_labels,
    star_transform,
    tally,
)
from labeling.verify import verify
from logging_config import get_logger
from oracle.models import SearchConfig
from oracle.search import decide_with_symmetry
from schemas.tallies import schema_claims

logger = get_logger(__name__)


@dataclass(frozen=True)
class CheckOptions:
    """Knobs for claims that run the oracle."""

    budget: Optional[int] = None
    workers: Optional[int] = None


ClaimFn = Callable[["CatalogEntry", CheckOptions], tuple[bool, str]]


@dataclass(frozen=True)
class Claim:
    name: str
    statement: str
    evaluate: ClaimFn


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    labeling: Optional[Labeling]
    kind: Optional[LabelingKind]
    description: str
    claims: tuple[Claim, ...] = field(default_factory=tuple)
    aliases: tuple[str, ...] = ()

    def to_text(self) -> str:
        """Labeled-graph format when a labeling exists, plain edge list otherwise."""
        if self.labeling is not None:
            return serialize_labeled(self.labeling, comment=f"{self.name}: {self.description}")
        g = self.graph
        lines = [f"# {self.name}: {self.description}", f"{g.n} {g.m}"]
        lines.extend(f"{u} {v}" for u, v in g.edges)
        return "\n".join(lines) + "\n"

    def to_dot(self) -> Optional[str]:
        if self.labeling is None:
            return None
        return to_dot(self.labeling, name=self.name)


@dataclass(frozen=True)
class ClaimResult:
    entry: str
    claim: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CatalogReport:
    """Every claim of one entry with pass/fail and supporting data."""

    entry: str
    results: tuple[ClaimResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            [(r.entry, r.claim, r.passed, r.detail) for r in self.results],
            columns=["entry", "claim", "passed", "detail"],
        ).astype({"entry": str, "claim": str, "passed": bool, "detail": str})
        return schema_claims.validate(frame)

    def to_dict(self) -> dict[str, Any]:
        return {
            "entry": self.entry,
            "passed": self.passed,
            "claims": [
                {"claim": r.claim, "passed": r.passed, "detail": r.detail} for r in self.results
            ],
        }

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.entry}: {status}\n" + self.to_frame().to_string(index=False)


# Claim builders


def _all_degrees_odd(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
    degrees = entry.graph.degrees()
    return all(d % 2 for d in degrees), f"degrees {degrees}"


def _order_mod_four(residue: int) -> ClaimFn:
    def evaluate(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
        n = entry.graph.n
        return n % 4 == residue, f"n = {n}, n mod 4 = {n % 4}"

    return evaluate


def _internal_count(expected: int) -> ClaimFn:
    def evaluate(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
        if not is_tree(entry.graph):
            return False, "graph is not a tree"
        stats = tree_stats(entry.graph)
        return stats.internal == expected, f"n_I = {stats.internal}, leaves = {stats.leaves}"

    return evaluate


def _labeling_valid(kind: LabelingKind) -> ClaimFn:
    def evaluate(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
        if entry.labeling is None:
            return False, "entry has no labeling"
        report = verify(entry.labeling, kind)
        detail = f"edge tally {report.tally.edge}, vertex tally {report.tally.vertex}"
        if report.constant is not None:
            detail += f", K = {report.constant}"
        if report.violations:
            detail += "; " + "; ".join(v.detail for v in report.violations)
        return report.valid, detail

    return evaluate


def _minus_one_count_odd(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
    counts = tally(entry.labeling)
    return counts.v(-1) % 2 == 1, f"v_f(-1) = {counts.v(-1)}, v_f(1) = {counts.v(1)}"


def _regular(degree: int) -> ClaimFn:
    def evaluate(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
        return is_regular(entry.graph, degree), f"degrees {sorted(set(entry.graph.degrees()))}"

    return evaluate


def _not_hamiltonian(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
    cycle = hamiltonian_cycle(entry.graph)
    if cycle is None:
        return True, "exhaustive backtracking found no spanning cycle"
    return False, f"spanning cycle {cycle}"


def _edge_count_even(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
    return entry.graph.m % 2 == 0, f"m = {entry.graph.m}"


def _order_odd(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
    return entry.graph.n % 2 == 1, f"n = {entry.graph.n}"


def _alphabet(kind: LabelingKind) -> ClaimFn:
    def evaluate(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
        check_alphabet(entry.labeling, kind)
        return True, f"induced values {induced_vertex_labels(entry.labeling)}"

    return evaluate


def _oracle_decision(kind: LabelingKind) -> ClaimFn:
    def evaluate(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
        budget = options.budget if options.budget is not None else config.HTCCNTR_BUDGET
        cfg = SearchConfig(kind, budget=budget, workers=options.workers)
        outcome = decide_with_symmetry(entry.graph, cfg)
        stats = outcome.statistics
        detail = (
            f"{kind} decision: {outcome.decision.value} after {stats.nodes} nodes "
            f"(budget {budget}, {stats.wall_time:.1f}s)"
        )
        if outcome.witness is not None:
            detail += f"; witness {list(outcome.witness.labels)}"
        # Any honest outcome is recorded; a bad witness raises inside the oracle.
        return True, detail

    return evaluate


def _transform_invalid(k: int) -> ClaimFn:
    def evaluate(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
        transformed = star_transform(entry.labeling, k)
        report = verify(transformed, LabelingKind.hk_cordial(k))
        return not report.valid, f"f* labels {list(transformed.labels)}, valid = {report.valid}"

    return evaluate


def _transform_hub_value(hub: int, expected: int, k: int) -> ClaimFn:
    def evaluate(entry: CatalogEntry, options: CheckOptions) -> tuple[bool, str]:
        value = induced_vertex_labels(star_transform(entry.labeling, k))[hub]
        return value == expected, f"f*({hub}) = {value}"

    return evaluate


def _entry(name: str, alias: str, figure: figures.Figure, *claims: Claim) -> CatalogEntry:
    return CatalogEntry(
        name=name,
        aliases=(alias,) if alias != name else (),
        graph=figure.graph,
        labeling=figure.labeling,
        kind=figure.kind,
        description=figure.description,
        claims=claims,
    )


def _build_entries() -> tuple[CatalogEntry, ...]:
    h = LabelingKind.h_cordial()
    h2 = LabelingKind.hk_cordial(2)
    return (
        _entry(
            "lemma23-left",
            "odd-tree-one-internal",
            figures.odd_tree_one_internal(),
            Claim("all-degrees-odd", "every vertex has odd degree", _all_degrees_odd),
            Claim("order-2-mod-4", "n = 2 (mod 4)", _order_mod_four(2)),
            Claim("one-internal-vertex", "n_I = 1, which is odd", _internal_count(1)),
        ),
        _entry(
            "lemma23-right",
            "odd-tree-two-internal",
            figures.odd_tree_two_internal(),
            Claim("all-degrees-odd", "every vertex has odd degree", _all_degrees_odd),
            Claim("order-0-mod-4", "n = 0 (mod 4)", _order_mod_four(0)),
            Claim("two-internal-vertices", "n_I = 2, which is even", _internal_count(2)),
        ),
        _entry(
            "thm31-refutation",
            "odd-minus-one-count",
            figures.odd_minus_one_count(),
            Claim("labeling-h-cordial", "the drawn labeling is H-cordial", _labeling_valid(h)),
            Claim("minus-one-count-odd", "v_f(-1) is odd", _minus_one_count_odd),
        ),
        _entry(
            "cubic-non-hamiltonian",
            "cubic-non-hamiltonian",
            figures.cubic_non_hamiltonian(),
            Claim("cubic", "every vertex has degree 3", _regular(3)),
            Claim("labeling-h-cordial", "the drawn labeling is H-cordial", _labeling_valid(h)),
            Claim("not-hamiltonian", "no spanning cycle exists", _not_hamiltonian),
        ),
        _entry(
            "lemma3-converse",
            "triangle-quadrilateral",
            figures.triangle_quadrilateral(),
            Claim("edge-count-even", "m = 14 is even", _edge_count_even),
            Claim("order-odd", "n = 7 is odd", _order_odd),
            Claim("labels-in-h2-alphabet", "printed labels lie in ±1..±2", _alphabet(h2)),
            Claim("oracle-h2-decision", "H2-cordiality decided by exhaustive search, or reported undecided at the budget", _oracle_decision(h2)),
        ),
        _entry(
            "fstar-counterexample",
            "fstar-counterexample",
            figures.fstar_counterexample(),
            Claim("labeling-h2-cordial", "the drawn labeling is H2-cordial", _labeling_valid(h2)),
            Claim("transform-not-h2-cordial", "f* of the labeling is not H2-cordial", _transform_invalid(2)),
            Claim("transform-hub-value", "f* puts -5 on the hub", _transform_hub_value(0, -5, 2)),
        ),
    )


ENTRIES = _build_entries()
_BY_NAME = {entry.name: entry for entry in ENTRIES}
_BY_NAME.update({alias: entry for entry in ENTRIES for alias in entry.aliases})


def entries() -> list[CatalogEntry]:
    return list(ENTRIES)


def names() -> list[str]:
    return [entry.name for entry in ENTRIES]


def get_entry(name: str) -> CatalogEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownEntryError(
            f"unknown catalog entry '{name}'; known entries: {', '.join(names())}"
        ) from None


def check(name: str, options: Optional[CheckOptions] = None) -> CatalogReport:
    """Evaluate every claim of one entry.

    Raises:
        UnknownEntryError: name is not in the catalog
    """
    entry = get_entry(name)
    options = options or CheckOptions()
    results = []
    for claim in entry.claims:
        passed, detail = claim.evaluate(entry, options)
        logger.info(f"{entry.name}/{claim.name}: {'pass' if passed else 'FAIL'} ({detail})")
        results.append(ClaimResult(entry.name, claim.name, passed, detail))
    return CatalogReport(entry.name, tuple(results))


def check_all(options: Optional[CheckOptions] = None) -> list[CatalogReport]:
    return [check(name, options) for name in names()]
