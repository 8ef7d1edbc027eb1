"""Exhaustive labeling search with pruning and prefix-split parallelism.

The search walks edges in canonical order and tries label values in the
order -k..-1, +1..+k, so witnesses come out in lexicographic order. The
first ``split_depth`` edges are expanded up front into prefix tasks. Tasks
run on a thread pool and their results are merged in prefix order, so
decisions and canonical witnesses do not depend on how many workers ran
them. A node budget is shared out between the tasks by index; statistics sum
the work of every task, and match across worker counts whenever no witness
limit cuts the run short.
"""

from __future__ import annotations

import threading
import time
from collections import Counter
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

import config
from errors import SearchInvariantError
from graphs.core import Graph
from labeling.model import KindName, Labeling
from labeling.verify import verify
from logging_config import get_logger, log_search_progress
from oracle.models import Decision, SearchConfig, SearchOutcome, SearchStatistics

logger = get_logger(__name__)

CHECK_EVERY = 1024


@dataclass
class _TaskResult:
    witnesses: list[tuple[int, ...]] = field(default_factory=list)
    nodes: int = 0
    assignments: int = 0
    prunes: int = 0
    capped: bool = False
    cancelled: bool = False


class _Search:
    """Mutable DFS state over one graph; one instance per task."""

    def __init__(self, g: Graph, cfg: SearchConfig):
        self.g = g
        self.cfg = cfg
        self.kind = cfg.kind
        self.k = cfg.kind.max_label
        self.m = g.m
        self.values = cfg.kind.label_values
        self.positive = tuple(x for x in self.values if x > 0)

        self.labels = [0] * g.m
        self.sums = [0] * g.n
        self.left = g.degrees()
        self.open = sum(1 for d in self.left if d > 0)
        self.completed: Counter[int] = Counter()
        self.edge_diff = [0] * (self.k + 1)
        self.constant: Optional[int] = None
        self.constant_set_at: Optional[int] = None

        self.result = _TaskResult()
        self.cap: Optional[int] = None
        self.limit: Optional[int] = cfg.limit
        self.should_stop: Callable[[], bool] = lambda: False
        self.halt = False

    def values_for(self, index: int) -> tuple[int, ...]:
        if index == 0 and self.cfg.symmetry:
            return self.positive
        return self.values

    # Vertex conditions

    def _vertex_ok(self, s: int) -> bool:
        name = self.kind.name
        if name is KindName.H_CORDIAL:
            return s != 0 and (self.constant is None or abs(s) == self.constant)
        if name is KindName.SEMI_H_CORDIAL:
            return abs(s) <= 1
        if name is KindName.ZERO_M_CORDIAL:
            return s == 0
        return 1 <= abs(s) <= self.k

    def _vertex_bound(self) -> Optional[int]:
        name = self.kind.name
        if name is KindName.H_CORDIAL:
            return self.constant or None
        if name is KindName.SEMI_H_CORDIAL:
            return 1
        if name is KindName.ZERO_M_CORDIAL:
            return 0
        return self.k

    def _balanced_value(self, s: int) -> Optional[int]:
        """Magnitude whose completed-vertex tally must balance, if any."""
        name = self.kind.name
        if name is KindName.H_CORDIAL:
            return self.constant or None
        if name is KindName.SEMI_H_CORDIAL:
            return 1
        if name is KindName.HK_CORDIAL and 1 <= abs(s) <= self.k:
            return abs(s)
        return None

    # Assignment and undo

    def assign(self, index: int, value: int) -> bool:
        """Apply one label; False when a pruning rule rejects the prefix.

        The label stays applied either way; callers always undo().
        """
        u, v = self.g.edges[index]
        self.labels[index] = value
        self.sums[u] += value
        self.sums[v] += value
        self.left[u] -= 1
        self.left[v] -= 1
        magnitude = abs(value)
        self.edge_diff[magnitude] += 1 if value > 0 else -1

        finished = [x for x in (u, v) if self.left[x] == 0]
        for x in finished:
            self.completed[self.sums[x]] += 1
            self.open -= 1
        if finished and self.constant is None and self.kind.name is KindName.H_CORDIAL:
            self.constant = abs(self.sums[finished[0]])
            self.constant_set_at = index

        if self.cfg.prune_vertex:
            bound = self._vertex_bound()
            for x in (u, v):
                s = self.sums[x]
                if self.left[x] == 0:
                    if not self._vertex_ok(s):
                        return False
                elif bound is not None and abs(s) - self.left[x] * self.k > bound:
                    return False

        if self.cfg.prune_cardinality:
            remaining = self.m - index - 1
            if abs(self.edge_diff[magnitude]) - remaining > 1:
                return False
            for x in finished:
                c = self._balanced_value(self.sums[x])
                if c is None:
                    continue
                if abs(self.completed[c] - self.completed[-c]) - self.open > 1:
                    return False
        return True

    def undo(self, index: int, value: int) -> None:
        u, v = self.g.edges[index]
        for x in (u, v):
            if self.left[x] == 0:
                self.completed[self.sums[x]] -= 1
                self.open += 1
        self.left[u] += 1
        self.left[v] += 1
        self.sums[u] -= value
        self.sums[v] -= value
        self.edge_diff[abs(value)] -= 1 if value > 0 else -1
        self.labels[index] = 0
        if self.constant_set_at == index:
            self.constant = None
            self.constant_set_at = None

    # Final check on a complete assignment

    def accepts(self) -> bool:
        sums = self.sums
        counts = Counter(sums)
        name = self.kind.name
        if name is KindName.ZERO_M_CORDIAL:
            return all(s == 0 for s in sums)
        if name is KindName.H_CORDIAL:
            if not sums:
                return False
            constant = abs(sums[0])
            return (
                constant > 0
                and all(abs(s) == constant for s in sums)
                and abs(self.edge_diff[1]) <= 1
                and abs(counts[constant] - counts[-constant]) <= 1
            )
        if name is KindName.SEMI_H_CORDIAL:
            return (
                all(abs(s) <= 1 for s in sums)
                and abs(self.edge_diff[1]) <= 1
                and abs(counts[1] - counts[-1]) <= 1
            )
        return all(1 <= abs(s) <= self.k for s in sums) and all(
            abs(self.edge_diff[i]) <= 1 and abs(counts[i] - counts[-i]) <= 1
            for i in range(1, self.k + 1)
        )

    # Depth-first search

    def _tick(self) -> bool:
        """Count one node; False when the task must stop first."""
        result = self.result
        if self.cap is not None and result.nodes >= self.cap:
            result.capped = True
            self.halt = True
            return False
        if result.nodes % CHECK_EVERY == 0 and self.should_stop():
            result.cancelled = True
            self.halt = True
            return False
        result.nodes += 1
        return True

    def dfs(self, index: int) -> None:
        if index == self.m:
            self.result.assignments += 1
            if self.accepts():
                self.result.witnesses.append(tuple(self.labels))
                if self.limit is not None and len(self.result.witnesses) >= self.limit:
                    self.halt = True
            return
        for value in self.values_for(index):
            if not self._tick():
                return
            if self.assign(index, value):
                self.dfs(index + 1)
            else:
                self.result.prunes += 1
            self.undo(index, value)
            if self.halt:
                return

    def prefixes(self, depth: int, index: int = 0) -> list[tuple[int, ...]]:
        """Surviving assignments of the first ``depth`` edges, in search order."""
        if index == depth:
            return [tuple(self.labels[:depth])]
        found: list[tuple[int, ...]] = []
        for value in self.values_for(index):
            if not self._tick():
                return found
            if self.assign(index, value):
                found.extend(self.prefixes(depth, index + 1))
            else:
                self.result.prunes += 1
            self.undo(index, value)
            if self.halt:
                return found
        return found


class _StopSignal:
    """Smallest prefix index known to satisfy the witness limit on its own."""

    def __init__(self, total: int):
        self._lock = threading.Lock()
        self.index = total
        self.event = threading.Event()

    def report(self, index: int) -> None:
        with self._lock:
            if index < self.index:
                self.index = index
        self.event.set()


def _run_task(
    g: Graph,
    cfg: SearchConfig,
    prefix: Sequence[int],
    cap: Optional[int],
    index: int,
    signal: _StopSignal,
) -> _TaskResult:
    search = _Search(g, cfg)
    search.cap = cap
    if cfg.canonical:
        search.should_stop = lambda: signal.index < index
    else:
        search.should_stop = signal.event.is_set
    if search.should_stop():
        return _TaskResult(cancelled=True)
    for position, value in enumerate(prefix):
        search.assign(position, value)
    search.dfs(len(prefix))
    result = search.result
    if cfg.limit is not None and len(result.witnesses) >= cfg.limit:
        signal.report(index)
    return result


def _resolve(cfg: SearchConfig) -> tuple[Optional[int], int, int]:
    budget = cfg.budget if cfg.budget is not None else config.ORACLE_BUDGET
    workers = cfg.workers if cfg.workers is not None else config.ORACLE_WORKERS
    depth = cfg.split_depth if cfg.split_depth is not None else config.ORACLE_SPLIT_DEPTH
    return budget, workers, depth


def _task_caps(remaining: Optional[int], tasks: int) -> list[Optional[int]]:
    """Split the node budget left after splitting evenly across prefix tasks.

    Shares depend only on the task index, so the total never exceeds the
    budget and the same tasks run out whatever the worker count.
    """
    if remaining is None:
        return [None] * tasks
    share, extra = divmod(max(remaining, 0), tasks)
    return [share + (1 if index < extra else 0) for index in range(tasks)]


def _search(g: Graph, cfg: SearchConfig) -> SearchOutcome:
    started = time.perf_counter()
    budget, workers, depth = _resolve(cfg)
    depth = min(depth, g.m)
    log_search_progress("start", 0, kind=str(cfg.kind), n=g.n, m=g.m, workers=workers)

    splitter = _Search(g, cfg)
    splitter.cap = budget
    prefixes = splitter.prefixes(depth)
    nodes = splitter.result.nodes
    prunes = splitter.result.prunes
    assignments = 0

    witnesses: list[tuple[int, ...]] = []
    truncated = splitter.result.capped
    results: list[_TaskResult] = []
    if not truncated and prefixes:
        caps = _task_caps(None if budget is None else budget - nodes, len(prefixes))
        signal = _StopSignal(len(prefixes))
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(_run_task, g, cfg, prefix, caps[index], index, signal)
                for index, prefix in enumerate(prefixes)
            ]
            results = [future.result() for future in futures]

    nodes += sum(result.nodes for result in results)
    assignments += sum(result.assignments for result in results)
    prunes += sum(result.prunes for result in results)

    for result in results:
        if result.cancelled:
            if cfg.canonical:
                break
            continue
        if result.capped:
            truncated = True
            if cfg.canonical:
                # witnesses from this task are still sound and precede the cut
                witnesses.extend(result.witnesses)
                break
        witnesses.extend(result.witnesses)
        if cfg.canonical and cfg.limit is not None and len(witnesses) >= cfg.limit:
            break

    if cfg.limit is not None:
        witnesses = witnesses[: cfg.limit]
    labelings = tuple(Labeling(g, w) for w in witnesses)
    for labeling in labelings:
        report = verify(labeling, cfg.kind)
        if not report.valid:
            raise SearchInvariantError(
                f"oracle witness {labeling.labels} fails {cfg.kind}: "
                + "; ".join(v.detail for v in report.violations)
            )

    if labelings:
        decision = Decision.FOUND
    elif truncated:
        decision = Decision.UNDECIDED
    else:
        decision = Decision.EXHAUSTED

    statistics = SearchStatistics(
        nodes=nodes,
        assignments=assignments,
        prunes=prunes,
        tasks=len(prefixes),
        wall_time=time.perf_counter() - started,
    )
    log_search_progress("end", nodes, decision=decision.value, witnesses=len(labelings))
    logger.info(
        f"{cfg.kind} on n={g.n} m={g.m}: {decision.value} "
        f"({nodes} nodes, {assignments} complete, {prunes} prunes)"
    )
    return SearchOutcome(
        decision=decision,
        kind=cfg.kind,
        statistics=statistics,
        witnesses=labelings,
        truncated=truncated,
    )


def decide(g: Graph, cfg: SearchConfig) -> SearchOutcome:
    """Decide whether g has a labeling of cfg.kind, returning one witness if so."""
    return _search(g, replace(cfg, limit=1))


def enumerate_labelings(g: Graph, cfg: SearchConfig) -> SearchOutcome:
    """Collect up to cfg.limit valid labelings (all of them when limit is None)."""
    return _search(g, cfg)


def decide_with_symmetry(g: Graph, cfg: SearchConfig) -> SearchOutcome:
    """decide() with the first edge fixed positive.

    Every definition is invariant under negating all labels, so the decision
    is unchanged while the space halves. The canonical witness is the
    smallest one with a positive first label.
    """
    return decide(g, replace(cfg, symmetry=True))
