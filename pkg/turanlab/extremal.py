"""
Exact generalized Turan numbers
ex(n,H,F) as the maximum of N(H,.) over an isomorph-free enumeration of
n-vertex F-free graphs, plus the degenerate-pair test
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from turanlab.canonical import canonical_graph6
from turanlab.config import WITNESS_CAP
from turanlab.counting import ThroughVertexDetector, count_copies, exists_homomorphism
from turanlab.enumeration import augment, filter_graph6_stream, free_graph_levels
from turanlab.graph import Graph
from turanlab.graph6 import graph_from_graph6
from turanlab.worker import ShardWorker, split_evenly

logger = logging.getLogger(__name__)


@dataclass
class ExtremalRecord:
    """ex(n,H,F) with its extremal graphs (canonical graph6, sorted, capped)"""

    n: int
    h_g6: str
    f_g6: str
    value: int
    witnesses: List[str] = field(default_factory=list)
    exhaustive: bool = True
    truncated: bool = False
    attaining: int = 0

    @property
    def key(self):
        return self.n, self.h_g6, self.f_g6

    def witness_graphs(self) -> List[Graph]:
        return [graph_from_graph6(w) for w in self.witnesses]

    def to_dict(self):
        return {
            "n": self.n,
            "h": self.h_g6,
            "f": self.f_g6,
            "value": self.value,
            "witnesses": list(self.witnesses),
            "exhaustive": self.exhaustive,
            "truncated": self.truncated,
            "attaining": self.attaining,
        }


class _MaxTracker:
    """Running maximum with the smallest WITNESS_CAP canonical witnesses"""

    def __init__(self, cap: int = WITNESS_CAP):
        self.cap = cap
        self.value: Optional[int] = None
        self.witnesses: List[str] = []
        self.attaining = 0
        self.truncated = False
        self.graphs = 0

    def offer(self, value: int, witness: Graph):
        self.graphs += 1
        if self.value is None or value > self.value:
            self.value = value
            self.witnesses = []
            self.attaining = 0
            self.truncated = False
        if value == self.value:
            self.attaining += 1
            self.witnesses.append(canonical_graph6(witness))
            if len(self.witnesses) > 2 * self.cap:
                self._trim()

    def merge(self, other: "_MaxTracker"):
        self.graphs += other.graphs
        if other.value is None:
            return
        if self.value is None or other.value > self.value:
            self.value, self.witnesses, self.attaining = other.value, list(other.witnesses), other.attaining
            self.truncated = other.truncated
        elif other.value == self.value:
            self.witnesses.extend(other.witnesses)
            self.attaining += other.attaining
            self.truncated = self.truncated or other.truncated
        self._trim()

    def _trim(self):
        distinct = sorted(set(self.witnesses))
        if len(distinct) > self.cap:
            self.truncated = True
        self.witnesses = distinct[: self.cap]


def _extremal_shard(args) -> _MaxTracker:
    parents, h, f = args
    detector = ThroughVertexDetector(f)
    tracker = _MaxTracker()
    for parent in parents:
        for child in augment(parent, detector):
            tracker.offer(count_copies(h, child), child)
    tracker._trim()
    return tracker


def _record(n: int, h: Graph, f: Graph, tracker: _MaxTracker, exhaustive: bool) -> ExtremalRecord:
    tracker._trim()
    value = tracker.value if tracker.value is not None else 0
    return ExtremalRecord(
        n=n,
        h_g6=canonical_graph6(h),
        f_g6=canonical_graph6(f),
        value=value,
        witnesses=list(tracker.witnesses),
        exhaustive=exhaustive,
        truncated=tracker.truncated,
        attaining=tracker.attaining,
    )


def generalized_turan(n: int, h: Graph, f: Graph, threads: int = 1) -> ExtremalRecord:
    """
    ex(n, h, f) by exhaustive enumeration

    Args:
        n (int): Vertex count (built-in enumeration limit applies)
        h (Graph): Counted graph
        f (Graph): Forbidden graph
        threads (int): Workers; shards are runs of (n-1)-vertex parents

    Returns:
        ExtremalRecord: value, all extremal graphs up to the witness cap
    """
    if n == 0:
        tracker = _MaxTracker()
        if f.n > 0:
            tracker.offer(count_copies(h, Graph.empty(0)), Graph.empty(0))
        return _record(n, h, f, tracker, exhaustive=True)

    parents = free_graph_levels(n, f, threads)
    worker = ShardWorker(threads)
    chunks = split_evenly(parents, worker.threads * 4)
    tracker = _MaxTracker()
    for shard in worker.map(_extremal_shard, [(chunk, h, f) for chunk in chunks]):
        tracker.merge(shard)
    logger.info(f"ex({n}, H, F) = {tracker.value} over {tracker.graphs} F-free graphs")
    return _record(n, h, f, tracker, exhaustive=True)


def generalized_turan_from_stream(lines: Iterable[str], n: int, h: Graph, f: Graph) -> ExtremalRecord:
    """
    Maximum of N(h, .) over the F-free n-vertex graphs of an external stream

    Freeness is re-checked here; completeness of the stream cannot be, so the
    record is marked non-exhaustive. Graphs of another order are skipped.
    """
    tracker = _MaxTracker()
    skipped = 0
    for g in filter_graph6_stream(lines, f):
        if g.n != n:
            skipped += 1
            continue
        tracker.offer(count_copies(h, g), g)
    if skipped:
        logger.warning(f"Skipped {skipped} stream graphs whose order is not {n}")
    tracker._trim()
    record = _record(n, h, f, tracker, exhaustive=False)
    return record


def is_degenerate_pair(h: Graph, f: Graph) -> bool:
    """
    True iff F is a subgraph of a blow-up of H, i.e. a homomorphism F -> H exists

    A degenerate pair has ex(n, H, F) = o(n^|V(H)|).
    """
    return exists_homomorphism(f, h)
