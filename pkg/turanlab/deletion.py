"""
Greedy min-copy vertex deletion
Repeatedly removes a vertex lying in the fewest copies of K_r until every
remaining vertex is above the degree-type threshold, or the deletion budget
ceil(alpha * n) is spent.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil, factorial
from typing import List, Optional, Tuple

from turanlab.counting import count_cliques
from turanlab.density import clique_density_limit, format_fraction
from turanlab.errors import InvalidArgument
from turanlab.graph import Graph, iter_bits

logger = logging.getLogger(__name__)


class DeletionOutcome(str, Enum):
    ALL_ABOVE_THRESHOLD = "AllAboveThreshold"
    DENSE_SUBGRAPH = "DenseSubgraph"
    HYPOTHESIS_NOT_MET = "HypothesisNotMet"


# (deleted vertex, its K_r count, order of the graph before deletion)
DeletionStep = Tuple[int, int, int]


def _vertex_count(g: Graph, v: int, alive: int, r: int) -> int:
    if r == 1:
        return 1
    return count_cliques(r - 1, g, g.adj[v] & alive)


@dataclass
class DeletionTrace:
    alpha: Fraction
    beta: Fraction
    q: Fraction
    r: int
    k: int
    start: Graph
    steps: List[DeletionStep] = field(default_factory=list)
    outcome: Optional[DeletionOutcome] = None
    remaining: List[int] = field(default_factory=list)
    hypothesis_holds: bool = False

    @property
    def budget(self) -> int:
        return ceil(self.alpha * self.start.n)

    def threshold_at(self, order: int) -> Fraction:
        """(1 - alpha) * q * order^(r-1) / (r-1)!"""
        return (1 - self.alpha) * self.q * order ** (self.r - 1) / factorial(self.r - 1)

    @property
    def subgraph(self) -> Graph:
        return self.start.induced_subgraph(self.remaining)

    def replay(self) -> bool:
        """Re-run the trace on start and confirm every deletion was a minimum"""
        alive = self.start.vertex_mask
        for vertex, count, order in self.steps:
            if order != alive.bit_count() or not alive >> vertex & 1:
                return False
            counts = {v: _vertex_count(self.start, v, alive, self.r) for v in iter_bits(alive)}
            if counts[vertex] != count or count != min(counts.values()):
                return False
            alive &= ~(1 << vertex)
        return len(self.steps) <= self.budget

    def to_dict(self):
        return {
            "alpha": format_fraction(self.alpha),
            "beta": format_fraction(self.beta),
            "q": format_fraction(self.q),
            "r": self.r,
            "k": self.k,
            "steps": [list(step) for step in self.steps],
            "outcome": self.outcome.value if self.outcome else None,
            "remaining": self.remaining,
            "threshold": format_fraction(self.threshold_at(len(self.remaining))),
            "hypothesis_holds": self.hypothesis_holds,
        }


def greedy_min_copy_deletion(g: Graph, r: int, k: int, alpha, q=None, beta=None) -> DeletionTrace:
    """
    Delete min-count vertices until all are above threshold or the budget is spent

    Args:
        g (Graph): Start graph
        r (int): Clique size counted per vertex
        k (int): Forbidden clique size, 1 <= r < k
        alpha: Deletion budget fraction in (0, 1)
        q: Density constant, default r! * C(k-1, r) / (k-1)^r
        beta: Slack of the count hypothesis, default alpha

    Returns:
        DeletionTrace: steps with original vertex labels and the outcome
    """
    if not 1 <= r < k:
        raise InvalidArgument(f"need 1 <= r < k, got r={r}, k={k}")
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise InvalidArgument(f"alpha must lie in (0, 1), got {format_fraction(alpha)}")
    beta = alpha if beta is None else Fraction(beta)
    q = clique_density_limit(r, k) if q is None else Fraction(q)

    n = g.n
    trace = DeletionTrace(alpha=alpha, beta=beta, q=q, r=r, k=k, start=g)
    trace.hypothesis_holds = count_cliques(r, g) > (1 - beta) * q * Fraction(n ** r, factorial(r))

    alive = g.vertex_mask
    while True:
        order = alive.bit_count()
        # once the budget is spent only the dense check remains
        if len(trace.steps) == trace.budget or not order:
            break
        counts = {v: _vertex_count(g, v, alive, r) for v in iter_bits(alive)}
        threshold = trace.threshold_at(order)
        if all(count > threshold for count in counts.values()):
            trace.outcome = DeletionOutcome.ALL_ABOVE_THRESHOLD
            break
        low = min(counts.values())
        victim = min(v for v, count in counts.items() if count == low)
        trace.steps.append((victim, low, order))
        alive &= ~(1 << victim)

    trace.remaining = list(iter_bits(alive))
    if trace.outcome is None:
        order = alive.bit_count()
        dense = count_cliques(r, g, alive) > q * Fraction(order ** r, factorial(r))
        trace.outcome = DeletionOutcome.DENSE_SUBGRAPH if dense else DeletionOutcome.HYPOTHESIS_NOT_MET
    logger.info(f"Deletion stopped after {len(trace.steps)} steps: {trace.outcome.value}")
    return trace
