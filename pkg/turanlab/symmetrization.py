"""
Zykov symmetrization
Turns a graph into a complete multipartite one by cloning vertices with the
largest per-vertex K_r count over their non-neighbors, never decreasing the
number of K_r copies.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from turanlab.config import SYMMETRIZE_STEP_FACTOR
from turanlab.counting import count_cliques
from turanlab.errors import InvalidArgument, NonTermination
from turanlab.graph import Graph, iter_bits
from turanlab.graph6 import graph_to_graph6

logger = logging.getLogger(__name__)

# (kept vertex, replaced vertex, N(K_r) after the step)
Step = Tuple[int, int, int]


@dataclass
class SymmetrizationTrace:
    start: Graph
    end: Graph
    r: int
    steps: List[Step] = field(default_factory=list)
    step_cap: int = 0

    @property
    def counts(self) -> List[int]:
        """N(K_r) before any step, then after every step"""
        return [count_cliques(self.r, self.start)] + [step[2] for step in self.steps]

    def to_dict(self):
        return {
            "start": graph_to_graph6(self.start),
            "end": graph_to_graph6(self.end),
            "r": self.r,
            "steps": [list(step) for step in self.steps],
            "step_cap": self.step_cap,
            "parts": multipartite_classes(self.end),
        }


def _per_vertex_count(rows: List[int], v: int, r: int) -> int:
    if r == 1:
        return 1
    return count_cliques(r - 1, Graph._trusted(rows), rows[v])


def _clone(rows: List[int], kept: int, replaced: int) -> List[int]:
    """replaced takes kept's neighborhood; kept and replaced stay non-adjacent"""
    bit = 1 << replaced
    target = rows[kept]
    new_rows = []
    for v, row in enumerate(rows):
        if v == replaced:
            new_rows.append(target)
        elif target >> v & 1:
            new_rows.append(row | bit)
        else:
            new_rows.append(row & ~bit)
    return new_rows


def symmetrize(g: Graph, r: int) -> SymmetrizationTrace:
    """
    Symmetrize g with respect to K_r

    Phase by phase, the vertex w of the remaining set R with the largest
    K_r count (smallest index on ties) absorbs every non-neighbor in R: each
    one that is not already a twin of w is replaced by a clone of w. R then
    shrinks to R & N(w). Each phase fixes one class of the final complete
    multipartite graph.

    This phase order is used instead of repeatedly picking a non-adjacent
    non-twin pair and cloning the higher-count endpoint onto the other. Both
    keep N(K_r) non-decreasing and end complete multipartite, but a trace
    lists steps in phase order and will not match a pairwise replay. Steps are
    (kept vertex, replaced vertex, N(K_r) after the step).

    Args:
        g (Graph): Start graph
        r (int): Clique size whose count must not decrease

    Returns:
        SymmetrizationTrace: start, end and every replacement step

    Raises:
        NonTermination: more than 10 * n^2 steps
    """
    if r < 1:
        raise InvalidArgument(f"clique size must be positive, got {r}")
    cap = SYMMETRIZE_STEP_FACTOR * g.n * g.n
    rows = list(g.adj)
    steps: List[Step] = []
    remaining = g.vertex_mask
    total = count_cliques(r, g)
    while remaining:
        counts = {v: _per_vertex_count(rows, v, r) for v in iter_bits(remaining)}
        best = max(counts.values())
        w = min(v for v, c in counts.items() if c == best)
        outside = remaining & ~rows[w] & ~(1 << w)
        for v in iter_bits(outside):
            if rows[v] == rows[w]:
                continue
            rows = _clone(rows, w, v)
            total = count_cliques(r, Graph._trusted(rows))
            steps.append((w, v, total))
            if len(steps) > cap:
                raise NonTermination(f"symmetrization exceeded {cap} steps")
        remaining &= rows[w]
    end = Graph._trusted(rows)
    logger.info(f"Symmetrized {g.n}-vertex graph in {len(steps)} steps, N(K_{r}) = {total}")
    return SymmetrizationTrace(start=g, end=end, r=r, steps=steps, step_cap=cap)


def multipartite_classes(g: Graph):
    """
    Class sizes (descending) if g is complete multipartite, else None

    Complete multipartite means non-adjacency is an equivalence relation:
    every non-neighbor of v has exactly v's neighborhood.
    """
    seen = 0
    sizes = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        cls = g.vertex_mask & ~g.adj[v]
        for u in iter_bits(cls):
            if g.adj[u] != g.adj[v]:
                return None
        seen |= cls
        sizes.append(cls.bit_count())
    return sorted(sizes, reverse=True)


def is_complete_multipartite(g: Graph) -> bool:
    return multipartite_classes(g) is not None
