"""
Stability measurements
Edit distance from a graph to the nearest balanced complete multipartite
graph, and desk-scale stability experiments over enumerated K_k-free graphs.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from turanlab.config import DISTANCE_MAX_N
from turanlab.density import format_fraction
from turanlab.enumeration import enumerate_free_graphs
from turanlab.errors import InvalidArgument, TooLarge
from turanlab.graph import Graph, balanced_partition, complete_graph
from turanlab.graph6 import graph_to_graph6
from turanlab.worker import ShardWorker

logger = logging.getLogger(__name__)

PREFIX_DEPTH = 3


@dataclass
class StabilityReport:
    distance: int
    best_partition: List[List[int]]
    assignment: Tuple[int, ...]
    normalized: Fraction
    parts: int

    def to_dict(self):
        return {
            "distance": self.distance,
            "best_partition": self.best_partition,
            "assignment": list(self.assignment),
            "normalized": format_fraction(self.normalized),
            "parts": self.parts,
        }


def _prefixes(depth: int, parts: int) -> List[Tuple[int, ...]]:
    """Restricted-growth prefixes of the given length, in lexicographic order"""
    prefixes = [()]
    for _ in range(depth):
        grown = []
        for prefix in prefixes:
            top = max(prefix) + 1 if prefix else 0
            for label in range(min(top + 1, parts)):
                grown.append(prefix + (label,))
        prefixes = grown
    return prefixes


def _min_inside_shard(args):
    """
    Least-inside-edge balanced assignment extending one prefix

    Returns (inside edges, assignment) or None if the prefix cannot be
    completed to a balanced partition.
    """
    g, parts, target, prefix = args
    n = g.n
    adj = g.adj
    cap = target[0]
    full_classes = target.count(cap)
    masks = [0] * parts
    assignment = list(prefix) + [0] * (n - len(prefix))
    inside = 0
    for v, label in enumerate(prefix):
        inside += (adj[v] & masks[label]).bit_count()
        masks[label] |= 1 << v
    best: List = [None, None]

    def feasible() -> bool:
        sizes = [m.bit_count() for m in masks]
        if any(s > cap for s in sizes):
            return False
        return sum(1 for s in sizes if s == cap) <= full_classes

    if not feasible():
        return None

    def place(v: int, used: int, inside: int):
        if best[0] is not None and inside >= best[0]:
            return
        if v == n:
            sizes = sorted((m.bit_count() for m in masks if m), reverse=True)
            if sizes == target:
                best[0], best[1] = inside, tuple(assignment)
            return
        for label in range(min(used + 1, parts)):
            size = masks[label].bit_count()
            if size == cap:
                continue
            if size + 1 == cap and sum(1 for m in masks if m.bit_count() == cap) >= full_classes:
                continue
            assignment[v] = label
            masks[label] |= 1 << v
            place(v + 1, max(used, label + 1), inside + (adj[v] & masks[label]).bit_count())
            masks[label] &= ~(1 << v)

    used = max(prefix) + 1 if prefix else 0
    place(len(prefix), used, inside)
    if best[0] is None:
        return None
    return best[0], best[1]


def turan_edit_distance(g: Graph, parts: int, threads: int = 1) -> StabilityReport:
    """
    Minimum |E(g) xor E(T)| over complete multipartite T on a balanced partition

    Args:
        g (Graph): Graph on at most 14 vertices
        parts (int): Number of classes
        threads (int): Workers; shards are assignments of the first vertices

    Returns:
        StabilityReport: distance, the lexicographically least optimal
            assignment and its classes, distance / n^2
    """
    if parts < 1:
        raise InvalidArgument(f"need at least one class, got {parts}")
    if g.n > DISTANCE_MAX_N:
        raise TooLarge(f"partition sweep is exhaustive only up to n={DISTANCE_MAX_N}, got {g.n}")
    n = g.n
    if n == 0:
        return StabilityReport(0, [], (), Fraction(0), parts)
    target = sorted(balanced_partition(n, parts).sizes, reverse=True)
    cross_pairs = (n * n - sum(s * s for s in target)) // 2

    shards = [(g, parts, target, prefix) for prefix in _prefixes(min(n, PREFIX_DEPTH), parts)]
    results = [res for res in ShardWorker(threads).map(_min_inside_shard, shards) if res is not None]
    inside, assignment = min(results)
    distance = cross_pairs - g.edge_count + 2 * inside
    classes = [[v for v in range(n) if assignment[v] == label] for label in range(parts)]
    classes = [cls for cls in classes if cls]
    return StabilityReport(distance, classes, assignment, Fraction(distance, n * n), parts)


def edge_stability_threshold(n: int, chi: int, slack) -> Fraction:
    """Edge floor (1 - 1/(chi-1)) * n^2 / 2 - slack * n^2"""
    if chi < 2:
        raise InvalidArgument(f"need chi >= 2, got {chi}")
    return (1 - Fraction(1, chi - 1)) * Fraction(n * n, 2) - Fraction(slack) * n * n


@dataclass
class ProfileRow:
    edge_floor: int
    graphs: int
    max_distance: Optional[int]
    witness: Optional[Graph] = None

    def to_dict(self):
        return {
            "edge_floor": self.edge_floor,
            "graphs": self.graphs,
            "max_distance": self.max_distance,
            "witness": graph_to_graph6(self.witness) if self.witness is not None else None,
        }


def stability_profile(n: int, k: int, edge_floors: Sequence[int], parts: Optional[int] = None,
                      threads: int = 1) -> List[ProfileRow]:
    """
    Largest edit distance to T_parts(n) among K_k-free n-vertex graphs with at
    least each given number of edges
    """
    if parts is None:
        parts = k - 1
    rows = {floor: ProfileRow(floor, 0, None) for floor in edge_floors}
    lowest = min(edge_floors) if edge_floors else 0
    for g in enumerate_free_graphs(n, complete_graph(k), threads=threads):
        if g.edge_count < lowest:
            continue
        distance = turan_edit_distance(g, parts).distance
        for floor, row in rows.items():
            if g.edge_count >= floor:
                row.graphs += 1
                if row.max_distance is None or distance > row.max_distance:
                    row.max_distance, row.witness = distance, g
    result = [rows[floor] for floor in edge_floors]
    logger.info(f"Stability profile n={n} k={k}: {[(r.edge_floor, r.max_distance) for r in result]}")
    return result
