"""
Canonical labeling and automorphism generators
Degree refinement to an equitable ordered partition, then individualization
search that keeps the labeling with the largest adjacency bit-string.
Automorphisms found on the way (twin swaps, equal leaves) prune the search.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from turanlab.graph import Graph, iter_bits
from turanlab.graph6 import graph_to_graph6

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


@dataclass
class CanonicalForm:
    """Result of a canonical labeling search"""

    key: int
    order: List[int]
    generators: List[Permutation] = field(default_factory=list)

    def position(self) -> List[int]:
        """position()[v] is the canonical index of vertex v"""
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def labeling_key(g: Graph, order: Sequence[int]) -> int:
    """Upper triangle of g relabeled by order, read in graph6 bit order"""
    adj = g.adj
    key = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            key = (key << 1) | (row >> order[i] & 1)
    return key


def refine(g: Graph, cells: List[List[int]]) -> List[List[int]]:
    """
    Split cells until every vertex of a cell sees each cell equally often

    Split pieces are ordered by their neighbor-count signature, so the result
    depends only on the isomorphism type of (g, cells).
    """
    adj = g.adj
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: List[List[int]] = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twin_swaps(g: Graph, cells: List[List[int]]) -> List[Permutation]:
    """Transpositions of same-cell twins: N(u) - {v} == N(v) - {u}"""
    swaps = []
    adj = g.adj
    identity = list(range(g.n))
    for cell in cells:
        for a in range(len(cell)):
            u = cell[a]
            for b in range(a + 1, len(cell)):
                v = cell[b]
                if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                    swap = identity[:]
                    swap[u], swap[v] = v, u
                    swaps.append(tuple(swap))
                    break
    return swaps


def orbits(n: int, generators: Sequence[Permutation]) -> List[int]:
    """Orbit representative (smallest member) of every vertex"""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for x in range(n):
            a, b = find(x), find(gen[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(x) for x in range(n)]


class _Search:
    """Individualization-refinement search for the largest labeling key"""

    def __init__(self, g: Graph, cells: List[List[int]]):
        self.g = g
        self.cells = cells
        self.generators: List[Permutation] = _twin_swaps(g, cells)
        self.first_key: Optional[int] = None
        self.first_order: Optional[List[int]] = None
        self.best_key: Optional[int] = None
        self.best_order: Optional[List[int]] = None

    def run(self) -> CanonicalForm:
        self._visit(refine(self.g, self.cells), [])
        return CanonicalForm(self.best_key, self.best_order, self.generators)

    def _record_automorphism(self, source: List[int], target: List[int]):
        gen = [0] * self.g.n
        for a, b in zip(source, target):
            gen[a] = b
        gen = tuple(gen)
        if gen != tuple(range(self.g.n)) and gen not in self.generators:
            self.generators.append(gen)

    def _leaf(self, order: List[int]):
        key = labeling_key(self.g, order)
        if self.first_key is None:
            self.first_key, self.first_order = key, order
        elif key == self.first_key:
            self._record_automorphism(self.first_order, order)
        if self.best_key is None or key > self.best_key:
            self.best_key, self.best_order = key, order
        elif key == self.best_key and self.best_order is not self.first_order:
            self._record_automorphism(self.best_order, order)

    def _visit(self, cells: List[List[int]], prefix: List[int]):
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            self._leaf([cell[0] for cell in cells])
            return
        explored: List[int] = []
        for v in cells[target]:
            if explored:
                fixing = [gen for gen in self.generators if all(gen[p] == p for p in prefix)]
                rep = orbits(self.g.n, fixing)
                if any(rep[v] == rep[w] for w in explored):
                    continue
            explored.append(v)
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self._visit(refine(self.g, child), prefix + [v])


def canonical_form(g: Graph, first: Optional[int] = None) -> CanonicalForm:
    """
    Canonical labeling of g

    Args:
        g (Graph): Graph to label
        first (int): Vertex to individualize before the search; two vertices
            give equal keys exactly when an automorphism maps one to the other

    Returns:
        CanonicalForm: key, canonical order and automorphism generators
    """
    if g.n == 0:
        return CanonicalForm(0, [], [])
    if first is None:
        cells = [list(range(g.n))]
    else:
        cells = [[first], [v for v in range(g.n) if v != first]]
        cells = [cell for cell in cells if cell]
    degree_cells = []
    for cell in cells:
        groups = {}
        for v in cell:
            groups.setdefault(g.degree(v), []).append(v)
        degree_cells.extend(groups[d] for d in sorted(groups))
    return _Search(g, degree_cells).run()


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_form(g).order)


def canonical_graph6(g: Graph) -> str:
    """graph6 string of the canonical relabeling; equal for isomorphic graphs"""
    return graph_to_graph6(canonical_graph(g))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a).key == canonical_form(b).key


def automorphism_generators(g: Graph) -> List[Permutation]:
    return canonical_form(g).generators


def apply_to_mask(gen: Permutation, mask: int) -> int:
    """Image of a vertex set under a permutation"""
    image = 0
    for v in iter_bits(mask):
        image |= 1 << gen[v]
    return image
