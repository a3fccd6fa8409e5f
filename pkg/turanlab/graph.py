"""
Graph representation and the constructions used throughout turanlab
Simple undirected graphs on at most 64 vertices with one bitset row per vertex
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from turanlab.config import MAX_VERTICES
from turanlab.errors import InvalidArgument, TooLarge

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitset containing the given vertices"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_size(n: int):
    if n < 0:
        raise InvalidArgument(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the limit of {MAX_VERTICES}")


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple graph

    Row adj[v] is the neighbor bitset of vertex v. Build graphs through the
    factories (from_edges, from_rows, ...) which validate the rows; the plain
    constructor trusts its arguments.
    """

    n: int
    adj: Tuple[int, ...]
    edge_count: int

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        _check_size(n)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InvalidArgument(f"row {v} has bits beyond vertex {n - 1}")
            if row >> v & 1:
                raise InvalidArgument(f"vertex {v} has a loop")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise InvalidArgument(f"adjacency is not symmetric at ({v}, {u})")
        return cls._trusted(rows)

    @classmethod
    def _trusted(cls, rows: Sequence[int]) -> "Graph":
        rows = tuple(rows)
        return cls(len(rows), rows, sum(r.bit_count() for r in rows) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        _check_size(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        _check_size(n)
        return cls._trusted([0] * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[Edge]:
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on vertices, relabeled 0.. in increasing order"""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph._trusted(rows)

    def induced_on_mask(self, mask: int) -> "Graph":
        return self.induced_subgraph(iter_bits(mask))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise InvalidArgument(f"loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(rows)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """New graph whose vertex i is old vertex order[i]"""
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        rows = [0] * self.n
        for i, v in enumerate(order):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << position[u]
            rows[i] = row
        return Graph._trusted(rows)

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph._trusted([(full & ~row) & ~(1 << v) for v, row in enumerate(self.adj)])

    def disjoint_union(self, other: "Graph") -> "Graph":
        _check_size(self.n + other.n)
        shift = self.n
        return Graph._trusted(list(self.adj) + [row << shift for row in other.adj])

    def to_numpy(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix"""
        matrix = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.edge_count})"


@dataclass(frozen=True)
class PartSizes:
    """Ordered class sizes of a complete multipartite graph"""

    sizes: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        for s in self.sizes:
            if s < 1:
                raise InvalidArgument(f"class sizes must be positive, got {list(self.sizes)}")

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def __len__(self):
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)


def balanced_partition(n: int, parts: int) -> PartSizes:
    """Sizes of the Turan partition, larger classes first, empty classes dropped"""
    if parts < 1:
        raise InvalidArgument(f"need at least one class, got {parts}")
    if n < 0:
        raise InvalidArgument(f"vertex count must be non-negative, got {n}")
    base, extra = divmod(n, parts)
    sizes = [base + 1 if i < extra else base for i in range(parts)]
    return PartSizes(tuple(s for s in sizes if s > 0))


def complete_multipartite(p: PartSizes) -> Graph:
    """Complete multipartite graph, vertices numbered class by class"""
    n = p.total
    _check_size(n)
    rows = [0] * n
    full = (1 << n) - 1
    start = 0
    for size in p.sizes:
        block = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = full & ~block
        start += size
    return Graph._trusted(rows)


def turan_graph(n: int, parts: int) -> Graph:
    """T_parts(n): balanced complete parts-partite graph on n vertices"""
    _check_size(n)
    return complete_multipartite(balanced_partition(n, parts))


def blow_up(g: Graph, t: int) -> Graph:
    """G[t]: vertex (v, i) gets index v*t + i; copies of one vertex are independent"""
    if t < 1:
        raise InvalidArgument(f"blow-up factor must be positive, got {t}")
    _check_size(g.n * t)
    block = (1 << t) - 1
    rows = []
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= block << (u * t)
        rows.extend([row] * t)
    return Graph._trusted(rows)


def complete_graph(n: int) -> Graph:
    _check_size(n)
    full = (1 << n) - 1
    return Graph._trusted([full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from a seeded numpy generator"""
    _check_size(n)
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    rows_idx, cols_idx = np.nonzero(upper)
    return Graph.from_edges(n, zip(rows_idx.tolist(), cols_idx.tolist()))


def _closes_clique(rows: List[int], u: int, v: int, k: int) -> bool:
    """Would adding uv create a K_k? (uv plus a K_{k-2} in the common neighborhood)"""
    common = rows[u] & rows[v]
    need = k - 2
    if need <= 0:
        return True

    def grow(cand: int, depth: int) -> bool:
        if depth == 0:
            return True
        if cand.bit_count() < depth:
            return False
        for w in iter_bits(cand):
            if grow(cand & rows[w] & ~((1 << (w + 1)) - 1), depth - 1):
                return True
        return False

    return grow(common, need)


def random_kk_free_graph(n: int, k: int, seed: int, density: float = 1.0) -> Graph:
    """
    Random K_k-free graph from the greedy process

    Edges are visited in a seeded random order and each is kept with
    probability density unless it would close a K_k.

    Args:
        n (int): Vertex count
        k (int): Forbidden clique size (k >= 2)
        seed (int): Seed for numpy's generator
        density (float): Keep probability for admissible edges

    Returns:
        Graph: A K_k-free graph
    """
    if k < 2:
        raise InvalidArgument(f"forbidden clique size must be at least 2, got {k}")
    _check_size(n)
    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rows = [0] * n
    for index in rng.permutation(len(pairs)):
        u, v = pairs[index]
        if rng.random() >= density:
            continue
        if _closes_clique(rows, u, v, k):
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(rows)


def add_random_intra_edges(g: Graph, p: PartSizes, count: int, seed: int) -> Graph:
    """
    Add count distinct random edges inside the classes of partition p

    The classes are read as consecutive vertex blocks, matching
    complete_multipartite and turan_graph numbering.
    """
    rng = np.random.default_rng(seed)
    candidates = []
    start = 0
    for size in p.sizes:
        for u in range(start, start + size):
            for v in range(u + 1, start + size):
                if not g.has_edge(u, v):
                    candidates.append((u, v))
        start += size
    if count > len(candidates):
        raise InvalidArgument(f"only {len(candidates)} intra-class pairs available, asked for {count}")
    chosen = rng.choice(len(candidates), size=count, replace=False)
    rows = list(g.adj)
    for index in sorted(chosen.tolist()):
        u, v = candidates[index]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(rows)
