"""
Isomorph-free generation of F-free graphs
Canonical augmentation: every (n-1)-vertex representative is extended by one
vertex; a child is kept when the new vertex is the canonical deletion choice
and no copy of F uses it. External graph6 streams can be filtered instead.
"""

import logging
from typing import Iterable, Iterator, List

from turanlab.canonical import apply_to_mask, canonical_form, orbits
from turanlab.config import BUILTIN_ENUMERATION_MAX_N
from turanlab.counting import ThroughVertexDetector, contains_copy
from turanlab.errors import MalformedGraph6, TooLarge
from turanlab.graph import Graph
from turanlab.graph6 import graph_from_graph6
from turanlab.worker import ShardWorker, split_evenly

logger = logging.getLogger(__name__)


def _neighborhood_representatives(parent: Graph) -> List[int]:
    """One neighborhood mask per orbit of the parent's automorphism group"""
    m = parent.n
    if m == 0:
        return [0]
    identity = tuple(range(m))
    generators = [gen for gen in canonical_form(parent).generators if gen != identity]
    if not generators:
        return list(range(1 << m))
    seen = bytearray(1 << m)
    reps = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        reps.append(mask)
        seen[mask] = 1
        stack = [mask]
        while stack:
            current = stack.pop()
            for gen in generators:
                image = apply_to_mask(gen, current)
                if not seen[image]:
                    seen[image] = 1
                    stack.append(image)
    return reps


def _deletion_invariant(g: Graph, v: int):
    degrees = g.degrees()
    return degrees[v], tuple(sorted(degrees[u] for u in g.neighbors(v)))


def _canonical_deletion_key(child: Graph, new: int):
    """
    Canonical key of child if new is the canonical deletion choice, else None

    The deletion choice is, among vertices with the largest deletion
    invariant, the one placed last by the canonical labeling (up to
    automorphism).
    """
    invariants = [_deletion_invariant(child, v) for v in range(child.n)]
    best = max(invariants)
    if invariants[new] != best:
        return None
    candidates = [v for v in range(child.n) if invariants[v] == best]
    form = canonical_form(child)
    if len(candidates) == 1:
        return form.key
    position = form.position()
    chosen = max(candidates, key=lambda v: position[v])
    if chosen == new:
        return form.key
    rep = orbits(child.n, form.generators)
    if rep[chosen] == rep[new]:
        return form.key
    if canonical_form(child, first=new).key == canonical_form(child, first=chosen).key:
        return form.key
    return None


def augment(parent: Graph, detector: ThroughVertexDetector) -> Iterator[Graph]:
    """Children of one representative, one per isomorphism class they reach"""
    new = parent.n
    seen = set()
    for mask in _neighborhood_representatives(parent):
        rows = [row | (1 << new) if mask >> v & 1 else row for v, row in enumerate(parent.adj)]
        rows.append(mask)
        child = Graph._trusted(rows)
        if detector(child, new):
            continue
        key = _canonical_deletion_key(child, new)
        if key is None or key in seen:
            continue
        seen.add(key)
        yield child


def _augment_shard(args) -> List[Graph]:
    parents, f = args
    detector = ThroughVertexDetector(f)
    children = []
    for parent in parents:
        children.extend(augment(parent, detector))
    return children


def _check_builtin(n: int):
    if n > BUILTIN_ENUMERATION_MAX_N:
        raise TooLarge(
            f"built-in enumeration stops at n={BUILTIN_ENUMERATION_MAX_N}; "
            f"filter an external graph6 stream for n={n}"
        )


def free_graph_levels(n: int, f: Graph, threads: int = 1) -> List[Graph]:
    """Representatives of the (n-1)-vertex level, the parents of level n"""
    _check_builtin(n)
    worker = ShardWorker(threads)
    level = [Graph.empty(0)] if f.n > 0 else []
    for size in range(1, n):
        chunks = split_evenly(level, worker.threads * 4)
        level = [child for shard in worker.map(_augment_shard, [(chunk, f) for chunk in chunks])
                 for child in shard]
        logger.info(f"Level {size}: {len(level)} F-free representatives")
    return level


def enumerate_free_graphs(n: int, f: Graph, threads: int = 1) -> Iterator[Graph]:
    """
    Stream one representative per isomorphism class of n-vertex F-free graphs

    Args:
        n (int): Vertex count (at most 12)
        f (Graph): Forbidden graph
        threads (int): Workers; shards are contiguous runs of parents

    Yields:
        Graph: Pairwise non-isomorphic F-free graphs
    """
    _check_builtin(n)
    if n == 0:
        if f.n > 0:
            yield Graph.empty(0)
        return
    parents = free_graph_levels(n, f, threads)
    if threads <= 1:
        detector = ThroughVertexDetector(f)
        for parent in parents:
            yield from augment(parent, detector)
        return
    worker = ShardWorker(threads)
    chunks = split_evenly(parents, worker.threads * 4)
    for shard in worker.map(_augment_shard, [(chunk, f) for chunk in chunks]):
        yield from shard


def read_graph6_lines(source: Iterable[str]) -> Iterator[Graph]:
    """Decode a graph6 line stream, skipping blank lines"""
    for number, line in enumerate(source, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            yield graph_from_graph6(text)
        except MalformedGraph6 as exc:
            raise MalformedGraph6(str(exc), line=number) from exc


def filter_graph6_stream(source: Iterable[str], f: Graph) -> Iterator[Graph]:
    """Pass through, in order, exactly the F-free graphs of a graph6 stream"""
    for g in read_graph6_lines(source):
        if not contains_copy(f, g):
            yield g
