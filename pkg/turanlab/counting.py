"""
Copy counting and colorability primitives
N(H,G) by injective-homomorphism backtracking over bitset rows, the clique
fast path, exact chromatic number, homomorphism existence and closed-form
counts in complete multipartite graphs
"""

import logging
from collections import Counter
from fractions import Fraction
from math import comb, factorial, perm
from typing import Dict, Iterator, List, Optional, Tuple

from turanlab.config import COUNT_LIMIT
from turanlab.errors import InvalidArgument, Overflow
from turanlab.graph import Graph, PartSizes, iter_bits
from turanlab.worker import ShardWorker

logger = logging.getLogger(__name__)

# (order, back-neighbor positions, required degree per position)
Plan = Tuple[List[int], List[List[int]], List[int]]


def _checked(value: int, what: str) -> int:
    if value > COUNT_LIMIT:
        raise Overflow(f"{what} = {value} does not fit in a signed 64-bit word")
    return value


def _search_plan(h: Graph, start: Optional[int] = None) -> Plan:
    """
    Greedy connected ordering of the pattern vertices

    Each next vertex has the most already-placed neighbors, then the largest
    degree, then the smallest index.
    """
    degrees = h.degrees()
    order: List[int] = []
    placed = 0
    while len(order) < h.n:
        if not order and start is not None:
            u = start
        else:
            u = max(
                (x for x in range(h.n) if not placed >> x & 1),
                key=lambda x: ((h.adj[x] & placed).bit_count(), degrees[x], -x),
            )
        order.append(u)
        placed |= 1 << u
    position = {u: i for i, u in enumerate(order)}
    back = [sorted(position[w] for w in iter_bits(h.adj[u]) if position[w] < i)
            for i, u in enumerate(order)]
    need = [degrees[u] for u in order]
    return order, back, need


def _degree_masks(g: Graph, need: List[int], host_mask: int) -> List[int]:
    """For each required degree, the host vertices whose degree inside host_mask reaches it"""
    host_degree = {v: (g.adj[v] & host_mask).bit_count() for v in iter_bits(host_mask)}
    cache: Dict[int, int] = {}
    masks = []
    for d in need:
        if d not in cache:
            m = 0
            for v, deg in host_degree.items():
                if deg >= d:
                    m |= 1 << v
            cache[d] = m
        masks.append(cache[d])
    return masks


def _count_with_plan(g: Graph, plan: Plan, host_mask: int, roots: int) -> int:
    """Injective homomorphisms whose first plan vertex lands in roots"""
    order, back, need = plan
    k = len(order)
    if k == 0:
        return 1
    adj = g.adj
    masks = _degree_masks(g, need, host_mask)
    images = [0] * k
    last = k - 1

    def extend(i: int, used: int) -> int:
        cand = masks[i] & ~used
        for p in back[i]:
            cand &= adj[images[p]]
        if i == last:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            images[i] = low.bit_length() - 1
            total += extend(i + 1, used | low)
            cand ^= low
        return total

    first = masks[0] & roots
    if last == 0:
        return first.bit_count()
    total = 0
    for v in iter_bits(first):
        images[0] = v
        total += extend(1, 1 << v)
    return total


def _exists_with_plan(g: Graph, plan: Plan, host_mask: int, roots: int) -> bool:
    order, back, need = plan
    k = len(order)
    if k == 0:
        return True
    adj = g.adj
    masks = _degree_masks(g, need, host_mask)
    images = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = masks[i] & ~used
        if i == 0:
            cand &= roots
        for p in back[i]:
            cand &= adj[images[p]]
        while cand:
            low = cand & -cand
            images[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    return extend(0, 0)


def _count_shard(args) -> int:
    g, plan, host_mask, roots = args
    return _count_with_plan(g, plan, host_mask, roots)


def count_injective_homomorphisms(h: Graph, g: Graph, threads: int = 1,
                                  host_mask: Optional[int] = None) -> int:
    """
    Number of injective edge-preserving maps V(h) -> V(g)

    Args:
        h (Graph): Pattern
        g (Graph): Host
        threads (int): Workers; shards split the first-vertex assignment
        host_mask (int): Restrict images to these host vertices

    Returns:
        int: Exact count
    """
    if host_mask is None:
        host_mask = g.vertex_mask
    if h.n > host_mask.bit_count():
        return 0
    plan = _search_plan(h)
    if threads <= 1 or h.n < 2:
        return _count_with_plan(g, plan, host_mask, host_mask)
    shards = [(g, plan, host_mask, 1 << v) for v in iter_bits(host_mask)]
    return sum(ShardWorker(threads).map(_count_shard, shards))


def count_automorphisms(h: Graph) -> int:
    """|Aut(h)|: an injective homomorphism of a finite graph into itself is an automorphism"""
    return count_injective_homomorphisms(h, h)


def is_complete(h: Graph) -> bool:
    return h.edge_count == h.n * (h.n - 1) // 2


def count_copies(h: Graph, g: Graph, threads: int = 1) -> int:
    """
    N(h, g): unlabeled, not necessarily induced copies of h in g

    Args:
        h (Graph): Pattern
        g (Graph): Host
        threads (int): Workers for the first-vertex split

    Returns:
        int: Injective homomorphisms divided by |Aut(h)|
    """
    if h.n == 0:
        return 1
    if h.n > g.n:
        return 0
    if is_complete(h):
        return count_cliques(h.n, g)
    labeled = count_injective_homomorphisms(h, g, threads=threads)
    return _checked(labeled // count_automorphisms(h), "copy count")


def count_copies_in_mask(h: Graph, g: Graph, host_mask: int, aut: Optional[int] = None) -> int:
    """N(h, g[host_mask]) without building the induced subgraph"""
    if h.n == 0:
        return 1
    if is_complete(h):
        return count_cliques(h.n, g, host_mask)
    if aut is None:
        aut = count_automorphisms(h)
    return count_injective_homomorphisms(h, g, host_mask=host_mask) // aut


def count_copies_through_vertex(h: Graph, g: Graph, v: int) -> int:
    """Copies of h in g whose vertex set contains v"""
    if not 0 <= v < g.n:
        raise InvalidArgument(f"vertex {v} outside 0..{g.n - 1}")
    if h.n == 0:
        return 0
    if is_complete(h):
        if h.n == 1:
            return 1
        return count_cliques(h.n - 1, g, g.adj[v])
    labeled = 0
    for u in range(h.n):
        plan = _search_plan(h, start=u)
        labeled += _count_with_plan(g, plan, g.vertex_mask, 1 << v)
    return _checked(labeled // count_automorphisms(h), "copy count")


def count_cliques(r: int, g: Graph, host_mask: Optional[int] = None) -> int:
    """
    N(K_r, g) by recursive neighbor-bitset intersection

    Every clique is counted once, from its smallest vertex upward.
    """
    if r < 1:
        raise InvalidArgument(f"clique size must be positive, got {r}")
    adj = g.adj
    if host_mask is None:
        host_mask = g.vertex_mask

    def grow(cand: int, depth: int) -> int:
        if depth == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            nxt = cand & adj[low.bit_length() - 1]
            if nxt.bit_count() >= depth - 1:
                total += grow(nxt, depth - 1)
        return total

    return _checked(grow(host_mask, r), "clique count")


def contains_copy(h: Graph, g: Graph, host_mask: Optional[int] = None) -> bool:
    """True iff g (restricted to host_mask) has a subgraph isomorphic to h"""
    if host_mask is None:
        host_mask = g.vertex_mask
    if h.n > host_mask.bit_count():
        return False
    plan = _search_plan(h)
    return _exists_with_plan(g, plan, host_mask, host_mask)


def has_clique(r: int, g: Graph, host_mask: Optional[int] = None) -> bool:
    """True iff g restricted to host_mask contains K_r"""
    adj = g.adj
    if host_mask is None:
        host_mask = g.vertex_mask

    def grow(cand: int, depth: int) -> bool:
        if depth == 0:
            return True
        if cand.bit_count() < depth:
            return False
        while cand:
            low = cand & -cand
            cand ^= low
            if grow(cand & adj[low.bit_length() - 1], depth - 1):
                return True
        return False

    return grow(host_mask, r)


class ThroughVertexDetector:
    """
    Reusable test for "some copy of h uses vertex v"

    Search plans rooted at each pattern vertex are built once, so the test is
    cheap to repeat over many hosts (one call per augmented child during
    enumeration).
    """

    def __init__(self, h: Graph):
        self.h = h
        self.clique = is_complete(h)
        self.degrees = h.degrees()
        self.plans = [] if self.clique else [_search_plan(h, start=u) for u in range(h.n)]

    def __call__(self, g: Graph, v: int) -> bool:
        h = self.h
        if h.n == 0 or h.n > g.n:
            return False
        if self.clique:
            return has_clique(h.n - 1, g, g.adj[v])
        degree_v = g.degree(v)
        full = g.vertex_mask
        for u, plan in enumerate(self.plans):
            if self.degrees[u] > degree_v:
                continue
            if _exists_with_plan(g, plan, full, 1 << v):
                return True
        return False


def clique_number(g: Graph) -> int:
    """Size of a largest clique (bitset branch and bound)"""
    adj = g.adj
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            cand ^= low
            expand(size + 1, cand & adj[low.bit_length() - 1])

    expand(0, g.vertex_mask)
    return best


def _lowest_free_color(used: int) -> int:
    return (~used & (used + 1)).bit_length() - 1


def greedy_dsatur_colors(g: Graph) -> int:
    """Colors used by the DSATUR greedy heuristic (an upper bound on chi)"""
    n = g.n
    degrees = g.degrees()
    colors = [-1] * n
    saturation = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (saturation[u].bit_count(), degrees[u], -u))
        c = _lowest_free_color(saturation[v])
        colors[v] = c
        for u in iter_bits(g.adj[v]):
            saturation[u] |= 1 << c
    return max(colors) + 1 if colors else 0


def chromatic_number(g: Graph) -> int:
    """
    Exact chromatic number

    DSATUR greedy gives the starting upper bound, the clique number the lower
    bound, and DSATUR-ordered backtracking closes the gap.
    """
    n = g.n
    if n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    lower = clique_number(g)
    best = greedy_dsatur_colors(g)
    if best == lower:
        return best

    adj = g.adj
    degrees = g.degrees()
    colors = [-1] * n
    saturation = [0] * n

    def choose() -> int:
        return max((u for u in range(n) if colors[u] < 0),
                   key=lambda u: (saturation[u].bit_count(), degrees[u], -u))

    def search(colored: int, used_k: int):
        nonlocal best
        if colored == n:
            best = used_k
            return
        v = choose()
        for c in range(min(used_k + 1, best - 1)):
            # best may have dropped inside an earlier sibling branch
            if c + 1 >= best:
                break
            if saturation[v] >> c & 1:
                continue
            colors[v] = c
            bit = 1 << c
            changed = [u for u in iter_bits(adj[v]) if colors[u] < 0 and not saturation[u] & bit]
            for u in changed:
                saturation[u] |= bit
            search(colored + 1, max(used_k, c + 1))
            for u in changed:
                saturation[u] &= ~bit
            colors[v] = -1
            if best == lower:
                return

    search(0, 0)
    return best


def exists_homomorphism(f: Graph, h: Graph) -> bool:
    """True iff some edge-preserving map V(f) -> V(h) exists (not necessarily injective)"""
    if f.n == 0:
        return True
    if h.n == 0:
        return False
    if f.edge_count == 0:
        return True
    if h.edge_count == 0:
        return False
    order, back, _ = _search_plan(f)
    full = h.vertex_mask
    adj = h.adj
    images = [0] * f.n

    def assign(i: int) -> bool:
        if i == f.n:
            return True
        domain = full
        for p in back[i]:
            domain &= adj[images[p]]
        for v in iter_bits(domain):
            images[i] = v
            if assign(i + 1):
                return True
        return False

    return assign(0)


def independent_partitions(h: Graph) -> Iterator[List[int]]:
    """Block sizes of every partition of V(h) into independent sets"""
    adj = h.adj
    blocks: List[int] = []

    def place(v: int):
        if v == h.n:
            yield [b.bit_count() for b in blocks]
            return
        for i in range(len(blocks)):
            if not adj[v] & blocks[i]:
                blocks[i] |= 1 << v
                yield from place(v + 1)
                blocks[i] &= ~(1 << v)
        blocks.append(1 << v)
        yield from place(v + 1)
        blocks.pop()

    yield from place(0)


def _injective_block_sum(block_sizes: Tuple[int, ...], class_sizes: List[int]) -> int:
    """Sum over injective block -> class assignments of prod perm(class size, block size)"""
    j = len(block_sizes)
    dp = {0: 1}
    for s in class_sizes:
        nxt = dict(dp)
        for assigned, ways in dp.items():
            for i in range(j):
                if assigned >> i & 1:
                    continue
                factor = perm(s, block_sizes[i])
                if factor:
                    key = assigned | (1 << i)
                    nxt[key] = nxt.get(key, 0) + ways * factor
        dp = nxt
    return dp.get((1 << j) - 1, 0)


def count_copies_in_multipartite(h: Graph, p: PartSizes) -> int:
    """
    N(h, complete_multipartite(p)) without materializing the host

    Proper class assignments are grouped by their fiber partition; each
    partition contributes the injective placements of its blocks.
    """
    if h.n == 0:
        return 1
    shapes = Counter(tuple(sorted(sizes, reverse=True)) for sizes in independent_partitions(h))
    class_sizes = list(p.sizes)
    labeled = sum(times * _injective_block_sum(shape, class_sizes) for shape, times in shapes.items())
    return _checked(labeled // count_automorphisms(h), "multipartite copy count")


def chromatic_polynomial_value(h: Graph, q: int) -> int:
    """Number of proper colorings of h with q labeled colors"""
    return sum(perm(q, len(sizes)) for sizes in independent_partitions(h))


def multipartite_limit_density(h: Graph, parts: int) -> Fraction:
    """
    Limit of N(h, T_parts(n)) / C(n, |V(h)|) as n grows

    Equals |V(h)|! * P(h, parts) / (|Aut(h)| * parts^|V(h)|).
    """
    if parts < 1:
        raise InvalidArgument(f"need at least one class, got {parts}")
    colorings = chromatic_polynomial_value(h, parts)
    return Fraction(factorial(h.n) * colorings, count_automorphisms(h) * parts ** h.n)


def zykov_clique_bound(n: int, r: int, k: int) -> int:
    """C(k-1, r) * ceil(n / (k-1))^r"""
    if not 1 <= r < k:
        raise InvalidArgument(f"need 1 <= r < k, got r={r}, k={k}")
    return comb(k - 1, r) * (-(-n // (k - 1))) ** r
