"""
Supersaturation by heavy m-set counting
A graph with N(H,G) well above ex(n,H,F) has many m-vertex sets spanning
more than ex(m,H,F) copies of H; each such set holds a copy of F, which
turns the number of heavy sets into a lower bound on N(F,G).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb, factorial
from typing import Optional, Sequence, Tuple

from turanlab.config import CENSUS_MAX_N
from turanlab.counting import (
    chromatic_number,
    count_automorphisms,
    count_copies,
    count_copies_in_mask,
    count_copies_in_multipartite,
    is_complete,
)
from turanlab.density import DensityBracket, format_fraction
from turanlab.errors import DegeneratePair, InvalidArgument, NoValidM, TooLarge
from turanlab.graph import Graph, balanced_partition
from turanlab.worker import ShardWorker

logger = logging.getLogger(__name__)


@dataclass
class CensusResult:
    """Heavy m-sets and the double-count check of their copy sum"""

    m: int
    threshold: Fraction
    heavy: int
    copy_sum: int
    expected_sum: int
    subsets: int

    @property
    def identity_holds(self) -> bool:
        return self.copy_sum == self.expected_sum

    def to_dict(self):
        return {
            "m": self.m,
            "threshold": format_fraction(self.threshold),
            "heavy": self.heavy,
            "copy_sum": self.copy_sum,
            "expected_sum": self.expected_sum,
            "identity_holds": self.identity_holds,
            "subsets": self.subsets,
        }


@dataclass
class SupersaturationReport:
    n: int
    m: int
    q: Fraction
    c: Fraction
    ex_value: int
    ex_source: str
    h_count: int
    hypothesis_holds: bool
    census_mode: str
    census_threshold: Fraction
    heavy: int
    f_lower_bound: Fraction
    f_count: int
    census: Optional[CensusResult] = None

    @property
    def bound_holds(self) -> bool:
        return self.f_lower_bound <= self.f_count

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "q": format_fraction(self.q),
            "c": format_fraction(self.c),
            "ex_value": self.ex_value,
            "ex_source": self.ex_source,
            "h_count": self.h_count,
            "hypothesis_holds": self.hypothesis_holds,
            "applicable": self.hypothesis_holds,
            "census_mode": self.census_mode,
            "census_threshold": format_fraction(self.census_threshold),
            "heavy": self.heavy,
            "f_lower_bound": format_fraction(self.f_lower_bound),
            "f_count": self.f_count,
            "bound_holds": self.bound_holds,
            "census": self.census.to_dict() if self.census else None,
        }


def _census_shard(args) -> Tuple[int, int, int]:
    g, h, m, threshold, first, aut = args
    heavy = copy_sum = subsets = 0
    base = 1 << first
    for rest in combinations(range(first + 1, g.n), m - 1):
        mask = base
        for v in rest:
            mask |= 1 << v
        copies = count_copies_in_mask(h, g, mask, aut)
        copy_sum += copies
        subsets += 1
        if copies > threshold:
            heavy += 1
    return heavy, copy_sum, subsets


def heavy_subset_census(g: Graph, h: Graph, m: int, threshold, threads: int = 1) -> CensusResult:
    """
    Sweep every m-subset S of V(g), counting N(h, g[S])

    Args:
        g (Graph): Host, at most 20 vertices
        h (Graph): Pattern with |V(h)| <= m
        m (int): Subset size, at most |V(g)|
        threshold: Heavy means strictly more copies than this
        threads (int): Workers; shards are the smallest vertex of S

    Returns:
        CensusResult: heavy count, copy sum and C(n-h, m-h) * N(h, g)
    """
    if g.n > CENSUS_MAX_N:
        raise TooLarge(f"m-set census is exhaustive only up to n={CENSUS_MAX_N}, got {g.n}")
    if not h.n <= m <= g.n:
        raise InvalidArgument(f"need |V(h)| <= m <= n, got |V(h)|={h.n}, m={m}, n={g.n}")
    threshold = Fraction(threshold)
    expected = comb(g.n - h.n, m - h.n) * count_copies(h, g)
    if m == 0:
        heavy = 1 if 1 > threshold else 0
        return CensusResult(m, threshold, heavy, 1, expected, 1)
    aut = count_automorphisms(h) if h.n else 1
    shards = [(g, h, m, threshold, first, aut) for first in range(g.n - m + 1)]
    heavy = copy_sum = subsets = 0
    for shard_heavy, shard_sum, shard_subsets in ShardWorker(threads).map(_census_shard, shards):
        heavy += shard_heavy
        copy_sum += shard_sum
        subsets += shard_subsets
    result = CensusResult(m, threshold, heavy, copy_sum, expected, subsets)
    if not result.identity_holds:
        logger.warning(f"Double count mismatch: sum {copy_sum} != expected {expected}")
    return result


def _clique_pair(h: Graph, f: Graph) -> bool:
    return is_complete(h) and is_complete(f) and h.n < f.n


def resolve_extremal_value(n: int, h: Graph, f: Graph, table: Sequence[Tuple[int, int]]) -> Tuple[int, str]:
    """
    ex(n, h, f) or a sound upper bound on it, with its source

    Sources: "catalog" (exact value stored for n), "zykov" (clique pairs,
    count in the Turan graph), "monotone-bound" (the largest stored n' <= n,
    scaled by C(n,h)/C(n',h)).
    """
    values = dict(table)
    if n in values:
        return values[n], "catalog"
    if _clique_pair(h, f):
        return count_copies_in_multipartite(h, balanced_partition(n, f.n - 1)), "zykov"
    below = [m for m in values if h.n <= m <= n]
    if not below:
        raise NoValidM(f"no catalogued n' <= {n} to bound ex({n}, H, F)")
    m = max(below)
    return values[m] * comb(n, h.n) // comb(m, h.n), "monotone-bound"


def select_m(table: Sequence[Tuple[int, int]], h: Graph, f: Graph, n: int, bound) -> int:
    """Smallest catalogued m (|V(f)| <= m <= n) with ex(m) <= bound * C(m, h)"""
    for m, value in sorted(table):
        if m < max(h.n, f.n) or m > n:
            continue
        if value <= bound * comb(m, h.n):
            return m
    raise NoValidM(f"no catalogued m <= {n} has ex(m, H, F) <= {format_fraction(bound)} * C(m, {h.n})")


def supersaturation_check(g: Graph, h: Graph, f: Graph, c, bracket: DensityBracket,
                          catalog=None, table=None, threads: int = 1) -> SupersaturationReport:
    """
    Run the heavy m-set argument on a concrete graph

    Args:
        g (Graph): Host graph
        h (Graph): Counted graph
        f (Graph): Forbidden graph, chi(f) > chi(h)
        c: Excess constant (rational, positive)
        bracket (DensityBracket): q is bracket.upper
        catalog (Catalog): Source of the exhaustive ex(m, h, f) table
        table (list): Explicit (n, value) table, used instead of catalog
        threads (int): Workers for the census

    Returns:
        SupersaturationReport: hypothesis verdict, census, F-copy lower bound
            next to the true number of copies of f
    """
    c = Fraction(c)
    if c <= 0:
        raise InvalidArgument(f"c must be positive, got {format_fraction(c)}")
    chi_h, chi_f = chromatic_number(h), chromatic_number(f)
    if chi_h >= chi_f:
        raise DegeneratePair(f"chi(H) = {chi_h} >= chi(F) = {chi_f}")
    if table is None:
        table = catalog.table(h, f) if catalog is not None else []
    n = g.n
    q = bracket.upper
    m = select_m(table, h, f, n, q + c / 2)
    ex_value, ex_source = resolve_extremal_value(n, h, f, table)

    h_count = count_copies(h, g, threads=threads)
    hypothesis = h_count > ex_value + c * n ** h.n
    threshold = (q + c / 2) * comb(m, h.n)
    census = None
    if n <= CENSUS_MAX_N:
        census = heavy_subset_census(g, h, m, threshold, threads=threads)
        heavy, mode = census.heavy, "exhaustive"
    elif h_count >= (q + c) * comb(n, h.n):
        heavy, mode = ceil(c / (2 * factorial(h.n)) * comb(n, m)), "averaging"
    else:
        heavy, mode = 0, "none"
    f_bound = Fraction(heavy, comb(n - f.n, m - f.n))
    f_count = count_copies(f, g, threads=threads)
    logger.info(f"Supersaturation n={n} m={m} heavy={heavy} ({mode}) bound={f_bound} N(F)={f_count}")
    return SupersaturationReport(
        n=n,
        m=m,
        q=q,
        c=c,
        ex_value=ex_value,
        ex_source=ex_source,
        h_count=h_count,
        hypothesis_holds=hypothesis,
        census_mode=mode,
        census_threshold=threshold,
        heavy=heavy,
        f_lower_bound=f_bound,
        f_count=f_count,
        census=census,
    )
