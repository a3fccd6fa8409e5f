"""
Minimum-degree consequence of many cliques in a neighborhood
A vertex of a K_k-free graph whose neighborhood holds many copies of
K_{r-1} must have degree at least
(1 - alpha)^(1/(r-1)) * (k-2)/(k-1) * n - (k-3).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from turanlab.config import ROOT_PRECISION_BITS
from turanlab.counting import count_cliques, has_clique
from turanlab.density import format_fraction
from turanlab.errors import InvalidArgument, NotKkFree
from turanlab.graph import Graph

logger = logging.getLogger(__name__)


def _integer_root(value: int, k: int) -> int:
    """floor(value ** (1/k)) for a non-negative integer"""
    if value < 2 or k == 1:
        return value
    x = 1 << -(-value.bit_length() // k)
    while True:
        y = ((k - 1) * x + value // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > value:
        x -= 1
    while (x + 1) ** k <= value:
        x += 1
    return x


def integer_root_floor(a, k: int, bits: int = ROOT_PRECISION_BITS) -> Fraction:
    """
    a^(1/k) for a non-negative rational, exact for perfect powers,
    otherwise rounded down to a multiple of 2^-bits
    """
    a = Fraction(a)
    if a < 0 or k < 1:
        raise InvalidArgument(f"need a >= 0 and k >= 1, got a={a}, k={k}")
    num, den = _integer_root(a.numerator, k), _integer_root(a.denominator, k)
    if num ** k == a.numerator and den ** k == a.denominator:
        return Fraction(num, den)
    scale = 1 << bits
    return Fraction(_integer_root(a.numerator * scale ** k // a.denominator, k), scale)


def degree_lower_bound(n: int, k: int, r: int, alpha) -> Fraction:
    """
    (1 - alpha)^(1/(r-1)) * (k-2)/(k-1) * n - (k-3)

    Args:
        n (int): Vertex count
        k (int): Forbidden clique size
        r (int): Clique size, 2 <= r < k
        alpha: Slack in [0, 1)

    Returns:
        Fraction: Exact where the root is rational, otherwise rounded down
    """
    if not 2 <= r < k:
        raise InvalidArgument(f"need 2 <= r < k, got r={r}, k={k}")
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise InvalidArgument(f"alpha must lie in [0, 1), got {format_fraction(alpha)}")
    root = integer_root_floor(1 - alpha, r - 1)
    return root * Fraction(k - 2, k - 1) * n - (k - 3)


@dataclass
class DegreeReport:
    x: int
    n: int
    degree: int
    neighborhood_cliques: int
    hypothesis_threshold: Fraction
    hypothesis_holds: bool
    bound: Fraction
    conclusion_holds: Optional[bool]

    def to_dict(self):
        return {
            "x": self.x,
            "n": self.n,
            "degree": self.degree,
            "neighborhood_cliques": self.neighborhood_cliques,
            "hypothesis_threshold": format_fraction(self.hypothesis_threshold),
            "hypothesis_holds": self.hypothesis_holds,
            "bound": format_fraction(self.bound),
            "conclusion_holds": self.conclusion_holds,
        }


def check_degree_lemma(g: Graph, x: int, k: int, r: int, alpha) -> DegreeReport:
    """
    Test the hypothesis N(K_{r-1}, g[N(x)]) >= (1-alpha) r C(k-1,r) n^{r-1}/(k-1)^r
    at vertex x and, when it holds, the degree conclusion

    Raises:
        NotKkFree: g contains K_k
    """
    if not 0 <= x < g.n:
        raise InvalidArgument(f"vertex {x} outside 0..{g.n - 1}")
    if has_clique(k, g):
        raise NotKkFree(f"graph contains K_{k}")
    bound = degree_lower_bound(g.n, k, r, alpha)
    alpha = Fraction(alpha)
    threshold = (1 - alpha) * r * comb(k - 1, r) * Fraction(g.n ** (r - 1), (k - 1) ** r)
    cliques = count_cliques(r - 1, g, g.adj[x])
    holds = cliques >= threshold
    degree = g.degree(x)
    conclusion = degree >= bound if holds else None
    if conclusion is False:
        logger.warning(f"Degree conclusion fails at x={x}: {degree} < {format_fraction(bound)}")
    return DegreeReport(
        x=x,
        n=g.n,
        degree=degree,
        neighborhood_cliques=cliques,
        hypothesis_threshold=threshold,
        hypothesis_holds=holds,
        bound=bound,
        conclusion_holds=conclusion,
    )
