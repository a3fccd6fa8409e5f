"""
Density limits and brackets
Ratio monotonicity of ex(n,H,F)/C(n,|V(H)|), brackets on the Turan density
and the closed forms for clique pairs. All arithmetic is exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from turanlab.catalog import lookup_or_compute
from turanlab.counting import chromatic_number, multipartite_limit_density
from turanlab.errors import DegeneratePair, InvalidArgument
from turanlab.extremal import generalized_turan
from turanlab.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatioViolation:
    """Consecutive table rows whose density ratio increases"""

    n: int
    value: int
    next_n: int
    next_value: int

    def to_dict(self, h_size: int):
        return {
            "n": self.n,
            "value": self.value,
            "next_n": self.next_n,
            "next_value": self.next_value,
            "ratio": format_fraction(Fraction(self.value, comb(self.n, h_size))),
            "next_ratio": format_fraction(Fraction(self.next_value, comb(self.next_n, h_size))),
        }


@dataclass(frozen=True)
class DensityBracket:
    """
    lower <= pi(H,F) <= upper

    upper_n is the n whose exhaustive value gave the upper bound; lower_n is
    None when the lower bound is a limit of multipartite densities.
    """

    lower: Fraction
    upper: Fraction
    lower_n: Optional[int]
    upper_n: int

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper

    def to_dict(self):
        return {
            "lower": format_fraction(self.lower),
            "upper": format_fraction(self.upper),
            "lower_n": self.lower_n,
            "upper_n": self.upper_n,
        }


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def check_ratio_monotone(table: Sequence[Tuple[int, int]], h_size: int) -> List[RatioViolation]:
    """
    Consecutive rows where value(n)/C(n,h) < value(n')/C(n',h)

    Rows with n < h_size carry no ratio and are skipped.
    """
    rows = [(n, value) for n, value in sorted(table) if n >= h_size]
    violations = []
    for (n, value), (next_n, next_value) in zip(rows, rows[1:]):
        if Fraction(value, comb(n, h_size)) < Fraction(next_value, comb(next_n, h_size)):
            violations.append(RatioViolation(n, value, next_n, next_value))
    if violations:
        logger.warning(f"{len(violations)} ratio monotonicity violations")
    return violations


def density_bracket(h: Graph, f: Graph, max_n: int, catalog=None, threads: int = 1) -> DensityBracket:
    """
    Bracket on pi(h, f)

    Args:
        h (Graph): Counted graph
        f (Graph): Forbidden graph, chi(f) > chi(h)
        max_n (int): n of the exhaustive value used for the upper bound
        catalog (Catalog): Read-through store for ex(max_n, h, f), optional
        threads (int): Workers when the value has to be computed

    Returns:
        DensityBracket: upper = ex(max_n)/C(max_n, |V(h)|), lower = limit
            density of h in balanced (chi(f)-1)-partite graphs
    """
    chi_h, chi_f = chromatic_number(h), chromatic_number(f)
    if chi_h >= chi_f:
        raise DegeneratePair(f"chi(H) = {chi_h} >= chi(F) = {chi_f}")
    if max_n < h.n:
        raise InvalidArgument(f"max_n = {max_n} is below |V(H)| = {h.n}")
    if catalog is not None:
        value = lookup_or_compute(catalog, max_n, h, f, threads=threads).value
    else:
        value = generalized_turan(max_n, h, f, threads=threads).value
    upper = Fraction(value, comb(max_n, h.n))
    lower = multipartite_limit_density(h, chi_f - 1)
    return DensityBracket(lower=lower, upper=upper, lower_n=None, upper_n=max_n)


def clique_density_limit(r: int, k: int) -> Fraction:
    """pi(K_r, K_k) = r! * C(k-1, r) / (k-1)^r"""
    if not 1 <= r < k:
        raise InvalidArgument(f"need 1 <= r < k, got r={r}, k={k}")
    return Fraction(factorial(r) * comb(k - 1, r), (k - 1) ** r)


def clique_asymptotic_count(n: int, r: int, k: int) -> Fraction:
    """C(k-1, r) * (n/(k-1))^r, the leading term of ex(n, K_r, K_k)"""
    if not 1 <= r < k:
        raise InvalidArgument(f"need 1 <= r < k, got r={r}, k={k}")
    return Fraction(comb(k - 1, r) * n ** r, (k - 1) ** r)


def clique_turan_residual(n: int, r: int, k: int, value: int) -> Fraction:
    """value minus the leading term; zero when (k-1) divides n and value is exact"""
    return value - clique_asymptotic_count(n, r, k)
