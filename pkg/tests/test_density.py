from fractions import Fraction

import pytest

from turanlab.canonical import canonical_graph6
from turanlab.catalog import Catalog
from turanlab.density import (
    DensityBracket,
    check_ratio_monotone,
    clique_asymptotic_count,
    clique_density_limit,
    clique_turan_residual,
    density_bracket,
    format_fraction,
)
from turanlab.errors import DegeneratePair, InvalidArgument
from turanlab.extremal import ExtremalRecord
from turanlab.graph import complete_graph


def store(catalog, n, h, f, value):
    catalog.put(ExtremalRecord(n=n, h_g6=canonical_graph6(h), f_g6=canonical_graph6(f), value=value))


def test_monotone_table_has_no_violations():
    assert check_ratio_monotone([(3, 2), (4, 4), (5, 6), (6, 9)], 2) == []
    assert check_ratio_monotone([(1, 0), (2, 1)], 2) == []
    assert check_ratio_monotone([], 3) == []


def test_violation_is_reported():
    violations = check_ratio_monotone([(5, 6), (4, 4), (6, 14)], 2)
    assert len(violations) == 1
    v = violations[0]
    assert (v.n, v.value, v.next_n, v.next_value) == (5, 6, 6, 14)
    assert v.to_dict(2) == {
        "n": 5, "value": 6, "next_n": 6, "next_value": 14, "ratio": "3/5", "next_ratio": "14/15",
    }


def test_bracket_from_catalog_record(catalog_path, k2, k3, k4):
    catalog = Catalog(catalog_path)
    store(catalog, 10, k2, k3, 25)
    store(catalog, 8, k3, k4, 18)
    mantel = density_bracket(k2, k3, 10, catalog=catalog)
    assert mantel.upper == Fraction(5, 9)
    assert mantel.lower == Fraction(1, 2)
    assert mantel.upper_n == 10 and mantel.lower_n is None
    triangles = density_bracket(k3, k4, 8, catalog=catalog)
    assert triangles.upper == Fraction(9, 28)
    assert triangles.lower == Fraction(2, 9)
    assert triangles.to_dict() == {"lower": "2/9", "upper": "9/28", "lower_n": None, "upper_n": 8}
    assert len(catalog) == 2


def test_bracket_computes_and_stores_missing_values(catalog_path, k2, k3):
    catalog = Catalog(catalog_path)
    bracket = density_bracket(k2, k3, 6, catalog=catalog)
    assert bracket.upper == Fraction(3, 5)
    assert catalog.get(6, k2, k3).value == 9


def test_upper_bound_does_not_grow(k2, k3):
    uppers = [density_bracket(k2, k3, n).upper for n in range(3, 9)]
    assert all(a >= b for a, b in zip(uppers, uppers[1:]))
    assert all(u >= Fraction(1, 2) for u in uppers)


def test_bracket_for_non_clique_pair(c4, k3):
    bracket = density_bracket(c4, k3, 6)
    assert bracket.lower == Fraction(3, 8)
    assert bracket.upper == Fraction(3, 5)


@pytest.mark.parametrize("r, k, max_n", [(2, 3, 7), (2, 4, 6), (3, 4, 6)])
def test_clique_limits_lie_in_bracket(r, k, max_n):
    bracket = density_bracket(complete_graph(r), complete_graph(k), max_n)
    assert bracket.contains(clique_density_limit(r, k))
    assert bracket.lower == clique_density_limit(r, k)


def test_degenerate_and_invalid_pairs(k3, k4, c5):
    with pytest.raises(DegeneratePair):
        density_bracket(k3, c5, 5)
    with pytest.raises(DegeneratePair):
        density_bracket(k4, k3, 5)
    with pytest.raises(InvalidArgument):
        density_bracket(k3, k4, 2)


def test_clique_closed_forms():
    assert clique_density_limit(2, 3) == Fraction(1, 2)
    assert clique_density_limit(3, 4) == Fraction(2, 9)
    assert clique_density_limit(2, 4) == Fraction(2, 3)
    assert clique_asymptotic_count(6, 3, 4) == 8
    assert clique_turan_residual(6, 2, 3, 9) == 0
    assert clique_turan_residual(5, 2, 3, 6) == Fraction(-1, 4)
    with pytest.raises(InvalidArgument):
        clique_density_limit(3, 3)


def test_bracket_helpers():
    bracket = DensityBracket(lower=Fraction(1, 2), upper=Fraction(5, 9), lower_n=None, upper_n=10)
    assert bracket.contains(Fraction(1, 2))
    assert not bracket.contains(Fraction(4, 7))
    assert format_fraction(Fraction(4, 2)) == "2/1"
    assert format_fraction(3) == "3/1"
