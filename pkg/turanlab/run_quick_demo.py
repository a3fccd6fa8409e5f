"""
Quick demo script for turanlab
Runs one small instance of every procedure and prints what it found
"""

import os
import sys
from fractions import Fraction

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from turanlab.counting import count_cliques, count_copies, zykov_clique_bound
from turanlab.deletion import greedy_min_copy_deletion
from turanlab.degree import check_degree_lemma
from turanlab.density import check_ratio_monotone, clique_density_limit, density_bracket
from turanlab.extremal import generalized_turan, is_degenerate_pair
from turanlab.graph import (
    add_random_intra_edges,
    balanced_partition,
    complete_graph,
    cycle_graph,
    random_kk_free_graph,
    turan_graph,
)
from turanlab.graph6 import graph_to_graph6
from turanlab.stability import turan_edit_distance
from turanlab.supersaturation import supersaturation_check
from turanlab.symmetrization import multipartite_classes, symmetrize


def demo_counting():
    print("=== Counting ===")
    t = turan_graph(6, 3)
    print(f"T_3(6) = {graph_to_graph6(t)}")
    print(f"Triangles in T_3(6): {count_cliques(3, t)} (bound {zykov_clique_bound(6, 3, 4)})")
    print(f"C_4 copies in K_5: {count_copies(cycle_graph(4), complete_graph(5))}")
    print(f"(K_3, C_5) degenerate: {is_degenerate_pair(complete_graph(3), cycle_graph(5))}")


def demo_extremal():
    print("\n=== Extremal search ===")
    table = []
    for n in range(3, 8):
        rec = generalized_turan(n, complete_graph(3), complete_graph(4))
        table.append((n, rec.value))
        print(f"ex({n}, K_3, K_4) = {rec.value}  witnesses: {', '.join(rec.witnesses)}")
    violations = check_ratio_monotone(table, 3)
    print(f"Ratio monotonicity violations: {len(violations)}")
    bracket = density_bracket(complete_graph(3), complete_graph(4), 7)
    print(f"Density bracket: [{bracket.lower}, {bracket.upper}] "
          f"contains {clique_density_limit(3, 4)}: {bracket.contains(clique_density_limit(3, 4))}")


def demo_symmetrization():
    print("\n=== Symmetrization ===")
    g = random_kk_free_graph(9, 4, seed=7)
    trace = symmetrize(g, 3)
    print(f"Start {graph_to_graph6(g)} with {count_cliques(3, g)} triangles")
    print(f"{len(trace.steps)} steps, counts {trace.counts}")
    print(f"End classes {multipartite_classes(trace.end)}")


def demo_supersaturation():
    print("\n=== Supersaturation ===")
    h, f = complete_graph(2), complete_graph(3)
    table = [(n, n * n // 4) for n in range(3, 11)]
    bracket = density_bracket(h, f, 8)
    g = add_random_intra_edges(turan_graph(16, 2), balanced_partition(16, 2), 12, seed=3)
    report = supersaturation_check(g, h, f, Fraction(1, 25), bracket, table=table)
    print(f"n={report.n} m={report.m} hypothesis={report.hypothesis_holds} heavy={report.heavy}")
    print(f"Triangle lower bound {report.f_lower_bound} vs actual {report.f_count}")


def demo_stability():
    print("\n=== Deletion, degree and stability ===")
    t = turan_graph(9, 3)
    trace = greedy_min_copy_deletion(t, 3, 4, Fraction(1, 10))
    print(f"Deletion on T_3(9): {trace.outcome.value} after {len(trace.steps)} steps")
    report = check_degree_lemma(turan_graph(12, 3), 0, 4, 3, 0)
    print(f"Degree check on T_3(12): hypothesis {report.hypothesis_holds}, "
          f"degree {report.degree} >= {report.bound}: {report.conclusion_holds}")
    c10 = cycle_graph(10)
    print(f"Edit distance C_10 -> T_2(10): {turan_edit_distance(c10, 2).distance}")


def main():
    print("turanlab quick demo")
    print("=" * 40)
    demo_counting()
    demo_extremal()
    demo_symmetrization()
    demo_supersaturation()
    demo_stability()
    print("\nDemo complete")


if __name__ == "__main__":
    main()
