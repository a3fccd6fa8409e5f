"""
Catalog seeding script for turanlab
Precomputes ex(n, K_r, K_k) tables so density, monotone and supersat
commands have exhaustive values to read
"""

import argparse
import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from turanlab.catalog import Catalog, lookup_or_compute
from turanlab.config import resolve_catalog_path
from turanlab.counting import count_cliques
from turanlab.graph import complete_graph, turan_graph

# (r, k, largest n) for each clique pair to seed
DEFAULT_PAIRS = [
    (2, 3, 10),
    (2, 4, 8),
    (3, 4, 8),
]


def seed_clique_tables(catalog, pairs=DEFAULT_PAIRS, threads=1):
    """Fill the catalog with ex(n, K_r, K_k) for every n up to each pair's limit"""
    print("Seeding clique tables...")
    written = 0
    for r, k, max_n in pairs:
        h, f = complete_graph(r), complete_graph(k)
        for n in range(r, max_n + 1):
            already = catalog.get(n, h, f)
            rec = lookup_or_compute(catalog, n, h, f, threads=threads)
            if already is None or not already.exhaustive:
                written += 1
            expected = count_cliques(r, turan_graph(n, k - 1))
            status = "ok" if rec.value == expected else f"MISMATCH (Turan graph has {expected})"
            print(f"  ex({n}, K_{r}, K_{k}) = {rec.value}  witnesses={len(rec.witnesses)}  {status}")
    print(f"Wrote {written} new records")
    return written


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--catalog", help="catalog file (default: TURANLAB_CATALOG or storage/catalog.tsv)")
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    path = resolve_catalog_path(args.catalog)
    print(f"Catalog: {path}")
    catalog = Catalog(path)
    print(f"Existing records: {len(catalog)}")
    seed_clique_tables(catalog, threads=args.threads)
    print(f"Catalog now holds {len(catalog)} records")


if __name__ == "__main__":
    main()
