"""
Persistent catalog of extremal records
Append-only tab-separated file, one record per line, indexed in memory by
(n, canonical graph6 of H, canonical graph6 of F). Later lines win.
"""

import logging
import os
from dataclasses import replace
from typing import Dict, List, Optional, Tuple

from turanlab.canonical import canonical_graph6
from turanlab.config import resolve_catalog_path
from turanlab.errors import IoFailure
from turanlab.extremal import ExtremalRecord, generalized_turan
from turanlab.graph import Graph
from turanlab.graph6 import graph_from_graph6

logger = logging.getLogger(__name__)

Key = Tuple[int, str, str]


def record_to_line(rec: ExtremalRecord) -> str:
    """n, h, f, value, exhaustive, witnesses (;-joined), truncated, attaining"""
    return "\t".join([
        str(rec.n),
        rec.h_g6,
        rec.f_g6,
        str(rec.value),
        "1" if rec.exhaustive else "0",
        ";".join(rec.witnesses),
        "1" if rec.truncated else "0",
        str(rec.attaining),
    ])


def record_from_line(line: str, number: Optional[int] = None) -> ExtremalRecord:
    fields = line.rstrip("\n").split("\t")
    if len(fields) not in (6, 7, 8):
        raise IoFailure(f"catalog line {number}: expected 6 to 8 fields, got {len(fields)}")
    witnesses = [w for w in fields[5].split(";") if w]
    try:
        n, value = int(fields[0]), int(fields[3])
        # older lines carry no attaining column
        attaining = int(fields[7]) if len(fields) == 8 else len(witnesses)
    except ValueError as exc:
        raise IoFailure(f"catalog line {number}: {exc}") from exc
    return ExtremalRecord(
        n=n,
        h_g6=fields[1],
        f_g6=fields[2],
        value=value,
        witnesses=witnesses,
        exhaustive=fields[4] == "1",
        truncated=len(fields) >= 7 and fields[6] == "1",
        attaining=attaining,
    )


class Catalog:
    """Append-only catalog file with an in-memory index"""

    def __init__(self, path=None):
        """
        Open (or lazily create) a catalog

        Args:
            path (str): Catalog file; None resolves TURANLAB_CATALOG or the default
        """
        self.path = resolve_catalog_path(path)
        self.index: Dict[Key, ExtremalRecord] = {}
        self._load()

    def _load(self):
        if not os.path.exists(self.path):
            return
        try:
            with open(self.path, "r", encoding="ascii") as handle:
                for number, line in enumerate(handle, start=1):
                    if not line.strip():
                        continue
                    rec = record_from_line(line, number)
                    self.index[rec.key] = rec
        except OSError as exc:
            raise IoFailure(f"cannot read catalog {self.path}: {exc}") from exc
        logger.info(f"Loaded {len(self.index)} catalog records from {self.path}")

    def put(self, rec: ExtremalRecord):
        """Append rec durably and make it the current record for its key"""
        rec = replace(
            rec,
            h_g6=canonical_graph6(graph_from_graph6(rec.h_g6)),
            f_g6=canonical_graph6(graph_from_graph6(rec.f_g6)),
        )
        try:
            directory = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(directory, exist_ok=True)
            with open(self.path, "a", encoding="ascii") as handle:
                handle.write(record_to_line(rec) + "\n")
                handle.flush()
                os.fsync(handle.fileno())
        except OSError as exc:
            raise IoFailure(f"cannot append to catalog {self.path}: {exc}") from exc
        self.index[rec.key] = rec
        logger.info(f"Catalog put n={rec.n} value={rec.value}")

    def get(self, n: int, h: Graph, f: Graph) -> Optional[ExtremalRecord]:
        return self.index.get((n, canonical_graph6(h), canonical_graph6(f)))

    def get_key(self, key: Key) -> Optional[ExtremalRecord]:
        return self.index.get(key)

    def table(self, h: Graph, f: Graph, exhaustive_only: bool = True) -> List[Tuple[int, int]]:
        """Sorted (n, value) pairs stored for the pair (h, f)"""
        h_g6, f_g6 = canonical_graph6(h), canonical_graph6(f)
        rows = [
            (rec.n, rec.value)
            for (n, hk, fk), rec in self.index.items()
            if hk == h_g6 and fk == f_g6 and (rec.exhaustive or not exhaustive_only)
        ]
        return sorted(rows)

    def __len__(self):
        return len(self.index)


def catalog_put(c: Catalog, rec: ExtremalRecord):
    c.put(rec)


def catalog_get(c: Catalog, key) -> Optional[ExtremalRecord]:
    """key is (n, h, f) with Graph or graph6 entries"""
    n, h, f = key
    if isinstance(h, str):
        h = graph_from_graph6(h)
    if isinstance(f, str):
        f = graph_from_graph6(f)
    return c.get(n, h, f)


def lookup_or_compute(c: Catalog, n: int, h: Graph, f: Graph, threads: int = 1) -> ExtremalRecord:
    """Catalog record for (n, h, f), computing and storing it when missing"""
    rec = c.get(n, h, f)
    if rec is not None and rec.exhaustive:
        return rec
    rec = generalized_turan(n, h, f, threads=threads)
    c.put(rec)
    return rec
