import os

import pytest

from turanlab.canonical import canonical_graph6
from turanlab.catalog import (
    Catalog,
    catalog_get,
    catalog_put,
    lookup_or_compute,
    record_from_line,
    record_to_line,
)
from turanlab.config import resolve_catalog_path
from turanlab.errors import IoFailure
from turanlab.extremal import ExtremalRecord, generalized_turan
from turanlab.graph import complete_graph, path_graph
from turanlab.graph6 import graph_to_graph6


def mantel_record(n, value=None, exhaustive=True):
    return ExtremalRecord(
        n=n,
        h_g6=canonical_graph6(complete_graph(2)),
        f_g6=canonical_graph6(complete_graph(3)),
        value=n * n // 4 if value is None else value,
        exhaustive=exhaustive,
    )


def test_put_then_get(catalog_path, k2, k3):
    catalog = Catalog(catalog_path)
    catalog_put(catalog, mantel_record(5))
    rec = catalog.get(5, k2, k3)
    assert rec.value == 6
    assert catalog_get(catalog, (5, k2, k3)).value == 6
    assert catalog.get(6, k2, k3) is None
    assert os.path.exists(catalog_path)


def test_get_accepts_graph6_strings(catalog_path):
    catalog = Catalog(catalog_path)
    catalog.put(mantel_record(4))
    assert catalog_get(catalog, (4, "A_", "Bw")).value == 4


def test_last_writer_wins_and_survives_reload(catalog_path, k2, k3):
    catalog = Catalog(catalog_path)
    catalog.put(mantel_record(5, value=5, exhaustive=False))
    catalog.put(mantel_record(5))
    assert catalog.get(5, k2, k3).value == 6
    reopened = Catalog(catalog_path)
    assert len(reopened) == 1
    assert reopened.get(5, k2, k3).value == 6
    assert reopened.get(5, k2, k3).exhaustive


def test_keys_are_canonicalized(catalog_path, k3):
    p3 = path_graph(3)
    assert graph_to_graph6(p3) != canonical_graph6(p3)
    catalog = Catalog(catalog_path)
    catalog.put(ExtremalRecord(n=4, h_g6=graph_to_graph6(p3), f_g6=graph_to_graph6(k3), value=4))
    assert catalog.get(4, p3.relabel([1, 0, 2]), k3).value == 4
    assert catalog.get_key((4, canonical_graph6(p3), "Bw")).value == 4


def test_table_is_sorted_and_filters_non_exhaustive(catalog_path, k2, k3):
    catalog = Catalog(catalog_path)
    for n in (6, 3, 5):
        catalog.put(mantel_record(n))
    catalog.put(mantel_record(4, exhaustive=False))
    assert catalog.table(k2, k3) == [(3, 2), (5, 6), (6, 9)]
    assert catalog.table(k2, k3, exhaustive_only=False) == [(3, 2), (4, 4), (5, 6), (6, 9)]
    assert catalog.table(k2, complete_graph(4)) == []


def test_line_format():
    rec = ExtremalRecord(n=4, h_g6="A_", f_g6="Bw", value=4, witnesses=["Cl", "C]"], truncated=True, attaining=3)
    line = record_to_line(rec)
    assert line.split("\t") == ["4", "A_", "Bw", "4", "1", "Cl;C]", "1", "3"]
    parsed = record_from_line(line + "\n", 1)
    assert parsed == rec


def test_seven_column_lines_count_their_witnesses():
    parsed = record_from_line("4\tA_\tBw\t4\t1\tCl;C]\t0\n", 1)
    assert parsed.attaining == 2
    assert not parsed.truncated


def test_six_column_lines_are_accepted():
    parsed = record_from_line("3\tA_\tBw\t2\t0\t\n", 1)
    assert parsed.value == 2
    assert not parsed.exhaustive and not parsed.truncated
    assert parsed.witnesses == []


@pytest.mark.parametrize("line", ["3\tA_\tBw\n", "x\tA_\tBw\t2\t1\t\t0\n", "3\tA_\tBw\t2\t1\t\t0\tmany\n"])
def test_malformed_lines(line):
    with pytest.raises(IoFailure):
        record_from_line(line, 7)


def test_truncated_record_survives_reload(catalog_path, k3):
    catalog = Catalog(catalog_path)
    rec = generalized_turan(8, complete_graph(1), k3)
    assert rec.truncated
    assert rec.attaining == 410
    assert len(rec.witnesses) == 100
    catalog.put(rec)
    reopened = Catalog(catalog_path)
    assert reopened.index == catalog.index
    assert reopened.get(8, complete_graph(1), k3).attaining == 410


def test_corrupt_file_raises_on_open(catalog_path):
    with open(catalog_path, "w") as handle:
        handle.write("3\tA_\tBw\t2\t1\t\t0\n")
        handle.write("garbage\n")
    with pytest.raises(IoFailure) as info:
        Catalog(catalog_path)
    assert "line 2" in str(info.value)


def test_directory_path_fails(tmp_path, monkeypatch):
    monkeypatch.delenv("TURANLAB_CATALOG", raising=False)
    with pytest.raises(IoFailure):
        Catalog(str(tmp_path))


def test_put_into_unwritable_location_fails(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    catalog = Catalog(str(blocker / "catalog.tsv"))
    with pytest.raises(IoFailure):
        catalog.put(mantel_record(3))


def test_lookup_or_compute_stores_once(catalog_path, k2, k3):
    catalog = Catalog(catalog_path)
    rec = lookup_or_compute(catalog, 5, k2, k3)
    assert rec.value == 6 and rec.exhaustive
    with open(catalog_path) as handle:
        assert len(handle.readlines()) == 1
    lookup_or_compute(catalog, 5, k2, k3)
    with open(catalog_path) as handle:
        assert len(handle.readlines()) == 1


def test_lookup_or_compute_replaces_stream_records(catalog_path, k2, k3):
    catalog = Catalog(catalog_path)
    catalog.put(mantel_record(5, value=4, exhaustive=False))
    assert lookup_or_compute(catalog, 5, k2, k3).value == 6


def test_catalog_path_resolution(monkeypatch, tmp_path):
    env_path = str(tmp_path / "env.tsv")
    monkeypatch.setenv("TURANLAB_CATALOG", env_path)
    assert resolve_catalog_path(None) == env_path
    assert resolve_catalog_path("flag.tsv") == "flag.tsv"
    assert Catalog().path == env_path
