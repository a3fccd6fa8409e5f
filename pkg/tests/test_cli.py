import argparse
import io
import json
from fractions import Fraction
from multiprocessing import cpu_count

import pytest

from turanlab import __version__
from turanlab.canonical import canonical_graph6
from turanlab.catalog import Catalog
from turanlab.cli import parse_rational, run
from turanlab.config import resolve_threads
from turanlab.extremal import ExtremalRecord
from turanlab.graph import Graph, complete_graph, cycle_graph, turan_graph
from turanlab.graph6 import graph_to_graph6
from turanlab.worker import ShardWorker

K2 = graph_to_graph6(complete_graph(2))
K3 = graph_to_graph6(complete_graph(3))
K4 = graph_to_graph6(complete_graph(4))
C5 = graph_to_graph6(cycle_graph(5))


def ok_payload(capsys, argv):
    assert run(argv) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["status"] == "ok"
    assert isinstance(record["elapsed_ms"], int)
    return record["payload"]


def error_record(capsys, argv, code=1):
    assert run(argv) == code
    captured = capsys.readouterr()
    assert captured.out == ""
    return json.loads(captured.err.strip().splitlines()[-1])


@pytest.fixture(autouse=True)
def no_catalog_env(monkeypatch):
    monkeypatch.delenv("TURANLAB_CATALOG", raising=False)
    monkeypatch.delenv("TURANLAB_THREADS", raising=False)


def test_count(capsys):
    assert ok_payload(capsys, ["count", "--pattern", K3, "--host", K4]) == {"count": 4}


def test_cliques_and_chromatic(capsys):
    t = graph_to_graph6(turan_graph(6, 3))
    assert ok_payload(capsys, ["cliques", "--r", "3", "--host", t]) == {"count": 8}
    assert ok_payload(capsys, ["chromatic", "--graph", C5]) == {"chromatic_number": 3}


def test_hom_and_degenerate(capsys):
    assert ok_payload(capsys, ["hom", "--from", C5, "--to", K3]) == {"exists": True}
    assert ok_payload(capsys, ["degenerate", "--pattern", K3, "--forbid", C5]) == {"degenerate": True}
    assert ok_payload(capsys, ["degenerate", "--pattern", C5, "--forbid", K3]) == {"degenerate": False}


def test_turan_graph_and_blowup(capsys):
    payload = ok_payload(capsys, ["turan-graph", "--n", "5", "--parts", "3"])
    assert payload == {"graph6": graph_to_graph6(turan_graph(5, 3))}
    payload = ok_payload(capsys, ["blowup", "--graph", K2, "--t", "2"])
    assert payload == {"graph6": graph_to_graph6(cycle_graph(4).relabel([0, 2, 1, 3]))}


def test_enumerate_json_and_raw(capsys):
    payload = ok_payload(capsys, ["enumerate", "--n", "4", "--forbid", K3])
    assert payload["count"] == 7 and len(payload["graphs"]) == 7
    assert run(["enumerate", "--n", "4", "--forbid", K3, "--raw"]) == 0
    lines = capsys.readouterr().out.split()
    assert lines == payload["graphs"]


def test_raw_enumeration_reports_errors(capsys):
    record = error_record(capsys, ["enumerate", "--n", "13", "--forbid", K3, "--raw"])
    assert record["error"] == "TooLarge"


def test_extremal(capsys):
    payload = ok_payload(capsys, ["extremal", "--n", "5", "--pattern", K3, "--forbid", K4])
    assert payload["value"] == 4
    assert payload["witnesses"] == [canonical_graph6(turan_graph(5, 3))]
    assert payload["exhaustive"] is True


def test_extremal_stream_file(capsys, tmp_path):
    stream = tmp_path / "graphs.g6"
    stream.write_text("\n".join([graph_to_graph6(cycle_graph(4)), K4, graph_to_graph6(Graph.empty(4))]) + "\n")
    payload = ok_payload(capsys, ["extremal", "--n", "4", "--pattern", K2, "--forbid", K3, "--stream", str(stream)])
    assert payload["value"] == 4
    assert payload["exhaustive"] is False


def test_missing_stream_file(capsys, tmp_path):
    record = error_record(capsys, ["extremal", "--n", "4", "--pattern", K2, "--forbid", K3,
                                   "--stream", str(tmp_path / "missing.g6")])
    assert record["error"] == "IoFailure"


def test_graph_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "host.g6"
    path.write_text("\n" + K4 + "\n")
    assert ok_payload(capsys, ["count", "--pattern", K3, "--host", "@" + str(path)]) == {"count": 4}
    monkeypatch.setattr("sys.stdin", io.StringIO(C5 + "\n"))
    assert ok_payload(capsys, ["chromatic"]) == {"chromatic_number": 3}


def test_catalog_round_trip(capsys, catalog_path):
    for n in (4, 5, 6):
        ok_payload(capsys, ["extremal", "--n", str(n), "--pattern", K2, "--forbid", K3, "--catalog", catalog_path])
    assert len(Catalog(catalog_path)) == 3
    payload = ok_payload(capsys, ["monotone", "--pattern", K2, "--forbid", K3, "--catalog", catalog_path])
    assert payload == {"table": [[4, 4], [5, 6], [6, 9]], "violations": []}
    payload = ok_payload(capsys, ["density", "--pattern", K2, "--forbid", K3, "--max-n", "6", "--catalog", catalog_path])
    assert payload == {"lower": "1/2", "upper": "3/5", "lower_n": None, "upper_n": 6}


def test_catalog_from_environment(capsys, catalog_path, monkeypatch):
    monkeypatch.setenv("TURANLAB_CATALOG", catalog_path)
    ok_payload(capsys, ["extremal", "--n", "4", "--pattern", K2, "--forbid", K3])
    assert Catalog(catalog_path).table(complete_graph(2), complete_graph(3)) == [(4, 4)]


def test_supersat_reads_the_catalog(capsys, catalog_path):
    catalog = Catalog(catalog_path)
    k2, k3 = complete_graph(2), complete_graph(3)
    for n in range(3, 11):
        catalog.put(ExtremalRecord(n=n, h_g6=canonical_graph6(k2), f_g6=canonical_graph6(k3), value=n * n // 4))
    host = graph_to_graph6(complete_graph(12))
    payload = ok_payload(capsys, ["supersat", "--host", host, "--pattern", K2, "--forbid", K3,
                                  "--c", "1/8", "--catalog", catalog_path])
    assert payload["bracket"]["upper"] == "5/9"
    assert payload["m"] == 5
    assert payload["heavy"] == 792
    assert payload["f_lower_bound"] == "22/1"
    assert payload["f_count"] == 220


def test_supersat_with_empty_catalog(capsys, catalog_path):
    record = error_record(capsys, ["supersat", "--host", K4, "--pattern", K2, "--forbid", K3,
                                   "--c", "1/8", "--catalog", catalog_path])
    assert record["error"] == "NoValidM"


def test_census_and_symmetrize(capsys):
    payload = ok_payload(capsys, ["census", "--host", K4, "--pattern", K2, "--m", "3", "--threshold", "0"])
    assert payload["heavy"] == 4 and payload["identity_holds"] is True
    payload = ok_payload(capsys, ["symmetrize", "--graph", C5, "--r", "2"])
    assert payload["parts"] == [3, 2]


def test_delete_degree_distance(capsys):
    empty = graph_to_graph6(Graph.empty(10))
    payload = ok_payload(capsys, ["delete-greedy", "--graph", empty, "--r", "2", "--k", "3", "--alpha", "1/10"])
    assert payload["outcome"] == "HypothesisNotMet"
    t = graph_to_graph6(turan_graph(12, 3))
    payload = ok_payload(capsys, ["degree-check", "--graph", t, "--x", "0", "--k", "4", "--r", "3", "--alpha", "0"])
    assert payload["conclusion_holds"] is True
    payload = ok_payload(capsys, ["distance", "--graph", graph_to_graph6(cycle_graph(10)), "--parts", "2"])
    assert payload["distance"] == 15


def test_stability_command(capsys):
    payload = ok_payload(capsys, ["stability", "--n", "6", "--k", "3", "--floors", "9", "8"])
    assert [row["edge_floor"] for row in payload["rows"]] == [9, 8]
    assert payload["rows"][0]["max_distance"] == 0


def test_domain_errors_exit_one(capsys):
    record = error_record(capsys, ["count", "--pattern", "D!{", "--host", K4])
    assert record["status"] == "error"
    assert record["error"] == "MalformedGraph6"
    record = error_record(capsys, ["degree-check", "--graph", K4, "--x", "0", "--k", "4", "--r", "3", "--alpha", "0"])
    assert record["error"] == "NotKkFree"
    record = error_record(capsys, ["density", "--pattern", K3, "--forbid", C5, "--max-n", "5"])
    assert record["error"] == "DegeneratePair"


def test_usage_errors_exit_two(capsys):
    assert run([]) == 2
    assert run(["count"]) == 2
    assert run(["delete-greedy", "--graph", K3, "--r", "2", "--k", "3", "--alpha", "0.1"]) == 2
    assert run(["--threads", "0", "count", "--pattern", K2, "--host", K3]) == 2
    capsys.readouterr()


def test_threads_default_from_environment(capsys, monkeypatch):
    argv = ["extremal", "--n", "6", "--pattern", K3, "--forbid", K4]
    serial = ok_payload(capsys, argv)
    monkeypatch.setenv("TURANLAB_THREADS", "2")
    assert resolve_threads() == 2
    assert resolve_threads(1) == 1
    assert ShardWorker().threads == min(2, cpu_count())
    assert ok_payload(capsys, argv) == serial
    monkeypatch.setenv("TURANLAB_THREADS", "0")
    assert run(argv) == 2
    monkeypatch.setenv("TURANLAB_THREADS", "many")
    record = error_record(capsys, argv, code=2)
    assert record["error"] == "InvalidArgument"
    assert run(["--threads", "1"] + argv) == 0
    capsys.readouterr()


def test_version(capsys):
    assert run(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_output_is_deterministic(capsys):
    argv = ["extremal", "--n", "6", "--pattern", K3, "--forbid", K4]
    first = ok_payload(capsys, argv)
    second = ok_payload(capsys, argv + [])
    threaded = ok_payload(capsys, ["--threads", "2"] + argv)
    assert first == second == threaded


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("2") == 2
    for text in ("0.5", "1e3", "x", "1/0"):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_rational(text)
