"""The command-line interface, one subcommand at a time."""

import io
import json
from pathlib import Path

import pytest

from lmis import CHECK_REGISTRY, REPORT_SCHEMA
from lmis.cli import examples_text, main
from lmis.reporting import CheckOutcome

jsonschema = pytest.importorskip("jsonschema")

TREE_EDGES = """\
vertices: a, b, c, d, e, f
a b
a c
c d
c e
c f
"""

GOLDEN = Path(__file__).parent / "data" / "examples_golden.txt"


@pytest.fixture
def tree_file(tmp_path):
    path = tmp_path / "tree.edges"
    path.write_text(TREE_EDGES)
    return str(path)


# --------------------------------------------------------------------------
# analyze


def test_analyze_text(tree_file, capsys):
    assert main(["analyze", "--input", tree_file, "--format", "edges"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "graph: n=6 m=5 id=EpG_"
    assert out[1] == "alpha=4 mu=2 konig_egervary=yes"
    assert out[2] == "critical difference: d(G)=2 witness={d,e,f}"
    assert out[3] == "core={d,e,f} corona={a,b,d,e,f}"
    assert out[4] == "Omega (2): {a,d,e,f} {b,d,e,f}"
    assert out[5] == "CritIndep (3): {d,e,f} {a,d,e,f} {b,d,e,f}"
    assert out[-1] == "chain: CritIndep < Crown = Psi"


def test_analyze_graph6_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    assert main(["analyze", "--input", "-"]) == 0
    out = capsys.readouterr().out
    assert "graph: n=3 m=3 id=Bw" in out
    assert "alpha=1 mu=1 konig_egervary=no" in out


def test_analyze_json(tree_file, capsys):
    assert main(["analyze", "--input", tree_file, "--format", "edges", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["graph_id"] == "EpG_"
    assert payload["alpha"] == 4 and payload["mu"] == 2
    assert payload["konig_egervary"] is True
    assert payload["critical_difference"] == 2
    assert payload["critical_witness"] == ["d", "e", "f"]
    assert payload["core"] == ["d", "e", "f"]
    assert payload["families"]["Omega"] == [["a", "d", "e", "f"], ["b", "d", "e", "f"]]
    assert len(payload["families"]["Psi"]) == 23


def test_analyze_unlabeled_json_uses_indices(tmp_path, capsys):
    path = tmp_path / "k3.g6"
    path.write_text("Bw\n")
    assert main(["analyze", "--input", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["families"]["Omega"] == [[0], [1], [2]]
    assert payload["critical_witness"] == []


def test_analyze_missing_file(capsys):
    assert main(["analyze", "--input", "/no/such/file"]) == 2
    assert "error:" in capsys.readouterr().err


def test_analyze_malformed_graph6(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("Bw?\n")
    assert main(["analyze", "--input", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


# --------------------------------------------------------------------------
# augment


def test_augment_text(tree_file, capsys):
    code = main(
        [
            "augment",
            "--input",
            tree_file,
            "--format",
            "edges",
            "--s",
            "a,d,e",
            "--t",
            "b,d,f",
        ]
    )
    assert code == 0
    assert capsys.readouterr().out == (
        "S  = {a,d,e}\n"
        "T  = {b,d,f}\n"
        "S \\ N[T] = {e}   donated to T\n"
        "T \\ N[S] = {f}   donated to S\n"
        "S+ = {a,d,e,f}\n"
        "T+ = {b,d,e,f}\n"
        "|S+| = |T+| = 4\n"
        "cross matching: a-b\n"
        "lemma checks:\n"
        "  cross_matching: pass\n"
        "  outside_membership: pass\n"
        "  plus_membership: pass\n"
        "  same_size: pass\n"
    )


def test_augment_json(tree_file, capsys):
    code = main(
        [
            "augment",
            "--input",
            tree_file,
            "--format",
            "edges",
            "--json",
            "--s",
            "a,d,e",
            "--t",
            "b,d,f",
        ]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["s_outside"] == ["e"]
    assert payload["t_outside"] == ["f"]
    assert payload["s_augmented"] == ["a", "d", "e", "f"]
    assert payload["common_size"] == 4
    assert payload["cross_matching"] == [[0, 1]]
    jsonschema.validate(payload["lemmas"], REPORT_SCHEMA)


def test_augment_rejects_non_local_max(tree_file, capsys):
    code = main(
        ["augment", "--input", tree_file, "--format", "edges", "--s", "c", "--t", "b,d,f"]
    )
    assert code == 2
    err = capsys.readouterr().err
    assert "error:" in err
    assert "{c}" in err and "size 4" in err


def test_augment_rejects_unknown_labels(tree_file, capsys):
    code = main(
        ["augment", "--input", tree_file, "--format", "edges", "--s", "z", "--t", "b"]
    )
    assert code == 2
    assert "unknown vertex label" in capsys.readouterr().err


# --------------------------------------------------------------------------
# decompose


def test_decompose_text(tree_file, capsys):
    code = main(
        ["decompose", "--input", tree_file, "--format", "edges", "--s", "a,d,e"]
    )
    assert code == 0
    assert capsys.readouterr().out == (
        "S = {a,d,e}\n"
        "remainder graph (after deleting N[S]): vertices={f} n=1 m=0\n"
        "alpha: 4 = 3 + 1 (alpha(G) = |S| + alpha of the remainder): ok\n"
        "Psi extensions (2): {a,d,e} {a,d,e,f}\n"
        "Omega extensions (1): {a,d,e,f}\n"
        "core(S)={a,d,e,f} corona(S)={a,d,e,f}\n"
        "routes agree: psi=yes omega=yes core/corona=yes bijection=yes\n"
        "counts: psi=2 omega=1\n"
    )


def test_decompose_json(tree_file, capsys):
    code = main(
        ["decompose", "--input", tree_file, "--format", "edges", "--json", "--s", "b,d,f"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["s"] == ["b", "d", "f"]
    assert payload["remainder_vertices"] == ["e"]
    assert payload["additive_ok"] is True
    assert payload["counts"] == [2, 1]
    assert payload["psi_extensions"] == [["b", "d", "f"], ["b", "d", "e", "f"]]


def test_decompose_rejects_bad_anchor(tree_file, capsys):
    assert (
        main(["decompose", "--input", tree_file, "--format", "edges", "--s", "c"]) == 2
    )
    assert "error:" in capsys.readouterr().err


# --------------------------------------------------------------------------
# verify


def test_verify_enumeration_text(capsys):
    assert main(["verify", "--max-n", "3"]) == 0
    out = capsys.readouterr().out
    assert out == "summary: graphs=11 checks=88 failures=0 skipped=0 elapsed=" + (
        out.rsplit("elapsed=", 1)[1]
    )
    assert out.startswith("summary: graphs=11 checks=88 failures=0 skipped=0")


def test_verify_stream_with_skips(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("Bw\nnot-a-graph\nBg\n")
    assert main(["verify", "--input", str(path), "--checks", "ke_predicate"]) == 0
    out = capsys.readouterr().out
    assert "skip:" in out and "not-a-graph" in out
    assert "summary: graphs=2 checks=2 failures=0 skipped=1" in out


def test_verify_json_reports(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("Bw\nBg\n")
    code = main(
        ["verify", "--input", str(path), "--json", "--checks", "inclusion_chain"]
    )
    assert code == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert len(lines) == 2
    for line in lines:
        jsonschema.validate(json.loads(line), REPORT_SCHEMA)
    assert json.loads(lines[0])["graph_id"] == "Bw"
    assert captured.err.startswith("summary: graphs=2")


def test_verify_requires_exactly_one_source(tmp_path, capsys):
    assert main(["verify"]) == 2
    assert "exactly one" in capsys.readouterr().err
    path = tmp_path / "g.g6"
    path.write_text("Bw\n")
    assert main(["verify", "--input", str(path), "--max-n", "3"]) == 2


def test_verify_rejects_unknown_checks(capsys):
    assert main(["verify", "--max-n", "2", "--checks", "bogus"]) == 2
    assert "unknown checks" in capsys.readouterr().err


def test_verify_enforces_the_guardrail(capsys):
    assert main(["verify", "--max-n", "13"]) == 2
    assert "guardrail" in capsys.readouterr().err


def test_verify_exit_one_on_failures(monkeypatch, capsys):
    def always_fail(ctx):
        return CheckOutcome("always_fail", False, counterexample={"why": "test"})

    monkeypatch.setitem(CHECK_REGISTRY, "always_fail", always_fail)
    assert main(["verify", "--max-n", "1", "--checks", "always_fail"]) == 1
    out = capsys.readouterr().out
    assert "FAIL @: always_fail" in out
    assert "failures=1" in out


def test_verify_parallel_jobs(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("Bw\nBg\nC~\n")
    code = main(
        ["verify", "--input", str(path), "--jobs", "2", "--checks", "ke_predicate"]
    )
    assert code == 0
    assert "summary: graphs=3 checks=3 failures=0" in capsys.readouterr().out


# --------------------------------------------------------------------------
# examples


def test_examples_matches_the_golden_file(capsys):
    assert main(["examples"]) == 0
    assert capsys.readouterr().out == GOLDEN.read_text()


def test_examples_text_is_stable():
    assert examples_text() == examples_text()


# --------------------------------------------------------------------------
# argparse plumbing


def test_missing_required_flags_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["analyze"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["augment", "--input", "-"])


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
