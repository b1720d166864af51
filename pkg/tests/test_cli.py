"""CLI round trips, exit codes and golden JSON.

Set PARITYCOLOR_UPDATE_GOLDEN=1 to rewrite the golden files after an
intentional output change.
"""

import json
import os
from pathlib import Path

import pytest

from paritycolor.cli import EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_INVALID, EXIT_OK, main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.startswith("{") else out


def check_golden(name, doc):
    path = GOLDEN / f"{name}.json"
    text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if os.environ.get("PARITYCOLOR_UPDATE_GOLDEN"):
        path.write_text(text)
    assert path.read_text() == text


# ---------- construct round trips over the parameter matrix

MATRIX = [
    (["canonical", "--k", 1], "spec"),
    (["canonical", "--k", 2], "spec"),
    (["canonical", "--k", 3], "spec"),
    (["canonical", "--k", 4], "spec"),
    (["canonical", "--k", 3, "--n", 5], "spec"),
    (["canonical", "--k", 4, "--n", 9], "spec"),
    (["bicanonical", "--k", 0], "spec"),
    (["bicanonical", "--k", 1], "spec"),
    (["bicanonical", "--k", 2], "spec"),
    (["bicanonical", "--k", 3], "spec"),
    (["product", "--k", 0, "--r", 4], "spec"),
    (["product", "--k", 1, "--r", 2], "spec"),
    (["product", "--k", 2, "--r", 3], "spec"),
    (["path", "--n", 2], "spec"),
    (["path", "--n", 9], "spec"),
    (["path", "--n", 64], "spec"),
    (["cycle", "--n", 3], "spec"),
    (["cycle", "--n", 7], "spec"),
    (["cycle", "--n", 12], "spec"),
    (["cycle", "--n", 33], "spec"),
    (["setfam", "--sets", DATA / "sets.txt"], "spec"),
    (["dag", "--n", 4], "parity"),
    (["dag", "--n", 8], "parity"),
    (["broom", "--k", 2], "conflict-free"),
    (["broom", "--k", 3], "conflict-free"),
    (["broom", "--k", 4], "conflict-free"),
    (["broom", "--k", 5], "conflict-free"),
    (["broom", "--k", 2, "--embed"], "embedding"),
    (["broom", "--k", 4, "--embed"], "embedding"),
    (["broom", "--k", 6, "--embed"], "embedding"),
]


@pytest.mark.parametrize("args,check", MATRIX, ids=lambda x: "-".join(map(str, x))
                         if isinstance(x, list) else x)
def test_construct_reverifies(capsys, tmp_path, args, check):
    code, doc = run(capsys, "construct", *args, "--out-dir", tmp_path)
    assert code == EXIT_OK and doc["verified"]
    files = {"--graph": tmp_path / "graph.txt"}
    if check == "embedding":
        files["--embedding"] = tmp_path / "embedding.txt"
    else:
        files["--coloring"] = tmp_path / "coloring.txt"
    flags = [x for kv in files.items() for x in kv]
    code, verdict = run(capsys, "verify", check, *flags, "--edge-limit", 64)
    assert code == EXIT_OK and verdict["valid"]


def test_construct_chained_operations(capsys, tmp_path):
    k4 = tmp_path / "k4"
    run(capsys, "construct", "canonical", "--k", 2, "--out-dir", k4)
    out = tmp_path / "bi"
    code, doc = run(capsys, "construct", "clique2biclique", "--graph", k4 / "graph.txt",
                    "--coloring", k4 / "coloring.txt", "--out-dir", out)
    assert code == EXIT_OK and doc["n"] == 8 and doc["colors"] == 4
    assert run(capsys, "verify", "spec", "--graph", out / "graph.txt",
               "--coloring", out / "coloring.txt")[0] == EXIT_OK

    k5 = tmp_path / "k5"
    run(capsys, "construct", "canonical", "--k", 3, "--n", 5, "--out-dir", k5)
    out = tmp_path / "k6"
    code, doc = run(capsys, "construct", "absorb", "--graph", k5 / "graph.txt",
                    "--coloring", k5 / "coloring.txt", "--out-dir", out)
    assert code == EXIT_OK and doc["n"] == 6 and doc["colors"] == 7
    assert run(capsys, "verify", "spec", "--graph", out / "graph.txt",
               "--coloring", out / "coloring.txt")[0] == EXIT_OK


def test_construct_examples(capsys):
    code, doc = run(capsys, "construct", "canonical", "--k", 4)
    assert code == EXIT_OK and doc["n"] == 16 and doc["colors"] == 15
    code, doc = run(capsys, "construct", "cycle", "--n", 7)
    assert doc["colors"] == 4
    code, doc = run(capsys, "construct", "broom", "--k", 4, "--embed")
    assert doc["n"] == 14 and "embedding" in doc and "coloring" not in doc
    code, doc = run(capsys, "construct", "setfam", "--sets", DATA / "sets.txt")
    assert doc["distinct_differences"] >= 8


# ---------- verify

def test_verify_k16_spec(capsys, tmp_path):
    run(capsys, "construct", "canonical", "--k", 4, "--out-dir", tmp_path)
    code, doc = run(capsys, "verify", "spec", "--graph", tmp_path / "graph.txt",
                    "--coloring", tmp_path / "coloring.txt")
    assert code == EXIT_OK and doc == {"method": "algebraic", "valid": True}


def test_verify_p3_monochrome(capsys):
    code, doc = run(capsys, "verify", "parity", "--graph", DATA / "p3.txt",
                    "--coloring", DATA / "p3_mono.txt")
    assert code == EXIT_INVALID and not doc["valid"]
    assert len(doc["certificate"]["walk"]) == 3
    check_golden("verify_parity_p3", doc)


def test_verify_pendant_example(capsys):
    code, doc = run(capsys, "verify", "spec", "--graph", DATA / "pendant_c6.txt",
                    "--coloring", DATA / "pendant_c6_coloring.txt")
    assert code == EXIT_INVALID
    walk = doc["certificate"]["walk"]
    assert walk[0] != walk[-1]
    check_golden("verify_spec_pendant_c6", doc)
    code, doc = run(capsys, "verify", "spec", "--graph", DATA / "pendant_c6.txt",
                    "--coloring", DATA / "pendant_c6_recolored.txt")
    assert code == EXIT_OK and doc["valid"]
    check_golden("verify_spec_pendant_c6_recolored", doc)


def test_verify_rset_invalid(capsys):
    code, doc = run(capsys, "verify", "rset", "--graph", DATA / "p3.txt",
                    "--assignment", DATA / "p3_rset_bad.txt")
    assert code == EXIT_INVALID
    assert doc["certificate"]["selection"] == [["0", "1", "a"], ["1", "2", "a"]]
    check_golden("verify_rset_p3", doc)


def test_verify_4c_and_cycles(capsys, tmp_path):
    run(capsys, "construct", "canonical", "--k", 3, "--out-dir", tmp_path)
    for kind in ("4c", "weak4c", "parity"):
        code, doc = run(capsys, "verify", kind, "--graph", tmp_path / "graph.txt",
                        "--coloring", tmp_path / "coloring.txt")
        assert code == EXIT_OK, kind
    # triangles of K_8 are not parity cycles
    code, doc = run(capsys, "verify", "cycles", "--graph", tmp_path / "graph.txt",
                    "--coloring", tmp_path / "coloring.txt")
    assert code == EXIT_INVALID and doc["certificate"]
    c8 = tmp_path / "c8"
    run(capsys, "construct", "cycle", "--n", 8, "--out-dir", c8)
    code, doc = run(capsys, "verify", "cycles", "--graph", c8 / "graph.txt",
                    "--coloring", c8 / "coloring.txt")
    assert code == EXIT_OK


# ---------- solve

@pytest.mark.parametrize("kind,graph,value", [("p", "k5", 7), ("spec", "k3", 3), ("cf", "c8", 4)])
def test_solve_golden(capsys, kind, graph, value):
    code, doc = run(capsys, "solve", kind, "--graph", DATA / f"{graph}.txt")
    assert code == EXIT_OK
    assert doc["value"] == value and doc["status"] == "exact"
    assert len(doc["witness"]) == {"k5": 10, "k3": 3, "c8": 8}[graph]
    check_golden(f"solve_{kind}_{graph}", doc)


def test_solve_pr(capsys):
    code, doc = run(capsys, "solve", "pr", "--graph", DATA / "p3.txt", "--r", 2)
    assert code == EXIT_OK and doc["value"] == 4
    assert all(len(sets) == 2 for _, _, sets in doc["witness"])


def test_construct_golden(capsys):
    for name, argv in [("construct_canonical_k2", ["canonical", "--k", 2]),
                       ("construct_cycle_5", ["cycle", "--n", 5]),
                       ("construct_broom_3_embed", ["broom", "--k", 3, "--embed"])]:
        code, doc = run(capsys, "construct", *argv)
        assert code == EXIT_OK
        check_golden(name, doc)


def test_text_format(capsys):
    code, out = run(capsys, "construct", "cycle", "--n", 4, "--format", "text")
    assert code == EXIT_OK
    assert "colors: 2\n" in out and out.startswith("coloring:\n")


# ---------- exit codes

def test_exit_inconclusive(capsys, tmp_path):
    run(capsys, "construct", "canonical", "--k", 4, "--out-dir", tmp_path)
    code, doc = run(capsys, "verify", "parity", "--graph", tmp_path / "graph.txt",
                    "--coloring", tmp_path / "coloring.txt")
    assert code == EXIT_INCONCLUSIVE and doc["status"] == "inconclusive"
    code, doc = run(capsys, "solve", "cf", "--graph", tmp_path / "graph.txt")
    assert code == EXIT_INCONCLUSIVE and doc["status"] == "oversize"
    code, doc = run(capsys, "solve", "p", "--graph", DATA / "k5.txt", "--budget", 5)
    assert code == EXIT_INCONCLUSIVE and doc["status"] == "timeout"


@pytest.mark.parametrize("argv", [
    ["verify", "parity", "--graph", "/nonexistent", "--coloring", "/nonexistent"],
    ["verify", "parity", "--graph", DATA / "p3.txt"],
    ["verify", "spec", "--graph", DATA / "k3.txt", "--coloring", DATA / "p3_mono.txt"],
    ["construct", "path", "--n", 1],
    ["construct", "canonical"],
    ["construct", "canonical", "--k", 2, "--n", 5],
    ["solve", "pr", "--graph", DATA / "p3.txt"],
    ["frobnicate"],
    ["verify", "nonsense"],
])
def test_exit_input_errors(capsys, argv):
    code = main([str(a) for a in argv])
    capsys.readouterr()
    assert code == EXIT_INPUT
