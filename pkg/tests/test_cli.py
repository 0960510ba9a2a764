import json
import subprocess
import sys
import time
from importlib import resources

import pytest

from boolring import laws
from boolring.cli import main
from boolring.corpus import parse_table
from boolring.pext import Pext, and_

DATA = resources.files("boolring") / "data"
TALES = DATA / "fairy_tales"
WORKED = DATA / "worked_example"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_code_with_annotations(capsys, tales):
    code, out, _ = run(capsys, "code", "--catalog", TALES / "catalog.json", "--corpus", TALES / "corpus.jsonl",
                       "--annotations", TALES / "annotations.jsonl")
    assert code == 0
    assert dict(parse_table(out)) == tales
    assert out == (TALES / "coded.tsv").read_text(encoding="utf-8")


def test_code_json(capsys):
    code, out, _ = run(capsys, "code", "--catalog", TALES / "catalog.json", "--corpus", TALES / "corpus.jsonl",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["doc_id"] == "m1" and len(rows[0]["matched"]) == 5


def test_code_empty_corpus(capsys, tmp_path):
    code, out, _ = run(capsys, "code", "--catalog", TALES / "catalog.json", "--corpus", tmp_path)
    assert (code, out) == (0, "")


def test_code_bad_pattern(capsys, tmp_path):
    cat = tmp_path / "cat.json"
    cat.write_text(json.dumps({"statements": [{"text": "a"}, {"text": "b", "patterns": ["[x"]}]}), encoding="utf-8")
    code, _, err = run(capsys, "code", "--catalog", cat, "--corpus", tmp_path)
    assert code == 2
    assert "statement 2" in err and "cat.json" in err


def test_code_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "code", "--catalog", tmp_path / "nope.json", "--corpus", tmp_path)
    assert code == 2 and "nope.json" in err


@pytest.mark.parametrize("left,right,bits,statement", [
    (["m1", "m2", "m3", "m4"], ["m5"], "00010", "The main character is a human."),
    (["m2", "m3"], ["m4", "m5", "m1"], "00100", 'A "wicked stepmother".'),
    (["m1"], ["m1"], "00000", "NULL"),
])
def test_compare(capsys, left, right, bits, statement):
    code, out, _ = run(capsys, "compare", TALES / "coded.tsv", "--catalog", TALES / "catalog.json",
                       "--left", *left, "--right", *right)
    assert code == 0
    assert out == f"{bits}\n{statement}\n"


def test_compare_comma_ids_and_json(capsys):
    code, out, _ = run(capsys, "compare", TALES / "coded.tsv", "--left", "m1,m2,m3,m4", "--right", "m5",
                       "--format", "json")
    assert code == 0
    assert json.loads(out) == {"bits": "00010", "statement": None}


def test_compare_unknown_id(capsys):
    code, _, err = run(capsys, "compare", TALES / "coded.tsv", "--left", "m9")
    assert code == 2 and "m9" in err


@pytest.mark.parametrize("method", ["atoms", "m", "gram"])
def test_cluster_worked(capsys, method):
    code, out, _ = run(capsys, "cluster", WORKED / "coded.tsv", "--method", method)
    assert code == 0
    assert json.loads(out) == [
        {"l": "1000", "r": "0010", "left": ["X1", "X3"], "right": ["X2", "X4"], "method": method}
    ]


def test_cluster_gram_with_pairs_tsv(capsys):
    code, out, _ = run(capsys, "cluster", WORKED / "coded.tsv", "--method", "gram",
                       "--pairs", WORKED / "pairs.json", "--format", "tsv")
    assert code == 0
    assert out == "gram\t1000\t0010\tX1,X3\tX2,X4\n"


def test_cluster_fairy_tales_empty(capsys):
    code, out, _ = run(capsys, "cluster", TALES / "coded.tsv")
    assert (code, json.loads(out)) == (0, [])


def test_cluster_disconnected_pairs(capsys, tmp_path):
    pairs = tmp_path / "p.json"
    pairs.write_text("[[1, 2], [3, 4]]", encoding="utf-8")
    code, _, err = run(capsys, "cluster", WORKED / "coded.tsv", "--method", "gram", "--pairs", pairs)
    assert code == 2 and "DisconnectedPairGraph" in err


def test_zerodiv_unsatisfiable(capsys, tmp_path):
    table = tmp_path / "t.tsv"
    table.write_text("a\t10\nb\t01\n", encoding="utf-8")
    code, out, _ = run(capsys, "zerodiv", table)
    assert code == 0
    rep = json.loads(out)
    assert rep["found"] is False and rep["guesses"] == 2 and rep["wall_ms"] is None


def test_zerodiv_all_ones(capsys, tmp_path):
    table = tmp_path / "t.tsv"
    table.write_text("a\t0110\nb\t1111\n", encoding="utf-8")
    code, out, _ = run(capsys, "zerodiv", table)
    rep = json.loads(out)
    assert code == 0 and rep["found"] is True
    assert rep["assignment"] == {"left": ["a"], "right": ["b"]}
    assert rep["left_product"] == "0110"


def test_zerodiv_random_is_byte_identical(capsys):
    argv = ["zerodiv", WORKED / "coded.tsv", "--mode", "random", "--budget", "50", "--seed", "3"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    rep = json.loads(first[1])
    assert rep["assignment"]["left"] == ["X3"]
    assert (rep["guesses"], rep["ring_ops"]) == (1, 6)


def test_zerodiv_timing_flag(capsys):
    code, out, _ = run(capsys, "zerodiv", WORKED / "coded.tsv", "--timing")
    assert code == 0 and isinstance(json.loads(out)["wall_ms"], float)


def test_zerodiv_too_many(capsys, tmp_path):
    table = tmp_path / "t.tsv"
    table.write_text("".join(f"d{i}\t01\n" for i in range(5)), encoding="utf-8")
    code, _, err = run(capsys, "zerodiv", table, "--limit", "4")
    assert code == 2 and "TooManyTexts" in err


def test_transform_set_first(capsys):
    code, out, _ = run(capsys, "transform", WORKED / "coded.tsv", "--spec", WORKED / "set_first_digit.json")
    assert code == 0
    rep = json.loads(out)
    assert rep["complexity_score"] == 1
    assert rep["per_bit_rank"] == [1, 0, 0, 0]
    assert rep["sum_matrix"]["cells"] == [
        ["0000", "1000", "0000", "1000"],
        ["0000", "0000", "0000", "0000"],
        ["0000", "1000", "0000", "1000"],
        ["0000", "0000", "0000", "0000"],
    ]


def test_transform_identity_and_clear(capsys):
    _, out, _ = run(capsys, "transform", WORKED / "coded.tsv", "--spec", WORKED / "identity.json")
    assert json.loads(out)["complexity_score"] == 0
    _, out, _ = run(capsys, "transform", WORKED / "coded.tsv", "--spec", WORKED / "clear_all.json")
    rep = json.loads(out)
    assert all(c == "0000" for row in rep["t_matrix"]["cells"] for c in row)
    assert rep["sum_matrix"] == rep["i_matrix"]


def test_transform_contradictory(capsys, tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text('{"set": "1000", "clear": "1000"}', encoding="utf-8")
    code, _, err = run(capsys, "transform", WORKED / "coded.tsv", "--spec", spec)
    assert code == 2 and "s.json" in err


def test_kernel(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"rows": 2, "cols": 2, "width": 2, "cells": [["10", "10"], ["00", "00"]]}), encoding="utf-8")
    code, out, _ = run(capsys, "kernel", m)
    assert code == 0
    assert json.loads(out) == {"generators": [["10", "10"], ["01", "00"], ["00", "01"]], "per_bit_nullity": [1, 2]}


def test_kernel_malformed(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text('{"cells": [["10"], ["1"]]}', encoding="utf-8")
    assert run(capsys, "kernel", m)[0] == 2
    m.write_text("not json", encoding="utf-8")
    assert run(capsys, "kernel", m)[0] == 2


def test_axioms_default(capsys):
    code, out, _ = run(capsys, "axioms")
    assert code == 0
    assert out.splitlines()[-1] == "26 passed, 0 failed"


def test_axioms_fast_enough(capsys):
    start = time.perf_counter()
    code, _, _ = run(capsys, "axioms", "--trials", "10000", "--width", "64")
    assert code == 0
    assert time.perf_counter() - start < 5


def test_axioms_catch_faulty_xor(capsys, monkeypatch):
    def faulty_xor(a, b):
        # 1 xor 1 leaks a 1 into the last digit
        return Pext((a.bits ^ b.bits) | (a.bits & b.bits & 1), a.width)

    monkeypatch.setattr(laws, "OPS", laws.Ops(faulty_xor, and_))
    code, out, _ = run(capsys, "axioms", "--trials", "200", "--width", "8")
    assert code == 1
    failures = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert any("A xor A = 0" in line for line in failures)
    assert all("counterexample" in line for line in failures)


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "cluster", WORKED / "coded.tsv", "-o", target)
    assert code == 0 and out == ""
    assert json.loads(target.read_text(encoding="utf-8"))[0]["l"] == "1000"


def test_negative_seed_rejected(capsys):
    assert run(capsys, "zerodiv", WORKED / "coded.tsv", "--seed", "-1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "boolring", "compare", str(TALES / "coded.tsv"),
                           "--left", "m1", "--right", "m1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "00000\n"
