import json

import pytest

from goeritz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_primitive_auto_positive(capsys):
    code, out, _ = run(capsys, "primitive", "zyyzyyzy")
    assert code == 0
    assert "method: oz" in out and "primitive: yes" in out


def test_primitive_auto_filter_hit(capsys):
    code, out, _ = run(capsys, "primitive", "x y x Y")
    assert code == 1
    assert "method: filter" in out and "primitive: no" in out


def test_primitive_whitehead_with_trace(capsys):
    code, out, _ = run(capsys, "primitive", "x Y x Y y x", "--method", "whitehead", "--trace")
    assert code in (0, 1)
    assert "method: whitehead" in out


def test_primitive_trace_lists_moves(capsys):
    code, out, _ = run(capsys, "primitive", "xy^2xy^3", "--method", "whitehead", "--trace")
    assert code == 0
    assert "step 1:" in out


def test_primitive_oz_rejects_negative_letters(capsys):
    code, _, err = run(capsys, "primitive", "xY", "--method", "oz")
    assert code == 2
    assert "error" in err


def test_primitive_filter_inconclusive(capsys):
    code, out, _ = run(capsys, "primitive", "xy", "--method", "filter")
    assert code == 0
    assert "inconclusive" in out


def test_primitive_json(capsys):
    code, out, _ = run(capsys, "primitive", "x x y y", "--json")
    assert code == 1
    data = json.loads(out)
    assert data["primitive"] is False and data["method"] == "filter"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "primitive", "x w")
    assert code == 2
    assert "offset 2" in err


def test_sequence_8_3(capsys):
    code, out, _ = run(capsys, "sequence", "8", "3")
    assert code == 0
    lines = [ln.split() for ln in out.splitlines()[1:]]
    words = [row[1] for row in lines]
    assert words[0] == "yyyyyyyy" and words[8] == "zzzzzzzz"
    primitive_rows = [int(row[0]) for row in lines if row[2] == "primitive"]
    assert primitive_rows == [1, 3, 5, 7]


def test_sequence_verify(capsys):
    code, out, _ = run(capsys, "sequence", "8", "3", "--verify")
    assert code == 0
    assert "oracle agreement: ok" in out


def test_sequence_json(capsys):
    code, out, _ = run(capsys, "sequence", "5", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["params"]["q_prime"] == 2
    assert [r["word"] for r in data["rows"]][2] == "zyzyy"


def test_sequence_rejects_non_coprime(capsys):
    code, _, err = run(capsys, "sequence", "6", "4")
    assert code == 2
    assert "coprime" in err


def test_shell_table(capsys):
    code, out, _ = run(capsys, "shell", "5", "2")
    assert code == 0
    assert "xy^2xy^3" in out and "semiprimitive" in out


def test_shell_kinds(capsys):
    for kind in ("q", "pq", "q2", "pq2"):
        code, out, _ = run(capsys, "shell", "10", "3", "--kind", kind)
        assert code == 0
    code, out, _ = run(capsys, "shell", "10", "3", "--kind", "pq", "--json")
    data = json.loads(out)
    assert data["shell"]["slope"] == 7


def test_witness_12_5(capsys):
    code, out, _ = run(capsys, "witness", "12", "5")
    assert code == 0
    assert "s = 3, t = 0" in out
    assert "xy^5xy^5xy^5xy^5xy^5xy^5xy^6" in out


def test_witness_connected_rejected(capsys):
    code, _, err = run(capsys, "witness", "5", "2")
    assert code == 2
    assert "connected" in err


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "5", "2")
    assert code == 0
    assert "case: T2b (2)(b)" in out and "dimension: 2" in out


def test_classify_json_disconnected(capsys):
    code, out, _ = run(capsys, "classify", "12", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["structure"]["case_tag"] == "Disconnected"
    assert data["structure"]["vertex_orbits"] is None
    assert data["structure"]["quotient_graph"] == "not-applicable"


def test_presentation_text(capsys):
    code, out, _ = run(capsys, "presentation", "8", "3")
    assert code == 0
    assert "⟨α | α²⟩" in out
    assert "hyperelliptic" in out


def test_presentation_gap(capsys):
    code, out, _ = run(capsys, "presentation", "8", "3", "--format", "gap")
    assert code == 0
    assert "FreeGroup(" in out and "relators :=" in out


def test_presentation_amalgam_and_abelianization(capsys):
    code, out, _ = run(
        capsys, "presentation", "10", "3", "--amalgam", "--abelianization"
    )
    assert code == 0
    assert "G(D u D1)" in out
    assert "abelianization: Z^2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2" in out


def test_presentation_json(capsys):
    code, out, _ = run(capsys, "presentation", "5", "2", "--format", "json", "--amalgam")
    assert code == 0
    data = json.loads(out)
    assert len(data["amalgam"]["factors"]) == 2


def test_presentation_disconnected(capsys):
    code, _, err = run(capsys, "presentation", "12", "5")
    assert code == 2
    assert "not covered" in err


def test_report_connected(capsys):
    code, out, _ = run(capsys, "report", "5", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["witness"] is None
    assert data["presentation"] is not None
    assert data["abelianization"] == {"torsion": [2, 2, 2], "free_rank": 2}
    assert len(data["shells"]) == 4


def test_report_disconnected(capsys):
    code, out, _ = run(capsys, "report", "12", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["witness"] is not None
    assert data["presentation"] is None and data["amalgam"] is None
    assert len(data["witness"]["disks"]) == 5


def test_report_is_deterministic(capsys):
    _, first, _ = run(capsys, "report", "12", "5", "--json")
    _, second, _ = run(capsys, "report", "12", "5", "--json")
    assert first == second


def test_report_text(capsys):
    code, out, _ = run(capsys, "report", "7", "2")
    assert code == 0
    assert "structure case: T2c" in out and "presentation:" in out


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "sweep", "four-primitives", "--max-p", "12")
    assert code == 0
    assert "0 failures" in out


def test_sweep_json(capsys):
    code, out, _ = run(capsys, "sweep", "symmetry", "--max-p", "10", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["check"] == "symmetry" and data["failures"] == []


def test_sweep_unknown_check(capsys):
    with pytest.raises(SystemExit):
        main(["sweep", "no-such-check"])
