"""Command-line interface: commands, formats, exit codes."""

import json

from spreadlab.cli import main

from conftest import GROUPS, TABLE1

TABLE1_BOUNDS = {
    "M11": "3", "M12": "9", "J1": "179", "M22": "26", "J2": "24",
    "M23": "41020", "HS": "33", "J3": "597", "M24": "56", "McL": "308",
    "He": "1223", "Ru": "1252799", "Suz": "956", "ON": "2857238",
    "Co3": "1839", "Co2": "1024649", "Fi22": "186", "HN": "75603374",
    "Ly": "1296826874", "Th": "976841774", "Fi23": "31670",
    "Co1": "46621574", "J4": "47766599363", "Fi24'": "7819305288794",
    "B": "3843675651630431666542962843030",
    "M": "5791748068511982636944259374",
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_machine(capsys, *argv):
    code, out, err = run(capsys, "--format", "machine", *argv)
    return code, json.loads(out) if out else None, err


def test_bw_text_and_machine(capsys):
    code, out, _ = run(capsys, "bw", "--q", "13")
    assert code == 0 and "12" in out
    code, doc, _ = run_machine(capsys, "bw", "--q", "8")
    assert code == 0 and doc == {"command": "bw", "q": 8, "spread": 6}


def test_bw_out_of_range(capsys):
    code, _, err = run(capsys, "bw", "--q", "9")
    assert code == 2 and "input error" in err


def test_spread_exact_a5(capsys):
    code, doc, _ = run_machine(capsys, "spread", "exact", str(GROUPS / "a5.json"))
    assert code == 0
    assert doc["spread"] == 2 and doc["exact"] is True
    assert doc["minCoverSize"] == 3 and len(doc["witness"]) == 3


def test_spread_exact_budget_exhaustion(capsys):
    code, doc, _ = run_machine(
        capsys,
        "spread",
        "exact",
        str(GROUPS / "m11.json"),
        "--node-budget",
        "10",
    )
    assert code == 3
    assert doc["exact"] is False and doc["spread"] is None


def test_spread_exact_missing_file(capsys):
    code, _, err = run(capsys, "spread", "exact", "no-such-file.json")
    assert code == 2 and "input error" in err


def test_spread_atleast(capsys):
    code, doc, _ = run_machine(
        capsys, "spread", "atleast", str(GROUPS / "a5.json"), "--r", "2"
    )
    assert code == 0 and doc["holds"] is True
    code, doc, _ = run_machine(
        capsys, "spread", "atleast", str(GROUPS / "a5.json"), "--r", "3"
    )
    assert doc["holds"] is False and len(doc["witness"]) == 3


def test_bound_class_table_mode(capsys):
    code, doc, _ = run_machine(
        capsys,
        "bound",
        "class",
        str(TABLE1 / "tables" / "ru.json"),
        "--class",
        "2B",
    )
    assert code == 0 and doc["bound"] == "1252799"


def test_bound_class_spec_mode(capsys):
    code, doc, _ = run_machine(
        capsys, "bound", "class", str(GROUPS / "a5.json"), "--class", "2A"
    )
    assert code == 0 and doc["bound"] == "14"


def test_trick_command(capsys):
    code, doc, _ = run_machine(
        capsys, "trick", str(TABLE1 / "tables" / "ru.json"), "--target", "2B"
    )
    assert code == 0
    assert sorted(doc["residual"]) == ["15A", "29A"]


def test_trick_bad_target_exit_code(capsys):
    code, _, err = run(
        capsys, "trick", str(TABLE1 / "tables" / "co2.json"), "--target", "2C"
    )
    assert code == 1


def test_certify_command(capsys):
    code, doc, _ = run_machine(
        capsys,
        "certify",
        str(TABLE1 / "tables" / "m.json"),
        str(TABLE1 / "certs" / "m.json"),
    )
    assert code == 0
    assert doc["status"] == "certified"
    assert doc["bound"] == TABLE1_BOUNDS["M"]
    assert doc["assumedExternal"] > 0


def test_verify_table1_full_run(capsys):
    code, doc, _ = run_machine(capsys, "verify-table1", str(TABLE1))
    assert code == 0
    rows = {r["group"]: r for r in doc["rows"]}
    assert len(rows) == 26
    certified = [g for g, r in rows.items() if r["kind"] == "certified"]
    passthrough = [g for g, r in rows.items() if r["kind"] == "passthrough"]
    assert len(certified) == 11 and len(passthrough) == 15
    for group, bound in TABLE1_BOUNDS.items():
        assert rows[group]["bound"] == bound, group
    assert rows["M"]["bound"] == "5791748068511982636944259374"
    assert rows["B"]["kind"] == "passthrough"


def test_verify_table1_row_order(capsys):
    _, doc, _ = run_machine(capsys, "verify-table1", str(TABLE1))
    names = [r["group"] for r in doc["rows"]]
    assert names[0] == "M11" and names[-1] == "M"


def test_verify_table1_empty_dir(tmp_path, capsys):
    code, doc, _ = run_machine(capsys, "verify-table1", str(tmp_path))
    assert code == 0 and doc["rows"] == []


def test_verify_table1_machine_output_is_stable(capsys):
    _, out1, _ = run(capsys, "--format", "machine", "verify-table1", str(TABLE1))
    _, out2, _ = run(capsys, "--format", "machine", "verify-table1", str(TABLE1))
    assert out1 == out2


def test_out_flag_writes_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "--format", "machine", "--out", str(path), "bw", "--q", "16"
    )
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["spread"] == 14


def test_spread_reports_identical_across_threads(capsys):
    docs = []
    for t in ("1", "2", "8"):
        _, doc, _ = run_machine(
            capsys, "spread", "exact", str(GROUPS / "l2_8.json"), "--threads", t
        )
        docs.append(doc)
    assert docs[0] == docs[1] == docs[2]
