"""Fault injection: every tampered fixture must be rejected loudly.

Each case copies a shipped fixture, damages one field, runs the
relevant command, and checks for a nonzero exit with output naming the
failed check.  Validation-stage damage exits 2 (input error);
check-stage damage exits 1 (failed check).
"""

import json

import pytest

from spreadlab.cli import main

from conftest import TABLE1


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out + captured.err


def write_tampered(tmp_path, stem, damage_table=None, damage_cert=None):
    table_doc = json.loads((TABLE1 / "tables" / f"{stem}.json").read_text())
    cert_doc = json.loads((TABLE1 / "certs" / f"{stem}.json").read_text())
    if damage_table:
        damage_table(table_doc)
    if damage_cert:
        damage_cert(cert_doc)
    table_path = tmp_path / "table.json"
    cert_path = tmp_path / "cert.json"
    table_path.write_text(json.dumps(table_doc, indent=2) + "\n")
    cert_path.write_text(json.dumps(cert_doc, indent=2) + "\n")
    return str(table_path), str(cert_path)


def case_power_map_breaks_witness(t):
    # 10B no longer powers into 2B, so centralizer-cover for 15A fails
    t["powerMaps"]["5"]["10B"] = "2A"


def case_power_map_order_law(t):
    t["powerMaps"]["2"]["6A"] = "2A"


def case_class_size_off_by_one(t):
    t["classes"][3]["size"] = str(int(t["classes"][3]["size"]) + 1)


def case_target_size_changed(t):
    # keep the sum intact but move one element out of the target class,
    # so the certificate bound no longer equals |2B| - 1
    for c in t["classes"]:
        if c["name"] == "2B":
            c["size"] = str(int(c["size"]) - 1)
        if c["name"] == "4A":
            c["size"] = str(int(c["size"]) + 1)


def case_sylow_central_dropped(t):
    t["sylow2Central"] = ["2A"]


def case_residual_class_dropped(c):
    c["residual"] = [x for x in c["residual"] if x != "29A"]
    c["evidence"].pop("29A", None)


def case_residual_class_added(c):
    c["residual"].append("5A")
    c["evidence"]["5A"] = [{"kind": "external", "description": "bogus"}]


def case_bound_lowered(c):
    c["bound"] = str(int(c["bound"]) - 1)


def case_permchar_zeroed(c):
    for m in c["maximals"]:
        if "permchar" in m:
            m["permchar"]["29A"] = "0"


def case_maximal_order_corrupted(c):
    # no longer divides the group order, breaking odd-index reasoning
    for m in c["maximals"]:
        m["order"] = str(int(m["order"]) * 2 + 1)


TAMPER_CORPUS = [
    ("power-map-witness", case_power_map_breaks_witness, None, 1),
    ("power-map-order-law", case_power_map_order_law, None, 2),
    ("class-size-sum", case_class_size_off_by_one, None, 2),
    ("target-class-size", case_target_size_changed, None, 2),
    ("sylow-central-dropped", case_sylow_central_dropped, None, 1),
    ("residual-dropped", None, case_residual_class_dropped, 1),
    ("residual-added", None, case_residual_class_added, 1),
    ("bound-lowered", None, case_bound_lowered, 2),
    ("permchar-zeroed", None, case_permchar_zeroed, 1),
    ("maximal-order-corrupted", None, case_maximal_order_corrupted, 1),
]


@pytest.mark.parametrize(
    "label, damage_table, damage_cert, expected_exit",
    TAMPER_CORPUS,
    ids=[case[0] for case in TAMPER_CORPUS],
)
def test_tampered_fixture_detected(
    tmp_path, capsys, label, damage_table, damage_cert, expected_exit
):
    stem = "th" if label == "maximal-order-corrupted" else "ru"
    table, cert = write_tampered(tmp_path, stem, damage_table, damage_cert)
    code, output = run(capsys, "certify", table, cert)
    assert code == expected_exit, output
    # the failure is named, not silent
    assert any(
        marker in output
        for marker in ("FAILED", "input error", "residual", "error")
    ), output


def test_untampered_baseline_passes(capsys):
    code, output = run(
        capsys,
        "certify",
        str(TABLE1 / "tables" / "ru.json"),
        str(TABLE1 / "certs" / "ru.json"),
    )
    assert code == 0
    assert "CERTIFIED" in output
