"""Fixture formats: parsing, validation, round-trips, big integers."""

import json

import pytest

from spreadlab import (
    ValidationError,
    load_certificate,
    load_class_table,
    load_group_spec,
    load_passthrough,
    parse_certificate,
    parse_class_table,
    parse_group_spec,
)
from spreadlab.fixtures import (
    serialize_certificate,
    serialize_class_table,
    serialize_group_spec,
    serialize_passthrough,
)

from conftest import GROUPS, TABLE1


def table_of(name):
    return load_class_table(TABLE1 / "tables" / f"{name}.json")


# --- group specs -----------------------------------------------------------


def test_group_specs_load_and_round_trip():
    paths = sorted(GROUPS.glob("*.json"))
    assert len(paths) == 8
    for path in paths:
        text = path.read_text()
        spec = parse_group_spec(text)
        assert serialize_group_spec(spec) == text


def test_a5_spec_content():
    spec = load_group_spec(GROUPS / "a5.json")
    assert spec.order == 60
    assert len(spec.maximals) == 3
    assert sorted(f.count for f in spec.maximals) == [5, 6, 10]


def test_m11_spec_content():
    spec = load_group_spec(GROUPS / "m11.json")
    assert spec.order == 7920
    assert sorted(f.count for f in spec.maximals) == [11, 12, 55, 66, 165]


def test_group_spec_wrong_order_rejected():
    doc = json.loads((GROUPS / "a5.json").read_text())
    doc["order"] = "61"
    with pytest.raises(ValidationError) as err:
        parse_group_spec(json.dumps(doc))
    assert "$.order" in str(err.value)


def test_group_spec_wrong_maximal_order_rejected():
    doc = json.loads((GROUPS / "a5.json").read_text())
    doc["maximals"][0]["order"] = "6"
    with pytest.raises(ValidationError) as err:
        parse_group_spec(json.dumps(doc))
    assert "maximals[0]" in str(err.value)


# --- class tables ----------------------------------------------------------


def test_class_tables_load_and_round_trip():
    paths = sorted((TABLE1 / "tables").glob("*.json"))
    assert len(paths) == 11
    for path in paths:
        text = path.read_text()
        table = parse_class_table(text)
        assert serialize_class_table(table) == text
        assert sum(c.size for c in table.classes) == table.order


def test_ru_table_content():
    table = table_of("ru")
    assert table.order == 145926144000
    assert table.involution_classes() == ["2A", "2B"]
    assert table.class_named("2B").size == 1252800


def test_monster_scale_integers_are_exact():
    table = table_of("m")
    assert table.order == int(
        "8080174247945128758864599049617107570057543680000" "00000"
    )
    size = table.class_named("2B").size
    assert size == 5791748068511982636944259375
    assert size - 1 == 5791748068511982636944259374


def test_table_size_sum_enforced():
    doc = json.loads((TABLE1 / "tables" / "ru.json").read_text())
    doc["classes"][3]["size"] = str(int(doc["classes"][3]["size"]) - 1)
    with pytest.raises(ValidationError) as err:
        parse_class_table(json.dumps(doc))
    assert "$.classes" in str(err.value)


def test_table_power_map_order_law_enforced():
    doc = json.loads((TABLE1 / "tables" / "ru.json").read_text())
    # order-6 class squared must land in an order-3 class
    doc["powerMaps"]["2"]["6A"] = "2A"
    with pytest.raises(ValidationError) as err:
        parse_class_table(json.dumps(doc))
    assert "powerMaps" in str(err.value)


def test_table_missing_prime_map_rejected():
    doc = json.loads((TABLE1 / "tables" / "ru.json").read_text())
    del doc["powerMaps"]["29"]
    with pytest.raises(ValidationError) as err:
        parse_class_table(json.dumps(doc))
    assert "missing map for prime 29" in str(err.value)


def test_table_partial_map_rejected():
    doc = json.loads((TABLE1 / "tables" / "ru.json").read_text())
    del doc["powerMaps"]["2"]["6A"]
    with pytest.raises(ValidationError) as err:
        parse_class_table(json.dumps(doc))
    assert "not total" in str(err.value)


def test_table_sylow2_central_must_be_involutions():
    doc = json.loads((TABLE1 / "tables" / "ru.json").read_text())
    doc["sylow2Central"] = ["3A"]
    with pytest.raises(ValidationError) as err:
        parse_class_table(json.dumps(doc))
    assert "involution" in str(err.value)


# --- certificates ----------------------------------------------------------


def test_certificates_load_and_round_trip():
    paths = sorted((TABLE1 / "certs").glob("*.json"))
    assert len(paths) == 11
    for path in paths:
        table = load_class_table(TABLE1 / "tables" / path.name)
        text = path.read_text()
        cert = parse_certificate(text, table)
        assert serialize_certificate(cert) == text
        assert cert.bound == table.class_named(cert.target).size - 1


def test_ru_certificate_content():
    table = table_of("ru")
    cert = load_certificate(TABLE1 / "certs" / "ru.json", table)
    assert cert.target == "2B"
    assert cert.bound == 1252799
    assert sorted(cert.residual) == ["15A", "29A"]


def test_hn_certificate_bound():
    table = table_of("hn")
    cert = load_certificate(TABLE1 / "certs" / "hn.json", table)
    assert cert.bound == 75603374


def test_certificate_bound_mismatch_rejected():
    table = table_of("ru")
    doc = json.loads((TABLE1 / "certs" / "ru.json").read_text())
    doc["bound"] = "1252798"
    with pytest.raises(ValidationError) as err:
        parse_certificate(json.dumps(doc), table)
    assert "$.bound" in str(err.value)


def test_certificate_unknown_residual_rejected():
    table = table_of("ru")
    doc = json.loads((TABLE1 / "certs" / "ru.json").read_text())
    doc["residual"].append("99Z")
    with pytest.raises(ValidationError) as err:
        parse_certificate(json.dumps(doc), table)
    assert "unknown class" in str(err.value)


def test_certificate_evidence_for_non_residual_rejected():
    table = table_of("ru")
    doc = json.loads((TABLE1 / "certs" / "ru.json").read_text())
    doc["evidence"]["3A"] = [{"kind": "even-maximals"}]
    with pytest.raises(ValidationError) as err:
        parse_certificate(json.dumps(doc), table)
    assert "non-residual" in str(err.value)


def test_certificate_undeclared_maximal_rejected():
    table = table_of("ru")
    doc = json.loads((TABLE1 / "certs" / "ru.json").read_text())
    doc["evidence"]["29A"] = [{"kind": "permchar", "maximal": "nope"}]
    with pytest.raises(ValidationError) as err:
        parse_certificate(json.dumps(doc), table)
    assert "not declared" in str(err.value)


def test_validation_errors_name_the_field():
    doc = json.loads((TABLE1 / "tables" / "ru.json").read_text())
    doc["classes"][5]["size"] = "abc"
    with pytest.raises(ValidationError) as err:
        parse_class_table(json.dumps(doc))
    assert "$.classes[5].size" in str(err.value)


# --- passthrough rows ------------------------------------------------------


def test_passthrough_rows_load():
    paths = sorted((TABLE1 / "passthrough").glob("*.json"))
    assert len(paths) == 15
    for path in paths:
        row = load_passthrough(path)
        assert row.bound > 0 and row.source
        assert serialize_passthrough(row) == path.read_text()


def test_baby_monster_passthrough_value():
    row = load_passthrough(TABLE1 / "passthrough" / "b.json")
    assert row.bound == 3843675651630431666542962843030
