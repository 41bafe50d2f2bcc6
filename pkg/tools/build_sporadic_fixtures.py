"""Build the class tables, certificates, and passthrough rows under data/table1/.

Reads the group descriptions in sporadic_data.py, fills in placeholder
class sizes and default power maps, validates everything through the
library parsers, re-runs the even-order elimination and the certificate
checks, and only then writes the JSON files.

Run from the repository root:  python3 tools/build_sporadic_fixtures.py
"""

import json
import sys
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from sporadic_data import GROUPS, PASSTHROUGH, TABLE_NOTE

from spreadlab.fixtures import (
    parse_certificate,
    parse_class_table,
    parse_passthrough,
    primes_dividing,
    serialize_passthrough,
)
from spreadlab.trick import certify, even_order_trick

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "table1"


def class_order(name):
    digits = ""
    for ch in name:
        if ch.isdigit():
            digits += ch
        else:
            break
    return int(digits)


def build_sizes(entry):
    classes = entry["classes"]
    order = entry["order"]
    target = entry["target"]
    filler = entry["filler"]
    sizes = {"1A": 1, target: entry["target_size"]}
    rest = [c for c in classes if c not in sizes]
    remaining = order - 1 - entry["target_size"]
    base = remaining // len(rest)
    extra = remaining - base * len(rest)
    if base < 1:
        raise SystemExit(f"{entry['name']}: placeholder sizes would not be positive")
    for c in rest:
        sizes[c] = base
    sizes[filler] += extra
    assert sum(sizes[c] for c in classes) == order
    return sizes


def build_power_maps(entry):
    classes = entry["classes"]
    orders = {c: class_order(c) for c in classes}
    first_of = {}
    for c in classes:
        first_of.setdefault(orders[c], c)
    max_order = max(orders.values())
    maps = {}
    for p in primes_dividing(entry["order"], max_order):
        table = {}
        pins = entry["pins"].get(p, {})
        for c in classes:
            n = orders[c]
            image_order = n // gcd(p, n)
            if c in pins:
                image = pins[c]
                if orders[image] != image_order:
                    raise SystemExit(
                        f"{entry['name']}: pin {c}^{p} -> {image} breaks the order law"
                    )
            elif image_order == n:
                image = c
            else:
                image = first_of.get(image_order)
                if image is None:
                    raise SystemExit(
                        f"{entry['name']}: no class of order {image_order} for {c}^{p}"
                    )
            table[c] = image
        maps[str(p)] = table
    unused = set(entry["pins"]) - {int(k) for k in maps}
    if unused:
        raise SystemExit(f"{entry['name']}: pins for unused primes {sorted(unused)}")
    return maps


def build_table_doc(entry, sizes, maps):
    return {
        "name": entry["name"],
        "order": str(entry["order"]),
        "simple": True,
        "classes": [
            {"name": c, "elementOrder": class_order(c), "size": str(sizes[c])}
            for c in entry["classes"]
        ],
        "powerMaps": maps,
        "sylow2Central": entry["sylow2_central"],
        "provenance": TABLE_NOTE,
    }


def build_cert_doc(entry, table):
    maximals = []
    for mname, morder, permchar in entry["maximals"]:
        doc = {"name": mname, "order": str(morder)}
        if permchar is not None:
            if entry["order"] % morder != 0:
                raise SystemExit(f"{entry['name']}: |{mname}| does not divide |G|")
            values = {"1A": str(entry["order"] // morder)}
            values.update({c: str(v) for c, v in permchar.items()})
            doc["permchar"] = values
        maximals.append(doc)
    report = even_order_trick(table, entry["target"])
    if sorted(report.residual) != sorted(entry["residual"]):
        raise SystemExit(
            f"{entry['name']}: residual mismatch\n"
            f"  expected {sorted(entry['residual'])}\n"
            f"  computed {sorted(report.residual)}"
        )
    return {
        "name": entry["name"],
        "target": entry["target"],
        "bound": str(entry["target_size"] - 1),
        "residual": report.residual,
        "evidence": {c: entry["evidence"][c] for c in report.residual},
        "maximals": maximals,
        "provenance": TABLE_NOTE,
    }


def file_name(name):
    return name.replace("'", "prime").lower() + ".json"


def main():
    for sub in ("tables", "certs", "passthrough"):
        (OUT / sub).mkdir(parents=True, exist_ok=True)

    for entry in GROUPS:
        sizes = build_sizes(entry)
        maps = build_power_maps(entry)
        table_text = json.dumps(build_table_doc(entry, sizes, maps), indent=2) + "\n"
        table = parse_class_table(table_text)

        cert_text = json.dumps(build_cert_doc(entry, table), indent=2) + "\n"
        cert = parse_certificate(cert_text, table)

        report = certify(table, cert)
        if report.status != "certified":
            for cname, kind, detail in report.failing_checks():
                print(f"  FAILED {entry['name']} {cname} [{kind}]: {detail}")
            raise SystemExit(f"{entry['name']}: certificate did not verify")

        (OUT / "tables" / file_name(entry["name"])).write_text(table_text)
        (OUT / "certs" / file_name(entry["name"])).write_text(cert_text)
        print(
            f"{entry['name']}: bound {report.bound}, "
            f"{len(report.trick.residual)} residual classes, "
            f"{report.assumed_external} assumed-external items"
        )

    for name, bound, source in PASSTHROUGH:
        text = json.dumps(
            {"name": name, "bound": str(bound), "source": source}, indent=2
        ) + "\n"
        parse_passthrough(text)
        (OUT / "passthrough" / file_name(name)).write_text(text)
    print(f"{len(PASSTHROUGH)} passthrough rows written")


if __name__ == "__main__":
    main()
