"""Fixture formats: group specs, class tables, certificates.

Three JSON document kinds are used throughout:

* group spec -- a permutation group with generators for one
  representative of each conjugacy family of maximal subgroups;
* class table -- class names, element orders, sizes (decimal strings,
  since several groups exceed 2**63), prime power maps, and the classes
  declared central in a Sylow 2-subgroup;
* certificate -- a bound for one table: target class, expected residual
  classes of the even-order elimination, and per-class evidence.

Loaders validate aggressively and report the JSON path of the first
offence.  `serialize_*` emit a canonical form (fixed key order, two
space indent, trailing newline) so that serialize(load(text)) == text
for canonical inputs.
"""

import json
import os
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path

from .errors import ParseError, ValidationError
from .perm import (
    StabilizerChain,
    centre_of,
    element_order,
    from_cycles,
    sylow_two_subgroup,
    to_cycles,
)

EVIDENCE_KINDS = (
    "cyclic-witness",
    "centralizer-cover",
    "permchar",
    "odd-index-maximal",
    "even-maximals",
    "external",
)


# ---------------------------------------------------------------------------
# Data model
# ---------------------------------------------------------------------------


@dataclass
class MaximalFamily:
    name: str
    order: int
    count: int
    generators: list  # permutation tuples
    cycles: list  # original 1-based cycle lists


@dataclass
class GroupSpec:
    name: str
    degree: int
    order: int
    simple: bool
    generators: list
    generator_cycles: list
    maximals: list


@dataclass
class ClassInfo:
    name: str
    element_order: int
    size: int


@dataclass
class ClassTable:
    name: str
    order: int
    simple: bool
    classes: list
    power_maps: dict  # prime -> {class name -> class name}
    sylow2_central: list
    provenance: str | None = None
    _by_name: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._by_name = {c.name: c for c in self.classes}

    def class_named(self, name):
        return self._by_name[name]

    def has_class(self, name):
        return name in self._by_name

    def identity_class(self):
        return next(c for c in self.classes if c.element_order == 1)

    def involution_classes(self):
        return [c.name for c in self.classes if c.element_order == 2]

    def even_classes(self):
        return [c.name for c in self.classes if c.element_order % 2 == 0]


@dataclass
class EvidenceItem:
    kind: str
    witness: str | None = None
    center: str | None = None
    maximal: str | None = None
    description: str | None = None


@dataclass
class MaximalInfo:
    name: str
    order: int
    permchar: dict | None = None  # class name -> non-negative int


@dataclass
class Certificate:
    name: str
    target: str
    bound: int
    residual: list
    evidence: dict  # class name -> [EvidenceItem]
    maximals: dict  # maximal name -> MaximalInfo
    provenance: str | None = None


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _parse_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"{what}: {err}") from None


def _need(doc, key, kind, path):
    if key not in doc:
        raise ValidationError(f"{path}.{key}", "missing field")
    value = doc[key]
    if kind is int and isinstance(value, bool):
        raise ValidationError(f"{path}.{key}", "expected an integer")
    if not isinstance(value, kind):
        raise ValidationError(f"{path}.{key}", f"expected {kind.__name__}")
    return value


def _decimal(value, path):
    if not isinstance(value, str) or not value.isdigit():
        raise ValidationError(path, "expected a decimal string")
    return int(value)


def primes_dividing(n, limit):
    """Primes p <= limit dividing n, by trial division."""
    found = []
    p = 2
    while p <= limit:
        if n % p == 0:
            found.append(p)
        p += 1 if p == 2 else 2
    return [p for p in found if _is_prime(p)]


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Group specs
# ---------------------------------------------------------------------------


def _parse_perm(cycles, degree, path):
    if not isinstance(cycles, list):
        raise ValidationError(path, "expected a list of cycles")
    try:
        return from_cycles(cycles, degree, one_based=True)
    except (ValueError, TypeError) as err:
        raise ValidationError(path, str(err)) from None


def parse_group_spec(text):
    doc = _parse_json(text, "group spec")
    name = _need(doc, "name", str, "$")
    degree = _need(doc, "degree", int, "$")
    if degree < 1:
        raise ValidationError("$.degree", "degree must be positive")
    order = _decimal(_need(doc, "order", str, "$"), "$.order")
    simple = doc.get("simple", True)
    if not isinstance(simple, bool):
        raise ValidationError("$.simple", "expected a boolean")

    raw_gens = _need(doc, "generators", list, "$")
    generators = [
        _parse_perm(g, degree, f"$.generators[{i}]") for i, g in enumerate(raw_gens)
    ]
    if not generators:
        raise ValidationError("$.generators", "at least one generator required")
    actual = StabilizerChain(generators, degree).order()
    if actual != order:
        raise ValidationError(
            "$.order", f"declared {order} but generators span {actual}"
        )

    maximals = []
    seen_names = set()
    for i, raw in enumerate(_need(doc, "maximals", list, "$")):
        path = f"$.maximals[{i}]"
        if not isinstance(raw, dict):
            raise ValidationError(path, "expected an object")
        fam_name = _need(raw, "name", str, path)
        if fam_name in seen_names:
            raise ValidationError(f"{path}.name", f"duplicate family {fam_name!r}")
        seen_names.add(fam_name)
        fam_order = _decimal(_need(raw, "order", str, path), f"{path}.order")
        count = _need(raw, "count", int, path)
        if count < 1:
            raise ValidationError(f"{path}.count", "count must be positive")
        if order % fam_order != 0:
            raise ValidationError(f"{path}.order", "must divide the group order")
        fam_cycles = _need(raw, "generators", list, path)
        fam_gens = [
            _parse_perm(g, degree, f"{path}.generators[{j}]")
            for j, g in enumerate(fam_cycles)
        ]
        fam_actual = StabilizerChain(fam_gens, degree).order()
        if fam_actual != fam_order:
            raise ValidationError(
                f"{path}.order", f"declared {fam_order} but generators span {fam_actual}"
            )
        maximals.append(
            MaximalFamily(fam_name, fam_order, count, fam_gens, fam_cycles)
        )

    return GroupSpec(
        name=name,
        degree=degree,
        order=order,
        simple=simple,
        generators=generators,
        generator_cycles=raw_gens,
        maximals=maximals,
    )


def serialize_group_spec(spec):
    doc = {
        "name": spec.name,
        "degree": spec.degree,
        "order": str(spec.order),
        "simple": spec.simple,
        "generators": [
            [list(c) for c in to_cycles(g)] for g in spec.generators
        ],
        "maximals": [
            {
                "name": fam.name,
                "order": str(fam.order),
                "count": fam.count,
                "generators": [[list(c) for c in to_cycles(g)] for g in fam.generators],
            }
            for fam in spec.maximals
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_group_spec(path):
    return parse_group_spec(Path(path).read_text())


# ---------------------------------------------------------------------------
# Class tables
# ---------------------------------------------------------------------------


def parse_class_table(text):
    doc = _parse_json(text, "class table")
    name = _need(doc, "name", str, "$")
    order = _decimal(_need(doc, "order", str, "$"), "$.order")
    simple = _need(doc, "simple", bool, "$")

    classes = []
    names = set()
    for i, raw in enumerate(_need(doc, "classes", list, "$")):
        path = f"$.classes[{i}]"
        if not isinstance(raw, dict):
            raise ValidationError(path, "expected an object")
        cname = _need(raw, "name", str, path)
        if cname in names:
            raise ValidationError(f"{path}.name", f"duplicate class {cname!r}")
        names.add(cname)
        corder = _need(raw, "elementOrder", int, path)
        if corder < 1:
            raise ValidationError(f"{path}.elementOrder", "must be positive")
        size = _decimal(_need(raw, "size", str, path), f"{path}.size")
        if size < 1:
            raise ValidationError(f"{path}.size", "must be positive")
        classes.append(ClassInfo(cname, corder, size))

    identities = [c for c in classes if c.element_order == 1]
    if len(identities) != 1 or identities[0].size != 1:
        raise ValidationError(
            "$.classes", "exactly one identity class of size 1 is required"
        )
    total = sum(c.size for c in classes)
    if total != order:
        raise ValidationError(
            "$.classes", f"class sizes sum to {total}, expected the group order {order}"
        )

    by_name = {c.name: c for c in classes}
    max_order = max(c.element_order for c in classes)
    required_primes = set(primes_dividing(order, max_order))

    power_maps = {}
    raw_maps = _need(doc, "powerMaps", dict, "$")
    for key, mapping in raw_maps.items():
        path = f"$.powerMaps[{key!r}]"
        if not key.isdigit() or not _is_prime(int(key)):
            raise ValidationError(path, "keys must be primes")
        p = int(key)
        if order % p != 0:
            raise ValidationError(path, f"{p} does not divide the group order")
        if not isinstance(mapping, dict):
            raise ValidationError(path, "expected an object")
        table = {}
        for cname, image in mapping.items():
            if cname not in by_name:
                raise ValidationError(f"{path}[{cname!r}]", "unknown class")
            if image not in by_name:
                raise ValidationError(f"{path}[{cname!r}]", f"unknown image {image!r}")
            o = by_name[cname].element_order
            expected = o // gcd(p, o)
            if by_name[image].element_order != expected:
                raise ValidationError(
                    f"{path}[{cname!r}]",
                    f"p-th power of an order-{o} class must have order {expected}",
                )
            table[cname] = image
        missing = names - set(table)
        if missing:
            raise ValidationError(path, f"map not total, missing {sorted(missing)[0]!r}")
        power_maps[p] = table
    missing_primes = required_primes - set(power_maps)
    if missing_primes:
        raise ValidationError(
            "$.powerMaps", f"missing map for prime {min(missing_primes)}"
        )

    sylow2 = _need(doc, "sylow2Central", list, "$")
    for i, cname in enumerate(sylow2):
        path = f"$.sylow2Central[{i}]"
        if cname not in by_name:
            raise ValidationError(path, "unknown class")
        if by_name[cname].element_order != 2:
            raise ValidationError(path, "must be an involution class")

    provenance = doc.get("provenance")
    if provenance is not None and not isinstance(provenance, str):
        raise ValidationError("$.provenance", "expected a string")

    return ClassTable(
        name=name,
        order=order,
        simple=simple,
        classes=classes,
        power_maps=power_maps,
        sylow2_central=list(sylow2),
        provenance=provenance,
    )


def serialize_class_table(table):
    doc = {
        "name": table.name,
        "order": str(table.order),
        "simple": table.simple,
        "classes": [
            {"name": c.name, "elementOrder": c.element_order, "size": str(c.size)}
            for c in table.classes
        ],
        "powerMaps": {
            str(p): {c.name: table.power_maps[p][c.name] for c in table.classes}
            for p in sorted(table.power_maps)
        },
        "sylow2Central": list(table.sylow2_central),
    }
    if table.provenance is not None:
        doc["provenance"] = table.provenance
    return json.dumps(doc, indent=2) + "\n"


def load_class_table(path):
    return parse_class_table(Path(path).read_text())


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

_KIND_FIELDS = {
    "cyclic-witness": ("witness",),
    "centralizer-cover": ("center", "witness"),
    "permchar": ("maximal",),
    "odd-index-maximal": ("maximal",),
    "even-maximals": (),
    "external": ("description",),
}


def parse_certificate(text, table):
    doc = _parse_json(text, "certificate")
    name = _need(doc, "name", str, "$")
    if name != table.name:
        raise ValidationError("$.name", f"certificate for {name!r}, table is {table.name!r}")

    target = _need(doc, "target", str, "$")
    if not table.has_class(target):
        raise ValidationError("$.target", "unknown class")
    if table.class_named(target).element_order != 2:
        raise ValidationError("$.target", "target must be an involution class")

    bound = _decimal(_need(doc, "bound", str, "$"), "$.bound")
    expected = table.class_named(target).size - 1
    if bound != expected:
        raise ValidationError(
            "$.bound", f"must equal |target class| - 1 = {expected}, got {bound}"
        )

    residual = _need(doc, "residual", list, "$")
    seen = set()
    for i, cname in enumerate(residual):
        path = f"$.residual[{i}]"
        if not table.has_class(cname):
            raise ValidationError(path, "unknown class")
        if cname in seen:
            raise ValidationError(path, f"duplicate class {cname!r}")
        seen.add(cname)

    maximals = {}
    for i, raw in enumerate(doc.get("maximals", [])):
        path = f"$.maximals[{i}]"
        if not isinstance(raw, dict):
            raise ValidationError(path, "expected an object")
        mname = _need(raw, "name", str, path)
        if mname in maximals:
            raise ValidationError(f"{path}.name", f"duplicate maximal {mname!r}")
        morder = _decimal(_need(raw, "order", str, path), f"{path}.order")
        permchar = None
        if "permchar" in raw:
            if not isinstance(raw["permchar"], dict):
                raise ValidationError(f"{path}.permchar", "expected an object")
            permchar = {}
            for cname, value in raw["permchar"].items():
                if not table.has_class(cname):
                    raise ValidationError(f"{path}.permchar[{cname!r}]", "unknown class")
                count = _decimal(value, f"{path}.permchar[{cname!r}]")
                permchar[cname] = count
        maximals[mname] = MaximalInfo(mname, morder, permchar)

    evidence = {}
    raw_evidence = _need(doc, "evidence", dict, "$")
    for cname, items in raw_evidence.items():
        path = f"$.evidence[{cname!r}]"
        if cname not in seen:
            raise ValidationError(path, "evidence for a non-residual class")
        if not isinstance(items, list) or not items:
            raise ValidationError(path, "expected a non-empty list")
        parsed = []
        for j, raw in enumerate(items):
            ipath = f"{path}[{j}]"
            if not isinstance(raw, dict):
                raise ValidationError(ipath, "expected an object")
            kind = _need(raw, "kind", str, ipath)
            if kind not in _KIND_FIELDS:
                raise ValidationError(f"{ipath}.kind", f"unknown kind {kind!r}")
            fields = {}
            for fname in _KIND_FIELDS[kind]:
                value = _need(raw, fname, str, ipath)
                if fname in ("witness", "center") and not table.has_class(value):
                    raise ValidationError(f"{ipath}.{fname}", "unknown class")
                if fname == "maximal" and value not in maximals:
                    raise ValidationError(
                        f"{ipath}.{fname}", f"maximal {value!r} not declared"
                    )
                fields[fname] = value
            parsed.append(EvidenceItem(kind=kind, **fields))
        evidence[cname] = parsed

    provenance = doc.get("provenance")
    if provenance is not None and not isinstance(provenance, str):
        raise ValidationError("$.provenance", "expected a string")

    return Certificate(
        name=name,
        target=target,
        bound=bound,
        residual=list(residual),
        evidence=evidence,
        maximals=maximals,
        provenance=provenance,
    )


def serialize_certificate(cert):
    doc = {
        "name": cert.name,
        "target": cert.target,
        "bound": str(cert.bound),
        "residual": list(cert.residual),
        "evidence": {
            cname: [_evidence_doc(item) for item in items]
            for cname, items in cert.evidence.items()
        },
        "maximals": [
            _maximal_doc(info) for info in cert.maximals.values()
        ],
    }
    if cert.provenance is not None:
        doc["provenance"] = cert.provenance
    return json.dumps(doc, indent=2) + "\n"


def _evidence_doc(item):
    doc = {"kind": item.kind}
    for fname in _KIND_FIELDS[item.kind]:
        doc[fname] = getattr(item, fname.replace("-", "_"))
    return doc


def _maximal_doc(info):
    doc = {"name": info.name, "order": str(info.order)}
    if info.permchar is not None:
        doc["permchar"] = {c: str(v) for c, v in info.permchar.items()}
    return doc


def load_certificate(path, table):
    return parse_certificate(Path(path).read_text(), table)


# ---------------------------------------------------------------------------
# Passthrough rows (published bounds reported verbatim)
# ---------------------------------------------------------------------------


@dataclass
class PassthroughRow:
    name: str
    bound: int
    source: str


def parse_passthrough(text):
    doc = _parse_json(text, "passthrough row")
    name = _need(doc, "name", str, "$")
    bound = _decimal(_need(doc, "bound", str, "$"), "$.bound")
    source = _need(doc, "source", str, "$")
    return PassthroughRow(name=name, bound=bound, source=source)


def serialize_passthrough(row):
    doc = {"name": row.name, "bound": str(row.bound), "source": row.source}
    return json.dumps(doc, indent=2) + "\n"


def load_passthrough(path):
    return parse_passthrough(Path(path).read_text())


# ---------------------------------------------------------------------------
# Element-level class tables (small groups)
# ---------------------------------------------------------------------------

_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def class_table_from_group(name, group, classes, simple=True):
    """Build a ClassTable from an enumerated group.

    Everything is computed at the element level: sizes, prime power
    maps, and the classes meeting the centre of an explicitly grown
    Sylow 2-subgroup.
    """
    letters = {}
    infos = []
    class_names = []
    for ci in range(len(classes)):
        o = classes.order_of(ci)
        letters[o] = letters.get(o, -1) + 1
        cname = f"{o}{_LETTERS[letters[o]]}"
        class_names.append(cname)
        infos.append(ClassInfo(cname, o, classes.size_of(ci)))

    max_order = max(c.element_order for c in infos)
    power_maps = {}
    for p in primes_dividing(group.order, max_order):
        table = {}
        for ci in range(len(classes)):
            rep = group.elements[classes.representative(ci)]
            image = rep
            for _ in range(p - 1):
                image = tuple(image[rep[i]] for i in range(len(rep)))
            table[class_names[ci]] = class_names[classes.class_of[group.id_of(image)]]
        power_maps[p] = table

    sylow2_central = []
    if group.order % 2 == 0:
        centre = centre_of(group, sylow_two_subgroup(group))
        central_classes = sorted(
            {
                classes.class_of[i]
                for i in centre
                if element_order(group.elements[i]) == 2
            }
        )
        sylow2_central = [class_names[ci] for ci in central_classes]

    return ClassTable(
        name=name,
        order=group.order,
        simple=simple,
        classes=infos,
        power_maps=power_maps,
        sylow2_central=sylow2_central,
        provenance=f"computed at the element level from a degree-{group.degree} "
        "permutation representation",
    )


# ---------------------------------------------------------------------------
# Data directory resolution
# ---------------------------------------------------------------------------


def default_data_dir():
    """Fixture directory: $SPREADLAB_DATA, or the repo data/ directory."""
    env = os.environ.get("SPREADLAB_DATA")
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[2] / "data"
