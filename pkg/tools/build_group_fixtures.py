#!/usr/bin/env python3
"""Build the small permutation group fixtures under data/groups/.

Each fixture is a group spec JSON: generators plus one representative
per conjugacy class of maximal subgroups, with declared orders and
conjugate counts.  Everything here is recomputed from scratch — the
representatives are found by explicit search inside the enumerated
group, counts come from the orbit of the subgroup bitmask under
conjugation, and the result is round-tripped through the package
loader (which re-derives all orders) before being written.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from spreadlab.fixtures import GroupSpec, MaximalFamily, parse_group_spec, serialize_group_spec
from spreadlab.perm import (
    ClassPartition,
    GroupIndex,
    close_under,
    compose,
    element_order,
    from_cycles,
    inverse,
)
from spreadlab.support import matrix_from_spec

OUT = ROOT / "data" / "groups"


# ---------------------------------------------------------------------------
# Subgroup search helpers (all deterministic: ascending element ids)
# ---------------------------------------------------------------------------


def closure_ids(group, gen_ids):
    """Sorted element ids of the subgroup generated by `gen_ids`."""
    gens = [group.elements[i] for i in gen_ids]
    elements, _ = close_under(gens, group.degree, cap=group.order + 1)
    return sorted(group.id_of(p) for p in elements)


def mask_of(ids):
    out = 0
    for i in ids:
        out |= 1 << i
    return out


def conjugate_count(group, member_ids):
    """Number of conjugates of the subgroup with the given members."""
    maps = [group.conjugation_map(g) for g in group.generators]
    start = mask_of(member_ids)
    seen = {start}
    frontier = [member_ids]
    while frontier:
        ids = frontier.pop()
        for cmap in maps:
            image = sorted(cmap[i] for i in ids)
            m = mask_of(image)
            if m not in seen:
                seen.add(m)
                frontier.append(image)
    return len(seen), seen


def point_stabilizer(group, point):
    """Element ids fixing `point` (0-based)."""
    return [i for i, p in enumerate(group.elements) if p[point] == point]


def setwise_stabilizer(group, points):
    pts = set(points)
    return [i for i, p in enumerate(group.elements) if {p[q] for q in pts} == pts]


def normalizer(group, member_ids):
    """Element ids of the normalizer of the subgroup with given members."""
    members = set(member_ids)
    sub_perms = [group.elements[i] for i in member_ids]
    out = []
    for i, g in enumerate(group.elements):
        g_inv = inverse(g)
        if all(
            group.id_of(compose(compose(g, s), g_inv)) in members for s in sub_perms
        ):
            out.append(i)
    return out


def find_subgroups_of_order(group, order, avoid_masks=(), want=1):
    """Representatives of subgroup classes of `order`, skipping classes
    whose mask orbit meets `avoid_masks`.  Two-generator search in
    ascending id order; deterministic."""
    found = []
    seen_masks = set(avoid_masks)
    ids_by_order = {}
    for i in range(1, group.order):
        ids_by_order.setdefault(element_order(group.elements[i]), []).append(i)
    candidates = [i for o, ids in sorted(ids_by_order.items()) if order % o == 0 for i in ids]
    for a_pos, a in enumerate(candidates):
        for b in candidates[a_pos + 1 :]:
            try:
                ids = closure_ids(group, [a, b])
            except Exception:
                continue
            if len(ids) != order:
                continue
            m = mask_of(ids)
            if m in seen_masks:
                continue
            _, orbit = conjugate_count(group, ids)
            seen_masks |= orbit
            found.append(ids)
            if len(found) >= want:
                return found
    return found


def sylow_subgroup(group, prime):
    """One Sylow p-subgroup for odd p of prime-squared order at most,
    grown from commuting p-elements (enough for the groups here)."""
    total = group.order
    part = 1
    while total % prime == 0:
        part *= prime
        total //= prime
    p_elements = [
        i
        for i in range(1, group.order)
        if element_order(group.elements[i]) == prime
    ]
    if part == prime:
        return closure_ids(group, [p_elements[0]])
    for a_pos, a in enumerate(p_elements):
        for b in p_elements[a_pos + 1 :]:
            ids = closure_ids(group, [a, b])
            if len(ids) == part:
                return ids
    raise RuntimeError("no Sylow subgroup found")


def small_generators(group, member_ids):
    """A short generating list for the subgroup with given members."""
    members = set(member_ids)
    chosen = []
    have = {0}
    for i in sorted(member_ids, key=lambda j: (-element_order(group.elements[j]), j)):
        if i in have:
            continue
        chosen.append(i)
        have = set(closure_ids(group, chosen))
        if have == members:
            return [group.elements[j] for j in chosen]
    raise RuntimeError("failed to generate subgroup")


def family(group, name, member_ids):
    count, _ = conjugate_count(group, member_ids)
    gens = small_generators(group, member_ids)
    return MaximalFamily(name, len(member_ids), count, gens, [])


# ---------------------------------------------------------------------------
# Projective lines for L2(q)
# ---------------------------------------------------------------------------


class PrimeField:
    def __init__(self, p):
        self.q = p
        self.p = p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)

    def generator(self):
        for g in range(2, self.p):
            seen, x = set(), 1
            for _ in range(self.p - 1):
                x = self.mul(x, g)
                seen.add(x)
            if len(seen) == self.p - 1:
                return g
        raise RuntimeError


class BinaryField:
    """GF(2^k) with elements as ints < 2^k under a fixed polynomial."""

    def __init__(self, k, poly):
        self.k = k
        self.q = 1 << k
        self.poly = poly

    def add(self, a, b):
        return a ^ b

    def neg(self, a):
        return a

    def mul(self, a, b):
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a & self.q:
                a ^= self.poly
        return out

    def inv(self, a):
        x = a
        for _ in range(self.k * 2):
            x = self.mul(x, x)
            y = self.mul(x, a)
            if y == 1:
                return x
        # Fallback: brute force.
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError

    def generator(self):
        for g in range(2, self.q):
            seen, x = set(), 1
            for _ in range(self.q - 1):
                x = self.mul(x, g)
                seen.add(x)
            if len(seen) == self.q - 1:
                return g
        raise RuntimeError


def psl2_generators(field):
    """Generators of PSL(2, q) on the projective line.

    Points: 0..q-1 are the field elements, q is infinity.  The maps are
    x -> x + 1, x -> m*x (m = g^2 for odd q, g for even q, g a
    multiplicative generator), and x -> -1/x.
    """
    q = field.q
    inf = q
    degree = q + 1

    def as_perm(f):
        return tuple(f(x) for x in range(degree))

    def translate(x):
        return inf if x == inf else field.add(x, 1)

    g = field.generator()
    m = field.mul(g, g) if q % 2 else g

    def scale(x):
        return inf if x == inf else field.mul(m, x)

    def invert(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return field.neg(field.inv(x))

    return [as_perm(translate), as_perm(scale), as_perm(invert)], degree


def psl2_maximals(group, field, names):
    """Maximal families for small PSL(2, q): the point stabilizer of
    infinity, the dihedral stabilizer of {0, infinity}, the normalizer
    of a maximal-order torus element, and (where requested) A5 or A4
    classes found by order search."""
    q = field.q
    inf = q
    fams = []
    borel = point_stabilizer(group, inf)
    fams.append(family(group, names["borel"], borel))

    # D_{q-1}-type: setwise stabilizer of {0, infinity}.
    if "split" in names:
        fams.append(family(group, names["split"], setwise_stabilizer(group, [0, inf])))

    # D_{q+1}-type: normalizer of a cyclic torus of the largest odd part
    # of (q+1)/gcd(2, q-1); pick the first element of that order.
    torus_order = (q + 1) // (2 if q % 2 else 1)
    torus_gen = next(
        i
        for i in range(1, group.order)
        if element_order(group.elements[i]) == torus_order
    )
    fams.append(family(group, names["nonsplit"], normalizer(group, closure_ids(group, [torus_gen]))))

    for extra_order, extra_names in names.get("search", []):
        avoid = set()
        for f in fams:
            if f.order == extra_order:
                ids = sorted(group.id_of(p) for p in close_under(f.generators, group.degree, cap=group.order + 1)[0])
                _, orbit = conjugate_count(group, ids)
                avoid |= orbit
        reps = find_subgroups_of_order(group, extra_order, avoid_masks=avoid, want=len(extra_names))
        if len(reps) != len(extra_names):
            raise RuntimeError(
                f"wanted {len(extra_names)} classes of order {extra_order}, found {len(reps)}"
            )
        for nm, ids in zip(extra_names, reps):
            fams.append(family(group, nm, ids))
    return fams


# ---------------------------------------------------------------------------
# Group recipes
# ---------------------------------------------------------------------------


def build_a5():
    gens = [from_cycles([[1, 2, 3, 4, 5]], 5), from_cycles([[1, 2, 3]], 5)]
    group = GroupIndex(gens, 5)
    fams = [
        family(group, "A4", point_stabilizer(group, 4)),
        family(group, "D10", normalizer(group, closure_ids(group, [group.id_of(gens[0])]))),
        family(group, "S3", normalizer(group, closure_ids(group, [group.id_of(gens[1])]))),
    ]
    return GroupSpec("A5", 5, 60, True, gens, [], fams)


def build_a6():
    gens = [from_cycles([[1, 2, 3, 4, 5]], 6), from_cycles([[4, 5, 6]], 6)]
    group = GroupIndex(gens, 6)
    a5a = point_stabilizer(group, 5)
    _, a5a_orbit = conjugate_count(group, a5a)
    a5b = find_subgroups_of_order(group, 60, avoid_masks=a5a_orbit, want=1)[0]
    s4a = setwise_stabilizer(group, [4, 5])
    _, s4a_orbit = conjugate_count(group, s4a)
    s4b = find_subgroups_of_order(group, 24, avoid_masks=s4a_orbit, want=1)[0]
    sylow3 = closure_ids(
        group, [group.id_of(from_cycles([[1, 2, 3]], 6)), group.id_of(from_cycles([[4, 5, 6]], 6))]
    )
    fams = [
        family(group, "A5a", a5a),
        family(group, "A5b", a5b),
        family(group, "3^2:4", normalizer(group, sylow3)),
        family(group, "S4a", s4a),
        family(group, "S4b", s4b),
    ]
    return GroupSpec("A6", 6, 360, True, gens, [], fams)


def build_l2(q, name, field, names):
    gens, degree = psl2_generators(field)
    group = GroupIndex(gens, degree)
    fams = psl2_maximals(group, field, names)
    return GroupSpec(name, degree, group.order, True, gens, [], fams)


def build_m11():
    degree = 11
    gens = [
        from_cycles([[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]], degree),
        from_cycles([[3, 7, 11, 8], [4, 10, 5, 6]], degree),
    ]
    group = GroupIndex(gens, degree)
    m10 = point_stabilizer(group, 0)
    a = group.id_of(gens[0])
    l2_11 = None
    for b in range(1, group.order):
        ids = closure_ids(group, [a, b])
        if len(ids) == 660:
            l2_11 = ids
            break
    if l2_11 is None:
        raise RuntimeError("no L2(11) subgroup found")
    sylow3 = sylow_subgroup(group, 3)
    n3 = normalizer(group, sylow3)
    s5 = find_subgroups_of_order(group, 120, want=1)[0]
    s48 = find_subgroups_of_order(group, 48, want=1)[0]
    fams = [
        family(group, "M10", m10),
        family(group, "L2(11)", l2_11),
        family(group, "3^2:Q8.2", n3),
        family(group, "S5", s5),
        family(group, "2S4", s48),
    ]
    return GroupSpec("M11", degree, 7920, True, gens, [], fams)


BUILDERS = [
    ("a5.json", build_a5),
    ("a6.json", build_a6),
    (
        "l2_8.json",
        lambda: build_l2(
            8, "L2(8)", BinaryField(3, 0b1011),
            {"borel": "2^3:7", "split": "D14", "nonsplit": "D18"},
        ),
    ),
    (
        "l2_11.json",
        lambda: build_l2(
            11, "L2(11)", PrimeField(11),
            {"borel": "11:5", "nonsplit": "D12", "search": [(60, ["A5a", "A5b"])]},
        ),
    ),
    (
        "l2_13.json",
        lambda: build_l2(
            13, "L2(13)", PrimeField(13),
            {"borel": "13:6", "split": "D12", "nonsplit": "D14", "search": [(12, ["A4"])]},
        ),
    ),
    (
        "l2_16.json",
        lambda: build_l2(
            16, "L2(16)", BinaryField(4, 0b10011),
            {"borel": "2^4:15", "split": "D30", "nonsplit": "D34", "search": [(60, ["A5"])]},
        ),
    ),
    (
        "l2_19.json",
        lambda: build_l2(
            19, "L2(19)", PrimeField(19),
            {"borel": "19:9", "split": "D18", "nonsplit": "D20", "search": [(60, ["A5a", "A5b"])]},
        ),
    ),
    ("m11.json", build_m11),
]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    only = set(sys.argv[1:])
    for filename, builder in BUILDERS:
        if only and filename.split(".")[0] not in only:
            continue
        spec = builder()
        text = serialize_group_spec(spec)
        # Round trip through the loader: re-derives all subgroup orders.
        parsed = parse_group_spec(text)
        group = GroupIndex(parsed.generators, parsed.degree)
        assert group.order == parsed.order
        classes = ClassPartition(group)
        # Conjugate expansion re-verifies every declared count.
        matrix_from_spec(group, parsed, classes)
        total = sum(f.count for f in parsed.maximals)
        (OUT / filename).write_text(text)
        print(
            f"{filename}: {parsed.name} order {parsed.order}, "
            f"{len(parsed.maximals)} maximal classes, {total} subgroups"
        )


if __name__ == "__main__":
    main()
