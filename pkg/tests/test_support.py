"""Support machinery: masks, the element x subgroup matrix, supports, mates."""

import random

import pytest

from spreadlab import CountMismatch, IdentityArgument, two_generates
from spreadlab.perm import close_under, element_order
from spreadlab.support import bits_of, expand_conjugates


def test_a5_subgroup_counts(a5):
    assert len(a5.matrix.subgroups) == 21
    by_order = {}
    for mask in a5.matrix.subgroups:
        by_order[mask.order] = by_order.get(mask.order, 0) + 1
    assert by_order == {12: 5, 10: 6, 6: 10}


def test_m11_subgroup_counts(m11):
    assert len(m11.matrix.subgroups) == 309
    by_order = {}
    for mask in m11.matrix.subgroups:
        by_order[mask.order] = by_order.get(mask.order, 0) + 1
    assert by_order == {720: 11, 660: 12, 144: 55, 120: 66, 48: 165}


def test_masks_contain_identity_and_match_order(a5):
    for mask in a5.matrix.subgroups:
        assert mask.mask & 1
        assert mask.mask.bit_count() == mask.order


def test_masks_closed_under_multiplication(a5):
    # spot-check: the member set of each mask is closed
    from spreadlab.perm import compose

    for mask in a5.matrix.subgroups[:3]:
        members = [a5.group.elements[i] for i in bits_of(mask.mask)]
        member_set = set(members)
        for p in members[:6]:
            for q in members[:6]:
                assert compose(p, q) in member_set


def test_expand_conjugates_count_mismatch(a5):
    family = a5.spec.maximals[0]
    rep, _ = close_under(family.generators, 5, cap=family.order + 1)
    rep_ids = sorted(a5.group.id_of(p) for p in rep)
    with pytest.raises(CountMismatch):
        expand_conjugates(a5.group, rep_ids, family.count + 2, family.name)


def test_five_cycle_support_is_its_dihedral(a5):
    five = next(
        i
        for i in range(1, 60)
        if element_order(a5.group.elements[i]) == 5
    )
    supp = a5.matrix.support_of(five)
    assert supp.bit_count() == 9
    assert len(a5.matrix.subgroups_containing(five)) == 1


def test_support_of_identity_rejected(a5):
    with pytest.raises(IdentityArgument):
        a5.matrix.support_of(0)
    with pytest.raises(IdentityArgument):
        a5.matrix.mates_of([0, 3])


def test_support_never_contains_identity(a5):
    for x in range(1, 60):
        assert not a5.matrix.support_of(x) & 1


def test_support_symmetry(a5):
    for x in range(1, 60):
        sx = a5.matrix.support_of(x)
        for y in bits_of(sx):
            assert a5.matrix.support_of(y) >> x & 1


def test_support_from_full_subgroup_lattice_oracle(a5):
    """Maximals-only supports equal supports over every proper subgroup.

    Every subgroup of A5 is generated by at most two elements, so the
    full lattice is the set of closures of element pairs.
    """
    elements = a5.group.elements
    subgroups = set()
    for i in range(60):
        for j in range(i, 60):
            members, _ = close_under([elements[i], elements[j]], 5)
            if len(members) < 60:
                subgroups.add(frozenset(a5.group.id_of(p) for p in members))
    # unique subgroup member-sets, including trivial and cyclic ones
    assert len(subgroups) == 58
    for x in range(1, 60):
        oracle = 0
        for sub in subgroups:
            if x in sub:
                for y in sub:
                    if y:
                        oracle |= 1 << y
        assert oracle == a5.matrix.support_of(x)


def test_support_of_set_is_union(a5):
    assert a5.matrix.support_of_set([7]) == a5.matrix.support_of(7)
    joint = a5.matrix.support_of_set([7, 11])
    assert joint == a5.matrix.support_of(7) | a5.matrix.support_of(11)


def test_supports_all_extremes(a5):
    assert a5.matrix.supports_all(range(1, 60))
    assert not a5.matrix.supports_all([])


def test_single_class_coverage_matches_union_oracle(a5):
    # the involution class meets every maximal subgroup and therefore
    # supports everything; a class of 5-cycles only reaches the
    # dihedral subgroups and does not
    for order, expected in ((2, True), (5, False)):
        xs = [
            i
            for i in range(1, 60)
            if element_order(a5.group.elements[i]) == order
        ]
        oracle = 0
        for x in xs:
            for mask in a5.matrix.subgroups:
                if mask.mask >> x & 1:
                    oracle |= mask.mask & ~1
        covers = all(oracle >> y & 1 for y in range(1, 60))
        assert covers == expected == a5.matrix.supports_all(xs)


def test_five_cycle_has_fifty_mates(a5):
    five = next(
        i for i in range(1, 60) if element_order(a5.group.elements[i]) == 5
    )
    mates = a5.matrix.mates_of([five])
    assert mates.bit_count() == 50


def test_mate_duality_all_pairs_a5(a5):
    """y is a common-generation mate of x iff y avoids supp(x)."""
    elements = a5.group.elements
    for x in range(1, 60):
        supp = a5.matrix.support_of(x)
        for y in range(1, 60):
            generated = two_generates(elements[x], elements[y], 60)
            assert generated == (not supp >> y & 1)


def test_mate_duality_sampled_pairs_m11(m11):
    rng = random.Random(1729)
    elements = m11.group.elements
    for _ in range(2000):
        x = rng.randrange(1, 7920)
        y = rng.randrange(1, 7920)
        generated = two_generates(elements[x], elements[y], 7920)
        assert generated == (not m11.matrix.support_of(x) >> y & 1)


def test_mate_duality_complete_l2_11(l2_11):
    """One representative per class against every element; conjugation
    equivariance of both sides makes this a complete check."""
    elements = l2_11.group.elements
    for ci in range(len(l2_11.classes)):
        x = l2_11.classes.representative(ci)
        if x == 0:
            continue
        supp = l2_11.matrix.support_of(x)
        for y in range(1, 660):
            generated = two_generates(elements[x], elements[y], 660)
            assert generated == (not supp >> y & 1)


def test_conjugation_equivariance(a5):
    for g in a5.spec.generators:
        cmap = a5.group.conjugation_map(g)
        for x in range(1, 60):
            image_supp = a5.matrix.support_of(cmap[x])
            expected = 0
            for y in bits_of(a5.matrix.support_of(x)):
                expected |= 1 << cmap[y]
            assert image_supp == expected
