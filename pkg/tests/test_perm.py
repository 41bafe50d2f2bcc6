"""Permutation arithmetic, stabilizer chains, enumeration, classes."""

import random
from math import lcm

import pytest

from spreadlab import (
    ClassPartition,
    DegreeMismatch,
    GroupIndex,
    OrderExceedsCap,
    StabilizerChain,
    compose,
    element_order,
    from_cycles,
    group_order,
    to_cycles,
    two_generates,
)
from spreadlab.perm import (
    close_under,
    conjugate,
    cycle_decomposition,
    identity,
    inverse,
    power,
)

A5_GENS = [from_cycles([[1, 2, 3, 4, 5]], 5), from_cycles([[1, 2, 3]], 5)]


def random_perm(rng, degree):
    images = list(range(degree))
    rng.shuffle(images)
    return tuple(images)


def test_compose_identity():
    g = from_cycles([[1, 2, 3]], 5)
    e = identity(5)
    assert compose(e, g) == g
    assert compose(g, e) == g


def test_compose_square_of_three_cycle():
    a = from_cycles([[1, 2, 3]], 3)
    assert compose(a, a) == from_cycles([[1, 3, 2]], 3)


def test_compose_matches_pointwise_oracle():
    rng = random.Random(11)
    for _ in range(50):
        a = random_perm(rng, 11)
        b = random_perm(rng, 11)
        c = compose(a, b)
        for p in range(11):
            assert c[p] == a[b[p]]


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(4), identity(5))


def test_inverse_and_order_properties():
    rng = random.Random(5)
    for _ in range(50):
        a = random_perm(rng, 9)
        assert compose(a, inverse(a)) == identity(9)
        assert element_order(inverse(a)) == element_order(a)


def test_element_order_examples():
    assert element_order(identity(6)) == 1
    assert element_order(from_cycles([[1, 2], [3, 4, 5]], 5)) == 6


def test_element_order_is_lcm_of_cycle_lengths():
    rng = random.Random(7)
    for _ in range(30):
        a = random_perm(rng, 10)
        lengths = [len(c) for c in cycle_decomposition(a)]
        assert element_order(a) == lcm(*lengths) if lengths else 1


def test_element_order_by_repeated_multiplication():
    elements, _ = close_under(A5_GENS, 5)
    for a in elements:
        o = element_order(a)
        acc = a
        for m in range(1, o):
            assert acc != identity(5)
            acc = compose(acc, a)
        assert acc == identity(5)
        assert o in {1, 2, 3, 5}


def test_cycle_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        a = random_perm(rng, 8)
        assert from_cycles(to_cycles(a), 8) == a


def test_chain_order_a5():
    assert StabilizerChain(A5_GENS, 5).order() == 60
    assert len(close_under(A5_GENS, 5)[0]) == 60


def test_chain_order_m11(m11):
    chain = StabilizerChain(m11.spec.generators, 11)
    assert chain.order() == 7920 == m11.spec.order


def test_chain_trivial_group():
    assert StabilizerChain([identity(4)], 4).order() == 1


def test_chain_order_matches_closure_on_small_groups():
    rng = random.Random(1)
    for _ in range(10):
        gens = [random_perm(rng, 6) for _ in range(2)]
        elements, _ = close_under(gens, 6, cap=10**5)
        assert StabilizerChain(gens, 6).order() == len(elements)


def test_contains_identity_and_parity():
    chain = StabilizerChain(A5_GENS, 5)
    assert chain.contains(identity(5))
    assert not chain.contains(from_cycles([[1, 2]], 5))


def test_contains_agrees_with_closure():
    gen = from_cycles([[1, 2, 3, 4]], 4)
    chain = StabilizerChain([gen], 4)
    cyclic, _ = close_under([gen], 4)
    s4, _ = close_under([gen, from_cycles([[1, 2]], 4)], 4)
    members = set(cyclic)
    for p in s4:
        assert chain.contains(p) == (p in members)


def test_group_index_enumeration():
    g = GroupIndex(A5_GENS, 5)
    assert g.order == 60
    assert g.elements[0] == identity(5)
    assert len(set(g.elements)) == 60
    for i, p in enumerate(g.elements):
        assert g.id_of(p) == i


def test_group_index_m11(m11):
    assert m11.group.order == 7920
    assert m11.group.elements[0] == identity(11)


def test_group_index_cap():
    with pytest.raises(OrderExceedsCap):
        GroupIndex(A5_GENS, 5, cap=10)


def test_classes_a5(a5):
    sizes = sorted(a5.classes.size_of(ci) for ci in range(len(a5.classes)))
    assert sizes == [1, 12, 12, 15, 20]


def test_classes_m11(m11):
    assert len(m11.classes) == 10
    assert sum(m11.classes.size_of(ci) for ci in range(10)) == 7920


def test_classes_trivial_group():
    g = GroupIndex([identity(3)], 3)
    classes = ClassPartition(g)
    assert len(classes) == 1 and classes.size_of(0) == 1


def test_classes_share_order_and_divide(a5):
    for ci in range(len(a5.classes)):
        size = a5.classes.size_of(ci)
        assert a5.group.order % size == 0
        rep_order = a5.classes.order_of(ci)
        for i, p in enumerate(a5.group.elements):
            if a5.classes.class_of[i] == ci:
                assert element_order(p) == rep_order


def test_two_generates_basics(a5):
    three_cycle = from_cycles([[1, 2, 3]], 5)
    assert not two_generates(three_cycle, three_cycle, 60)
    assert not two_generates(identity(5), three_cycle, 60)
    five = from_cycles([[1, 2, 3, 4, 5]], 5)
    assert two_generates(three_cycle, five, 60) == two_generates(five, three_cycle, 60)


def test_two_generates_conjugation_invariance(a5):
    rng = random.Random(13)
    elements = a5.group.elements
    for _ in range(100):
        x = elements[rng.randrange(1, 60)]
        y = elements[rng.randrange(1, 60)]
        g = elements[rng.randrange(60)]
        assert two_generates(x, y, 60) == two_generates(
            conjugate(x, g), conjugate(y, g), 60
        )


def test_power_matches_repeated_compose():
    a = from_cycles([[1, 2, 3, 4, 5], [6, 7]], 7)
    acc = identity(7)
    for n in range(12):
        assert power(a, n) == acc
        acc = compose(acc, a)


def test_group_order_helper():
    assert group_order(A5_GENS) == 60
