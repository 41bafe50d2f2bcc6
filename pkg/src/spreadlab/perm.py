"""Permutation arithmetic, enumeration and stabilizer chains.

Permutations on ``{0, ..., degree-1}`` are plain tuples of images:
``p[i]`` is the image of point ``i``.  Cycle input follows the usual
1-based printed convention and is shifted down on parsing.

The heavy lifting (group order, membership, two-element generation
tests) goes through a deterministic stabilizer chain; small groups can
also be enumerated outright, which doubles as an independent oracle.
"""

from math import gcd

from .errors import DegreeMismatch, IdentityArgument, OrderExceedsCap

DEFAULT_ORDER_CAP = 100_000


def identity(degree):
    return tuple(range(degree))


def is_identity(p):
    return all(p[i] == i for i in range(len(p)))


def compose(p, q):
    """Return the permutation acting as `q` first, then `p`."""
    if len(p) != len(q):
        raise DegreeMismatch(f"degree {len(p)} vs {len(q)}")
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p):
    result = [0] * len(p)
    for i, image in enumerate(p):
        result[image] = i
    return tuple(result)


def conjugate(p, g):
    """Return ``g p g^-1``."""
    return compose(compose(g, p), inverse(g))


def cycle_decomposition(p):
    """Cycles of `p` (fixed points omitted), each starting at its least point."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = []
        point = start
        while not seen[point]:
            seen[point] = True
            cycle.append(point)
            point = p[point]
        cycles.append(tuple(cycle))
    return cycles


def element_order(p):
    order = 1
    for cycle in cycle_decomposition(p):
        order = order * len(cycle) // gcd(order, len(cycle))
    return order


def from_cycles(cycles, degree, one_based=True):
    """Build a permutation from a list of cycles.

    With ``one_based`` (the printed convention) points run over
    ``1..degree`` and are shifted down internally.
    """
    shift = 1 if one_based else 0
    images = list(range(degree))
    for cycle in cycles:
        if not cycle:
            continue
        pts = [point - shift for point in cycle]
        for point in pts:
            if not 0 <= point < degree:
                raise ValueError(f"point {point + shift} outside degree {degree}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle {cycle}")
        for here, there in zip(pts, pts[1:] + pts[:1]):
            if images[here] != here:
                raise ValueError(f"point {here + shift} in two cycles")
            images[here] = there
    return tuple(images)


def to_cycles(p, one_based=True):
    shift = 1 if one_based else 0
    return [tuple(point + shift for point in cycle) for cycle in cycle_decomposition(p)]


def power(p, n):
    n %= element_order(p)
    result = identity(len(p))
    for _ in range(n):
        result = compose(p, result)
    return result


# ---------------------------------------------------------------------------
# Stabilizer chains (deterministic Schreier-Sims)
# ---------------------------------------------------------------------------


class StabilizerChain:
    """Stabilizer chain for ``<generators>``.

    Built deterministically: each level fixes the smallest moved point,
    and orbits are explored in breadth-first point order, so repeated
    builds from equal generator lists give identical chains.
    """

    def __init__(self, generators, degree=None):
        if degree is None:
            if not generators:
                raise ValueError("degree required for an empty generator list")
            degree = len(generators[0])
        self.degree = degree
        gens = [tuple(g) for g in generators if not is_identity(g)]
        for g in gens:
            if len(g) != degree:
                raise DegreeMismatch(f"degree {len(g)} vs {degree}")
        self.base = []
        self.levels = []  # list of (base_point, transversal, strong_gens)
        self._build(gens)

    def _build(self, gens):
        while gens:
            point = min(i for g in gens for i in range(self.degree) if g[i] != i)
            transversal = {point: identity(self.degree)}
            frontier = [point]
            while frontier:
                here = frontier.pop(0)
                for g in gens:
                    there = g[here]
                    if there not in transversal:
                        transversal[there] = compose(g, transversal[here])
                        frontier.append(there)
            # Schreier generators for the next level, deduplicated in
            # discovery order.
            next_gens = []
            seen = set()
            for here in sorted(transversal):
                rep = transversal[here]
                for g in gens:
                    schreier = compose(inverse(transversal[g[here]]), compose(g, rep))
                    if not is_identity(schreier) and schreier not in seen:
                        seen.add(schreier)
                        next_gens.append(schreier)
            self.base.append(point)
            self.levels.append((point, transversal, gens))
            gens = next_gens

    def order(self):
        total = 1
        for _, transversal, _ in self.levels:
            total *= len(transversal)
        return total

    def sift(self, p):
        """Factor `p` through the chain; return the residue permutation."""
        residue = tuple(p)
        for point, transversal, _ in self.levels:
            image = residue[point]
            if image not in transversal:
                return residue
            residue = compose(inverse(transversal[image]), residue)
        return residue

    def contains(self, p):
        if len(p) != self.degree:
            raise DegreeMismatch(f"degree {len(p)} vs {self.degree}")
        return is_identity(self.sift(p))


def group_order(generators, degree=None):
    return StabilizerChain(generators, degree).order()


def two_generates(x, y, ambient_order):
    """True iff ``<x, y>`` has the full ambient order."""
    return StabilizerChain([x, y]).order() == ambient_order


# ---------------------------------------------------------------------------
# Explicit enumeration
# ---------------------------------------------------------------------------


def close_under(generators, degree, cap=DEFAULT_ORDER_CAP, seeds=None):
    """Enumerate ``<generators>`` breadth-first; identity is element 0.

    Deterministic: the frontier is processed in discovery order and
    generators are applied in their listed order.  Raises
    OrderExceedsCap beyond `cap` elements.
    """
    start = identity(degree)
    elements = [start] if seeds is None else list(seeds)
    index = {p: i for i, p in enumerate(elements)}
    frontier = list(elements)
    while frontier:
        here = frontier.pop(0)
        for g in generators:
            there = compose(g, here)
            if there not in index:
                if len(elements) >= cap:
                    raise OrderExceedsCap(f"enumeration exceeded cap {cap}")
                index[there] = len(elements)
                elements.append(there)
                frontier.append(there)
    return elements, index


class GroupIndex:
    """An explicitly enumerated permutation group with integer element ids."""

    def __init__(self, generators, degree, cap=DEFAULT_ORDER_CAP):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        self.elements, self.index = close_under(self.generators, degree, cap)
        self.order = len(self.elements)

    def id_of(self, p):
        return self.index[tuple(p)]

    def conjugation_map(self, g):
        """Index map of ``x -> g x g^-1`` over all elements."""
        g_inv = inverse(g)
        return [
            self.index[compose(compose(g, x), g_inv)] for x in self.elements
        ]


class ClassPartition:
    """Conjugacy classes of a GroupIndex.

    Classes are listed by ascending (element order, size, least member
    id); members within a class are sorted ids.
    """

    def __init__(self, group):
        self.group = group
        maps = [group.conjugation_map(g) for g in group.generators]
        class_of = [-1] * group.order
        raw_classes = []
        for start in range(group.order):
            if class_of[start] >= 0:
                continue
            members = [start]
            class_of[start] = len(raw_classes)
            frontier = [start]
            while frontier:
                here = frontier.pop(0)
                for cmap in maps:
                    there = cmap[here]
                    if class_of[there] < 0:
                        class_of[there] = len(raw_classes)
                        members.append(there)
                        frontier.append(there)
            raw_classes.append(sorted(members))
        keyed = sorted(
            raw_classes,
            key=lambda members: (
                element_order(group.elements[members[0]]),
                len(members),
                members[0],
            ),
        )
        self.members = keyed
        self.class_of = [-1] * group.order
        for ci, members in enumerate(keyed):
            for m in members:
                self.class_of[m] = ci

    def __len__(self):
        return len(self.members)

    def representative(self, ci):
        return self.members[ci][0]

    def order_of(self, ci):
        return element_order(self.group.elements[self.members[ci][0]])

    def size_of(self, ci):
        return len(self.members[ci])


# ---------------------------------------------------------------------------
# Sylow 2-subgroups by explicit growth (small groups only)
# ---------------------------------------------------------------------------


def sylow_two_subgroup(group):
    """Element ids of one Sylow 2-subgroup of an enumerated group.

    Grows a 2-subgroup by repeatedly adjoining a 2-element of its
    normalizer; choices are made in ascending element id order, so the
    result is deterministic.
    """
    full = group.order
    two_part = 1
    while full % 2 == 0:
        two_part *= 2
        full //= 2

    subgroup = {0}
    while len(subgroup) < two_part:
        sub_perms = [group.elements[i] for i in sorted(subgroup)]
        grown = False
        for candidate in range(1, group.order):
            if candidate in subgroup:
                continue
            p = group.elements[candidate]
            if element_order(p) & (element_order(p) - 1):
                continue  # not a 2-element
            p_inv = inverse(p)
            if any(
                group.index[compose(compose(p, s), p_inv)] not in subgroup
                for s in sub_perms
            ):
                continue  # does not normalize the current subgroup
            new_elements, _ = close_under(
                [p], group.degree, cap=2 * two_part, seeds=sub_perms
            )
            if len(new_elements) & (len(new_elements) - 1):
                continue
            subgroup = {group.index[e] for e in new_elements}
            grown = True
            break
        if not grown:
            raise RuntimeError("failed to grow Sylow 2-subgroup")
    return sorted(subgroup)


def centre_of(group, member_ids):
    """Element ids in `member_ids` commuting with all of `member_ids`."""
    perms = [group.elements[i] for i in member_ids]
    return [
        i
        for i in member_ids
        if all(
            compose(group.elements[i], s) == compose(s, group.elements[i])
            for s in perms
        )
    ]


def require_non_identity(element_id):
    if element_id == 0:
        raise IdentityArgument("identity element is not allowed here")
