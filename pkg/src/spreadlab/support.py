"""Supports of elements relative to the maximal subgroup families.

The support of a non-identity element x is the union of the
non-identity elements of the proper subgroups containing x; maximal
subgroups suffice.  The central fact used everywhere downstream:

    <x, y> = G   iff   y is outside supp(x),

so "y is a mate of every x in X" is exactly "y avoids supp(X)", and
spread questions become set-cover questions over supports.

Element sets are Python ints used as bitmasks over element ids; bit 0
is the identity and is excluded from supports and the universe.
"""

from dataclasses import dataclass

from .errors import CountMismatch, IdentityArgument
from .perm import ClassPartition, close_under


@dataclass(frozen=True)
class SubgroupMask:
    """One subgroup of an enumerated group, as a bitmask of element ids."""

    mask: int
    order: int
    family: str  # name of the conjugacy family it belongs to


def _transport_mask(mask, cmap):
    moved = 0
    while mask:
        low = mask & -mask
        moved |= 1 << cmap[low.bit_length() - 1]
        mask &= mask - 1
    return moved


def expand_conjugates(group, rep_member_ids, expected_count, family):
    """All conjugates of a subgroup under the group, as SubgroupMasks.

    The representative is given by its element ids; conjugation uses the
    group generators and explores breadth-first, so output order is
    deterministic.  Raises CountMismatch if the orbit size differs from
    the declared conjugate count.
    """
    maps = [group.conjugation_map(g) for g in group.generators]
    rep_mask = 0
    for i in rep_member_ids:
        rep_mask |= 1 << i
    orbit = [rep_mask]
    seen = {rep_mask}
    frontier = [rep_mask]
    while frontier:
        here = frontier.pop(0)
        for cmap in maps:
            there = _transport_mask(here, cmap)
            if there not in seen:
                seen.add(there)
                orbit.append(there)
                frontier.append(there)
    if len(orbit) != expected_count:
        raise CountMismatch(
            f"family {family}: declared {expected_count} conjugates, found {len(orbit)}"
        )
    order = len(rep_member_ids)
    return [SubgroupMask(mask=m, order=order, family=family) for m in orbit]


class SupportMatrix:
    """Element-vs-subgroup incidence plus precomputed supports.

    `universe` is the bitmask of all non-identity elements.  For each
    non-identity element id x, `supports[x]` is the bitmask of supp(x);
    `supports[0]` is unused.
    """

    def __init__(self, group, subgroup_masks, classes=None):
        self.group = group
        self.subgroups = list(subgroup_masks)
        self.classes = classes
        self.universe = (1 << group.order) - 2  # all ids except 0

        n = group.order
        rows = [0] * n  # per element: bitmask over subgroup indices
        for j, sub in enumerate(self.subgroups):
            bit = 1 << j
            mask = sub.mask
            while mask:
                low = mask & -mask
                rows[low.bit_length() - 1] |= bit
                mask &= mask - 1
        self.rows = rows

        supports = [0] * n
        for sub in self.subgroups:
            contribution = sub.mask & ~1
            mask = sub.mask
            while mask:
                low = mask & -mask
                supports[low.bit_length() - 1] |= contribution
                mask &= mask - 1
        supports[0] = 0
        self.supports = supports

    def support_of(self, element_id):
        if element_id == 0:
            raise IdentityArgument("the identity has no support")
        return self.supports[element_id]

    def support_of_set(self, element_ids):
        total = 0
        for x in element_ids:
            total |= self.support_of(x)
        return total

    def supports_all(self, element_ids):
        """True iff supp over `element_ids` covers every non-identity element."""
        return self.support_of_set(element_ids) & self.universe == self.universe

    def mates_of(self, element_ids):
        """Bitmask of common mates: non-identity y outside every support."""
        for x in element_ids:
            if x == 0:
                raise IdentityArgument("the identity has no mates")
        return self.universe & ~self.support_of_set(element_ids)

    def subgroups_containing(self, element_id):
        row = self.rows[element_id]
        found = []
        while row:
            low = row & -row
            found.append(self.subgroups[low.bit_length() - 1])
            row &= row - 1
        return found


def matrix_from_spec(group, spec, classes=None):
    """Build the SupportMatrix for a loaded GroupSpec + enumerated group."""
    if classes is None:
        classes = ClassPartition(group)
    masks = []
    for family in spec.maximals:
        rep_elements, _ = close_under(
            family.generators, spec.degree, cap=family.order + 1
        )
        if len(rep_elements) != family.order:
            raise CountMismatch(
                f"family {family.name}: declared order {family.order}, "
                f"closure has {len(rep_elements)}"
            )
        rep_ids = sorted(group.id_of(p) for p in rep_elements)
        masks.extend(expand_conjugates(group, rep_ids, family.count, family.name))
    return SupportMatrix(group, masks, classes=classes)


def bits_of(mask):
    """Iterate set bit positions of an int bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1
