"""Walkthrough: the spread of A5, computed from supports.

A set {x1, .., xr} of non-identity elements has a *mate* y when
<xi, y> is the whole group for every i.  The spread s(G) is the largest
r such that every r-set has a mate.  The support supp(x) is the union
of the non-identity elements of the maximal subgroups containing x, and
y is a mate of x exactly when y avoids supp(x) -- so s(G) + 1 equals
the size of the smallest set whose supports cover everything.
"""

from spreadlab import (
    ClassPartition,
    GroupIndex,
    exact_spread,
    load_group_spec,
    matrix_from_spec,
    two_generates,
)
from spreadlab.perm import element_order, to_cycles
from spreadlab.support import bits_of

spec = load_group_spec("data/groups/a5.json")
group = GroupIndex(spec.generators, spec.degree)
classes = ClassPartition(group)
matrix = matrix_from_spec(group, spec, classes)

print(f"{spec.name}: order {group.order}, degree {spec.degree}")
print(f"maximal subgroups: "
      + ", ".join(f"{f.count} x {f.name} (order {f.order})"
                  for f in spec.maximals))

# A 5-cycle sits in exactly one maximal subgroup, a dihedral group of
# order 10, so its support has just 9 elements and it has 50 mates.
five = next(i for i in range(1, 60)
            if element_order(group.elements[i]) == 5)
supp = matrix.support_of(five)
print(f"\na 5-cycle: {to_cycles(group.elements[five])}")
print(f"  lives in {len(matrix.subgroups_containing(five))} maximal subgroup(s)")
print(f"  support size {supp.bit_count()}, mates {matrix.mates_of([five]).bit_count()}")

# Mate duality, checked directly against two-generation for this element.
for y in range(1, 60):
    in_support = bool(supp >> y & 1)
    generates = two_generates(group.elements[five], group.elements[y], 60)
    assert generates == (not in_support)
print("  mate duality verified against <x, y> = A5 for all 59 partners")

# The exact spread: branch-and-bound over the support covers.
result = exact_spread(matrix)
print(f"\nminimum supporting set: {result.min_cover_size} elements")
for x in result.witness:
    print(f"  {to_cycles(group.elements[x])} "
          f"(order {element_order(group.elements[x])})")
print(f"s(A5) = {result.spread}  "
      f"({result.nodes} search nodes, {result.wall_time:.3f}s)")
assert result.spread == 2
