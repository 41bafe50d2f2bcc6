"""Exact spread via minimum support covers.

A set X of non-identity elements "supports" the group when the union of
their supports is all of G#.  The smallest such X satisfies
``s(G) = |X| - 1``: every (|X|-1)-subset still has a common mate, and X
itself has none.  So the exact spread is a minimum set-cover problem
over the precomputed supports.

The search is branch-and-bound over int bitmasks:

* iterative deepening on the cover size, so the reported size is a
  proven minimum;
* the first chosen element ranges over conjugacy class representatives
  only (a cover can always be conjugated so that one chosen member is
  its class representative);
* branching covers the hardest uncovered element (fewest-bit support)
  first, with candidates deduplicated and dominance-pruned;
* lower bounds come from static "hardness level" families: if S is a
  set of uncovered elements and no single element supports more than M
  members of S, any cover still needs ceil(|S|/M) more picks.

Parallelism only splits root branches of the boolean existence search,
so results are identical for any thread count.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import BudgetExhausted, IdentityArgument
from .support import bits_of


@dataclass
class CoverSearchConfig:
    threads: int = 1
    node_budget: int | None = None
    time_budget: float | None = None
    use_dominance: bool = True
    root_conjugacy: bool = True
    level_cap: int = 8  # number of hardness levels kept for lower bounds


@dataclass
class SpreadResult:
    exact: bool
    min_cover_size: int | None
    witness: tuple | None
    spread: int | None
    spread_lower: int
    spread_upper: int
    nodes: int
    wall_time: float = field(compare=False, default=0.0)

    def stable_dict(self):
        """The schedule-independent part of the result."""
        return {
            "exact": self.exact,
            "minCoverSize": self.min_cover_size,
            "witness": list(self.witness) if self.witness is not None else None,
            "spread": self.spread,
            "spreadLower": self.spread_lower,
            "spreadUpper": self.spread_upper,
        }


def greedy_cover(matrix):
    """A supporting set by greedy max-new-coverage (ties: lowest id)."""
    universe = matrix.universe
    covered = 0
    chosen = []
    supports = matrix.supports
    while covered & universe != universe:
        best_gain = -1
        best_id = None
        for x in range(1, matrix.group.order):
            gain = (supports[x] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_id = x
        chosen.append(best_id)
        covered |= supports[best_id]
    return chosen


def woldar_bound_elementwise(matrix, element_ids):
    """|X| - 1 if X supports everything, else None (not a supporting set)."""
    for x in element_ids:
        if x == 0:
            raise IdentityArgument("supporting sets contain no identity")
    if matrix.supports_all(element_ids):
        return len(element_ids) - 1
    return None


class _Searcher:
    def __init__(self, matrix, config):
        self.matrix = matrix
        self.config = config
        self.supports = matrix.supports
        self.universe = matrix.universe
        self.order = matrix.group.order
        self.deadline = (
            time.monotonic() + config.time_budget if config.time_budget else None
        )
        self.nodes = 0
        self.node_budget = config.node_budget

        # Hardness order: non-identity elements by ascending support size.
        popcounts = [0] + [self.supports[x].bit_count() for x in range(1, self.order)]
        self.hardness_order = sorted(range(1, self.order), key=lambda x: (popcounts[x], x))

        # Static hardness-level families for the ratio lower bound.
        levels = {}
        for x in range(1, self.order):
            levels.setdefault(popcounts[x], 0)
            levels[popcounts[x]] |= 1 << x
        self.level_families = []
        coverers = []
        for value in sorted(levels)[: config.level_cap]:
            family = levels[value]
            max_cover = 1
            coverer = 0
            for x in range(1, self.order):
                hit = (self.supports[x] & family).bit_count()
                if hit:
                    coverer |= 1 << x
                if hit > max_cover:
                    max_cover = hit
            self.level_families.append((family, max_cover))
            coverers.append(coverer)
        self.max_support = max(popcounts[1:]) if self.order > 1 else 1

        # Families whose coverer sets are pairwise disjoint need disjoint
        # picks, so their ratio bounds add.  Precompute the maximal
        # pairwise-disjoint index sets (few families, so brute force).
        n = len(self.level_families)
        disjoint = [
            [i != j and not (coverers[i] & coverers[j]) for j in range(n)]
            for i in range(n)
        ]
        packs = []
        for mask in range(1, 1 << n):
            ids = [i for i in range(n) if (mask >> i) & 1]
            if all(disjoint[a][b] for k, a in enumerate(ids) for b in ids[k + 1 :]):
                packs.append(tuple(ids))
        self.family_packs = [
            p for p in packs
            if len(p) > 1 and not any(set(p) < set(q) for q in packs)
        ]

    def _charge_node(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise BudgetExhausted("node budget exhausted")
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted("time budget exhausted")

    def lower_bound(self, covered):
        uncovered = self.universe & ~covered
        if not uncovered:
            return 0
        bound = -(-uncovered.bit_count() // self.max_support)
        needs = []
        for family, max_cover in self.level_families:
            open_count = (family & uncovered).bit_count()
            need = -(-open_count // max_cover) if open_count else 0
            needs.append(need)
            if need > bound:
                bound = need
        for pack in self.family_packs:
            total = sum(needs[i] for i in pack)
            if total > bound:
                bound = total
        return bound

    def _candidates(self, covered):
        """Deduplicated, ordered candidates covering the hardest open element."""
        uncovered = self.universe & ~covered
        target = None
        for x in self.hardness_order:
            if (uncovered >> x) & 1:
                target = x
                break
        gains = {}
        for x in bits_of(self.supports[target]):
            gain = self.supports[x] & ~covered
            if gain not in gains:
                gains[gain] = x
        items = sorted(
            gains.items(), key=lambda kv: (-kv[0].bit_count(), kv[1])
        )
        if self.config.use_dominance and len(items) <= 512:
            kept = []
            for gain, x in items:
                if any(gain & ~g2 == 0 for g2, _ in kept):
                    continue  # dominated by an earlier (larger-or-equal) gain
                kept.append((gain, x))
            items = kept
        return items

    def extend(self, covered, remaining, chosen):
        """Find any completion within `remaining` picks; None if impossible."""
        self._charge_node()
        if covered & self.universe == self.universe:
            return list(chosen)
        if remaining == 0:
            return None
        if self.lower_bound(covered) > remaining:
            return None
        for gain, x in self._candidates(covered):
            chosen.append(x)
            found = self.extend(covered | gain, remaining - 1, chosen)
            if found is not None:
                return found
            chosen.pop()
        return None

    def root_ids(self):
        """First-pick candidates: class representatives, or the hardest
        element's support when no class data is attached."""
        classes = self.matrix.classes
        if self.config.root_conjugacy and classes is not None:
            return [
                classes.representative(ci)
                for ci in range(len(classes))
                if classes.representative(ci) != 0
            ]
        hardest = self.hardness_order[0]
        return sorted(bits_of(self.supports[hardest]))

    def exists_cover(self, limit):
        """Whether some supporting set of size <= limit exists (boolean only).

        With conjugacy roots this is complete: any cover can be
        conjugated so that one member becomes its class representative.
        """
        roots = self.root_ids()
        if limit <= 0:
            return False

        def probe(root):
            return self.extend(self.supports[root], limit - 1, [root]) is not None

        if self.config.threads > 1:
            with ThreadPoolExecutor(max_workers=self.config.threads) as pool:
                return any(list(pool.map(probe, roots)))
        return any(probe(root) for root in roots)

    def first_cover(self, limit):
        """Canonical witness: sequential search in fixed root order."""
        for root in self.root_ids():
            found = self.extend(self.supports[root], limit - 1, [root])
            if found is not None:
                return found
        return None


def exact_spread(matrix, config=None):
    """Exact spread of the group behind `matrix`, with a witness.

    The witness is a minimum supporting set; it has no common mate,
    while every smaller set does, so ``spread = len(witness) - 1``.
    On budget exhaustion a non-exact result with proven bounds is
    returned instead.
    """
    config = config or CoverSearchConfig()
    start = time.monotonic()
    searcher = _Searcher(matrix, config)
    greedy = greedy_cover(matrix)
    upper = len(greedy)
    limit = max(searcher.lower_bound(0), 1)
    try:
        while limit < upper:
            if searcher.exists_cover(limit):
                witness = searcher.first_cover(limit)
                assert witness is not None and matrix.supports_all(witness)
                return _exact_result(sorted(witness), limit, searcher, start)
            limit += 1
        assert matrix.supports_all(greedy)
        return _exact_result(sorted(greedy), upper, searcher, start)
    except BudgetExhausted:
        return SpreadResult(
            exact=False,
            min_cover_size=None,
            witness=tuple(sorted(greedy)),
            spread=None,
            spread_lower=limit - 1,  # all sizes < limit are refuted
            spread_upper=upper - 1,
            nodes=searcher.nodes,
            wall_time=time.monotonic() - start,
        )


def _exact_result(witness, size, searcher, start):
    return SpreadResult(
        exact=True,
        min_cover_size=size,
        witness=tuple(witness),
        spread=size - 1,
        spread_lower=size - 1,
        spread_upper=size - 1,
        nodes=searcher.nodes,
        wall_time=time.monotonic() - start,
    )


def spread_at_least(matrix, r, config=None):
    """Decide ``s(G) >= r``.

    Returns ``(True, None)`` when no r-subset of G# supports all of G#,
    otherwise ``(False, witness)`` with a supporting r-subset (padded
    with the smallest unused ids if the search finds a smaller one).
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    config = config or CoverSearchConfig()
    searcher = _Searcher(matrix, config)
    if r == 0:
        return True, None
    if not searcher.exists_cover(r):
        return True, None
    witness = searcher.first_cover(r)
    for x in range(1, matrix.group.order):
        if len(witness) >= r:
            break
        if x not in witness:
            witness.append(x)
    witness = tuple(sorted(witness))
    assert matrix.supports_all(witness)
    return False, witness
