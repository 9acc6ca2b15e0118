"""Brute-force ground truth for desk-scale instances.

Everything here trades time for certainty: partitions are enumerated
exhaustively, realizations are found by backtracking, and splittance is
recomputed as a literal edit-distance search.  The fast library paths are
validated against these routines over every small instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .digraphs import Digraph
from .errors import BudgetExceededError, OutOfRangeError
from .sequences import IntegerPairSequence, validate
from .splittance import QuadPartition, partition_measure


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps for the exhaustive searches.

    ``max_vertices`` bounds full digraph enumeration (2^(n(n-1)) graphs) and
    the edit-distance search; ``max_realize_vertices`` bounds the
    backtracking realization search, which only needs one witness and
    scales further; ``max_partitions`` bounds the 4^N partition sweep.
    ``sample_size``/``sample_seed`` switch enumeration beyond
    ``max_vertices`` to a seeded uniform sample instead of failing.
    """

    max_vertices: int = 4
    max_realize_vertices: int = 8
    max_partitions: int = 4**7
    sample_seed: int = 0
    sample_size: int | None = None


DEFAULT_BUDGET = EnumerationBudget()


def _arc_slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _digraph_from_mask(n: int, mask: int, slots: list[tuple[int, int]]) -> Digraph:
    return Digraph(n, (slots[i] for i in range(len(slots)) if mask >> i & 1))


def _mask_from_digraph(g: Digraph) -> int:
    slots = _arc_slots(g.n)
    index = {arc: i for i, arc in enumerate(slots)}
    mask = 0
    for arc in g.arcs:
        mask |= 1 << index[arc]
    return mask


@lru_cache(maxsize=8)
def _all_quad_partitions(n: int) -> tuple[QuadPartition, ...]:
    """Every assignment of n vertices to the four blocks, trivial ones included."""
    parts = []
    for roles in product(range(4), repeat=n):
        blocks: list[list[int]] = [[], [], [], []]
        for vertex, role in enumerate(roles):
            blocks[role].append(vertex)
        parts.append(QuadPartition(n, *blocks))
    return tuple(parts)


def nontrivial_partitions(n: int) -> tuple[QuadPartition, ...]:
    """Every non-trivial quad partition of n vertices."""
    return tuple(p for p in _all_quad_partitions(n) if p.non_trivial)


def brute_min_partition_measure(
    seq: IntegerPairSequence, budget: EnumerationBudget = DEFAULT_BUDGET
) -> int:
    """Minimum measure over all non-trivial partitions, by full 4^N sweep.

    The degenerate empty sequence has no non-trivial partitions and is
    assigned 0, matching the convention of the fast path.

    Raises:
        BudgetExceededError: 4^N exceeds ``budget.max_partitions``.
    """
    validate(seq)
    if 4**seq.n > budget.max_partitions:
        raise BudgetExceededError(
            f"4^{seq.n} partitions exceed the budget of {budget.max_partitions}"
        )
    best: int | None = None
    for part in nontrivial_partitions(seq.n):
        measure = partition_measure(seq, part)
        if best is None or measure < best:
            best = measure
    return 0 if best is None else best


def brute_realize(
    seq: IntegerPairSequence, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Digraph | None:
    """Find any simple loopless digraph with the given degree sequence.

    Backtracking over out-neighborhoods, one vertex at a time, pruned by
    remaining in-capacity.  Returns None when no realization exists,
    including for entries beyond N - 1.

    Raises:
        BudgetExceededError: N exceeds ``budget.max_realize_vertices``.
    """
    n = seq.n
    if n > budget.max_realize_vertices:
        raise BudgetExceededError(
            f"realization search capped at {budget.max_realize_vertices} vertices"
        )
    try:
        validate(seq)
    except OutOfRangeError:
        return None
    if seq.sum_out != seq.sum_in:
        return None

    # Place high out-degree vertices first; their target choices are tightest.
    order = sorted(range(n), key=lambda i: (-seq.pairs[i][0], i))
    placed = [False] * n
    in_cap = [seq.pairs[i][1] for i in range(n)]
    arcs: list[tuple[int, int]] = []

    def place(position: int) -> bool:
        if position == n:
            return all(c == 0 for c in in_cap)
        # A vertex can still receive at most one arc from each unplaced
        # source other than itself.
        unplaced = n - position
        for v in range(n):
            if in_cap[v] > unplaced - (0 if placed[v] else 1):
                return False
        u = order[position]
        need = seq.pairs[u][0]
        candidates = [v for v in range(n) if v != u and in_cap[v] > 0]
        if len(candidates) < need:
            return False
        placed[u] = True
        for chosen in combinations(candidates, need):
            for v in chosen:
                in_cap[v] -= 1
            arcs.extend((u, v) for v in chosen)
            if place(position + 1):
                return True
            del arcs[len(arcs) - need :]
            for v in chosen:
                in_cap[v] += 1
        placed[u] = False
        return False

    if place(0):
        return Digraph(n, arcs)
    return None


@lru_cache(maxsize=4)
def _split_membership(n: int) -> bytearray:
    """Byte table over all arc masks: 1 when the digraph has a non-trivial
    split partition, checked structurally against the two arc families."""
    slots = _arc_slots(n)
    index = {arc: i for i, arc in enumerate(slots)}
    full = (1 << len(slots)) - 1
    table = bytearray(1 << len(slots))
    for part in nontrivial_partitions(n):
        senders = part.pm | part.plus
        receivers = part.pm | part.minus
        forced = 0
        for u in senders:
            for v in receivers:
                if u != v:
                    forced |= 1 << index[(u, v)]
        silenced = part.minus | part.zero
        protected = part.plus | part.zero
        forbidden = 0
        for u in silenced:
            for v in protected:
                if u != v:
                    forbidden |= 1 << index[(u, v)]
        free = full & ~(forced | forbidden)
        sub = free
        while True:
            table[forced | sub] = 1
            if sub == 0:
                break
            sub = (sub - 1) & free
    return table


def brute_splittance(g: Digraph, budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """Exact minimum arc-edit distance from ``g`` to any split digraph.

    Iterative deepening over the edit count; at depth r every set of r arc
    toggles is tried against a memoized structural split test.

    Raises:
        BudgetExceededError: n exceeds ``budget.max_vertices``.
    """
    n = g.n
    if n > budget.max_vertices:
        raise BudgetExceededError(
            f"edit-distance search capped at {budget.max_vertices} vertices"
        )
    if n == 0:
        return 0
    table = _split_membership(n)
    mask = _mask_from_digraph(g)
    if table[mask]:
        return 0
    slot_count = n * (n - 1)
    slot_bits = [1 << i for i in range(slot_count)]
    for depth in range(1, slot_count + 1):
        for combo in combinations(slot_bits, depth):
            toggled = mask
            for bit in combo:
                toggled ^= bit
            if table[toggled]:
                return depth
    raise RuntimeError("no split digraph reachable; this cannot happen")


def enumerate_digraphs(
    n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Iterator[Digraph]:
    """Yield every labeled simple loopless digraph on n vertices exactly once.

    Beyond ``budget.max_vertices`` a seeded uniform sample of
    ``budget.sample_size`` digraphs (each arc present with probability 1/2)
    is yielded instead, or the call fails when no sample size is configured.

    Raises:
        BudgetExceededError: n over budget and no sample size set.
    """
    slots = _arc_slots(n)
    if n <= budget.max_vertices:
        for mask in range(1 << len(slots)):
            yield _digraph_from_mask(n, mask, slots)
        return
    if budget.sample_size is None:
        raise BudgetExceededError(
            f"exhaustive enumeration capped at {budget.max_vertices} vertices; "
            f"set a sample_size to sample larger n"
        )
    rng = random.Random(f"{budget.sample_seed}:{n}")
    for _ in range(budget.sample_size):
        yield _digraph_from_mask(n, rng.getrandbits(len(slots)), slots)


def _realize_undirected(degrees: tuple[int, ...]) -> set[frozenset[int]] | None:
    """Greedy constructive realization of an undirected degree sequence.

    Repeatedly wires the highest-degree vertex to the next-highest ones;
    succeeds exactly when the sequence is graphic.  Internal helper for the
    undirected test suite.
    """
    remaining = [[d, i] for i, d in enumerate(degrees)]
    if any(d < 0 or d > len(degrees) - 1 for d, _ in remaining):
        return None
    edges: set[frozenset[int]] = set()
    if not remaining:
        return edges
    while True:
        remaining.sort(key=lambda pair: -pair[0])
        top, u = remaining[0]
        if top == 0:
            return edges
        if top > len(remaining) - 1:
            return None
        remaining[0][0] = 0
        for slot in remaining[1 : top + 1]:
            if slot[0] == 0:
                return None
            slot[0] -= 1
            edges.add(frozenset((u, slot[1])))
