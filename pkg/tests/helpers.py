"""Shared generators and miniature oracles for the test suite."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from splitkit import Digraph, IntegerPairSequence, QuadPartition


def random_valid_pairs(rng: random.Random, n: int) -> IntegerPairSequence:
    """Uniform entries in [0, n-1]; not necessarily balanced or digraphic."""
    if n == 0:
        return IntegerPairSequence([])
    return IntegerPairSequence(
        (rng.randrange(n), rng.randrange(n)) for _ in range(n)
    )


def random_balanced_pairs(rng: random.Random, n: int) -> IntegerPairSequence:
    """Valid entries with equal out- and in-degree totals; may be non-digraphic."""
    if n == 0:
        return IntegerPairSequence([])
    outs = [rng.randrange(n) for _ in range(n)]
    ins = [rng.randrange(n) for _ in range(n)]
    while sum(ins) > sum(outs):
        i = rng.randrange(n)
        if ins[i] > 0:
            ins[i] -= 1
    while sum(ins) < sum(outs):
        i = rng.randrange(n)
        if ins[i] < n - 1:
            ins[i] += 1
    return IntegerPairSequence(zip(outs, ins))


def rebalance(seq: IntegerPairSequence) -> IntegerPairSequence:
    """Deterministically trim the heavier side until the totals match."""
    outs = list(seq.out_degrees)
    ins = list(seq.in_degrees)
    i = 0
    while sum(ins) > sum(outs):
        if ins[i % len(ins)] > 0:
            ins[i % len(ins)] -= 1
        i += 1
    while sum(outs) > sum(ins):
        if outs[i % len(outs)] > 0:
            outs[i % len(outs)] -= 1
        i += 1
    return IntegerPairSequence(zip(outs, ins))


def random_digraph(rng: random.Random, n: int, p: float = 0.5) -> Digraph:
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return Digraph(n, arcs)


def random_quad_partition(rng: random.Random, n: int) -> QuadPartition:
    blocks: list[list[int]] = [[], [], [], []]
    for v in range(n):
        blocks[rng.randrange(4)].append(v)
    return QuadPartition(n, *blocks)


def induced_inequality_checks(
    seq: IntegerPairSequence, part: QuadPartition
) -> tuple[int, list[str]]:
    """Evaluate all six strict-inequality families on an induced partition.

    Returns (number of non-vacuous checks, list of violation descriptions).
    """
    d = seq.pairs
    checked = 0
    violations = []
    for x in part.plus:
        for y in part.minus:
            checked += 1
            if not d[x][0] > d[y][0]:
                violations.append(f"out-degree order failed at x={x}, y={y}")
            if not d[y][1] > d[x][1]:
                violations.append(f"in-degree order failed at x={x}, y={y}")
            for z in part.pm:
                checked += 1
                if d[z][1] == d[x][1] and not d[z][0] > d[y][0]:
                    violations.append(f"pm/out conditional failed at z={z}")
                if d[z][0] == d[y][0] and not d[z][1] > d[x][1]:
                    violations.append(f"pm/in conditional failed at z={z}")
            for w in part.zero:
                checked += 1
                if d[y][1] == d[w][1] and not d[x][0] > d[w][0]:
                    violations.append(f"zero/out conditional failed at w={w}")
                if d[x][0] == d[w][0] and not d[y][1] > d[w][1]:
                    violations.append(f"zero/in conditional failed at w={w}")
    return checked, violations


def edge_slots(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def is_split_graph(n: int, edges: set[frozenset[int]]) -> bool:
    """Bipartition sweep: some vertex subset is a clique with the rest independent."""
    for bits in range(1 << n):
        clique = [v for v in range(n) if bits >> v & 1]
        rest = [v for v in range(n) if not bits >> v & 1]
        if all(
            frozenset(e) in edges for e in combinations(clique, 2)
        ) and not any(frozenset(e) in edges for e in combinations(rest, 2)):
            return True
    return False


@lru_cache(maxsize=8)
def split_graph_masks(n: int) -> frozenset[int]:
    """All edge masks of split graphs on n vertices."""
    slots = edge_slots(n)
    masks = set()
    for mask in range(1 << len(slots)):
        edges = {
            frozenset(slots[i]) for i in range(len(slots)) if mask >> i & 1
        }
        if is_split_graph(n, edges):
            masks.add(mask)
    return frozenset(masks)


def undirected_edit_distance(n: int, edges: set[frozenset[int]]) -> int:
    """Exact minimum edge-toggle distance to a split graph (small n only)."""
    slots = edge_slots(n)
    index = {frozenset(s): i for i, s in enumerate(slots)}
    masks = split_graph_masks(n)
    mask = sum(1 << index[e] for e in edges)
    for radius in range(len(slots) + 1):
        for combo in combinations(range(len(slots)), radius):
            toggled = mask
            for i in combo:
                toggled ^= 1 << i
            if toggled in masks:
                return radius
    raise AssertionError("unreachable: complete graphs are split")
