"""Integer-pair degree sequences and their out-major / in-major orderings.

Every downstream formula assumes the two orderings produced here: a
non-increasing sort keyed on out-degree first (``pos``) and one keyed on
in-degree first (``neg``), with tie-breaks that agree whenever two entries
are completely equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import NegativeDegreeError, OutOfRangeError

Pair = tuple[int, int]


def compare_pos(a: Pair, b: Pair) -> int:
    """Three-way comparator for the out-major non-increasing order.

    Returns a negative value when ``a`` precedes ``b`` (larger out-degree,
    in-degree breaking ties), positive when it follows, zero when equal.
    """
    if a[0] != b[0]:
        return -1 if a[0] > b[0] else 1
    if a[1] != b[1]:
        return -1 if a[1] > b[1] else 1
    return 0


def compare_neg(a: Pair, b: Pair) -> int:
    """Three-way comparator for the in-major non-increasing order.

    Same contract as :func:`compare_pos` with the coordinates swapped:
    in-degree decides first, out-degree breaks ties.
    """
    if a[1] != b[1]:
        return -1 if a[1] > b[1] else 1
    if a[0] != b[0]:
        return -1 if a[0] > b[0] else 1
    return 0


@dataclass(frozen=True)
class IntegerPairSequence:
    """A sequence of ``(out_degree, in_degree)`` pairs, indexed from zero."""

    pairs: tuple[Pair, ...]

    def __init__(self, pairs: Iterable[Iterable[int]] = ()):
        object.__setattr__(
            self, "pairs", tuple((int(o), int(i)) for o, i in pairs)
        )

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def out_degrees(self) -> tuple[int, ...]:
        return tuple(p[0] for p in self.pairs)

    @property
    def in_degrees(self) -> tuple[int, ...]:
        return tuple(p[1] for p in self.pairs)

    @property
    def sum_out(self) -> int:
        return sum(p[0] for p in self.pairs)

    @property
    def sum_in(self) -> int:
        return sum(p[1] for p in self.pairs)

    @property
    def is_balanced(self) -> bool:
        """True when total out-degree equals total in-degree."""
        return self.sum_out == self.sum_in

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, index: int) -> Pair:
        return self.pairs[index]


def validate(seq: IntegerPairSequence) -> None:
    """Raise unless every entry fits a simple loopless digraph on N vertices.

    Raises:
        NegativeDegreeError: some out- or in-degree is negative.
        OutOfRangeError: some out- or in-degree exceeds N - 1.
    """
    bound = seq.n - 1
    for index, (out_deg, in_deg) in enumerate(seq.pairs):
        if out_deg < 0 or in_deg < 0:
            raise NegativeDegreeError(
                f"entry {index} has a negative degree: ({out_deg}, {in_deg})",
                index,
            )
        if out_deg > bound or in_deg > bound:
            raise OutOfRangeError(
                f"entry {index} = ({out_deg}, {in_deg}) exceeds the "
                f"simple-digraph bound {bound}",
                index,
            )


@dataclass(frozen=True)
class ProperOrdering:
    """The index permutations realizing both non-increasing orders.

    ``pos_perm[r]`` (``neg_perm[r]``) is the original index of the entry at
    rank ``r`` in the out-major (in-major) order.  Entries that are equal as
    pairs keep their original relative order in both permutations, which
    makes the two tie-breaks consistent.
    """

    pos_perm: tuple[int, ...]
    neg_perm: tuple[int, ...]

    @cached_property
    def pos_rank(self) -> tuple[int, ...]:
        """Inverse of ``pos_perm``: rank of each original index."""
        rank = [0] * len(self.pos_perm)
        for r, i in enumerate(self.pos_perm):
            rank[i] = r
        return tuple(rank)

    @cached_property
    def neg_rank(self) -> tuple[int, ...]:
        """Inverse of ``neg_perm``: rank of each original index."""
        rank = [0] * len(self.neg_perm)
        for r, i in enumerate(self.neg_perm):
            rank[i] = r
        return tuple(rank)

    def pos_prefix(self, k: int) -> frozenset[int]:
        """Original indices of the top ``k`` entries in out-major order."""
        return frozenset(self.pos_perm[:k])

    def neg_prefix(self, l: int) -> frozenset[int]:
        """Original indices of the top ``l`` entries in in-major order."""
        return frozenset(self.neg_perm[:l])


def proper_order(seq: IntegerPairSequence) -> ProperOrdering:
    """Compute both orderings with the index tie-break for equal pairs.

    Deterministic: equal pairs are kept in ascending original-index order in
    both permutations, which is what guarantees tie consistency.
    """
    validate(seq)
    indices = range(seq.n)
    pos = sorted(indices, key=lambda i: (-seq.pairs[i][0], -seq.pairs[i][1], i))
    neg = sorted(indices, key=lambda i: (-seq.pairs[i][1], -seq.pairs[i][0], i))
    return ProperOrdering(tuple(pos), tuple(neg))


def reorder(seq: IntegerPairSequence, perm: tuple[int, ...]) -> tuple[Pair, ...]:
    """Pairs of ``seq`` rearranged so position ``r`` holds entry ``perm[r]``."""
    return tuple(seq.pairs[i] for i in perm)
