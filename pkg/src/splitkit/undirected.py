"""Degree-sequence analysis for undirected graphs.

Covers graphicality, the splittance sequence, the corrected Durfee number,
and split-graph recognition, all from the sorted degree sequence alone.
Splittance values are exact rationals; everything else is exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import (
    EmptySequenceError,
    NegativeDegreeError,
    NotGraphicError,
    OutOfRangeError,
)


@dataclass(frozen=True)
class IntegerSequence:
    """An undirected degree sequence; order of entries does not matter."""

    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int] = ()):
        object.__setattr__(self, "degrees", tuple(int(d) for d in degrees))

    @property
    def n(self) -> int:
        return len(self.degrees)

    def sorted_desc(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees, reverse=True))

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)


Degrees = Union[IntegerSequence, Iterable[int]]


def _as_sequence(d: Degrees) -> IntegerSequence:
    return d if isinstance(d, IntegerSequence) else IntegerSequence(d)


def validate_degrees(d: Degrees) -> IntegerSequence:
    """Check the simple-graph bounds 0 <= d_i <= N - 1 and return the sequence."""
    seq = _as_sequence(d)
    bound = seq.n - 1
    for index, deg in enumerate(seq.degrees):
        if deg < 0:
            raise NegativeDegreeError(f"degree {index} is negative: {deg}", index)
        if deg > bound:
            raise OutOfRangeError(
                f"degree {index} = {deg} exceeds the simple-graph bound {bound}",
                index,
            )
    return seq


def corrected_durfee(d: Degrees) -> int:
    """Largest k (1-based) such that the k-th largest degree is at least k - 1.

    Raises:
        EmptySequenceError: the sequence has no entries.
    """
    seq = validate_degrees(d)
    if seq.n == 0:
        raise EmptySequenceError("corrected Durfee number needs N >= 1")
    ordered = seq.sorted_desc()
    m = 1
    for k in range(1, seq.n + 1):
        if ordered[k - 1] >= k - 1:
            m = k
    return m


def splittance_sequence(d: Degrees) -> list[Fraction]:
    """Edit distance to a split graph for each clique-size choice k = 0..N.

    Entry k is half of ``k(k-1) - (sum of the k largest degrees) + (sum of
    the rest)``.  Values are exact rationals; half-integers occur only for
    sequences that are not graphic.
    """
    seq = validate_degrees(d)
    ordered = seq.sorted_desc()
    total = sum(ordered)
    sigma = []
    prefix = 0
    for k in range(seq.n + 1):
        if k > 0:
            prefix += ordered[k - 1]
        sigma.append(Fraction(k * (k - 1) - prefix + (total - prefix), 2))
    return sigma


def eg_slack(d: Degrees) -> list[int]:
    """Surplus of each graphicality inequality, for k = 0..N.

    Entry k is ``sum_{i<=k} min(d_i, k-1) + sum_{i>k} min(d_i, k) -
    sum_{i<=k} d_i`` over the non-increasing arrangement.  Non-negativity of
    every entry (with an even degree total) characterizes graphic sequences,
    and the k-th entry vanishing at the corrected Durfee number
    characterizes split sequences.
    """
    seq = validate_degrees(d)
    ordered = seq.sorted_desc()
    n = seq.n
    slack = []
    for k in range(n + 1):
        head = sum(min(ordered[i], k - 1) for i in range(k))
        tail = sum(min(ordered[i], k) for i in range(k, n))
        slack.append(head + tail - sum(ordered[:k]))
    return slack


def is_graphic(d: Degrees) -> bool:
    """True when some simple undirected graph has this degree sequence.

    Entries beyond N - 1 are unrealizable and simply yield False; negative
    entries raise.
    """
    try:
        seq = validate_degrees(d)
    except OutOfRangeError:
        return False
    if sum(seq.degrees) % 2 != 0:
        return False
    return all(s >= 0 for s in eg_slack(seq))


def undirected_splittance(d: Degrees) -> int:
    """Minimum number of edge edits taking any realization to a split graph.

    Raises:
        NotGraphicError: the sequence is not graphic.
    """
    seq = _as_sequence(d)
    if not is_graphic(seq):
        raise NotGraphicError(f"sequence {seq.degrees} is not graphic")
    value = min(splittance_sequence(seq))
    assert value.denominator == 1 and value >= 0
    return int(value)


def is_split_undirected(d: Degrees) -> bool:
    """True when every realization of the (graphic) sequence is a split graph.

    Raises:
        NotGraphicError: the sequence is not graphic.
    """
    seq = _as_sequence(d)
    splittance = undirected_splittance(seq)
    if seq.n > 0:
        # The splittance and slack recognitions must agree; a mismatch would
        # mean a broken formula, not bad input.
        m = corrected_durfee(seq)
        slack_m = eg_slack(seq)[m]
        if slack_m != 2 * splittance:
            raise RuntimeError(
                f"internal inconsistency: slack at the Durfee index is "
                f"{slack_m}, expected {2 * splittance}"
            )
    return splittance == 0
