"""
Degree-sequence primitives.

Sequences use 1-based labels in every public call: label ``i`` refers to the
i-th entry. ``DegreeSequence`` is the sorted, validated form; a
``LabeledIntSequence`` keeps arbitrary integers at fixed labels and is what
index-wise increments and decrements produce.

Example:
    >>> a = DegreeSequence.parse("4,4,3,3,3,1")
    >>> is_graphic(a)
    True
    >>> str(complement(a))
    '4,2,2,2,1,1'
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence, Tuple, Union

from .errors import (
    ForcedEdgesError,
    IndexOutOfRangeError,
    InsufficientEntriesError,
    LengthMismatchError,
    SequenceParseError,
)

_TOKEN_SPLIT = re.compile(r"[,\s]+")
_INTEGER = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class LabeledIntSequence:
    """
    Integer sequence with fixed vertex labels 1..n and no ordering requirement.

    Attributes:
        values: The entries; ``values[label - 1]`` is the entry of ``label``.
    """
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise ForcedEdgesError("A sequence needs at least one entry (n >= 1).")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str):
        """Parse comma- or whitespace-separated decimal integers."""
        return cls(parse_sequence(text))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return format_sequence(self.values)

    def at(self, label: int) -> int:
        """Entry of the given 1-based label."""
        _check_label(label, self.n)
        return self.values[label - 1]

    @property
    def total(self) -> int:
        return sum(self.values)

    def sorted_permutation(self) -> Tuple[int, ...]:
        """
        Labels in non-increasing order of their entries, ties by smaller label.

        Position ``k`` (1-based) of the sorted sequence holds the entry of
        label ``sorted_permutation()[k - 1]``.
        """
        return tuple(sorted(range(1, self.n + 1), key=lambda label: (-self.values[label - 1], label)))

    def sorted_values(self) -> Tuple[int, ...]:
        return tuple(self.values[label - 1] for label in self.sorted_permutation())

    def to_degree_sequence(self) -> "DegreeSequence":
        """Sorted copy as a validated DegreeSequence."""
        return DegreeSequence(self.sorted_values())


@dataclass(frozen=True)
class DegreeSequence(LabeledIntSequence):
    """
    Non-increasing sequence ``n-1 >= a_1 >= ... >= a_n >= 0``.

    Construction rejects any violation of these bounds.
    """

    def __post_init__(self):
        super().__post_init__()
        values = self.values
        n = len(values)
        for label, value in enumerate(values, start=1):
            if value < 0 or value > n - 1:
                raise ForcedEdgesError(
                    f"Entry {value} at position {label} is outside [0, {n - 1}] for n={n}."
                )
        for label in range(1, n):
            if values[label - 1] < values[label]:
                raise ForcedEdgesError(
                    f"Sequence {format_sequence(values)} is not non-increasing at position {label + 1}."
                )

    def labeled(self) -> LabeledIntSequence:
        return LabeledIntSequence(self.values)

    @property
    def max_degree(self) -> int:
        return self.values[0]

    @property
    def min_degree(self) -> int:
        return self.values[-1]


class MajorizationResult(Enum):
    """Outcome of comparing two equal-length sequences under majorization."""
    LEFT_MAJORIZES = "LeftMajorizes"
    RIGHT_MAJORIZES = "RightMajorizes"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"
    UNEQUAL_SUMS = "UnequalSums"

    @property
    def left_dominates(self) -> bool:
        """True when the left sequence majorizes the right one (equality included)."""
        return self in (MajorizationResult.LEFT_MAJORIZES, MajorizationResult.EQUAL)

    @property
    def right_dominates(self) -> bool:
        return self in (MajorizationResult.RIGHT_MAJORIZES, MajorizationResult.EQUAL)


IntSequenceLike = Union[LabeledIntSequence, Sequence[int]]


def _values(s: IntSequenceLike) -> Tuple[int, ...]:
    if isinstance(s, LabeledIntSequence):
        return s.values
    return tuple(int(v) for v in s)


def _check_label(label: int, n: int) -> None:
    if not 1 <= label <= n:
        raise IndexOutOfRangeError(f"Label {label} is outside 1..{n}.")


def _check_labels(indices: Iterable[int], n: int) -> Tuple[int, ...]:
    labels = tuple(indices)
    if len(set(labels)) != len(labels):
        raise IndexOutOfRangeError(f"Labels {labels} must be pairwise distinct.")
    for label in labels:
        _check_label(label, n)
    return labels


def parse_sequence(text: str) -> Tuple[int, ...]:
    """
    Parse "4,4,3,3,3,1" or "4 4 3 3 3 1" into a tuple of integers.

    Raises:
        SequenceParseError: On the first token that is not a decimal integer.
        ForcedEdgesError: If the text holds no tokens.
    """
    stripped = text.strip().strip(",")
    if not stripped:
        raise ForcedEdgesError("Empty sequence; expected comma- or space-separated integers.")
    values = []
    for position, token in enumerate(_TOKEN_SPLIT.split(stripped), start=1):
        if not _INTEGER.fullmatch(token):
            raise SequenceParseError(position, token, text)
        values.append(int(token))
    return tuple(values)


def format_sequence(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def is_graphic(s: IntSequenceLike) -> bool:
    """
    Erdős–Gallai test on a sorted working copy.

    Total on integer lists: negative entries, entries above n-1 and odd
    sums all return False.
    """
    degrees = sorted(_values(s), reverse=True)
    n = len(degrees)
    if n == 0:
        return True
    if degrees[-1] < 0 or degrees[0] > n - 1 or sum(degrees) % 2:
        return False

    suffix = [0] * (n + 1)
    for idx in range(n - 1, -1, -1):
        suffix[idx] = suffix[idx + 1] + degrees[idx]

    prefix = 0
    at_least_k = n  # entries with degree >= k occupy indices [0, at_least_k)
    for k in range(1, n + 1):
        prefix += degrees[k - 1]
        while at_least_k > 0 and degrees[at_least_k - 1] < k:
            at_least_k -= 1
        capped = k * max(0, at_least_k - k) + suffix[max(at_least_k, k)]
        if prefix > k * (k - 1) + capped:
            return False
    return True


def complement(a: DegreeSequence) -> DegreeSequence:
    """
    Complement sequence with entry i equal to ``n - a[n+1-i] - 1``.

    Vertex i of ``a`` corresponds to vertex n+1-i of the result.
    """
    n = a.n
    return DegreeSequence(tuple(n - a.values[n - i] - 1 for i in range(1, n + 1)))


def majorizes(a: IntSequenceLike, b: IntSequenceLike) -> MajorizationResult:
    """
    Compare prefix sums of ``a`` and ``b`` in the order given.

    Raises:
        LengthMismatchError: If the sequences differ in length.
    """
    left, right = _values(a), _values(b)
    if len(left) != len(right):
        raise LengthMismatchError(f"Cannot compare sequences of lengths {len(left)} and {len(right)}.")
    if sum(left) != sum(right):
        return MajorizationResult.UNEQUAL_SUMS

    left_ok = right_ok = True
    left_sum = right_sum = 0
    for x, y in zip(left, right):
        left_sum += x
        right_sum += y
        if left_sum < right_sum:
            left_ok = False
        elif left_sum > right_sum:
            right_ok = False

    if left_ok and right_ok:
        return MajorizationResult.EQUAL
    if left_ok:
        return MajorizationResult.LEFT_MAJORIZES
    if right_ok:
        return MajorizationResult.RIGHT_MAJORIZES
    return MajorizationResult.INCOMPARABLE


def _shift(s: IntSequenceLike, indices: Iterable[int], delta: int) -> LabeledIntSequence:
    values = list(_values(s))
    for label in _check_labels(indices, len(values)):
        values[label - 1] += delta
    return LabeledIntSequence(tuple(values))


def increment(s: IntSequenceLike, indices: Iterable[int]) -> LabeledIntSequence:
    """Add 1 at each given label; labels are preserved."""
    return _shift(s, indices, +1)


def decrement(s: IntSequenceLike, indices: Iterable[int]) -> LabeledIntSequence:
    """Subtract 1 at each given label; labels are preserved."""
    return _shift(s, indices, -1)


def kleitman_wang_reduce(a: IntSequenceLike, i: int) -> LabeledIntSequence:
    """
    Lay off vertex ``i``: subtract 1 from the ``a_i`` largest other entries
    (ties by smaller label) and set entry ``i`` to 0.

    For a DegreeSequence the largest other entries are simply the first
    ``a_i`` labels other than ``i``.

    Raises:
        IndexOutOfRangeError: If ``i`` is not a label.
        InsufficientEntriesError: If fewer than ``a_i`` other entries exist.
    """
    values = list(_values(a))
    n = len(values)
    _check_label(i, n)
    demand = values[i - 1]
    if demand < 0:
        raise ForcedEdgesError(f"Entry {demand} at label {i} is negative.")
    others = sorted((label for label in range(1, n + 1) if label != i),
                    key=lambda label: (-values[label - 1], label))
    if demand > len(others):
        raise InsufficientEntriesError(
            f"Label {i} needs {demand} partners but only {len(others)} other entries exist."
        )
    for label in others[:demand]:
        values[label - 1] -= 1
    values[i - 1] = 0
    return LabeledIntSequence(tuple(values))


def edge_count(a: IntSequenceLike) -> int:
    """Number of edges m of any realization (half the degree sum)."""
    return sum(_values(a)) // 2


def is_regular(a: IntSequenceLike) -> bool:
    return len(set(_values(a))) == 1
