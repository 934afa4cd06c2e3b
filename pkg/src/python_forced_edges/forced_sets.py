"""
Forced and forbidden edge sets of a graphic degree sequence.

An edge (i,j) is forced when it appears in every labeled realization and
forbidden when it appears in none. Membership is decided by a single
graphicality probe: (i,j) is forced iff incrementing entries i and j gives a
non-graphic sequence, and forbidden iff decrementing them does.

For a sorted sequence the forced set is downward closed and the forbidden set
upward closed in the label order, so both are stored as one frontier value per
row (StaircaseEdgeSet) and computed by a monotone walk that issues O(n)
probes instead of probing all pairs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    ForcedEdgesError,
    InvalidEdgeError,
    LengthMismatchError,
    MinDegreeZeroError,
    NotComparableError,
    NotGraphicError,
    PreconditionViolatedError,
)
from .labeled_graph import Edge, EdgeLike, LabeledGraph, _as_edge
from .seq_core import (
    DegreeSequence,
    IntSequenceLike,
    LabeledIntSequence,
    _check_label,
    _values,
    complement,
    edge_count,
    format_sequence,
    is_graphic,
    majorizes,
)


class EdgeSetKind(Enum):
    FORCED = "forced"
    FORBIDDEN = "forbidden"

    @property
    def dual(self) -> "EdgeSetKind":
        return EdgeSetKind.FORBIDDEN if self is EdgeSetKind.FORCED else EdgeSetKind.FORCED


@dataclass(frozen=True)
class StaircaseEdgeSet:
    """
    Frontier-compressed edge set on labels 1..n.

    Forced kind: row i holds the edges (i,j) for i < j <= frontier[i].
    Forbidden kind: row i holds the edges (i,j) for frontier[i] <= j <= n.
    ``frontier[i - 1]`` is None for an empty row. Equal sets have equal
    frontiers, so dataclass equality is set equality.
    """
    n: int
    kind: EdgeSetKind
    frontier: Tuple[Optional[int], ...]

    def __post_init__(self):
        if len(self.frontier) != self.n:
            raise ForcedEdgesError(f"Frontier has {len(self.frontier)} rows for n={self.n}.")

    @classmethod
    def empty(cls, n: int, kind: EdgeSetKind) -> "StaircaseEdgeSet":
        return cls(n, kind, (None,) * n)

    @classmethod
    def from_edges(cls, n: int, kind: EdgeSetKind, edges: Iterable[EdgeLike]) -> "StaircaseEdgeSet":
        """
        Compress an explicit edge set.

        Raises:
            ForcedEdgesError: If the set is not closed in the direction its
                kind requires (downward for forced, upward for forbidden).
        """
        wanted = {_as_edge(e) for e in edges}
        rows: List[Optional[int]] = [None] * n
        for e in wanted:
            if e.j > n:
                raise ForcedEdgesError(f"Edge {e} has a label outside 1..{n}.")
            current = rows[e.i - 1]
            if kind is EdgeSetKind.FORCED:
                rows[e.i - 1] = e.j if current is None else max(current, e.j)
            else:
                rows[e.i - 1] = e.j if current is None else min(current, e.j)
        staircase = cls(n, kind, tuple(rows))
        if len(staircase) != len(wanted) or not staircase.is_closed():
            raise ForcedEdgesError(f"Edge set is not a {kind.value} staircase on {n} vertices.")
        return staircase

    def _row(self, i: int) -> range:
        bound = self.frontier[i - 1]
        if bound is None:
            return range(0)
        if self.kind is EdgeSetKind.FORCED:
            return range(i + 1, bound + 1)
        return range(bound, self.n + 1)

    def __contains__(self, item: object) -> bool:
        try:
            e = _as_edge(item)  # type: ignore[arg-type]
        except (InvalidEdgeError, TypeError, ValueError):
            return False
        if e.j > self.n:
            return False
        return e.j in self._row(e.i)

    def __iter__(self) -> Iterator[Edge]:
        for i in range(1, self.n + 1):
            for j in self._row(i):
                yield Edge(i, j)

    def __len__(self) -> int:
        return sum(len(self._row(i)) for i in range(1, self.n + 1))

    def __bool__(self) -> bool:
        return any(bound is not None for bound in self.frontier)

    def edges(self) -> List[Edge]:
        return list(self)

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self)

    def vertices(self) -> FrozenSet[int]:
        """Endpoints of all edges in the set."""
        found = set()
        for e in self:
            found.add(e.i)
            found.add(e.j)
        return frozenset(found)

    def mirrored(self) -> "StaircaseEdgeSet":
        """
        Relabel every vertex v as n+1-v. Maps a forced staircase of a
        sequence onto the forbidden staircase of its complement and back.
        """
        n = self.n
        mirrored = (Edge(n + 1 - e.j, n + 1 - e.i) for e in self)
        return StaircaseEdgeSet.from_edges(n, self.kind.dual, mirrored)

    def is_closed(self) -> bool:
        """Check the staircase closure property of this kind."""
        if self.kind is EdgeSetKind.FORCED:
            return _forced_frontier_closed(self.frontier)
        n = self.n
        rows: List[Optional[int]] = [None] * n
        for e in self:
            i, j = n + 1 - e.j, n + 1 - e.i
            rows[i - 1] = j if rows[i - 1] is None else max(rows[i - 1], j)
        return _forced_frontier_closed(tuple(rows))

    def to_list(self) -> List[List[int]]:
        return [[e.i, e.j] for e in self]


def _forced_frontier_closed(frontier: Sequence[Optional[int]]) -> bool:
    # Downward closure holds iff the non-empty rows form a prefix and the
    # frontier does not increase along it.
    previous: Optional[int] = None
    ended = False
    for bound in frontier:
        if bound is None:
            ended = True
            continue
        if ended:
            return False
        if previous is not None and bound > previous:
            return False
        previous = bound
    return True


# --- probes -------------------------------------------------------------

def _require_graphic(s: IntSequenceLike) -> None:
    if not is_graphic(s):
        raise NotGraphicError(f"Sequence {format_sequence(_values(s))} is not graphic.")


def _check_pair(n: int, i: int, j: int) -> None:
    _check_label(i, n)
    _check_label(j, n)
    if i == j:
        raise InvalidEdgeError(f"Endpoints must differ, got ({i},{j}).")


def _probe(values: Sequence[int], i: int, j: int, delta: int) -> bool:
    """True iff shifting entries i and j by ``delta`` leaves a non-graphic sequence."""
    shifted = list(values)
    shifted[i - 1] += delta
    shifted[j - 1] += delta
    return not is_graphic(shifted)


def _as_degree_sequence(a: IntSequenceLike) -> DegreeSequence:
    if isinstance(a, DegreeSequence):
        return a
    return DegreeSequence(_values(a))


def is_forced(a: IntSequenceLike, i: int, j: int) -> bool:
    """
    Whether edge (i,j) is in every labeled realization of ``a``.

    Works on unsorted labeled sequences too; the probe is label based.

    Raises:
        NotGraphicError: If ``a`` is not graphic.
        IndexOutOfRangeError: If a label is outside 1..n.
    """
    values = _values(a)
    _check_pair(len(values), i, j)
    _require_graphic(values)
    return _probe(values, i, j, +1)


def is_forbidden(a: IntSequenceLike, i: int, j: int) -> bool:
    """Whether edge (i,j) is absent from every labeled realization of ``a``."""
    values = _values(a)
    _check_pair(len(values), i, j)
    _require_graphic(values)
    return _probe(values, i, j, -1)


def has_forced_edges(a: IntSequenceLike) -> bool:
    """Single probe on the corner edge (1,2) of the sorted sequence."""
    seq = _as_degree_sequence(a)
    _require_graphic(seq)
    return seq.n >= 2 and _probe(seq.values, 1, 2, +1)


def has_forbidden_edges(a: IntSequenceLike) -> bool:
    """Single probe on the corner edge (n-1,n) of the sorted sequence."""
    seq = _as_degree_sequence(a)
    _require_graphic(seq)
    return seq.n >= 2 and _probe(seq.values, seq.n - 1, seq.n, -1)


# --- staircase walks ----------------------------------------------------

def forced_set(a: IntSequenceLike) -> StaircaseEdgeSet:
    """
    F(a) by a two-pointer frontier walk.

    Row i scans downward from the previous row's frontier until a forced
    edge is found; an empty row ends the walk. At most about 2n probes.
    """
    seq = _as_degree_sequence(a)
    _require_graphic(seq)
    values = seq.values
    n = seq.n
    frontier: List[Optional[int]] = [None] * n
    j = n
    for i in range(1, n):
        if j <= i:
            break
        while j > i and not _probe(values, i, j, +1):
            j -= 1
        if j == i:
            break
        frontier[i - 1] = j
    return StaircaseEdgeSet(n, EdgeSetKind.FORCED, tuple(frontier))


def forbidden_set(a: IntSequenceLike) -> StaircaseEdgeSet:
    """
    B(a) by an upward frontier walk from the bottom-right corner (n-1,n).

    Row i starts where row i+1 ended, or at i+1 when row i+1 reached its
    diagonal; an empty row ends the walk.
    """
    seq = _as_degree_sequence(a)
    _require_graphic(seq)
    values = seq.values
    n = seq.n
    frontier: List[Optional[int]] = [None] * n
    previous: Optional[int] = None
    for i in range(n - 1, 0, -1):
        j = i + 1 if previous is None or previous <= i + 2 else previous
        while j <= n and not _probe(values, i, j, -1):
            j += 1
        if j > n:
            break
        frontier[i - 1] = j
        previous = j
    return StaircaseEdgeSet(n, EdgeSetKind.FORBIDDEN, tuple(frontier))


def forbidden_set_via_complement(a: IntSequenceLike) -> StaircaseEdgeSet:
    """B(a) as the forced set of the complement, relabeled by v -> n+1-v."""
    seq = _as_degree_sequence(a)
    _require_graphic(seq)
    return forced_set(complement(seq)).mirrored()


def forced_vertices(a: IntSequenceLike) -> FrozenSet[int]:
    return forced_set(a).vertices()


def find_threshold_obstruction(edges: Iterable[EdgeLike]) -> Optional[Tuple[int, int, int, int]]:
    """
    Return four vertices inducing 2K2, P4 or C4 in the graph formed by
    ``edges``, or None when the graph is threshold.
    """
    adjacency: Dict[int, set] = {}
    for raw in edges:
        e = _as_edge(raw)
        adjacency.setdefault(e.i, set()).add(e.j)
        adjacency.setdefault(e.j, set()).add(e.i)
    for quad in itertools.combinations(sorted(adjacency), 4):
        degrees = sorted(len(adjacency[v] & set(quad)) for v in quad)
        # 2K2: [1,1,1,1]; P4: [1,1,2,2]; C4: [2,2,2,2]
        if degrees in ([1, 1, 1, 1], [1, 1, 2, 2], [2, 2, 2, 2]):
            return quad
    return None


def forced_graph_is_threshold(a: IntSequenceLike) -> bool:
    """Whether the graph (P(a), F(a)) has no induced 2K2, P4 or C4."""
    return find_threshold_obstruction(forced_set(a)) is None


def is_threshold_sequence(a: IntSequenceLike) -> bool:
    """Exactly one labeled realization, i.e. every edge of it is forced."""
    seq = _as_degree_sequence(a)
    return len(forced_set(seq)) == edge_count(seq)


def bound_excludes_forced(a: IntSequenceLike) -> bool:
    """
    Sufficient condition for an empty forced set:
    ``n >= min((a1 + an + 2)^2 / (4 an), (a1 + an)^2 / (2 an))``,
    evaluated with exact fractions.

    Only applies when ``a1 < n - 1``: a vertex adjacent to every other vertex
    always has forced edges, so the result is False there.

    Raises:
        NotGraphicError: If ``a`` is not graphic.
        MinDegreeZeroError: If the minimum degree is 0.
    """
    seq = _as_degree_sequence(a)
    _require_graphic(seq)
    top, bottom = seq.max_degree, seq.min_degree
    if bottom == 0:
        raise MinDegreeZeroError(
            f"Bound needs a positive minimum degree, got {format_sequence(seq.values)}."
        )
    if top >= seq.n - 1:
        return False
    threshold = min(
        Fraction((top + bottom + 2) ** 2, 4 * bottom),
        Fraction((top + bottom) ** 2, 2 * bottom),
    )
    return seq.n >= threshold


def check_monotonicity(a: IntSequenceLike, b: IntSequenceLike) -> bool:
    """
    For ``a`` majorizing ``b``: whether F(a) contains F(b) and B(a) contains B(b).

    Raises:
        NotComparableError: If ``a`` does not majorize ``b``.
    """
    left, right = _as_degree_sequence(a), _as_degree_sequence(b)
    relation = majorizes(left, right)
    if not relation.left_dominates:
        raise NotComparableError(
            f"{format_sequence(left.values)} does not majorize "
            f"{format_sequence(right.values)} ({relation.value})."
        )
    return (forced_set(left).edge_set() >= forced_set(right).edge_set()
            and forbidden_set(left).edge_set() >= forbidden_set(right).edge_set())


def max_forced_clique_size(a: IntSequenceLike) -> int:
    """
    Largest c with (c-1, c) forced; vertices 1..c then form a forced clique.
    Returns 1 when nothing is forced.
    """
    return _clique_from_staircase(forced_set(a))


def _clique_from_staircase(forced: StaircaseEdgeSet) -> int:
    size = 1
    for c in range(2, forced.n + 1):
        if Edge(c - 1, c) not in forced:
            break
        size = c
    return size


def labeled_forced_edges(s: IntSequenceLike) -> List[Edge]:
    """
    Forced edges of an unsorted labeled sequence, in its own labels.

    The staircase is computed on the sorted copy and mapped back through the
    sorting permutation; equal degrees behave identically, so tie order does
    not matter.
    """
    labeled = s if isinstance(s, LabeledIntSequence) else LabeledIntSequence(_values(s))
    _require_graphic(labeled)
    permutation = labeled.sorted_permutation()
    forced = forced_set(DegreeSequence(labeled.sorted_values()))
    return sorted(Edge.of(permutation[e.i - 1], permutation[e.j - 1]) for e in forced)


def packing_obstruction(a: IntSequenceLike, b: IntSequenceLike) -> Optional[Edge]:
    """
    Smallest edge forced in both labeled sequences, or None.

    A returned edge proves the two sequences cannot pack; None proves nothing.

    Raises:
        LengthMismatchError: If the sequences differ in length.
        NotGraphicError: If either sequence is not graphic.
    """
    left, right = _values(a), _values(b)
    if len(left) != len(right):
        raise LengthMismatchError(f"Cannot pack sequences of lengths {len(left)} and {len(right)}.")
    shared = set(labeled_forced_edges(left)) & set(labeled_forced_edges(right))
    return min(shared) if shared else None


def induced_forced_persists(g: LabeledGraph, i: int, j: int, s: Iterable[int]) -> bool:
    """
    Whether the forced edge (i,j) of deg(g) stays forced in deg(g[s]).

    Raises:
        PreconditionViolatedError: If (i,j) is not forced in deg(g) or
            {i,j} is not inside s, or s is not inside the vertex set.
    """
    subset = sorted(set(s))
    degrees = g.degrees()
    _check_pair(g.n, i, j)
    if not is_forced(degrees, i, j):
        raise PreconditionViolatedError(f"Edge ({i},{j}) is not forced in {degrees}.")
    if i not in subset or j not in subset or not set(subset) <= set(g.vertices()):
        raise PreconditionViolatedError(
            f"Vertex set {subset} must contain {i} and {j} and lie inside 1..{g.n}."
        )

    members = set(subset)
    local = LabeledIntSequence(tuple(len(g.neighbor_set(v) & members) for v in subset))
    return is_forced(local, subset.index(i) + 1, subset.index(j) + 1)


# --- report -------------------------------------------------------------

@dataclass(frozen=True)
class AnalysisReport:
    """
    Forced/forbidden structure of one sequence.

    ``bound_says_no_forced`` is None when the minimum degree is 0 (the bound
    does not apply).
    """
    sequence: DegreeSequence
    forced: StaircaseEdgeSet
    forbidden: StaircaseEdgeSet
    forced_vertices: FrozenSet[int]
    is_threshold_sequence: bool
    max_forced_clique: int
    bound_says_no_forced: Optional[bool]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'sequence': list(self.sequence.values),
            'forced_edges': self.forced.to_list(),
            'forbidden_edges': self.forbidden.to_list(),
            'forced_vertices': sorted(self.forced_vertices),
            'is_threshold': self.is_threshold_sequence,
            'max_forced_clique': self.max_forced_clique,
            'bound_excludes_forced': self.bound_says_no_forced,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AnalysisReport":
        sequence = DegreeSequence(tuple(data['sequence']))
        n = sequence.n
        return cls(
            sequence=sequence,
            forced=StaircaseEdgeSet.from_edges(n, EdgeSetKind.FORCED,
                                               (tuple(e) for e in data['forced_edges'])),
            forbidden=StaircaseEdgeSet.from_edges(n, EdgeSetKind.FORBIDDEN,
                                                  (tuple(e) for e in data['forbidden_edges'])),
            forced_vertices=frozenset(int(v) for v in data['forced_vertices']),
            is_threshold_sequence=bool(data['is_threshold']),
            max_forced_clique=int(data['max_forced_clique']),
            bound_says_no_forced=data['bound_excludes_forced'],
        )

    def to_text(self) -> str:
        def edges_text(edges: StaircaseEdgeSet) -> str:
            return ",".join(str(e) for e in edges) or "(none)"

        def flag(value: Optional[bool]) -> str:
            return "n/a" if value is None else str(value).lower()

        return "\n".join([
            f"sequence: {self.sequence}",
            f"forced: {edges_text(self.forced)}",
            f"forbidden: {edges_text(self.forbidden)}",
            f"forced vertices: {format_sequence(sorted(self.forced_vertices)) or '(none)'}",
            f"threshold: {flag(self.is_threshold_sequence)}",
            f"max forced clique: {self.max_forced_clique}",
            f"bound excludes forced: {flag(self.bound_says_no_forced)}",
        ])


def analyze(a: IntSequenceLike) -> AnalysisReport:
    """Compute every per-sequence quantity in one pass over the staircases."""
    seq = _as_degree_sequence(a)
    forced = forced_set(seq)
    forbidden = forbidden_set(seq)
    return AnalysisReport(
        sequence=seq,
        forced=forced,
        forbidden=forbidden,
        forced_vertices=forced.vertices(),
        is_threshold_sequence=len(forced) == edge_count(seq),
        max_forced_clique=_clique_from_staircase(forced),
        bound_says_no_forced=bound_excludes_forced(seq) if seq.min_degree > 0 else None,
    )
