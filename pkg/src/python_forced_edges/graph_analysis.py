"""
Structural measurements on realizations.

Diameter and edge connectivity are the quantities bounded by the forced-edge
theorems; the independence and clique validators check the local structure
a forced or forbidden edge imposes on every realization.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple, Union

from .errors import EmptySubsetError, IndexOutOfRangeError, PreconditionViolatedError
from .forced_sets import is_forbidden, is_forced
from .labeled_graph import Edge, LabeledGraph
from .seq_core import LabeledIntSequence

Distance = Union[int, float]


@dataclass(frozen=True)
class CutResult:
    """
    Edge connectivity with a minimum cut as witness.

    Attributes:
        lambda_: Edge connectivity λ(G); 0 for disconnected graphs.
        witness_cut: Edges crossing the cut; removing them disconnects G.
        source_side: Vertices on the side of vertex 1.
    """
    lambda_: int
    witness_cut: FrozenSet[Edge]
    source_side: FrozenSet[int]


@dataclass(frozen=True)
class InducedSubgraph:
    """
    G[S] relabeled to 1..k.

    Attributes:
        graph: The subgraph on local labels 1..k.
        labels: ``labels[local - 1]`` is the original label of ``local``.
    """
    graph: LabeledGraph
    labels: Tuple[int, ...]

    def original(self, local: int) -> int:
        return self.labels[local - 1]

    def local(self, original: int) -> int:
        try:
            return self.labels.index(original) + 1
        except ValueError:
            raise IndexOutOfRangeError(f"Vertex {original} is not in the induced subgraph.") from None

    def degrees(self) -> LabeledIntSequence:
        """Degrees in local label order (original labels ascending)."""
        return self.graph.degrees()

    def original_edges(self) -> List[Edge]:
        return sorted(Edge.of(self.original(e.i), self.original(e.j)) for e in self.graph.edges())


def induced_subgraph(g: LabeledGraph, s: Iterable[int]) -> InducedSubgraph:
    """
    Raises:
        EmptySubsetError: If ``s`` is empty.
        IndexOutOfRangeError: If ``s`` holds a label outside 1..n.
    """
    labels = tuple(sorted(set(s)))
    if not labels:
        raise EmptySubsetError("Induced subgraph needs at least one vertex.")
    for v in labels:
        if not 1 <= v <= g.n:
            raise IndexOutOfRangeError(f"Vertex {v} is outside 1..{g.n}.")
    position = {v: k for k, v in enumerate(labels, start=1)}
    edges = [(position[e.i], position[e.j]) for e in g.edges() if e.i in position and e.j in position]
    return InducedSubgraph(LabeledGraph.from_edges(len(labels), edges), labels)


def _bfs_distances(g: LabeledGraph, source: int) -> Dict[int, int]:
    distances = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbor_set(v):
            if u not in distances:
                distances[u] = distances[v] + 1
                queue.append(u)
    return distances


def is_connected(g: LabeledGraph) -> bool:
    return len(_bfs_distances(g, 1)) == g.n


def diameter(g: LabeledGraph) -> Distance:
    """Largest shortest-path distance; ``math.inf`` when disconnected."""
    longest = 0
    for v in g.vertices():
        distances = _bfs_distances(g, v)
        if len(distances) < g.n:
            return math.inf
        longest = max(longest, max(distances.values()))
    return longest


def _max_flow(g: LabeledGraph, source: int, sink: int) -> Tuple[int, Set[int]]:
    """
    Unit-capacity max flow by shortest augmenting paths.

    Returns the flow value and the vertices reachable from ``source`` in the
    final residual network (the source side of a minimum cut).
    """
    capacity: Dict[Tuple[int, int], int] = {}
    for e in g.edges():
        capacity[(e.i, e.j)] = 1
        capacity[(e.j, e.i)] = 1

    def augmenting_path() -> Tuple[Optional[Dict[int, int]], Set[int]]:
        parent = {source: source}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in g.neighbor_set(v):
                if u not in parent and capacity[(v, u)] > 0:
                    parent[u] = v
                    if u == sink:
                        return parent, set(parent)
                    queue.append(u)
        return None, set(parent)

    flow = 0
    while True:
        parent, reached = augmenting_path()
        if parent is None:
            return flow, reached
        v = sink
        while v != source:
            u = parent[v]
            capacity[(u, v)] -= 1
            capacity[(v, u)] += 1
            v = u
        flow += 1


def edge_connectivity(g: LabeledGraph) -> CutResult:
    """
    λ(G) as the minimum over t of the max flow from vertex 1 to t.

    Raises:
        PreconditionViolatedError: If the graph has fewer than two vertices.
    """
    if g.n < 2:
        raise PreconditionViolatedError("Edge connectivity needs at least two vertices.")
    component = set(_bfs_distances(g, 1))
    if len(component) < g.n:
        return CutResult(0, frozenset(), frozenset(component))

    best: Optional[Tuple[int, Set[int]]] = None
    for t in range(2, g.n + 1):
        value, side = _max_flow(g, 1, t)
        if best is None or value < best[0]:
            best = (value, side)
    assert best is not None
    value, side = best
    cut = frozenset(e for e in g.edges() if (e.i in side) != (e.j in side))
    return CutResult(value, cut, frozenset(side))


def brute_force_edge_connectivity(g: LabeledGraph) -> int:
    """Smallest number of edges whose removal disconnects g, by exhaustive search."""
    if g.n < 2:
        raise PreconditionViolatedError("Edge connectivity needs at least two vertices.")
    edges = g.edges()
    for size in range(len(edges) + 1):
        for removed in itertools.combinations(edges, size):
            if not is_connected(g.replace_edges(removed, ())):
                return size
    return len(edges)


def is_maximally_edge_connected(g: LabeledGraph) -> bool:
    """λ(G) equals the minimum degree."""
    return edge_connectivity(g).lambda_ == min(g.degrees())


def is_independent_set(g: LabeledGraph, s: Iterable[int]) -> bool:
    members = sorted(set(s))
    return not any(g.has_edge(u, v) for u, v in itertools.combinations(members, 2))


def is_clique(g: LabeledGraph, s: Iterable[int]) -> bool:
    members = sorted(set(s))
    return all(g.has_edge(u, v) for u, v in itertools.combinations(members, 2))


def check_forced_independence(g: LabeledGraph, i: int, j: int) -> bool:
    """
    Whether V - (N(i) ∪ N(j)) is independent.

    Raises:
        PreconditionViolatedError: If (i,j) is not forced in deg(g).
    """
    if not is_forced(g.degrees(), i, j):
        raise PreconditionViolatedError(f"Edge ({i},{j}) is not forced in {g.degrees()}.")
    rest = set(g.vertices()) - g.neighbor_set(i) - g.neighbor_set(j)
    return is_independent_set(g, rest)


def check_forbidden_clique(g: LabeledGraph, i: int, j: int) -> bool:
    """
    Whether N(i) ∪ N(j) is a clique.

    Usually True under the preconditions, but not always: both realizations
    of 5,5,4,3,3,1,1 return False for (3,6).

    Raises:
        PreconditionViolatedError: If (i,j) is not forbidden in deg(g), or the
            maximum degree is n-1, or the minimum degree is 0.
    """
    degrees = g.degrees()
    if not is_forbidden(degrees, i, j):
        raise PreconditionViolatedError(f"Edge ({i},{j}) is not forbidden in {degrees}.")
    if max(degrees) >= g.n - 1 or min(degrees) == 0:
        raise PreconditionViolatedError(
            f"Clique property needs max degree < {g.n - 1} and min degree > 0, got {degrees}."
        )
    return is_clique(g, g.neighbor_set(i) | g.neighbor_set(j))
