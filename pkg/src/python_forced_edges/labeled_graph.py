"""
Simple undirected graphs on labeled vertices 1..n.

Realizations, induced subgraphs and sampler states are all LabeledGraph
values. They are immutable; every "modification" returns a new graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from .errors import ForcedEdgesError, IndexOutOfRangeError, InvalidEdgeError
from .seq_core import LabeledIntSequence


@dataclass(frozen=True, order=True)
class Edge:
    """
    Undirected edge in canonical form ``i < j``.

    Attributes:
        i: Smaller endpoint label.
        j: Larger endpoint label.
    """
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.i >= self.j:
            raise InvalidEdgeError(f"Edge ({self.i},{self.j}) must satisfy 1 <= i < j.")

    @classmethod
    def of(cls, u: int, v: int) -> "Edge":
        """Canonicalize an unordered pair."""
        if u == v:
            raise InvalidEdgeError(f"Self-loop at vertex {u} is not allowed.")
        return cls(u, v) if u < v else cls(v, u)

    def __iter__(self) -> Iterator[int]:
        yield self.i
        yield self.j

    def __str__(self) -> str:
        return f"({self.i},{self.j})"

    def other(self, v: int) -> int:
        return self.j if v == self.i else self.i


EdgeLike = Union[Edge, Tuple[int, int]]


def _as_edge(e: EdgeLike) -> Edge:
    if isinstance(e, Edge):
        return e
    u, v = e
    return Edge.of(int(u), int(v))


@dataclass(frozen=True)
class LabeledGraph:
    """
    Simple undirected graph stored as per-vertex neighbor sets.

    Attributes:
        n: Number of vertices (labels 1..n).
        adjacency: ``adjacency[v - 1]`` is the neighbor set of vertex ``v``.
    """
    n: int
    adjacency: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ForcedEdgesError("A graph needs at least one vertex.")
        if len(self.adjacency) != self.n:
            raise ForcedEdgesError(f"Adjacency has {len(self.adjacency)} rows for n={self.n}.")
        for v, neighbors in enumerate(self.adjacency, start=1):
            for u in neighbors:
                if u == v:
                    raise InvalidEdgeError(f"Self-loop at vertex {v}.")
                if not 1 <= u <= self.n:
                    raise IndexOutOfRangeError(f"Neighbor {u} of vertex {v} is outside 1..{self.n}.")
                if v not in self.adjacency[u - 1]:
                    raise ForcedEdgesError(f"Adjacency is not symmetric between {v} and {u}.")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[EdgeLike]) -> "LabeledGraph":
        """
        Build a graph from an edge collection.

        Raises:
            InvalidEdgeError: On self-loops or repeated edges.
            IndexOutOfRangeError: On labels outside 1..n.
        """
        rows: List[set] = [set() for _ in range(n)]
        for raw in edges:
            e = _as_edge(raw)
            if e.j > n:
                raise IndexOutOfRangeError(f"Edge {e} has a label outside 1..{n}.")
            if e.j in rows[e.i - 1]:
                raise InvalidEdgeError(f"Edge {e} appears twice; parallel edges are not allowed.")
            rows[e.i - 1].add(e.j)
            rows[e.j - 1].add(e.i)
        return cls(n, tuple(frozenset(r) for r in rows))

    @classmethod
    def empty(cls, n: int) -> "LabeledGraph":
        return cls(n, tuple(frozenset() for _ in range(n)))

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise IndexOutOfRangeError(f"Vertex {v} is outside 1..{self.n}.")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u - 1]

    def neighbor_set(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return self.adjacency[v - 1]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Sorted neighbors of ``v``."""
        return tuple(sorted(self.neighbor_set(v)))

    def degree(self, v: int) -> int:
        return len(self.neighbor_set(v))

    def degrees(self) -> LabeledIntSequence:
        """Labeled degree list, entry ``v`` is the degree of vertex ``v``."""
        return LabeledIntSequence(tuple(len(row) for row in self.adjacency))

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> List[Edge]:
        """All edges, lexicographically sorted."""
        return [Edge(v, u) for v in self.vertices() for u in sorted(self.adjacency[v - 1]) if u > v]

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges())

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def replace_edges(self, remove: Iterable[EdgeLike], add: Iterable[EdgeLike]) -> "LabeledGraph":
        """Return a copy with ``remove`` deleted and ``add`` inserted (no validation of degrees)."""
        rows = [set(row) for row in self.adjacency]
        for raw in remove:
            e = _as_edge(raw)
            rows[e.i - 1].discard(e.j)
            rows[e.j - 1].discard(e.i)
        for raw in add:
            e = _as_edge(raw)
            rows[e.i - 1].add(e.j)
            rows[e.j - 1].add(e.i)
        return LabeledGraph(self.n, tuple(frozenset(r) for r in rows))

    def complement(self) -> "LabeledGraph":
        everyone = set(self.vertices())
        return LabeledGraph(
            self.n,
            tuple(frozenset(everyone - row - {v}) for v, row in enumerate(self.adjacency, start=1)),
        )

    # --- serialization -------------------------------------------------

    def to_edge_list(self) -> str:
        """One "i j" pair per line, lexicographically sorted, 1-based labels."""
        return "\n".join(f"{e.i} {e.j}" for e in self.edges())

    @classmethod
    def from_edge_list(cls, text: str, n: Optional[int] = None) -> "LabeledGraph":
        """
        Parse the edge-list format. ``n`` defaults to the largest label seen,
        so isolated trailing vertices need an explicit ``n``.
        """
        pairs = []
        for line_number, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ForcedEdgesError(f"Line {line_number}: expected 'i j', got '{line}'.")
            pairs.append((int(parts[0]), int(parts[1])))
        if n is None:
            n = max((max(p) for p in pairs), default=1)
        return cls.from_edges(n, pairs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "adjacency": {str(v): list(self.neighbors(v)) for v in self.vertices()},
            "edges": [[e.i, e.j] for e in self.edges()],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LabeledGraph":
        n = int(data["n"])
        if "edges" in data:
            return cls.from_edges(n, (tuple(pair) for pair in data["edges"]))
        adjacency = data["adjacency"]
        rows = tuple(frozenset(int(u) for u in adjacency.get(str(v), [])) for v in range(1, n + 1))
        return cls(n, rows)

    def to_dot(
            self,
            name: str = "Realization",
            fontname: str = "Arial",
            highlight: Iterable[EdgeLike] = (),
            highlight_color: str = "#e53935",
    ) -> str:
        """
        Graphviz DOT rendering. Highlighted edges (typically the forced set)
        are drawn bold in ``highlight_color``.
        """
        marked = {_as_edge(e) for e in highlight}
        lines = [
            f'graph {name} {{',
            f'    graph [fontname="{fontname}"];',
            f'    node [shape=circle, style=filled, fillcolor="#e0e0e0", '
            f'fontname="{fontname}", fontsize=10];',
            '',
        ]
        for v in self.vertices():
            lines.append(f'    "{v}";')
        lines.append('')
        for e in self.edges():
            if e in marked:
                lines.append(
                    f'    "{e.i}" -- "{e.j}" '
                    f'[color="{highlight_color}", penwidth=2.0, class="forced"];'
                )
            else:
                lines.append(f'    "{e.i}" -- "{e.j}";')
        lines.append('}')
        return '\n'.join(lines)
