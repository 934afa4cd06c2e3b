"""
Constructing and sampling labeled realizations.

- realize / realize_saturating: deterministic Kleitman–Wang constructions.
- mcmc_walk / mcmc_sample: 2-switch random walk that never proposes removing
  a forced edge.
- sis_sample: sequential construction that only picks partners whose
  selection keeps the residual sequence graphic.

All randomized functions take an explicit seed and are reproducible for a
given (sequence, seed).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Literal, Sequence, Tuple

from .errors import ForcedEdgesError, InvalidSwitchError, NotGraphicError, SamplerDeadEndError
from .forced_sets import labeled_forced_edges
from .labeled_graph import Edge, EdgeLike, LabeledGraph, _as_edge
from .seq_core import IntSequenceLike, _check_label, _values, format_sequence, is_graphic

Weighting = Literal["uniform", "degree"]
SAMPLE_METHODS = ("mcmc", "sis")


@dataclass(frozen=True)
class TwoSwitch:
    """
    Replace two disjoint edges by the other two edges on the same four vertices.

    Attributes:
        remove: The edges to delete, e.g. ((i,k), (j,l)).
        add: The edges to insert, e.g. ((i,j), (k,l)).
    """
    remove: Tuple[Edge, Edge]
    add: Tuple[Edge, Edge]

    @classmethod
    def of(cls, remove: Iterable[EdgeLike], add: Iterable[EdgeLike]) -> "TwoSwitch":
        removed = tuple(_as_edge(e) for e in remove)
        added = tuple(_as_edge(e) for e in add)
        if len(removed) != 2 or len(added) != 2:
            raise InvalidSwitchError("A 2-switch removes exactly two edges and adds exactly two.")
        return cls((removed[0], removed[1]), (added[0], added[1]))

    def vertices(self) -> Tuple[int, ...]:
        return tuple(v for e in self.remove for v in e)


def _require_graphic(values: Sequence[int]) -> None:
    if not is_graphic(values):
        raise NotGraphicError(f"Sequence {format_sequence(values)} is not graphic.")


def _lay_off_in_order(values: Sequence[int], order: Sequence[int]) -> LabeledGraph:
    """Kleitman–Wang: connect each vertex of ``order`` to the largest residuals."""
    n = len(values)
    residual = list(values)
    edges: List[Edge] = []
    for v in order:
        demand = residual[v - 1]
        if demand == 0:
            continue
        residual[v - 1] = 0
        partners = sorted((u for u in range(1, n + 1) if u != v),
                          key=lambda u: (-residual[u - 1], u))[:demand]
        if len(partners) < demand or residual[partners[-1] - 1] <= 0:
            raise NotGraphicError(f"Sequence {format_sequence(values)} is not graphic.")
        for u in partners:
            residual[u - 1] -= 1
            edges.append(Edge.of(v, u))
    return LabeledGraph.from_edges(n, edges)


def realize(a: IntSequenceLike) -> LabeledGraph:
    """
    Deterministic realization: vertices are laid off in label order, each
    joined to the currently largest residual degrees (ties to smaller label).

    Raises:
        NotGraphicError: If ``a`` is not graphic.
    """
    values = _values(a)
    _require_graphic(values)
    return _lay_off_in_order(values, range(1, len(values) + 1))


def realize_saturating(a: IntSequenceLike, i: int) -> LabeledGraph:
    """
    Realization in which vertex ``i`` is joined to the ``a_i`` highest-degree
    other vertices (ties to smaller label); the rest follow in label order.
    """
    values = _values(a)
    _check_label(i, len(values))
    _require_graphic(values)
    order = [i] + [v for v in range(1, len(values) + 1) if v != i]
    return _lay_off_in_order(values, order)


def apply_two_switch(g: LabeledGraph, sw: TwoSwitch) -> LabeledGraph:
    """
    Raises:
        InvalidSwitchError: If a removed edge is missing, an added edge
            already exists, or the four endpoints are not distinct.
    """
    vertices = sw.vertices()
    if len(set(vertices)) != 4:
        raise InvalidSwitchError(f"Switch {sw.remove[0]},{sw.remove[1]} needs four distinct vertices.")
    added_vertices = [v for e in sw.add for v in e]
    if sorted(added_vertices) != sorted(vertices) or set(sw.add) == set(sw.remove):
        raise InvalidSwitchError(
            f"Added edges {sw.add[0]},{sw.add[1]} must pair up the removed endpoints differently."
        )
    for e in sw.remove:
        if e.j > g.n or not g.has_edge(e.i, e.j):
            raise InvalidSwitchError(f"Edge {e} is not in the graph.")
    for e in sw.add:
        if e.j > g.n or g.has_edge(e.i, e.j):
            raise InvalidSwitchError(f"Edge {e} is already in the graph.")
    return g.replace_edges(sw.remove, sw.add)


def mcmc_walk(a: IntSequenceLike, steps: int, seed: int = 0) -> Iterator[LabeledGraph]:
    """
    Lazy 2-switch chain started at realize(a).

    Each of the ``steps`` rounds draws an ordered pair of distinct non-forced
    edges and a fair coin choosing one of the two rewirings; an invalid
    proposal is a wasted round. Yields the start state and every state
    reached by an accepted switch.

    Not certified to sample uniformly.
    """
    if steps < 0:
        raise ForcedEdgesError(f"steps must be >= 0, got {steps}.")
    values = _values(a)
    graph = realize(values)
    yield graph

    forced = set(labeled_forced_edges(values))
    pool = [e for e in graph.edges() if e not in forced]
    if len(pool) < 2:
        return

    rng = random.Random(seed)
    for _ in range(steps):
        x, y = rng.sample(range(len(pool)), 2)
        first, second = pool[x], pool[y]
        if rng.getrandbits(1):
            pairs = ((first.i, second.i), (first.j, second.j))
        else:
            pairs = ((first.i, second.j), (first.j, second.i))
        if len({first.i, first.j, second.i, second.j}) < 4:
            continue
        if any(graph.has_edge(u, v) for u, v in pairs):
            continue
        added = (Edge.of(*pairs[0]), Edge.of(*pairs[1]))
        graph = apply_two_switch(graph, TwoSwitch((first, second), added))
        # new edges were absent, so they cannot be forced
        pool[x], pool[y] = added
        yield graph


def mcmc_sample(a: IntSequenceLike, steps: int, seed: int = 0) -> LabeledGraph:
    state = None
    for state in mcmc_walk(a, steps, seed):
        pass
    assert state is not None
    return state


def sis_sample(a: IntSequenceLike, seed: int = 0, weighting: Weighting = "uniform") -> LabeledGraph:
    """
    Sequential construction guided by the forbidden-edge test.

    The least-labeled vertex of minimum positive residual degree is filled
    completely before moving on; each partner is drawn among the non-adjacent
    vertices j with positive residual for which decrementing {i,j} keeps the
    residual graphic. ``weighting="degree"`` draws proportionally to residual
    degree instead of uniformly.

    Raises:
        NotGraphicError: If ``a`` is not graphic.
        SamplerDeadEndError: If no admissible partner exists.
    """
    if weighting not in ("uniform", "degree"):
        raise ForcedEdgesError(f"Unknown weighting '{weighting}'. Available: uniform, degree")
    values = _values(a)
    _require_graphic(values)
    n = len(values)
    rng = random.Random(seed)
    residual = list(values)
    rows: List[set] = [set() for _ in range(n)]
    edges: List[Edge] = []

    while any(residual):
        i = min((v for v in range(1, n + 1) if residual[v - 1] > 0), key=lambda v: (residual[v - 1], v))
        while residual[i - 1] > 0:
            candidates = []
            for j in range(1, n + 1):
                if j == i or j in rows[i - 1] or residual[j - 1] <= 0:
                    continue
                residual[i - 1] -= 1
                residual[j - 1] -= 1
                if is_graphic(residual):
                    candidates.append(j)
                residual[i - 1] += 1
                residual[j - 1] += 1
            if not candidates:
                raise SamplerDeadEndError(
                    f"No admissible partner for vertex {i} while sampling {format_sequence(values)}."
                )
            if weighting == "degree":
                j = rng.choices(candidates, weights=[residual[c - 1] for c in candidates])[0]
            else:
                j = rng.choice(candidates)
            rows[i - 1].add(j)
            rows[j - 1].add(i)
            residual[i - 1] -= 1
            residual[j - 1] -= 1
            edges.append(Edge.of(i, j))

    return LabeledGraph.from_edges(n, edges)


__all__ = [
    'LabeledGraph',
    'Edge',
    'TwoSwitch',
    'SAMPLE_METHODS',
    'realize',
    'realize_saturating',
    'apply_two_switch',
    'mcmc_walk',
    'mcmc_sample',
    'sis_sample',
]
