"""
Checks relating forced/forbidden edges to the structure of every realization.
"""
from __future__ import annotations

import itertools

from ..forced_sets import induced_forced_persists, max_forced_clique_size
from ..graph_analysis import check_forbidden_clique, check_forced_independence
from ..oracle import CheckOutcome
from ..realize import realize_saturating
from .base import SequenceContext, TheoremCheck


class InducedPersistenceCheck(TheoremCheck):
    """A forced edge stays forced in every induced subgraph containing it."""

    @property
    def name(self) -> str:
        return "induced-persistence"

    def run(self, context: SequenceContext) -> CheckOutcome:
        limit = int(context.settings['induced_persistence_max_n'])
        if context.n > limit:
            return self.skipped(f"n={context.n} above induced_persistence_max_n={limit}")
        if not context.forced:
            return self.skipped("no forced edges")
        for g in context.realizations:
            for e in context.forced:
                others = [v for v in g.vertices() if v not in (e.i, e.j)]
                for size in range(len(others) + 1):
                    for extra in itertools.combinations(others, size):
                        subset = (e.i, e.j) + extra
                        if not induced_forced_persists(g, e.i, e.j, subset):
                            return self.failed(context, f"{e} not forced in G[{sorted(subset)}]", g)
        return self.passed()


class ForcedIndependenceCheck(TheoremCheck):
    """V - (N(i) ∪ N(j)) is independent for every forced (i,j)."""

    @property
    def name(self) -> str:
        return "forced-independence"

    def run(self, context: SequenceContext) -> CheckOutcome:
        if not context.forced:
            return self.skipped("no forced edges")
        for g in context.realizations:
            for e in context.forced:
                if not check_forced_independence(g, e.i, e.j):
                    return self.failed(context, f"V - (N({e.i}) ∪ N({e.j})) is not independent", g)
        return self.passed()


class ForbiddenCliqueCheck(TheoremCheck):
    """
    N(i) ∪ N(j) is a clique for every forbidden (i,j), when a1 < n-1 and an > 0.

    The statement does not hold for 5,5,4,3,3,1,1: (3,6) is forbidden but
    N(3) ∪ N(6) = {1,2,4,5} misses (4,5) in both realizations.
    """

    known_exceptions = frozenset({(5, 5, 4, 3, 3, 1, 1)})

    @property
    def name(self) -> str:
        return "forbidden-clique"

    def run(self, context: SequenceContext) -> CheckOutcome:
        seq = context.sequence
        if seq.max_degree >= context.n - 1 or seq.min_degree == 0:
            return self.skipped("needs a1 < n-1 and an > 0")
        if not context.forbidden:
            return self.skipped("no forbidden edges")
        for g in context.realizations:
            for e in context.forbidden:
                if not check_forbidden_clique(g, e.i, e.j):
                    return self.failed(context, f"N({e.i}) ∪ N({e.j}) is not a clique", g)
        return self.passed()


class ForcedCliqueCheck(TheoremCheck):
    """
    Forbidden (i,j) with an > 0 and a1 < n-1 gives a forced clique of a_i
    vertices; a1 < n-2 with F nonempty gives one of an vertices.

    Both parts rest on the forbidden-clique structure, so a1 = n-1 is
    skipped: 5,4,2,2,2,1 has (2,6) forbidden and no forced K4.
    """

    @property
    def name(self) -> str:
        return "forced-clique"

    def run(self, context: SequenceContext) -> CheckOutcome:
        seq = context.sequence
        clique = max_forced_clique_size(seq)
        applied = False

        if seq.min_degree > 0 and seq.max_degree < context.n - 1 and context.forbidden:
            applied = True
            for e in context.forbidden:
                if clique < seq.at(e.i):
                    return self.failed(context, f"forbidden {e} needs a forced clique of {seq.at(e.i)}, "
                                                f"largest is {clique}")
                saturated = realize_saturating(seq, e.i)
                if saturated.degrees().values != seq.values:
                    return self.failed(
                        context, f"saturating realization at {e.i} has wrong degrees", saturated
                    )

        if seq.max_degree < context.n - 2 and context.forced:
            applied = True
            if clique < seq.min_degree:
                return self.failed(context, f"F nonempty needs a forced clique of {seq.min_degree}, "
                                            f"largest is {clique}")

        return self.passed() if applied else self.skipped("hypotheses not met")
