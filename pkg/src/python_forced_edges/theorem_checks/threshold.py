"""
Threshold and counting checks: the forced graph is threshold, a threshold
sequence has exactly one realization, and the degree bound really excludes
forced edges.
"""
from __future__ import annotations

from ..forced_sets import bound_excludes_forced, find_threshold_obstruction, is_threshold_sequence
from ..oracle import CheckOutcome
from .base import SequenceContext, TheoremCheck, describe_edges


class ThresholdStructureCheck(TheoremCheck):

    @property
    def name(self) -> str:
        return "threshold-structure"

    @property
    def description(self) -> str:
        return "(P(a), F(a)) has no induced 2K2, P4 or C4"

    def run(self, context: SequenceContext) -> CheckOutcome:
        quad = find_threshold_obstruction(context.forced)
        if quad is not None:
            return self.failed(context, f"vertices {quad} induce a non-threshold subgraph of "
                                        f"F={describe_edges(context.forced)}")
        return self.passed()


class ThresholdSequenceCheck(TheoremCheck):

    @property
    def name(self) -> str:
        return "threshold-sequence"

    @property
    def description(self) -> str:
        return "|F| = m exactly when there is one labeled realization"

    def run(self, context: SequenceContext) -> CheckOutcome:
        unique = len(context.realizations) == 1
        if is_threshold_sequence(context.sequence) != unique:
            return self.failed(
                context, f"|F|={len(context.forced)} but {len(context.realizations)} realizations"
            )
        return self.passed()


class BoundCheck(TheoremCheck):

    @property
    def name(self) -> str:
        return "bound"

    @property
    def description(self) -> str:
        return "the (a1, an, n) bound implies an empty forced set"

    def run(self, context: SequenceContext) -> CheckOutcome:
        if context.sequence.min_degree == 0:
            return self.skipped("minimum degree is 0")
        if context.sequence.max_degree == context.n - 1:
            return self.skipped("a1 = n-1")
        if not bound_excludes_forced(context.sequence):
            return self.skipped("bound does not apply")
        if context.forced:
            return self.failed(context, f"bound holds but F={describe_edges(context.forced)}")
        return self.passed()
