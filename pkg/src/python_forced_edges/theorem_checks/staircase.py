"""
Checks on the forced/forbidden staircases themselves.
"""
from __future__ import annotations

from ..forced_sets import (
    forbidden_set,
    forbidden_set_via_complement,
    has_forbidden_edges,
    has_forced_edges,
)
from ..labeled_graph import Edge
from ..oracle import CheckOutcome
from ..seq_core import complement
from .base import SequenceContext, TheoremCheck, describe_edges


class OracleEquivalenceCheck(TheoremCheck):
    """Staircase walks agree with intersection/union over all realizations."""

    @property
    def name(self) -> str:
        return "oracle-equivalence"

    @property
    def description(self) -> str:
        return "forced_set/forbidden_set equal the brute-force sets"

    def run(self, context: SequenceContext) -> CheckOutcome:
        forced, forbidden = context.forced.edge_set(), context.forbidden.edge_set()
        if forced != context.oracle_forced:
            return self.failed(context, f"staircase F={describe_edges(forced)} "
                                        f"oracle F={describe_edges(context.oracle_forced)}")
        if forbidden != context.oracle_forbidden:
            return self.failed(context, f"staircase B={describe_edges(forbidden)} "
                                        f"oracle B={describe_edges(context.oracle_forbidden)}")
        return self.passed()


class DualityCheck(TheoremCheck):
    """F(a) is B(complement a) mirrored, and both forbidden paths agree."""

    @property
    def name(self) -> str:
        return "duality"

    def run(self, context: SequenceContext) -> CheckOutcome:
        mirrored = forbidden_set(complement(context.sequence)).mirrored()
        if mirrored != context.forced:
            return self.failed(context, f"F={describe_edges(context.forced)} but mirrored "
                                        f"B(complement)={describe_edges(mirrored)}")
        via_complement = forbidden_set_via_complement(context.sequence)
        if via_complement != context.forbidden:
            return self.failed(context, f"B={describe_edges(context.forbidden)} but "
                                        f"via complement={describe_edges(via_complement)}")
        return self.passed()


class CornerRuleCheck(TheoremCheck):
    """Nonempty F contains (1,2); nonempty B contains (n-1,n)."""

    @property
    def name(self) -> str:
        return "corner-rule"

    def run(self, context: SequenceContext) -> CheckOutcome:
        n = context.n
        if n < 2:
            return self.skipped("no pairs")
        forced, forbidden = context.forced, context.forbidden
        probe_forced = has_forced_edges(context.sequence)
        if bool(forced) != (Edge(1, 2) in forced) or bool(forced) != probe_forced:
            return self.failed(context, f"F={describe_edges(forced)} disagrees with the (1,2) probe")
        probe_forbidden = has_forbidden_edges(context.sequence)
        if bool(forbidden) != (Edge(n - 1, n) in forbidden) or bool(forbidden) != probe_forbidden:
            return self.failed(
                context, f"B={describe_edges(forbidden)} disagrees with the ({n - 1},{n}) probe"
            )
        if not forced.is_closed() or not forbidden.is_closed():
            return self.failed(context, "staircase is not closed")
        return self.passed()


class EqualDegreeConsistencyCheck(TheoremCheck):
    """Equal degrees behave identically towards every third vertex."""

    @property
    def name(self) -> str:
        return "equal-degree-consistency"

    def run(self, context: SequenceContext) -> CheckOutcome:
        values, n = context.values, context.n
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if values[i - 1] != values[j - 1]:
                    continue
                for k in range(1, n + 1):
                    if k in (i, j):
                        continue
                    for label, edges in (("F", context.oracle_forced), ("B", context.oracle_forbidden)):
                        if (Edge.of(i, k) in edges) != (Edge.of(j, k) in edges):
                            return self.failed(
                                context,
                                f"vertices {i},{j} have equal degree but differ on {k} in {label}",
                            )
        return self.passed()
