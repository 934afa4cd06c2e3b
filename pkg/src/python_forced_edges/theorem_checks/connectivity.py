"""
Diameter and edge-connectivity checks for sequences with forced or forbidden edges.
"""
from __future__ import annotations

from ..graph_analysis import diameter, edge_connectivity
from ..oracle import CheckOutcome
from .base import SequenceContext, TheoremCheck


def _hypotheses_hold(context: SequenceContext) -> bool:
    return context.sequence.min_degree >= 1 and bool(context.forced or context.forbidden)


class DiameterCheck(TheoremCheck):
    """diam(G) <= 3 for every realization when an >= 1 and F or B is nonempty."""

    @property
    def name(self) -> str:
        return "diameter"

    def run(self, context: SequenceContext) -> CheckOutcome:
        if not _hypotheses_hold(context):
            return self.skipped("needs an >= 1 and a forced or forbidden edge")
        for g in context.realizations:
            d = diameter(g)
            if d > 3:
                return self.failed(context, f"diameter {d}", g)
        return self.passed()


class EdgeConnectivityCheck(TheoremCheck):
    """
    λ(G) = an under the diameter hypotheses. On every sequence also checks
    λ(G) <= an, and λ(G) = an whenever diam(G) <= 2.
    """

    @property
    def name(self) -> str:
        return "edge-connectivity"

    def run(self, context: SequenceContext) -> CheckOutcome:
        if context.n < 2:
            return self.skipped("needs two vertices")
        minimum = context.sequence.min_degree
        theorem = _hypotheses_hold(context)
        for g in context.realizations:
            cut = edge_connectivity(g)
            if cut.lambda_ > minimum:
                return self.failed(context, f"λ={cut.lambda_} exceeds minimum degree {minimum}", g)
            if theorem and cut.lambda_ != minimum:
                return self.failed(context, f"λ={cut.lambda_} != an={minimum}; cut "
                                            f"{','.join(str(e) for e in sorted(cut.witness_cut))}", g)
            if cut.lambda_ != minimum and diameter(g) <= 2:
                return self.failed(context, f"diameter <= 2 but λ={cut.lambda_} != an={minimum}", g)
        return self.passed()
