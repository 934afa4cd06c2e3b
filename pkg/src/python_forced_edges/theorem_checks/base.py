"""
Base class for theorem checks.

A check inspects one graphic sequence (through a shared SequenceContext) and
reports passed, failed with a Counterexample, or skipped when the theorem's
hypotheses do not hold for that sequence.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from functools import cached_property
from typing import Any, FrozenSet, List, Mapping, Optional, Tuple

from ..forced_sets import StaircaseEdgeSet, forbidden_set, forced_set
from ..labeled_graph import Edge, LabeledGraph
from ..oracle import CheckOutcome, CheckStatus, Counterexample, enumerate_realizations
from ..seq_core import DegreeSequence

DEFAULT_SETTINGS = {
    'induced_persistence_max_n': 6,
}


class SequenceContext:
    """
    One sequence plus everything the checks share, computed on first use.

    Realizations are enumerated once and reused by every check that needs
    them.
    """

    def __init__(self, sequence: DegreeSequence, settings: Optional[Mapping[str, Any]] = None):
        self.sequence = sequence
        self.settings = {**DEFAULT_SETTINGS, **(settings or {})}

    @property
    def n(self) -> int:
        return self.sequence.n

    @property
    def values(self):
        return self.sequence.values

    @cached_property
    def realizations(self) -> List[LabeledGraph]:
        return list(enumerate_realizations(self.sequence))

    @cached_property
    def forced(self) -> StaircaseEdgeSet:
        return forced_set(self.sequence)

    @cached_property
    def forbidden(self) -> StaircaseEdgeSet:
        return forbidden_set(self.sequence)

    @cached_property
    def oracle_forced(self) -> FrozenSet[Edge]:
        common = set(self.realizations[0].edge_set())
        for g in self.realizations[1:]:
            common &= g.edge_set()
        return frozenset(common)

    @cached_property
    def oracle_forbidden(self) -> FrozenSet[Edge]:
        seen = set()
        for g in self.realizations:
            seen |= g.edge_set()
        everything = {Edge(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)}
        return frozenset(everything - seen)


class TheoremCheck(ABC):
    """
    Abstract base class for theorem checks.

    Subclasses implement ``name`` and ``run``; the helpers build outcomes.

    ``known_exceptions`` lists sequences on which the statement is known to
    be false. A failure on one of them is reported as KNOWN_EXCEPTION with
    its witness instead of FAILED.
    """

    known_exceptions: FrozenSet[Tuple[int, ...]] = frozenset()

    @property
    @abstractmethod
    def name(self) -> str:
        """Registry key, e.g. "diameter"."""
        pass

    @property
    def description(self) -> str:
        return ""

    @abstractmethod
    def run(self, context: SequenceContext) -> CheckOutcome:
        """
        Evaluate the check on one sequence.

        Returns:
            PASSED, SKIPPED (hypotheses not met) or FAILED with the first
            counterexample found.
        """
        pass

    def passed(self) -> CheckOutcome:
        return CheckOutcome(CheckStatus.PASSED)

    def skipped(self, reason: str) -> CheckOutcome:
        return CheckOutcome(CheckStatus.SKIPPED, reason=reason)

    def failed(self, context: SequenceContext, witness: str,
               realization: Optional[LabeledGraph] = None) -> CheckOutcome:
        edges = None if realization is None else tuple((e.i, e.j) for e in realization.edges())
        status = (CheckStatus.KNOWN_EXCEPTION if tuple(context.values) in self.known_exceptions
                  else CheckStatus.FAILED)
        return CheckOutcome(status, Counterexample(self.name, context.values, edges, witness))


def describe_edges(edges) -> str:
    return ",".join(str(e) for e in sorted(edges)) or "(none)"
