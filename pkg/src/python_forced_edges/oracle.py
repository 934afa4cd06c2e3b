"""
Brute-force ground truth.

Enumerates every labeled realization of a sequence by backtracking (vertex by
vertex, pruning residuals that are not graphic) and every graphic sequence of
a given length. verify_all runs the registered theorem checks over all
graphic sequences of length n and assembles a VerificationReport.
"""
from __future__ import annotations

import itertools
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import ForcedEdgesError, NotGraphicError, TooLargeError
from .labeled_graph import Edge, LabeledGraph
from .seq_core import DegreeSequence, IntSequenceLike, _values, format_sequence, is_graphic, majorizes

MAX_REALIZATION_N = 10
MAX_SEQUENCE_N = 8
MAX_VERIFY_N = 7

# evaluated pairwise after the per-sequence checks
MONOTONICITY = 'monotonicity'


class RealizationIterator:
    """
    Single-consumer iterator over all labeled realizations of a sequence.

    Each realization is produced exactly once. A non-graphic sequence yields
    nothing. ``limit`` stops after that many realizations.
    """

    def __init__(self, sequence: IntSequenceLike, limit: Optional[int] = None,
                 max_n: int = MAX_REALIZATION_N):
        values = _values(sequence)
        if max_n > MAX_REALIZATION_N:
            raise TooLargeError(
                f"Realization enumeration is capped at n={MAX_REALIZATION_N}, got max_n={max_n}."
            )
        if len(values) > max_n:
            raise TooLargeError(f"Refusing to enumerate realizations for n={len(values)} > {max_n}.")
        if limit is not None and limit < 0:
            raise ForcedEdgesError(f"limit must be >= 0, got {limit}.")
        self.sequence = values
        self.limit = limit
        self.yielded = 0
        self._pending = self._search() if is_graphic(values) else iter(())

    def __iter__(self) -> "RealizationIterator":
        return self

    def __next__(self) -> LabeledGraph:
        if self.limit is not None and self.yielded >= self.limit:
            raise StopIteration
        graph = next(self._pending)
        self.yielded += 1
        return graph

    def _search(self) -> Iterator[LabeledGraph]:
        n = len(self.sequence)

        def extend(residual: List[int], start: int,
                   edges: List[Tuple[int, int]]) -> Iterator[LabeledGraph]:
            v = start
            while v <= n and residual[v - 1] == 0:
                v += 1
            if v > n:
                yield LabeledGraph.from_edges(n, edges)
                return
            later = [u for u in range(v + 1, n + 1) if residual[u - 1] > 0]
            for chosen in itertools.combinations(later, residual[v - 1]):
                remaining = list(residual)
                remaining[v - 1] = 0
                for u in chosen:
                    remaining[u - 1] -= 1
                # vertices before v are saturated, so graphic residual == completable
                if is_graphic(remaining):
                    yield from extend(remaining, v + 1, edges + [(v, u) for u in chosen])

        return extend(list(self.sequence), 1, [])


def enumerate_realizations(a: IntSequenceLike, limit: Optional[int] = None,
                           max_n: int = MAX_REALIZATION_N) -> RealizationIterator:
    return RealizationIterator(a, limit=limit, max_n=max_n)


def realization_count(a: IntSequenceLike, limit: Optional[int] = None) -> int:
    return sum(1 for _ in enumerate_realizations(a, limit=limit))


def _realizations_or_raise(a: IntSequenceLike) -> List[LabeledGraph]:
    values = _values(a)
    if len(values) > MAX_REALIZATION_N:
        raise TooLargeError(
            f"Refusing to enumerate realizations for n={len(values)} > {MAX_REALIZATION_N}."
        )
    if not is_graphic(values):
        raise NotGraphicError(f"Sequence {format_sequence(values)} is not graphic.")
    return list(enumerate_realizations(values))


def forced_set_oracle(a: IntSequenceLike) -> FrozenSet[Edge]:
    """Edges present in every labeled realization."""
    realizations = _realizations_or_raise(a)
    common = set(realizations[0].edge_set())
    for g in realizations[1:]:
        common &= g.edge_set()
    return frozenset(common)


def forbidden_set_oracle(a: IntSequenceLike) -> FrozenSet[Edge]:
    """Edges absent from every labeled realization."""
    realizations = _realizations_or_raise(a)
    n = len(_values(a))
    seen = set()
    for g in realizations:
        seen |= g.edge_set()
    return frozenset(Edge(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)) - seen


def enumerate_graphic_sequences(n: int) -> Iterator[DegreeSequence]:
    """
    All graphic sequences of length n, lexicographically descending.

    Raises:
        TooLargeError: If n > 8.
    """
    if n < 1:
        raise ForcedEdgesError(f"n must be >= 1, got {n}.")
    if n > MAX_SEQUENCE_N:
        raise TooLargeError(f"Refusing to enumerate sequences for n={n} > {MAX_SEQUENCE_N}.")
    for values in itertools.combinations_with_replacement(range(n - 1, -1, -1), n):
        if is_graphic(values):
            yield DegreeSequence(values)


def isomorphism_classes(graphs: Sequence[LabeledGraph]) -> List[LabeledGraph]:
    """
    One representative per isomorphism class, in first-seen order.

    Graphs are bucketed by sorted degree list before networkx isomorphism tests.
    """
    buckets: Dict[Tuple[int, ...], List[Tuple[LabeledGraph, nx.Graph]]] = {}
    representatives: List[LabeledGraph] = []
    for g in graphs:
        key = tuple(sorted(g.degrees(), reverse=True)) + (g.n,)
        candidate = nx.Graph()
        candidate.add_nodes_from(g.vertices())
        candidate.add_edges_from((e.i, e.j) for e in g.edges())
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(candidate, other) for _, other in bucket):
            continue
        bucket.append((g, candidate))
        representatives.append(g)
    return representatives


# --- verification -------------------------------------------------------

class CheckStatus(Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
    KNOWN_EXCEPTION = "known-exception"


@dataclass(frozen=True)
class Counterexample:
    """
    First failure of a check.

    Attributes:
        check: Name of the failing check.
        sequence: The degree sequence.
        realization: Edge list of the offending realization, when one applies.
        witness: Human-readable description of what went wrong.
    """
    check: str
    sequence: Tuple[int, ...]
    realization: Optional[Tuple[Tuple[int, int], ...]]
    witness: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            'check': self.check,
            'sequence': list(self.sequence),
            'realization': None if self.realization is None else [list(e) for e in self.realization],
            'witness': self.witness,
        }

    def to_text(self) -> str:
        text = f"sequence {format_sequence(self.sequence)}"
        if self.realization is not None:
            text += " realization " + (",".join(f"({i},{j})" for i, j in self.realization) or "(empty)")
        return f"{text}: {self.witness}"


@dataclass(frozen=True)
class CheckOutcome:
    status: CheckStatus
    counterexample: Optional[Counterexample] = None
    reason: str = ""


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    known: int = 0

    def add(self, status: CheckStatus) -> None:
        if status is CheckStatus.PASSED:
            self.passed += 1
        elif status is CheckStatus.FAILED:
            self.failed += 1
        elif status is CheckStatus.KNOWN_EXCEPTION:
            self.known += 1
        else:
            self.skipped += 1


@dataclass
class VerificationReport:
    """
    Outcome of verify_all.

    Attributes:
        n: Sequence length swept.
        sequences_checked: Number of graphic sequences visited.
        tallies: Per-check pass/fail/skip counts, in registry order.
        counterexamples: First counterexample of each failing check.
        known_exceptions: Every recorded exception a check listed as known,
            per check. They do not make the report fail.
    """
    n: int
    sequences_checked: int = 0
    tallies: Dict[str, CheckTally] = field(default_factory=dict)
    counterexamples: Dict[str, Counterexample] = field(default_factory=dict)
    known_exceptions: Dict[str, List[Counterexample]] = field(default_factory=dict)

    def record(self, name: str, outcome: CheckOutcome) -> None:
        self.tallies.setdefault(name, CheckTally()).add(outcome.status)
        if outcome.counterexample is None:
            return
        if outcome.status is CheckStatus.KNOWN_EXCEPTION:
            self.known_exceptions.setdefault(name, []).append(outcome.counterexample)
        elif name not in self.counterexamples:
            self.counterexamples[name] = outcome.counterexample

    @property
    def all_passed(self) -> bool:
        return not self.counterexamples and all(t.failed == 0 for t in self.tallies.values())

    @property
    def exit_code(self) -> int:
        return 0 if self.all_passed else 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'sequences_checked': self.sequences_checked,
            'all_passed': self.all_passed,
            'checks': {
                name: {
                    'passed': t.passed,
                    'failed': t.failed,
                    'skipped': t.skipped,
                    'known_exceptions': t.known,
                }
                for name, t in self.tallies.items()
            },
            'counterexamples': {name: c.to_dict() for name, c in self.counterexamples.items()},
            'known_exceptions': {
                name: [c.to_dict() for c in found] for name, found in self.known_exceptions.items()
            },
        }

    def to_text(self) -> str:
        lines = [f"verify n={self.n}: {self.sequences_checked} graphic sequences"]
        for name, t in self.tallies.items():
            marker = "❌" if t.failed else "✅"
            line = f"  {marker} {name}: {t.passed} passed, {t.failed} failed, {t.skipped} skipped"
            if t.known:
                line += f", {t.known} known exceptions"
            lines.append(line)
            if name in self.counterexamples:
                lines.append(f"      counterexample: {self.counterexamples[name].to_text()}")
            for exception in self.known_exceptions.get(name, []):
                lines.append(f"      known exception: {exception.to_text()}")
        lines.append("all theorems pass" if self.all_passed else "counterexamples found")
        return "\n".join(lines)


SequenceResult = Tuple[Tuple[Tuple[str, CheckOutcome], ...], FrozenSet[Edge], FrozenSet[Edge]]


def _check_sequence(values: Tuple[int, ...], names: Tuple[str, ...],
                    settings: Mapping[str, Any]) -> SequenceResult:
    """Worker: run the named checks on one sequence. Top-level so process pools can pickle it."""
    # registry modules import this one
    from .theorem_checks import SequenceContext, get_check

    context = SequenceContext(DegreeSequence(values), settings)
    outcomes = tuple((name, get_check(name).run(context)) for name in names)
    return outcomes, context.forced.edge_set(), context.forbidden.edge_set()


def _monotonicity(report: VerificationReport, sequences: List[DegreeSequence],
                  staircases: List[Tuple[FrozenSet[Edge], FrozenSet[Edge]]]) -> None:
    """For every ordered pair a ⪰ b (same sum, a != b): F(a) ⊇ F(b) and B(a) ⊇ B(b)."""
    by_total: Dict[int, List[int]] = {}
    for index, seq in enumerate(sequences):
        by_total.setdefault(seq.total, []).append(index)
    for indices in by_total.values():
        for x, y in itertools.permutations(indices, 2):
            left, right = sequences[x], sequences[y]
            if not majorizes(left, right).left_dominates:
                continue
            (forced_a, forbidden_a), (forced_b, forbidden_b) = staircases[x], staircases[y]
            if forced_a >= forced_b and forbidden_a >= forbidden_b:
                report.record(MONOTONICITY, CheckOutcome(CheckStatus.PASSED))
                continue
            missing = sorted((forced_b - forced_a) | (forbidden_b - forbidden_a))
            report.record(MONOTONICITY, CheckOutcome(CheckStatus.FAILED, Counterexample(
                MONOTONICITY, left.values, None,
                f"majorizes {right} but misses {','.join(str(e) for e in missing)}",
            )))


def verify_all(n: int, jobs: int = 1, progress: bool = False, checks: Optional[Sequence[str]] = None,
               settings: Optional[Mapping[str, Any]] = None) -> VerificationReport:
    """
    Run every registered theorem check on every graphic sequence of length n.

    Args:
        n: Sequence length, 1..7.
        jobs: Worker processes; 1 runs in-process. Results are merged in
            canonical sequence order whatever the value.
        progress: Print [VERIFY] progress lines to stderr.
        checks: Names of checks to run; defaults to all registered checks.
        settings: Per-check options such as ``induced_persistence_max_n``.

    Raises:
        TooLargeError: If n > 7.
    """
    from .theorem_checks import AVAILABLE_CHECKS, get_check

    if n > MAX_VERIFY_N:
        raise TooLargeError(f"n too large: verify supports n <= {MAX_VERIFY_N}, got {n}.")
    if jobs < 1:
        raise ForcedEdgesError(f"jobs must be >= 1, got {jobs}.")
    requested = tuple(checks) if checks is not None else tuple(AVAILABLE_CHECKS) + (MONOTONICITY,)
    names = tuple(name for name in requested if name != MONOTONICITY)
    for name in names:
        get_check(name)
    options = dict(settings or {})
    sequences = list(enumerate_graphic_sequences(n))
    report = VerificationReport(n=n, sequences_checked=len(sequences))
    for name in requested:
        report.tallies[name] = CheckTally()

    if progress:
        print(f"[VERIFY] n={n}: {len(sequences)} graphic sequences, {len(names)} checks, jobs={jobs}",
              file=sys.stderr)

    arguments = [(seq.values, names, options) for seq in sequences]
    if jobs == 1:
        results = [_check_sequence(*args) for args in arguments]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or jobs)) as pool:
            results = list(pool.map(_check_sequence, *zip(*arguments), chunksize=8))

    staircases = []
    for seq, (outcomes, forced, forbidden) in zip(sequences, results):
        for name, outcome in outcomes:
            report.record(name, outcome)
            if progress and outcome.status is CheckStatus.FAILED:
                print(f"[VERIFY] ❌ {name} failed on {seq}", file=sys.stderr)
        staircases.append((forced, forbidden))

    if MONOTONICITY in requested:
        _monotonicity(report, sequences, staircases)

    if progress:
        status = "✅ all theorems pass" if report.all_passed else "❌ counterexamples found"
        print(f"[VERIFY] {status}", file=sys.stderr)
    return report
