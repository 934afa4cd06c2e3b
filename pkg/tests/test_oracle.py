from __future__ import annotations

import io
import itertools
import unittest
from contextlib import redirect_stderr

from python_forced_edges.errors import ForcedEdgesError, NotGraphicError, TooLargeError
from python_forced_edges.labeled_graph import Edge
from python_forced_edges.oracle import (
    MONOTONICITY,
    CheckOutcome,
    CheckStatus,
    Counterexample,
    VerificationReport,
    enumerate_graphic_sequences,
    enumerate_realizations,
    forbidden_set_oracle,
    forced_set_oracle,
    isomorphism_classes,
    realization_count,
    verify_all,
)
from python_forced_edges.theorem_checks import AVAILABLE_CHECKS


class TestRealizations(unittest.TestCase):
    """
    Tests for the backtracking realization enumerator.
    """

    def test_counts(self):
        """Verify known realization counts."""
        self.assertEqual(realization_count((1, 1, 1, 1)), 3)
        self.assertEqual(realization_count((2, 2, 1, 1)), 2)
        self.assertEqual(realization_count((2, 2, 2, 2)), 3)
        self.assertEqual(realization_count((3, 3, 3, 3)), 1)
        self.assertEqual(realization_count((0, 0, 0)), 1)

    def test_every_graph_counted_once(self):
        """Verify realizations over all labeled sequences of length 4 cover the 64 graphs."""
        total = 0
        seen = set()
        for values in itertools.product(range(4), repeat=4):
            for g in enumerate_realizations(values):
                self.assertEqual(g.degrees().values, values)
                seen.add(g.edge_set())
                total += 1
        self.assertEqual(total, 64)
        self.assertEqual(len(seen), 64)

    def test_non_graphic_yields_nothing(self):
        """Verify an impossible sequence has no realizations."""
        self.assertEqual(list(enumerate_realizations((1, 1, 1))), [])

    def test_limit(self):
        """Verify the iterator stops after limit results."""
        iterator = enumerate_realizations((1, 1, 1, 1), limit=2)
        self.assertEqual(len(list(iterator)), 2)
        self.assertEqual(iterator.yielded, 2)
        self.assertEqual(list(enumerate_realizations((1, 1, 1, 1), limit=0)), [])

    def test_caps(self):
        """Verify size caps and argument checks."""
        with self.assertRaises(TooLargeError):
            enumerate_realizations((0,) * 11)
        with self.assertRaises(TooLargeError):
            enumerate_realizations((1, 1), max_n=12)
        with self.assertRaises(TooLargeError):
            enumerate_realizations((1, 1, 1, 1), max_n=3)
        with self.assertRaises(ForcedEdgesError):
            enumerate_realizations((1, 1), limit=-1)


class TestOracleSets(unittest.TestCase):
    """
    Tests for the brute-force forced and forbidden sets.
    """

    def test_threshold_example(self):
        """Verify the sets of the unique realization of 3,2,2,1."""
        self.assertEqual(forced_set_oracle((3, 2, 2, 1)),
                         frozenset({Edge(1, 2), Edge(1, 3), Edge(1, 4), Edge(2, 3)}))
        self.assertEqual(forbidden_set_oracle((3, 2, 2, 1)), frozenset({Edge(2, 4), Edge(3, 4)}))

    def test_empty_sets(self):
        """Verify a regular sequence has neither forced nor forbidden edges."""
        self.assertEqual(forced_set_oracle((1, 1, 1, 1)), frozenset())
        self.assertEqual(forbidden_set_oracle((1, 1, 1, 1)), frozenset())

    def test_rejects_non_graphic(self):
        """Verify NotGraphic instead of an empty intersection."""
        with self.assertRaises(NotGraphicError):
            forced_set_oracle((3, 3, 1, 1))
        with self.assertRaises(TooLargeError):
            forbidden_set_oracle((0,) * 11)


class TestGraphicSequences(unittest.TestCase):
    """
    Tests for enumerate_graphic_sequences and isomorphism classes.
    """

    def test_counts(self):
        """Verify the number of graphic sequences for n = 1..8."""
        expected = [1, 2, 4, 11, 31, 102, 342, 1213]
        self.assertEqual([sum(1 for _ in enumerate_graphic_sequences(n)) for n in range(1, 9)], expected)

    def test_order(self):
        """Verify lexicographically descending order."""
        self.assertEqual([s.values for s in enumerate_graphic_sequences(3)],
                         [(2, 2, 2), (2, 1, 1), (1, 1, 0), (0, 0, 0)])

    def test_bounds(self):
        """Verify n must lie in 1..8."""
        with self.assertRaises(TooLargeError):
            list(enumerate_graphic_sequences(9))
        with self.assertRaises(ForcedEdgesError):
            list(enumerate_graphic_sequences(0))

    def test_isomorphism_classes(self):
        """Verify unlabeled class counts."""
        self.assertEqual(len(isomorphism_classes(list(enumerate_realizations((4, 4, 3, 3, 3, 1))))), 2)
        self.assertEqual(len(isomorphism_classes(list(enumerate_realizations((1, 1, 1, 1))))), 1)
        # C6 and two triangles
        self.assertEqual(len(isomorphism_classes(list(enumerate_realizations((2,) * 6)))), 2)


class TestVerificationReport(unittest.TestCase):
    """
    Tests for report bookkeeping and rendering.
    """

    def test_failure_is_reported(self):
        """Verify a failure flips the exit code and keeps the first counterexample."""
        report = VerificationReport(n=3, sequences_checked=1)
        first = Counterexample('diameter', (2, 1, 1), ((1, 2), (1, 3)), "diameter 4")
        report.record('diameter', CheckOutcome(CheckStatus.FAILED, first))
        report.record('diameter', CheckOutcome(CheckStatus.FAILED,
                                               Counterexample('diameter', (1, 1, 0), None, "later")))
        report.record('duality', CheckOutcome(CheckStatus.PASSED))

        self.assertFalse(report.all_passed)
        self.assertEqual(report.exit_code, 1)
        self.assertEqual(report.counterexamples['diameter'], first)
        self.assertEqual(report.tallies['diameter'].failed, 2)

        text = report.to_text()
        self.assertIn("❌ diameter: 0 passed, 2 failed, 0 skipped", text)
        self.assertIn("counterexample: sequence 2,1,1 realization (1,2),(1,3): diameter 4", text)
        self.assertTrue(text.endswith("counterexamples found"))

        document = report.to_dict()
        self.assertFalse(document['all_passed'])
        self.assertEqual(document['counterexamples']['diameter']['realization'], [[1, 2], [1, 3]])

    def test_known_exception_does_not_fail(self):
        """Verify a known exception is listed with its witness but keeps the report green."""
        report = VerificationReport(n=7, sequences_checked=1)
        exception = Counterexample('forbidden-clique', (5, 5, 4, 3, 3, 1, 1), ((1, 2),),
                                   "N(3) ∪ N(6) is not a clique")
        report.record('forbidden-clique', CheckOutcome(CheckStatus.KNOWN_EXCEPTION, exception))
        report.record('forbidden-clique', CheckOutcome(CheckStatus.PASSED))

        self.assertTrue(report.all_passed)
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.counterexamples, {})
        self.assertEqual(report.known_exceptions['forbidden-clique'], [exception])

        text = report.to_text()
        self.assertIn("✅ forbidden-clique: 1 passed, 0 failed, 0 skipped, 1 known exceptions", text)
        self.assertIn("known exception: sequence 5,5,4,3,3,1,1", text)
        self.assertTrue(text.endswith("all theorems pass"))

        document = report.to_dict()
        self.assertEqual(document['checks']['forbidden-clique']['known_exceptions'], 1)
        self.assertEqual(document['known_exceptions']['forbidden-clique'][0]['sequence'],
                         [5, 5, 4, 3, 3, 1, 1])


class TestVerifyAll(unittest.TestCase):
    """
    Tests for the exhaustive theorem sweep.
    """

    def test_small_sweeps_pass(self):
        """Verify every check passes for n = 1..5."""
        for n in range(1, 6):
            report = verify_all(n)
            self.assertTrue(report.all_passed, report.to_text())
            self.assertEqual(report.exit_code, 0)

    def test_n6_sweep_passes(self):
        """Verify every check passes for n = 6, using a process pool."""
        report = verify_all(6, jobs=2)
        self.assertEqual(report.sequences_checked, 102)
        self.assertTrue(report.all_passed, report.to_text())
        self.assertGreater(report.tallies['forced-clique'].skipped, 0)

    def test_n2_bound_is_silent(self):
        """Verify 1,1 does not trip the bound check."""
        report = verify_all(2)
        self.assertTrue(report.all_passed, report.to_text())
        self.assertEqual(report.tallies['bound'].failed, 0)

    def test_report_contents(self):
        """Verify tallies cover every check and the sequence count."""
        report = verify_all(4)
        self.assertEqual(report.sequences_checked, 11)
        self.assertEqual(list(report.tallies), AVAILABLE_CHECKS + [MONOTONICITY])
        for name in AVAILABLE_CHECKS:
            tally = report.tallies[name]
            self.assertEqual(tally.passed + tally.failed + tally.skipped, 11, name)
        self.assertGreater(report.tallies[MONOTONICITY].passed, 0)
        self.assertTrue(report.to_text().endswith("all theorems pass"))
        self.assertTrue(report.to_dict()['all_passed'])

    def test_parallel_matches_serial(self):
        """Verify jobs=2 produces the same report as jobs=1."""
        self.assertEqual(verify_all(5, jobs=2).to_dict(), verify_all(5, jobs=1).to_dict())

    def test_check_filter(self):
        """Verify only the requested checks run."""
        report = verify_all(4, checks=['duality', MONOTONICITY])
        self.assertEqual(list(report.tallies), ['duality', MONOTONICITY])
        self.assertEqual(report.tallies['duality'].passed, 11)
        with self.assertRaises(ValueError):
            verify_all(3, checks=['no-such-check'])

    def test_induced_persistence_limit(self):
        """Verify the induced-persistence setting skips larger n."""
        report = verify_all(4, checks=['induced-persistence'], settings={'induced_persistence_max_n': 3})
        self.assertEqual(report.tallies['induced-persistence'].skipped, 11)

    def test_progress_goes_to_stderr(self):
        """Verify [VERIFY] lines are printed when progress is on."""
        stderr = io.StringIO()
        with redirect_stderr(stderr):
            verify_all(3, progress=True)
        self.assertIn("[VERIFY] n=3: 4 graphic sequences", stderr.getvalue())
        self.assertIn("✅ all theorems pass", stderr.getvalue())

    def test_rejects_large_n_and_bad_jobs(self):
        """Verify n > 7 and jobs < 1 are refused."""
        with self.assertRaises(TooLargeError) as ctx:
            verify_all(8)
        self.assertIn("n too large", str(ctx.exception))
        with self.assertRaises(ForcedEdgesError):
            verify_all(3, jobs=0)


if __name__ == '__main__':
    unittest.main()
