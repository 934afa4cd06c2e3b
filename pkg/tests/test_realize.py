from __future__ import annotations

import itertools
import unittest

from python_forced_edges.errors import ForcedEdgesError, InvalidSwitchError, NotGraphicError
from python_forced_edges.labeled_graph import Edge, LabeledGraph
from python_forced_edges.oracle import enumerate_realizations
from python_forced_edges.realize import (
    TwoSwitch,
    apply_two_switch,
    mcmc_sample,
    mcmc_walk,
    realize,
    realize_saturating,
    sis_sample,
)
from python_forced_edges.seq_core import DegreeSequence, is_graphic

TRIANGLE = [Edge(1, 2), Edge(1, 3), Edge(2, 3)]


def graphic_sequences(n):
    for values in itertools.combinations_with_replacement(range(n - 1, -1, -1), n):
        if is_graphic(values):
            yield DegreeSequence(values)


class TestRealize(unittest.TestCase):
    """
    Tests for the deterministic Kleitman–Wang constructions.
    """

    def test_unique_realization(self):
        """Verify the triangle."""
        self.assertEqual(realize(DegreeSequence((2, 2, 2))).edges(), TRIANGLE)

    def test_contains_forced_edge(self):
        """Verify the realization has the right degrees and the forced edge."""
        g = realize(DegreeSequence((4, 4, 3, 3, 3, 1)))
        self.assertEqual(g.degrees().values, (4, 4, 3, 3, 3, 1))
        self.assertTrue(g.has_edge(1, 2))

    def test_rejects_non_graphic(self):
        """Verify NotGraphic on an impossible sequence."""
        with self.assertRaises(NotGraphicError):
            realize(DegreeSequence((3, 3, 1, 1)))

    def test_deterministic(self):
        """Verify repeated calls give the same graph."""
        a = DegreeSequence((3, 3, 2, 2, 1, 1))
        self.assertEqual(realize(a), realize(a))

    def test_saturating_examples(self):
        """Verify vertex i is joined to the highest degrees first."""
        self.assertEqual(realize_saturating(DegreeSequence((2, 1, 1)), 1).edges(), [Edge(1, 2), Edge(1, 3)])
        g = realize_saturating(DegreeSequence((3, 3, 3, 1, 1, 1)), 4)
        self.assertEqual(g.neighbors(4), (1,))

    def test_degrees_preserved_everywhere(self):
        """Verify both constructions realize every graphic sequence exactly, n <= 6."""
        for n in range(1, 7):
            for a in graphic_sequences(n):
                self.assertEqual(realize(a).degrees().values, a.values, a)
                for i in range(1, n + 1):
                    self.assertEqual(realize_saturating(a, i).degrees().values, a.values, f"{a} at {i}")

    def test_labeled_input(self):
        """Verify unsorted labeled sequences are realized label by label."""
        g = realize((0, 1, 2, 1))
        self.assertEqual(g.degrees().values, (0, 1, 2, 1))


class TestTwoSwitch(unittest.TestCase):
    """
    Tests for degree-preserving 2-switches.
    """

    def test_valid_switch(self):
        """Verify a perfect matching switches to another."""
        g = LabeledGraph.from_edges(4, [(1, 3), (2, 4)])
        switched = apply_two_switch(g, TwoSwitch.of([(1, 3), (2, 4)], [(1, 2), (3, 4)]))
        self.assertEqual(switched.edges(), [Edge(1, 2), Edge(3, 4)])
        self.assertEqual(switched.degrees(), g.degrees())

    def test_rejects_existing_edge(self):
        """Verify adding an edge that is already present fails."""
        path = LabeledGraph.from_edges(4, [(1, 3), (1, 2), (2, 4)])
        with self.assertRaises(InvalidSwitchError):
            apply_two_switch(path, TwoSwitch.of([(1, 3), (2, 4)], [(1, 2), (3, 4)]))

    def test_rejects_missing_edge(self):
        """Verify removing an absent edge fails."""
        g = LabeledGraph.from_edges(4, [(1, 3)])
        with self.assertRaises(InvalidSwitchError):
            apply_two_switch(g, TwoSwitch.of([(1, 3), (2, 4)], [(1, 2), (3, 4)]))

    def test_rejects_vertex_collision(self):
        """Verify the two removed edges must be disjoint."""
        g = LabeledGraph.from_edges(4, [(1, 2), (2, 3)])
        with self.assertRaises(InvalidSwitchError):
            apply_two_switch(g, TwoSwitch.of([(1, 2), (2, 3)], [(1, 3), (2, 4)]))

    def test_rejects_degree_changing_rewire(self):
        """Verify the added edges must pair up the same four endpoints."""
        g = LabeledGraph.from_edges(5, [(1, 2), (3, 4)])
        with self.assertRaises(InvalidSwitchError):
            apply_two_switch(g, TwoSwitch.of([(1, 2), (3, 4)], [(1, 3), (4, 5)]))


class TestMcmc(unittest.TestCase):
    """
    Tests for the forced-edge-aware 2-switch chain.
    """

    def test_unique_realization_never_moves(self):
        """Verify the triangle has no accepted moves."""
        states = list(mcmc_walk(DegreeSequence((2, 2, 2)), 500, seed=3))
        self.assertEqual(len(states), 1)
        self.assertEqual(mcmc_sample(DegreeSequence((2, 2, 2)), 500, seed=3).edges(), TRIANGLE)

    def test_perfect_matchings_all_reached(self):
        """Verify all three perfect matchings of K4 are visited and sampled."""
        a = DegreeSequence((1, 1, 1, 1))
        visited = {g.edge_set() for g in mcmc_walk(a, 100, seed=0)}
        self.assertEqual(len(visited), 3)
        finals = {mcmc_sample(a, 1000, seed=seed).edge_set() for seed in range(40)}
        self.assertEqual(len(finals), 3)

    def test_forced_edge_conserved(self):
        """Verify every visited state keeps the forced edge (1,2)."""
        a = DegreeSequence((4, 4, 3, 3, 3, 1))
        for g in mcmc_walk(a, 10_000, seed=11):
            self.assertTrue(g.has_edge(1, 2))
            self.assertEqual(g.degrees().values, a.values)

    def test_deterministic_given_seed(self):
        """Verify identical seeds give identical samples."""
        a = DegreeSequence((3, 3, 2, 2, 2, 2))
        self.assertEqual(mcmc_sample(a, 300, seed=5), mcmc_sample(a, 300, seed=5))

    def test_covers_every_realization(self):
        """Verify the chain reaches every labeled realization, n <= 6."""
        for n in range(2, 7):
            for a in graphic_sequences(n):
                target = {g.edge_set() for g in enumerate_realizations(a)}
                seen = set()
                for seed in range(20):
                    for g in mcmc_walk(a, 100_000, seed=seed):
                        seen.add(g.edge_set())
                        if seen == target:
                            break
                    if seen == target:
                        break
                self.assertEqual(seen, target, a)

    def test_negative_steps_rejected(self):
        """Verify steps must be non-negative."""
        with self.assertRaises(ForcedEdgesError):
            mcmc_sample(DegreeSequence((1, 1)), -1)


class TestSis(unittest.TestCase):
    """
    Tests for the sequential construction.
    """

    def test_unique_realization(self):
        """Verify the triangle."""
        self.assertEqual(sis_sample(DegreeSequence((2, 2, 2)), seed=7).edges(), TRIANGLE)

    def test_forced_edge_in_every_sample(self):
        """Verify 1000 samples are valid and contain the forced edge."""
        a = DegreeSequence((4, 4, 3, 3, 3, 1))
        for seed in range(1000):
            g = sis_sample(a, seed=seed)
            self.assertEqual(g.degrees().values, a.values)
            self.assertTrue(g.has_edge(1, 2))

    def test_threshold_sequence_is_unique(self):
        """Verify the threshold sequence always yields its only realization."""
        expected = [Edge(1, 2), Edge(1, 3), Edge(1, 4), Edge(2, 3)]
        for seed in range(50):
            self.assertEqual(sis_sample(DegreeSequence((3, 2, 2, 1)), seed=seed).edges(), expected)

    def test_never_dead_ends(self):
        """Verify totality on every graphic sequence with n <= 7, 100 seeds each."""
        for n in range(1, 8):
            for a in graphic_sequences(n):
                for seed in range(100):
                    self.assertEqual(sis_sample(a, seed=seed).degrees().values, a.values, f"{a} seed {seed}")

    def test_degree_weighting(self):
        """Verify the residual-degree weighting also produces valid realizations."""
        for a in graphic_sequences(6):
            for seed in range(3):
                self.assertEqual(sis_sample(a, seed=seed, weighting="degree").degrees().values, a.values)

    def test_deterministic_and_validated(self):
        """Verify seeding and argument checks."""
        a = DegreeSequence((3, 3, 2, 2, 2, 2))
        self.assertEqual(sis_sample(a, seed=9), sis_sample(a, seed=9))
        with self.assertRaises(NotGraphicError):
            sis_sample(DegreeSequence((1, 1, 1)))
        with self.assertRaises(ForcedEdgesError):
            sis_sample(a, weighting="bogus")


if __name__ == '__main__':
    unittest.main()
