from __future__ import annotations

import itertools
import math
import unittest

import networkx as nx

from python_forced_edges.errors import EmptySubsetError, IndexOutOfRangeError, PreconditionViolatedError
from python_forced_edges.graph_analysis import (
    brute_force_edge_connectivity,
    check_forbidden_clique,
    check_forced_independence,
    diameter,
    edge_connectivity,
    induced_subgraph,
    is_clique,
    is_connected,
    is_independent_set,
    is_maximally_edge_connected,
)
from python_forced_edges.labeled_graph import Edge, LabeledGraph
from python_forced_edges.oracle import (
    enumerate_graphic_sequences,
    enumerate_realizations,
    isomorphism_classes,
)


def all_graphs(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield LabeledGraph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def to_networkx(g):
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices())
    graph.add_edges_from(tuple(e) for e in g.edges())
    return graph


class TestDistances(unittest.TestCase):
    """
    Tests for connectivity and diameter.
    """

    def test_examples(self):
        """Verify path, complete and disconnected graphs."""
        path = LabeledGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
        self.assertEqual(diameter(path), 3)
        self.assertEqual(diameter(LabeledGraph.from_edges(3, [(1, 2), (1, 3), (2, 3)])), 1)
        self.assertEqual(diameter(LabeledGraph.empty(1)), 0)
        split = LabeledGraph.from_edges(4, [(1, 2), (3, 4)])
        self.assertFalse(is_connected(split))
        self.assertEqual(diameter(split), math.inf)

    def test_matches_networkx(self):
        """Verify diameter on every connected graph with 5 vertices."""
        for g in all_graphs(5):
            reference = to_networkx(g)
            if nx.is_connected(reference):
                self.assertEqual(diameter(g), nx.diameter(reference), g.edges())
            else:
                self.assertEqual(diameter(g), math.inf)


class TestEdgeConnectivity(unittest.TestCase):
    """
    Tests for the max-flow edge connectivity and its witness cut.
    """

    def test_bridge(self):
        """Verify two triangles joined by a bridge."""
        g = LabeledGraph.from_edges(6, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)])
        cut = edge_connectivity(g)
        self.assertEqual(cut.lambda_, 1)
        self.assertEqual(cut.witness_cut, frozenset({Edge(3, 4)}))
        self.assertEqual(cut.source_side, frozenset({1, 2, 3}))
        self.assertFalse(is_maximally_edge_connected(g))

    def test_disconnected_is_zero(self):
        """Verify λ = 0 and an empty cut for a disconnected graph."""
        cut = edge_connectivity(LabeledGraph.from_edges(4, [(1, 2), (3, 4)]))
        self.assertEqual(cut.lambda_, 0)
        self.assertEqual(cut.witness_cut, frozenset())
        self.assertEqual(cut.source_side, frozenset({1, 2}))

    def test_needs_two_vertices(self):
        """Verify a single vertex is rejected."""
        with self.assertRaises(PreconditionViolatedError):
            edge_connectivity(LabeledGraph.empty(1))
        with self.assertRaises(PreconditionViolatedError):
            brute_force_edge_connectivity(LabeledGraph.empty(1))

    def test_matches_brute_force(self):
        """Verify λ against exhaustive edge removal on every graph with 4 vertices."""
        for g in all_graphs(4):
            self.assertEqual(edge_connectivity(g).lambda_, brute_force_edge_connectivity(g), g.edges())

    def test_matches_brute_force_on_realizations(self):
        """Verify λ against exhaustive edge removal on realizations, n <= 6."""
        for n in range(2, 7):
            for a in enumerate_graphic_sequences(n):
                graphs = list(enumerate_realizations(a))
                if n == 6:
                    graphs = isomorphism_classes(graphs)
                for g in graphs:
                    self.assertEqual(edge_connectivity(g).lambda_, brute_force_edge_connectivity(g),
                                     f"{a}: {g.edges()}")

    def test_matches_networkx_with_valid_witness(self):
        """Verify λ against networkx and that the witness cut disconnects, n = 5."""
        for g in all_graphs(5):
            cut = edge_connectivity(g)
            self.assertEqual(cut.lambda_, nx.edge_connectivity(to_networkx(g)), g.edges())
            if cut.lambda_ > 0:
                self.assertEqual(len(cut.witness_cut), cut.lambda_)
                self.assertFalse(is_connected(g.replace_edges(cut.witness_cut, ())))

    def test_complete_graph(self):
        """Verify K4 is maximally edge-connected."""
        k4 = LabeledGraph.empty(4).complement()
        self.assertEqual(edge_connectivity(k4).lambda_, 3)
        self.assertTrue(is_maximally_edge_connected(k4))


class TestInducedSubgraph(unittest.TestCase):
    """
    Tests for induced subgraphs and their relabeling.
    """

    def setUp(self):
        """Star centered at 2 plus the edge (3,4)."""
        self.g = LabeledGraph.from_edges(5, [(2, 1), (2, 3), (2, 4), (2, 5), (3, 4)])

    def test_relabeling(self):
        """Verify local labels follow the original labels ascending."""
        sub = induced_subgraph(self.g, [4, 2, 5])
        self.assertEqual(sub.labels, (2, 4, 5))
        self.assertEqual(sub.graph.edges(), [Edge(1, 2), Edge(1, 3)])
        self.assertEqual(sub.original_edges(), [Edge(2, 4), Edge(2, 5)])
        self.assertEqual(sub.degrees().values, (2, 1, 1))
        self.assertEqual(sub.local(5), 3)
        self.assertEqual(sub.original(1), 2)

    def test_errors(self):
        """Verify empty and out-of-range subsets are rejected."""
        with self.assertRaises(EmptySubsetError):
            induced_subgraph(self.g, [])
        with self.assertRaises(IndexOutOfRangeError):
            induced_subgraph(self.g, [1, 6])
        with self.assertRaises(IndexOutOfRangeError):
            induced_subgraph(self.g, [1, 2]).local(3)


class TestLocalStructure(unittest.TestCase):
    """
    Tests for the independence and clique validators.
    """

    def test_set_predicates(self):
        """Verify independence and clique on a small graph."""
        g = LabeledGraph.from_edges(4, [(1, 2), (1, 3), (2, 3)])
        self.assertTrue(is_clique(g, [1, 2, 3]))
        self.assertFalse(is_clique(g, [1, 4]))
        self.assertTrue(is_independent_set(g, [3, 4]))
        self.assertFalse(is_independent_set(g, [1, 2, 4]))
        self.assertTrue(is_clique(g, []))

    def test_forced_independence_on_every_realization(self):
        """Verify V - (N(1) ∪ N(2)) is independent for the forced edge (1,2)."""
        for g in enumerate_realizations((4, 4, 3, 3, 3, 1)):
            self.assertTrue(check_forced_independence(g, 1, 2))

    def test_forced_independence_precondition(self):
        """Verify a non-forced edge is rejected."""
        g = LabeledGraph.from_edges(4, [(1, 2), (3, 4)])
        with self.assertRaises(PreconditionViolatedError):
            check_forced_independence(g, 1, 2)

    def test_forbidden_clique_on_every_realization(self):
        """Verify N(5) ∪ N(6) is a clique for the forbidden edge (5,6)."""
        for g in enumerate_realizations((3, 3, 3, 1, 1, 1)):
            self.assertTrue(check_forbidden_clique(g, 5, 6))

    def test_forbidden_clique_preconditions(self):
        """Verify the degree hypotheses and the forbidden requirement are enforced."""
        star = LabeledGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
        with self.assertRaises(PreconditionViolatedError):
            check_forbidden_clique(star, 2, 3)
        with self.assertRaises(PreconditionViolatedError):
            check_forbidden_clique(LabeledGraph.from_edges(3, [(1, 2)]), 1, 3)
        matching = LabeledGraph.from_edges(4, [(1, 2), (3, 4)])
        with self.assertRaises(PreconditionViolatedError):
            check_forbidden_clique(matching, 1, 3)


if __name__ == '__main__':
    unittest.main()
