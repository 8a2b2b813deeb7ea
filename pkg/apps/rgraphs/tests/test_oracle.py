import random

from django.test import SimpleTestCase, override_settings

from apps.rgraphs.services import (
    EnumerationLimits,
    EnumerationTooLargeError,
    InvalidOrderError,
    NotRealizableError,
    RGraph,
    arc_count,
    enumerate_imbalance_sequences,
    enumerate_rgraphs,
    is_transitive,
    min_arcs_brute,
    move_graph_connected,
    new_rgraph,
    random_rgraph,
    verify_equivalence,
)
from apps.rgraphs.services.oracle import move_graph, pair_states, realizations


class EnumerateRGraphsTests(SimpleTestCase):
    def test_counts(self):
        for n, r, expected in ((1, 3, 1), (2, 1, 3), (3, 1, 27), (3, 2, 216)):
            with self.subTest(n=n, r=r):
                graphs = list(enumerate_rgraphs(EnumerationLimits(n, r)))
                self.assertEqual(len(graphs), expected)
                self.assertEqual(len(set(graphs)), expected)

    def test_two_vertex_graphs(self):
        graphs = set(enumerate_rgraphs(EnumerationLimits(2, 1)))
        expected = {
            new_rgraph(2, 1),
            RGraph.from_mult(2, 1, {(0, 1): 1}),
            RGraph.from_mult(2, 1, {(1, 0): 1}),
        }
        self.assertEqual(graphs, expected)

    def test_first_state_partitions(self):
        limits = EnumerationLimits(3, 1)
        parts = [set(enumerate_rgraphs(limits, state)) for state in pair_states(1)]
        self.assertEqual(sum(len(p) for p in parts), 27)
        self.assertEqual(set().union(*parts), set(enumerate_rgraphs(limits)))

    def test_hard_cap(self):
        with self.assertRaises(EnumerationTooLargeError) as ctx:
            list(enumerate_rgraphs(EnumerationLimits(8, 4)))
        self.assertEqual(ctx.exception.hard_cap, 10 ** 7)

    @override_settings(RGRAPH_ENUMERATION_HARD_CAP=100)
    def test_hard_cap_from_settings(self):
        limits = EnumerationLimits.from_settings(3, 2)
        self.assertEqual(limits.hard_cap, 100)
        with self.assertRaises(EnumerationTooLargeError):
            limits.validate()


class EnumerateSequencesTests(SimpleTestCase):
    def test_two_vertices(self):
        found = {s.values for s in enumerate_imbalance_sequences(EnumerationLimits(2, 1))}
        self.assertEqual(found, {(0, 0), (-1, 1)})

    def test_single_vertex(self):
        found = {s.values for s in enumerate_imbalance_sequences(EnumerationLimits(1, 5))}
        self.assertEqual(found, {(0,)})

    def test_worker_pool_matches_in_process(self):
        limits = EnumerationLimits(3, 2)
        self.assertEqual(
            enumerate_imbalance_sequences(limits, workers=2),
            enumerate_imbalance_sequences(limits, workers=1),
        )


class MinArcsBruteTests(SimpleTestCase):
    def test_zero_sequence(self):
        best, witnesses = min_arcs_brute([0, 0, 0], EnumerationLimits(3, 1))
        self.assertEqual(best, 0)
        self.assertEqual(witnesses, [new_rgraph(3, 1)])

    def test_single_arc_sequence(self):
        best, witnesses = min_arcs_brute([-1, 0, 1], EnumerationLimits(3, 1))
        self.assertEqual(best, 1)
        self.assertTrue(all(arc_count(g) == 1 for g in witnesses))

    def test_two_saturated_pairs(self):
        best, witnesses = min_arcs_brute([-2, -2, 4], EnumerationLimits(3, 2))
        self.assertEqual(best, 4)
        self.assertTrue(all(is_transitive(g) for g in witnesses))

    def test_not_realizable(self):
        with self.assertRaises(NotRealizableError):
            min_arcs_brute([-2, -2, 4], EnumerationLimits(3, 1))

    def test_unsorted_rejected(self):
        with self.assertRaises(InvalidOrderError):
            min_arcs_brute([1, 0, -1], EnumerationLimits(3, 1))


class MoveGraphTests(SimpleTestCase):
    def test_double_linked_to_empty(self):
        graph = move_graph([0, 0], EnumerationLimits(2, 2))
        self.assertEqual(graph.number_of_nodes(), 2)
        self.assertTrue(move_graph_connected([0, 0], EnumerationLimits(2, 2)))

    def test_zero_sequence_on_three_vertices(self):
        self.assertTrue(move_graph_connected([0, 0, 0], EnumerationLimits(3, 1)))

    def test_realizations_are_positional(self):
        for g in realizations([-1, 0, 1], EnumerationLimits(3, 1)):
            self.assertEqual(g.imbalances, (-1, 0, 1))
        self.assertTrue(move_graph_connected([-1, 0, 1], EnumerationLimits(3, 1)))


class VerifyEquivalenceTests(SimpleTestCase):
    def test_small_universes(self):
        for n, r in ((1, 1), (2, 1), (3, 1), (3, 2)):
            with self.subTest(n=n, r=r):
                self.assertIsNone(verify_equivalence(EnumerationLimits(n, r)))


class RandomRGraphTests(SimpleTestCase):
    def test_seeded_generator_is_reproducible(self):
        first = random_rgraph(6, 3, random.Random(7))
        second = random_rgraph(6, 3, random.Random(7))
        self.assertEqual(first, second)

    @override_settings(RGRAPH_RANDOM_SEED=11)
    def test_default_seed_from_settings(self):
        self.assertEqual(random_rgraph(5, 2), random_rgraph(5, 2, random.Random(11)))

    def test_respects_capacity(self):
        rng = random.Random(3)
        for _ in range(50):
            g = random_rgraph(7, 2, rng)
            self.assertTrue(all(g.pair_total(u, v) <= 2 for u, v, _m in g.arcs))
