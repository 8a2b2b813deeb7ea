from django.test import SimpleTestCase

from apps.rgraphs.services import (
    InfeasibleSequenceError,
    InvalidParameterError,
    arc_count,
    is_transitive,
    iter_feasible_sequences,
    min_arc_lower_bound,
    realize,
)
from apps.rgraphs.services.realization import GREEDY, MAX_FLOW, MIN_COST_FLOW


class RealizeTests(SimpleTestCase):
    def test_zero_sequence_gives_empty_graph(self):
        result = realize([0, 0, 0], 1)
        self.assertEqual(result.arc_count, 0)
        self.assertEqual(result.graph.arcs, ())
        self.assertEqual(result.vertex_map, {1: 0, 2: 1, 3: 2})

    def test_single_supplier(self):
        result = realize([-2, -2, 4], 2)
        self.assertEqual(result.graph.arcs, ((2, 0, 2), (2, 1, 2)))
        self.assertEqual(result.arc_count, 4)
        self.assertEqual(result.method, GREEDY)

    def test_two_suppliers(self):
        result = realize([-1, -1, 1, 1], 1)
        self.assertEqual(result.arc_count, 2)
        self.assertEqual(list(result.graph.imbalances), [-1, -1, 1, 1])

    def test_greedy_dead_end_recovered_by_max_flow(self):
        # Greedy sends both unit suppliers to vertex 0 and strands vertex 4.
        result = realize([-2, -2, 1, 1, 2], 1)
        self.assertEqual(result.method, MAX_FLOW)
        self.assertEqual(list(result.graph.imbalances), [-2, -2, 1, 1, 2])
        self.assertEqual(result.arc_count, 4)

    def test_relay_through_zero_vertex(self):
        result = realize([-2, 0, 2], 1)
        self.assertEqual(result.method, MIN_COST_FLOW)
        self.assertEqual(list(result.graph.imbalances), [-2, 0, 2])
        self.assertEqual(result.arc_count, 3)
        self.assertTrue(is_transitive(result.graph))

    def test_infeasible_carries_witness(self):
        with self.assertRaises(InfeasibleSequenceError) as ctx:
            realize([-2, -2, 4], 1)
        self.assertEqual(ctx.exception.verdict.witness.k, 2)

    def test_every_feasible_small_sequence(self):
        for n, r in ((2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)):
            for values in iter_feasible_sequences(n, r):
                with self.subTest(values=values, r=r):
                    result = realize(values, r)
                    g = result.graph
                    self.assertEqual(list(g.imbalances), values)
                    self.assertEqual(result.arc_count, arc_count(g))
                    self.assertTrue(is_transitive(g))
                    self.assertTrue(all(g.pair_total(u, v) <= r for u, v, _m in g.arcs))
                    if result.method != MIN_COST_FLOW:
                        self.assertEqual(result.arc_count, min_arc_lower_bound(values))
                    else:
                        self.assertGreater(result.arc_count, min_arc_lower_bound(values))


class MinArcLowerBoundTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(min_arc_lower_bound([0, 0, 0]), 0)
        self.assertEqual(min_arc_lower_bound([-2, -2, 4]), 4)
        self.assertEqual(min_arc_lower_bound([-3, 1, 2]), 3)

    def test_nonzero_total_rejected(self):
        with self.assertRaises(InvalidParameterError):
            min_arc_lower_bound([1, 1])
