import tempfile
from pathlib import Path

from django.test import SimpleTestCase
from hypothesis import given, settings

from apps.rgraphs.services import (
    GraphFileError,
    RGraph,
    construct_from_imbalance_set,
    new_rgraph,
    parse_graph,
    read_graph,
    render_dot,
    serialize_graph,
    write_graph,
)
from apps.rgraphs.tests.strategies import rgraphs

FIXTURES = Path(__file__).resolve().parent / 'fixtures'


class ParseGraphTests(SimpleTestCase):
    def test_header_only(self):
        self.assertEqual(parse_graph('3 1\n'), new_rgraph(3, 1))

    def test_comments_duplicates_and_order(self):
        g = read_graph(FIXTURES / 'noncanonical.graph')
        self.assertEqual(g.arcs, ((2, 0, 2), (2, 1, 2)))
        canonical = (FIXTURES / 'realized_m2_m2_4_r2.graph').read_text(encoding='utf-8')
        self.assertEqual(serialize_graph(g), canonical)

    def test_loop_names_line(self):
        with self.assertRaises(GraphFileError) as ctx:
            read_graph(FIXTURES / 'loop.graph')
        self.assertEqual(ctx.exception.line_number, 2)
        self.assertIn('loop', str(ctx.exception))

    def test_capacity_names_line(self):
        with self.assertRaises(GraphFileError) as ctx:
            read_graph(FIXTURES / 'over_capacity.graph')
        self.assertEqual(ctx.exception.line_number, 3)

    def test_bad_header(self):
        for text in ('3\n', 'a b\n', '0 1\n', '3 0\n', '# only a comment\n', ''):
            with self.subTest(text=text):
                with self.assertRaises(GraphFileError):
                    parse_graph(text)

    def test_bad_arc_lines(self):
        for line in ('0 5 1', '0 1 0', '0 1', '0 1 x'):
            with self.subTest(line=line):
                with self.assertRaises(GraphFileError) as ctx:
                    parse_graph(f"3 1\n{line}\n")
                self.assertEqual(ctx.exception.line_number, 2)

    def test_canonical_file_is_fixed_point(self):
        text = (FIXTURES / 'transitive_r1.graph').read_text(encoding='utf-8')
        self.assertEqual(serialize_graph(parse_graph(text)), text)

    @given(rgraphs(max_n=7, max_r=4))
    @settings(max_examples=100)
    def test_parse_inverts_serialize(self, g):
        self.assertEqual(parse_graph(serialize_graph(g)), g)


class WriteGraphTests(SimpleTestCase):
    def test_write_then_read(self):
        g = RGraph.from_mult(4, 3, {(0, 1): 3, (2, 3): 1, (3, 1): 2})
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'out.graph'
            write_graph(g, path)
            self.assertEqual(read_graph(path), g)
            self.assertEqual(path.read_text(encoding='utf-8'), '4 3\n0 1 3\n2 3 1\n3 1 2\n')

    def test_non_utf8_file_rejected(self):
        with self.assertRaises(GraphFileError) as ctx:
            read_graph(FIXTURES / 'latin1.graph')
        self.assertEqual(ctx.exception.line_number, 0)
        self.assertEqual(str(ctx.exception), 'line 0: not valid UTF-8 at byte 15')


class RenderDotTests(SimpleTestCase):
    def test_single_arc(self):
        dot = render_dot(RGraph.from_mult(2, 1, {(0, 1): 1}))
        self.assertIn('  v0 -> v1 [label="×1"];\n', dot)

    def test_parallel_arcs_share_one_edge(self):
        dot = render_dot(RGraph.from_mult(2, 2, {(0, 1): 2}))
        self.assertEqual(dot.count('->'), 1)
        self.assertIn('[label="×2"]', dot)

    def test_imbalance_set_build(self):
        graph, _layout = construct_from_imbalance_set([2], [2], 2)
        expected = (FIXTURES / 'dot_p2_q2_r2.out').read_text(encoding='utf-8')
        self.assertEqual(render_dot(graph), expected)

    def test_edges_in_pair_order(self):
        dot = render_dot(RGraph.from_mult(3, 1, {(2, 0): 1, (0, 1): 1, (1, 2): 1}))
        edges = [line for line in dot.splitlines() if '->' in line]
        self.assertEqual(edges, [
            '  v0 -> v1 [label="×1"];',
            '  v1 -> v2 [label="×1"];',
            '  v2 -> v0 [label="×1"];',
        ])
