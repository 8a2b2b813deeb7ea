from django.core.management.base import CommandError

from apps.rgraphs.management.arguments import (
    EXIT_INTERNAL,
    RGraphCommand,
    format_sequence,
    format_set,
    load_graph,
)
from apps.rgraphs.services import (
    SortOrder,
    arc_count,
    check_feasible_nondecreasing,
    check_feasible_nonincreasing,
    find_doubles,
    imbalance_range,
    imbalance_sequence,
    imbalance_set_of,
    intransitive_triples,
    is_transitive,
    min_arc_lower_bound,
    pair_notation,
    positional_bounds,
    square_inequality,
)


class Command(RGraphCommand):
    help = "Report a graph's imbalances, transitivity and every inequality check on its own sequence"

    def add_arguments(self, parser):
        parser.add_argument('in_path', type=str, help='Graph file to diagnose')

    def handle(self, *args, **options):
        graph = load_graph(options['in_path'])
        ascending = imbalance_sequence(graph, SortOrder.NON_DECREASING).as_list()
        descending = imbalance_sequence(graph, SortOrder.NON_INCREASING).as_list()

        self.stdout.write(f"vertices: {graph.n}")
        self.stdout.write(f"capacity: {graph.r}")
        self.stdout.write(f"imbalances (non-decreasing): {format_sequence(ascending)}")
        self.stdout.write(f"imbalances (non-increasing): {format_sequence(descending)}")
        self.stdout.write(f"imbalance set: {format_set(imbalance_set_of(graph))}")
        self.stdout.write(f"arcs: {arc_count(graph)}")
        self.stdout.write(f"min-arc lower bound: {min_arc_lower_bound(ascending)}")
        self.stdout.write(f"transitive: {'yes' if is_transitive(graph) else 'no'}")

        doubles = [pair_notation(graph, u, v) for u, v in find_doubles(graph)]
        self.stdout.write(f"doubles: {', '.join(doubles) if doubles else 'none'}")
        triples = [f"{c.pattern} at {c.roles}" for c in intransitive_triples(graph)]
        self.stdout.write(f"intransitive triples: {'; '.join(triples) if triples else 'none'}")

        checks = [
            ('imbalance range', imbalance_range(ascending, graph.r)),
            ('feasibility (non-decreasing)', check_feasible_nondecreasing(ascending, graph.r)),
            ('feasibility (non-increasing)', check_feasible_nonincreasing(descending, graph.r)),
            ('positional bounds', positional_bounds(ascending, graph.r)),
            ('square inequality', square_inequality(descending, graph.r)),
        ]
        for label, verdict in checks:
            self.stdout.write(f"{label}: {verdict.describe()}")

        failed = [label for label, verdict in checks if not verdict]
        if failed:
            raise CommandError(
                f"Checks failed on a valid graph: {', '.join(failed)}",
                returncode=EXIT_INTERNAL
            )
