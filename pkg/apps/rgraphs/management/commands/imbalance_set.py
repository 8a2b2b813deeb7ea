from django.core.management.base import CommandError

from apps.rgraphs.management.arguments import (
    EXIT_INPUT,
    EXIT_NEGATIVE,
    RGraphCommand,
    emit_graph,
    format_set,
    parse_int_list,
)
from apps.rgraphs.services import (
    GcdExceedsCapacityError,
    RGraphError,
    construct_from_imbalance_set,
    imbalance_set_of,
)


class Command(RGraphCommand):
    help = 'Build an r-graph whose set of distinct imbalances is P together with the negated Q'

    def add_arguments(self, parser):
        parser.add_argument('-r', dest='r', type=int, default=1, help='Arc capacity per vertex pair')
        parser.add_argument('--p', dest='p', type=str, required=True, help='Positive imbalances, strictly increasing')
        parser.add_argument('--q', dest='q', type=str, required=True, help='Magnitudes of negative imbalances, strictly increasing')
        parser.add_argument('-o', '--out', type=str, default=None, help='Graph file to write (default: stdout)')

    def handle(self, *args, **options):
        p = parse_int_list(options['p'], label='P')
        q = parse_int_list(options['q'], label='Q')

        try:
            graph, layout = construct_from_imbalance_set(p, q, options['r'])
        except GcdExceedsCapacityError as e:
            self.stdout.write(self.style.WARNING(str(e)))
            raise CommandError(str(e), returncode=EXIT_NEGATIVE)
        except RGraphError as e:
            raise CommandError(str(e), returncode=EXIT_INPUT)

        self.stdout.write(f"# vertices: {layout.total_vertices}")
        for block in layout.blocks:
            last = block.first_vertex + block.size - 1
            self.stdout.write(f"# block {block.name}: vertices {block.first_vertex}..{last} ({block.size})")
        self.stdout.write(f"# imbalance set: {format_set(imbalance_set_of(graph))}")
        emit_graph(self, graph, options['out'])
