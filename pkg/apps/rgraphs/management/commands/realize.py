from django.core.management.base import CommandError

from apps.rgraphs.management.arguments import (
    EXIT_INPUT,
    EXIT_INTERNAL,
    EXIT_NEGATIVE,
    RGraphCommand,
    allow_negative_lists,
    emit_graph,
    parse_int_list,
)
from apps.rgraphs.services import (
    InfeasibleSequenceError,
    InternalContradictionError,
    RGraphError,
    realize,
)


class Command(RGraphCommand):
    help = 'Build a minimum-arc r-graph realizing a non-decreasing imbalance sequence'

    def add_arguments(self, parser):
        allow_negative_lists(parser)
        parser.add_argument('sequence', type=str, help='Comma-separated non-decreasing integers')
        parser.add_argument('-r', dest='r', type=int, default=1, help='Arc capacity per vertex pair')
        parser.add_argument('-o', '--out', type=str, default=None, help='Graph file to write (default: stdout)')

    def handle(self, *args, **options):
        values = parse_int_list(options['sequence'])

        try:
            result = realize(values, options['r'])
        except InfeasibleSequenceError as e:
            witness = e.verdict.witness
            self.stdout.write(self.style.WARNING(f"INFEASIBLE at k={witness.k}: {witness.lhs} vs {witness.rhs}"))
            raise CommandError('Sequence is not realizable', returncode=EXIT_NEGATIVE)
        except InternalContradictionError as e:
            raise CommandError(str(e), returncode=EXIT_INTERNAL)
        except RGraphError as e:
            raise CommandError(str(e), returncode=EXIT_INPUT)

        vertex_map = ' '.join(f"{position}->{vertex}" for position, vertex in sorted(result.vertex_map.items()))
        self.stdout.write(f"# arcs: {result.arc_count}")
        self.stdout.write(f"# method: {result.method}")
        self.stdout.write(f"# vertex map: {vertex_map}")
        emit_graph(self, result.graph, options['out'])
