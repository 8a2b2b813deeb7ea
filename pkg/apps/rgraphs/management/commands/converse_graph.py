from apps.rgraphs.management.arguments import RGraphCommand, emit_graph, format_sequence, load_graph
from apps.rgraphs.services import converse, imbalance_sequence


class Command(RGraphCommand):
    help = 'Reverse every arc of a graph file'

    def add_arguments(self, parser):
        parser.add_argument('in_path', type=str, help='Graph file to reverse')
        parser.add_argument('-o', '--out', type=str, default=None, help='Graph file to write (default: stdout)')

    def handle(self, *args, **options):
        graph = load_graph(options['in_path'])
        reversed_graph = converse(graph)
        self.stdout.write(f"# sequence: {format_sequence(imbalance_sequence(graph))}")
        self.stdout.write(f"# converse sequence: {format_sequence(imbalance_sequence(reversed_graph))}")
        emit_graph(self, reversed_graph, options['out'])
