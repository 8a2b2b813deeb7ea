from apps.rgraphs.management.arguments import RGraphCommand, emit_graph, load_graph
from apps.rgraphs.services import arc_count, reduce_with_log


class Command(RGraphCommand):
    help = 'Apply arc-reducing moves to a graph file until it is transitive'

    def add_arguments(self, parser):
        parser.add_argument('in_path', type=str, help='Graph file to reduce')
        parser.add_argument('-o', '--out', type=str, default=None, help='Graph file to write (default: stdout)')

    def handle(self, *args, **options):
        graph = load_graph(options['in_path'])
        reduced, log = reduce_with_log(graph)

        self.stdout.write(f"# arcs before: {arc_count(graph)}")
        self.stdout.write(f"# arcs after: {arc_count(reduced)}")
        if not log:
            self.stdout.write('# moves: none')
        for move in log:
            self.stdout.write(f"# move: {move}")
        emit_graph(self, reduced, options['out'])
