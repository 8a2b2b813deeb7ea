from apps.rgraphs.management.arguments import RGraphCommand, load_graph
from apps.rgraphs.services import render_dot


class Command(RGraphCommand):
    help = 'Print a graph file as Graphviz DOT'

    def add_arguments(self, parser):
        parser.add_argument('in_path', type=str, help='Graph file to export')

    def handle(self, *args, **options):
        graph = load_graph(options['in_path'])
        self.stdout.write(render_dot(graph), ending='')
