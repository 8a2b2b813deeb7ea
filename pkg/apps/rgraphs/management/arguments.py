"""
Argument parsing and output helpers shared by the r-graph management commands.

Exit codes: 0 success, 1 domain-negative answer, 2 input or validation
error, 3 internal invariant breach.
"""
import logging
import re
from contextlib import contextmanager

from django.core.management.base import BaseCommand, CommandError

from apps.rgraphs.services import GraphFileError, read_graph, serialize_graph, write_graph

EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

# Lets argparse take "-2,-2,4" as a positional value instead of an option.
# Relies on argparse internals: _parse_optional consults this private
# matcher in Python 3.12 and 3.13.
NEGATIVE_LIST = re.compile(r'^-\d+(\s*,\s*-?\d+)*$')


def allow_negative_lists(parser):
    parser._negative_number_matcher = NEGATIVE_LIST


@contextmanager
def verbosity_level(verbosity):
    """Raise the apps.rgraphs logger to INFO (-v 2) or DEBUG (-v 3) until the block exits."""
    logger = logging.getLogger('apps.rgraphs')
    previous = logger.level
    if verbosity >= 2:
        logger.setLevel(logging.DEBUG if verbosity >= 3 else logging.INFO)
    try:
        yield
    finally:
        logger.setLevel(previous)


class RGraphCommand(BaseCommand):
    def execute(self, *args, **options):
        with verbosity_level(options.get('verbosity', 1)):
            return super().execute(*args, **options)


def parse_int_list(text, label='sequence'):
    """Parse "-2,-2,4" into [-2, -2, 4]."""
    try:
        values = [int(part) for part in text.split(',')]
    except ValueError:
        raise CommandError(f"Malformed {label} {text!r}: expected comma-separated integers", returncode=EXIT_INPUT)
    return values


def load_graph(path):
    try:
        return read_graph(path)
    except GraphFileError as e:
        raise CommandError(f"{path}: {e}", returncode=EXIT_INPUT)
    except OSError as e:
        raise CommandError(f"Cannot read {path}: {e}", returncode=EXIT_INPUT)


def emit_graph(command, graph, out_path):
    """Write the graph to `out_path`, or to stdout when no path is given."""
    if out_path:
        try:
            write_graph(graph, out_path)
        except OSError as e:
            raise CommandError(f"Cannot write {out_path}: {e}", returncode=EXIT_INPUT)
    else:
        command.stdout.write(serialize_graph(graph), ending='')


def format_sequence(values):
    return '[' + ', '.join(str(v) for v in values) + ']'


def format_set(values):
    return '{' + ', '.join(str(v) for v in sorted(values)) + '}'
