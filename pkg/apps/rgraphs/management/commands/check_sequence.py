from django.core.management.base import CommandError

from apps.rgraphs.management.arguments import (
    EXIT_INPUT,
    EXIT_NEGATIVE,
    RGraphCommand,
    allow_negative_lists,
    parse_int_list,
)
from apps.rgraphs.services import RGraphError, SortOrder, check_feasible


class Command(RGraphCommand):
    help = 'Decide whether an integer sequence is the imbalance sequence of an r-graph'

    def add_arguments(self, parser):
        allow_negative_lists(parser)
        parser.add_argument('sequence', type=str, help='Comma-separated integers, e.g. "-2,-2,4"')
        parser.add_argument('-r', dest='r', type=int, default=1, help='Arc capacity per vertex pair')
        parser.add_argument(
            '--order',
            choices=SortOrder.values,
            default=SortOrder.NON_DECREASING,
            help='Order the sequence is given in (default: non-decreasing)'
        )

    def handle(self, *args, **options):
        values = parse_int_list(options['sequence'])

        try:
            verdict = check_feasible(values, options['r'], options['order'])
        except RGraphError as e:
            raise CommandError(str(e), returncode=EXIT_INPUT)

        if verdict:
            self.stdout.write(self.style.SUCCESS('FEASIBLE'))
            return

        witness = verdict.witness
        self.stdout.write(self.style.WARNING(f"INFEASIBLE at k={witness.k}: {witness.lhs} vs {witness.rhs}"))
        raise CommandError('Sequence is not feasible', returncode=EXIT_NEGATIVE)
