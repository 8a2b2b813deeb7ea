from django.core.management.base import CommandError

from apps.rgraphs.management.arguments import (
    EXIT_INPUT,
    EXIT_NEGATIVE,
    RGraphCommand,
    format_sequence,
)
from apps.rgraphs.services import (
    EnumerationLimits,
    RGraphError,
    enumerate_imbalance_sequences,
    verify_equivalence,
)

SEQUENCES = 'sequences'
VERIFY = 'verify'


class Command(RGraphCommand):
    help = 'Enumerate every small r-graph: list its imbalance sequences or verify them against the feasibility check'

    def add_arguments(self, parser):
        parser.add_argument('mode', choices=[SEQUENCES, VERIFY], help='What to report')
        parser.add_argument('-n', dest='n', type=int, required=True, help='Vertex count')
        parser.add_argument('-r', dest='r', type=int, default=1, help='Arc capacity per vertex pair')
        parser.add_argument(
            '--workers',
            type=int,
            default=None,
            help='Worker processes (default: RGRAPH_ORACLE_WORKERS)'
        )

    def handle(self, *args, **options):
        limits = EnumerationLimits.from_settings(options['n'], options['r'])

        try:
            if options['mode'] == SEQUENCES:
                sequences = enumerate_imbalance_sequences(limits, options['workers'])
                for values in sorted(s.values for s in sequences):
                    self.stdout.write(format_sequence(values))
                return
            counterexample = verify_equivalence(limits, options['workers'])
        except RGraphError as e:
            raise CommandError(str(e), returncode=EXIT_INPUT)

        if counterexample is None:
            self.stdout.write(self.style.SUCCESS('EQUIVALENT'))
            return

        self.stdout.write(self.style.ERROR(
            f"COUNTEREXAMPLE {format_sequence(counterexample.values)}: "
            f"realizable={'yes' if counterexample.realizable else 'no'}, "
            f"passes check={'yes' if counterexample.passes_check else 'no'}"
        ))
        raise CommandError('Enumeration and feasibility check disagree', returncode=EXIT_NEGATIVE)
