from django.core.management.base import CommandError

from ... import limits
from ...campaign import FAIL, Campaign
from ...serializers import VerificationReportSerializer
from ...utils import EXIT_CHECKS_FAILED, EXIT_USAGE, parse_primes
from ..base import GroupCommand


class Command(GroupCommand):
    help = 'Recompute every published multiplier claim for the catalog groups; exit 1 on any failed check'

    def add_arguments(self, parser):
        parser.add_argument('--fast', action='store_true', help='use the fast prime set and skip slow primes')
        parser.add_argument('--primes', help='comma separated primes, overrides --fast')
        parser.add_argument('--json', dest='json_path', metavar='PATH', help='write the JSON report ("-" for stdout)')
        parser.add_argument('--oracle-cap', type=int, default=None, help='largest order sent to the bar-resolution oracle')
        parser.add_argument('--threads', type=int, default=None, help='worker processes (default PGROUPS_THREADS)')

    def primes(self, options):
        if options['primes']:
            try:
                return parse_primes(options['primes'])
            except ValueError as exc:
                raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        if options['fast']:
            return [p for p in limits.fast_primes() if p < limits.slow_prime()]
        return list(limits.full_primes())

    def run(self, *args, **options):
        campaign = Campaign(
            self.primes(options),
            oracle_cap=options['oracle_cap'],
            threads=options['threads'],
        )
        report = campaign.run()
        for check in report.checks:
            marker = {'pass': 'ok  ', 'fail': 'FAIL', 'alarm': 'WARN'}[check.verdict]
            self.stdout.write(f'{marker} {check.id:<48} expected {check.expected!r:<24} got {check.computed!r}')
        summary = report.summary
        self.stdout.write(
            f'{summary["total"]} checks: {summary["pass"]} passed, {summary[FAIL]} failed, {summary["alarm"]} alarms'
        )
        if options['json_path']:
            self.write_json(VerificationReportSerializer(report).data, options['json_path'])
        if not report.ok:
            raise CommandError(f'{summary[FAIL]} checks failed', returncode=EXIT_CHECKS_FAILED)
