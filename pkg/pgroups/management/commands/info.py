from ...bounds import compute_report
from ...serializers import GroupReportSerializer
from ...utils import report_lines
from ..base import GroupCommand


class Command(GroupCommand):
    help = 'Invariant report of one group: order, class, G^ab, Z(G), M(G), t(G) and the bound status'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='group spec, e.g. "g3@3" or "es@3 x elemab@3,rank=1"')
        parser.add_argument('--json', dest='json_path', metavar='PATH', help='also write the JSON report ("-" for stdout)')

    def run(self, *args, **options):
        spec, pres = self.load_group(options['spec'])
        report = compute_report(pres, spec)
        for line in report_lines(report):
            self.stdout.write(line)
        if options['json_path']:
            self.write_json(GroupReportSerializer(report).data, options['json_path'])
