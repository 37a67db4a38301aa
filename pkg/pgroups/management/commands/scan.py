from ...bounds import quotient_scan
from ...serializers import ScanSerializer
from ...utils import format_invariants, format_power
from ..base import GroupCommand


def _flag(value):
    if value is None:
        return 'n/a'
    return 'yes' if value else 'no'


class Command(GroupCommand):
    help = 'Report G/K for every central subgroup K of order p'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='group spec')
        parser.add_argument('--json', dest='json_path', metavar='PATH', help='also write the JSON scan ("-" for stdout)')

    def run(self, *args, **options):
        spec, pres = self.load_group(options['spec'])
        scan = quotient_scan(pres, spec)
        p = pres.p
        self.stdout.write(f'{spec}: {len(scan.records)} central subgroups of order {p}')
        self.stdout.write(f'{"K":<16} {"|G/K|":<8} {"class":<6} {"M(G/K)":<24} {"attains":<8} jones')
        for record in scan.records:
            q = record.report
            jones = 'pass' if record.jones_holds else 'FAIL'
            self.stdout.write(
                f'{"<" + record.subgroup + ">":<16} {format_power(p, q.n):<8} {q.c:<6} '
                f'{format_invariants(q.multiplier):<24} {_flag(record.attains):<8} '
                f'{jones} ({record.jones_lhs} <= {record.jones_rhs})'
            )
        if scan.maximal_class_ok is not None:
            self.stdout.write(f'maximal class: |M| <= p^(n-2) {_flag(scan.maximal_class_ok)}')
        if options['json_path']:
            self.write_json(ScanSerializer(scan).data, options['json_path'])
