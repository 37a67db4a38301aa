from ... import limits
from ...multiplier import oracle_multiplier, schur_multiplier
from ...utils import format_invariants
from ..base import GroupCommand


class Command(GroupCommand):
    help = 'H_2(G; Z) from the bar resolution, compared with the tails computation'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='group spec')
        parser.add_argument('--oracle-cap', type=int, default=None, help='largest group order accepted')

    def run(self, *args, **options):
        spec, pres = self.load_group(options['spec'])
        cap = options['oracle_cap'] or limits.oracle_cap()
        h2 = oracle_multiplier(pres, cap=cap)
        tails = schur_multiplier(pres).multiplier
        self.stdout.write(f'{spec}: H2 = {format_invariants(h2)}')
        self.stdout.write(f'tails = {format_invariants(tails)}, match={"true" if h2 == tails else "false"}')
