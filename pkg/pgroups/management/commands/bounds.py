from django.core.management.base import BaseCommand, CommandError

from ...bounds import class3_bound_exponent, green_exponent, niroomand_exponent
from ...exceptions import BoundDomainError
from ...utils import EXIT_USAGE


class Command(BaseCommand):
    help = 'Multiplier bound exponents for a group of order p^n with |G\'| = p^k'

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('n', type=int)
        parser.add_argument('k', type=int)

    def handle(self, *args, **options):
        n, k = options['n'], options['k']
        try:
            self.stdout.write(f'green      {green_exponent(n)}')
            if k == 0:
                self.stdout.write('niroomand  n/a (abelian)')
                return
            self.stdout.write(f'niroomand  {niroomand_exponent(n, k)}')
            self.stdout.write(f'class>=3   {class3_bound_exponent(n, k)}')
        except BoundDomainError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
