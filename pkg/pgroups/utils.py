from rest_framework import status
from sympy import isprime

from .exceptions import (
    NotApplicableError,
    NotCentralError,
    ResourceCapExceeded,
    SpecParameterError,
    SpecSyntaxError,
)

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_USAGE = 2
EXIT_COMPUTATION = 3
EXIT_CAP = 4

INVARIANT_DISPLAY_LIMIT = 12


def exit_code_for(exc):
    """
    Map a library error onto a command exit status

    Args:
        exc (Exception): the error raised by the library

    Returns:
        int: 2 for spec errors, 4 for resource caps, 3 for anything else
    """
    if isinstance(exc, (SpecSyntaxError, SpecParameterError)):
        return EXIT_USAGE
    if isinstance(exc, ResourceCapExceeded):
        return EXIT_CAP
    return EXIT_COMPUTATION


def http_status_for(exc):
    if isinstance(exc, (SpecSyntaxError, SpecParameterError)):
        return status.HTTP_400_BAD_REQUEST
    if isinstance(exc, ResourceCapExceeded):
        return status.HTTP_413_REQUEST_ENTITY_TOO_LARGE
    if isinstance(exc, (NotApplicableError, NotCentralError)):
        return status.HTTP_422_UNPROCESSABLE_ENTITY
    return status.HTTP_500_INTERNAL_SERVER_ERROR


def format_invariants(invariants, limit=INVARIANT_DISPLAY_LIMIT):
    """
    Human form of abelian invariants, long lists cut after ``limit`` factors

    Args:
        invariants (AbelianInvariants): the invariants
        limit (int): how many cyclic factors to show

    Returns:
        str: e.g. ``Z3 x Z3``, ``1`` for the trivial group
    """
    parts = [f'Z{d}' for d in invariants.torsion]
    if invariants.free_rank:
        parts.extend(['Z'] * invariants.free_rank)
    if not parts:
        return '1'
    if len(parts) > limit:
        return ' x '.join(parts[:limit]) + f' x ... ({len(parts) - limit} more)'
    return ' x '.join(parts)


def format_power(p, exponent):
    return f'{p}^{exponent}'


def parse_primes(text):
    """
    Read a comma separated prime list such as ``3,5,7``

    Raises:
        ValueError: on a token that is not a prime
    """
    primes = []
    for token in text.split(','):
        token = token.strip()
        if not token:
            continue
        if not token.isdigit() or not isprime(int(token)):
            raise ValueError(f'{token!r} is not a prime')
        primes.append(int(token))
    if not primes:
        raise ValueError('no primes given')
    return sorted(set(primes))


def report_lines(report):
    """Lines of the human rendering of a GroupReport."""
    p = report.p
    lines = [
        f'group        {report.spec or "(unnamed)"}',
        f'order        {format_power(p, report.n)}',
        f'class        {report.c}',
        f"|G'|         {format_power(p, report.k)}",
        f'd(G)         {report.d}',
        f'G^ab         {format_invariants(report.gab)}',
        f'Z(G)         {format_invariants(report.center)}',
        f'M(G)         {format_invariants(report.multiplier)}  (order {format_power(p, report.log_multiplier)})',
        f't(G)         {report.t}',
    ]
    if report.niroomand_exp is None:
        lines.append('bound        n/a (abelian)')
    else:
        verdict = 'attained' if report.attains else 'not attained'
        lines.append(f'bound        {format_power(p, report.niroomand_exp)} {verdict}')
    conditions = report.conditions
    if conditions is not None:
        flags = [
            f'(i) {_yes_no(conditions.gab_elementary)}',
            f'(ii) {_yes_no(conditions.center_elementary)}',
            f'(iii) {_yes_no(conditions.center_in_derived)}',
        ]
        if conditions.exempt_g1:
            flags.append('ES x Z_p exemption')
        lines.append('necessary    ' + ', '.join(flags))
    for alarm in report.alarms:
        lines.append(f'ALARM        {alarm}')
    return lines


def _yes_no(flag):
    return 'yes' if flag else 'no'
