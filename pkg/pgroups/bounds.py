"""
Multiplier bounds, group reports and structural checks.

Every comparison is made on exponents: a group of order p^n, a derived
subgroup of order p^k and a multiplier of order p^m are handled as the
integers n, k and m.
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exceptions import BoundDomainError, MultiplierSoundnessError, NotApplicableError
from .intlinalg import AbelianInvariants, invariants_from_orders, rank_mod_p
from .multiplier import abelian_presentation, classical_abelian_multiplier, schur_multiplier
from .pcgroup import (
    SubgroupBasis,
    abelianization,
    center,
    central_order_p_subgroups,
    central_quotient,
    commutator,
    contains,
    exponents_modulo,
    has_trivial_powers,
    identity,
    is_elementary_abelian,
    lower_central_series,
    multiply,
    normal_closure,
    power,
    subgroup_presentation,
    whole_group,
)

logger = logging.getLogger(__name__)

ALARM_CLASS3_ATTAINED = 'class3-bound-attained'
ALARM_GREEN = 'green-bound-exceeded'
ALARM_NIROOMAND = 'niroomand-bound-exceeded'
ALARM_FORBIDDEN_N_MINUS_1 = 'forbidden-size-n-minus-1'
ALARM_FORBIDDEN_N_PLUS_1 = 'forbidden-size-n-plus-1'


def green_exponent(n):
    if n < 0:
        raise BoundDomainError(f'n must be nonnegative, got {n}')
    return n * (n - 1) // 2


def _exact(value, what):
    if value.denominator != 1:
        raise BoundDomainError(f'{what} is not an integer: {value}')
    return int(value)


def niroomand_exponent(n, k):
    """
    Exponent of the bound |M(G)| <= p^(1/2 (n+k-2)(n-k-1) + 1) for non-abelian G.

    Raises:
        BoundDomainError: k outside 1..n-1, or a non-integer value
    """
    if not 1 <= k <= n - 1:
        raise BoundDomainError(f'k must lie in 1..{n - 1}, got {k}')
    return _exact(Fraction((n + k - 2) * (n - k - 1), 2) + 1, 'niroomand exponent')


def class3_bound_exponent(n, k):
    """The sharper exponent 1/2 (n+k-2)(n-k-1) for class at least 3 and p != 3."""
    if not 1 <= k <= n - 1:
        raise BoundDomainError(f'k must lie in 1..{n - 1}, got {k}')
    return _exact(Fraction((n + k - 2) * (n - k - 1), 2), 'class 3 exponent')


def forbidden_exponents(n, c, p):
    """Multiplier exponents ruled out for groups of class c >= 3, as (alarm, exponent) pairs."""
    found = []
    if c >= 3:
        found.append((ALARM_FORBIDDEN_N_MINUS_1, green_exponent(n) - (n - 1)))
        if n >= 6 and p % 2:
            found.append((ALARM_FORBIDDEN_N_PLUS_1, green_exponent(n) - (n + 1)))
    return found


def abelian_tensor(a, b):
    """Invariants of A (x) B: one cyclic factor of order gcd(x, y) per pair of factors."""
    if not (a.is_finite and b.is_finite):
        raise BoundDomainError('tensor products are only formed for finite groups')
    return invariants_from_orders([gcd(x, y) for x in a.torsion for y in b.torsion])


def log_order(p, invariants):
    return invariants.log_order(p)


@dataclass(frozen=True)
class NecessaryConditions:
    gab_elementary: bool
    center_elementary: bool
    center_in_derived: bool
    exempt_g1: bool = False

    @property
    def all_hold(self):
        return self.gab_elementary and self.center_elementary and (self.center_in_derived or self.exempt_g1)


@dataclass(frozen=True)
class GroupReport:
    spec: str
    p: int
    n: int
    k: int
    c: int
    d: int
    gab: AbelianInvariants
    center: AbelianInvariants
    multiplier: AbelianInvariants
    free_rank_check: int
    t: int
    green_exp: int
    niroomand_exp: int = None
    attains: bool = False
    conditions: NecessaryConditions = None
    alarms: tuple = field(default=())

    @property
    def log_multiplier(self):
        return self.multiplier.log_order(self.p)

    @property
    def is_abelian(self):
        return self.k == 0

    @property
    def is_maximal_class(self):
        return self.n >= 3 and self.c == self.n - 1


def attains_bound(report):
    """True when log_p|M(G)| equals the Niroomand exponent; abelian groups never attain it."""
    if report.k < 1:
        return False
    return report.log_multiplier == niroomand_exponent(report.n, report.k)


def _invariants_of(pres, basis):
    gab, _ = abelianization(subgroup_presentation(pres, basis))
    return gab


def matches_g1_profile(pres, c, k, center_size):
    """ES_p(p^3) x Z_p^(n-3), recognised by order, class, k, center size and exponent p."""
    return bool(pres.p % 2) and c == 2 and k == 1 and center_size == pres.n - 2 and has_trivial_powers(pres)


def necessary_conditions(pres, series=None, z=None, gab=None):
    """
    The three conditions every group attaining the bound satisfies.

    Returns:
        NecessaryConditions: G^ab elementary abelian, Z(G) elementary abelian,
        Z(G) inside G'; ``exempt_g1`` marks the one family where the last may fail

    Raises:
        NotApplicableError: for abelian groups
    """
    series = series or lower_central_series(pres)
    if len(series) < 3:
        raise NotApplicableError('the conditions are stated for non-abelian groups')
    z = z or center(pres)
    if gab is None:
        gab, _ = abelianization(pres)
    derived = series[1]
    c = len(series) - 1
    return NecessaryConditions(
        gab_elementary=gab.is_elementary(pres.p),
        center_elementary=is_elementary_abelian(pres, z),
        center_in_derived=all(contains(pres, derived, x) for x in z.members),
        exempt_g1=matches_g1_profile(pres, c, derived.size_exponent, z.size_exponent),
    )


def compute_report(pres, spec=''):
    """
    Full invariant report of a consistent presentation.

    Raises:
        MultiplierSoundnessError: if the tails computation fails its free-rank check
    """
    p, n = pres.p, pres.n
    series = lower_central_series(pres)
    c = len(series) - 1
    k = series[1].size_exponent if len(series) > 1 else 0
    gab, d = abelianization(pres)
    z = center(pres)
    result = schur_multiplier(pres)
    m = result.log_order(p)
    green = green_exponent(n)
    niroomand = niroomand_exponent(n, k) if k >= 1 else None
    conditions = necessary_conditions(pres, series, z, gab) if k >= 1 else None

    alarms = []
    if m > green:
        alarms.append(ALARM_GREEN)
    if niroomand is not None and m > niroomand:
        alarms.append(ALARM_NIROOMAND)
    if c >= 3 and p != 3 and m > class3_bound_exponent(n, k):
        alarms.append(ALARM_CLASS3_ATTAINED)
    alarms.extend(name for name, value in forbidden_exponents(n, c, p) if m == value)
    for name in alarms:
        logger.warning('alarm %s for %s (n=%d, k=%d, class %d, log|M|=%d)', name, spec or 'group', n, k, c, m)

    return GroupReport(
        spec=spec,
        p=p,
        n=n,
        k=k,
        c=c,
        d=d,
        gab=gab,
        center=_invariants_of(pres, z),
        multiplier=result.multiplier,
        free_rank_check=result.free_rank_check,
        t=green - m,
        green_exp=green,
        niroomand_exp=niroomand,
        attains=niroomand is not None and m == niroomand,
        conditions=conditions,
        alarms=tuple(alarms),
    )


def _subgroup_elements(pres, basis):
    for coeffs in itertools.product(range(pres.p), repeat=basis.size_exponent):
        x = identity(pres)
        for b, e in zip(basis.members, coeffs):
            if e:
                x = multiply(pres, x, power(pres, b, e))
        yield x


def jones_exponents(pres, k, quotient=None, multiplier_of_g=None):
    """
    Both sides of |M(G)| |G' n K| dividing |M(G/K)| |M(K)| |(G/K)^ab (x) K|, as exponents.

    Raises:
        NotCentralError: if K is not central
    """
    p = pres.p
    a = quotient or central_quotient(pres, k)
    m_g = multiplier_of_g if multiplier_of_g is not None else schur_multiplier(pres).log_order(p)
    derived = lower_central_series(pres)[1] if pres.n else SubgroupBasis()
    meet = sum(1 for x in _subgroup_elements(pres, k) if contains(pres, derived, x))
    meet_exp = _log(meet, p)
    k_pres = subgroup_presentation(pres, k)
    k_ab, _ = abelianization(k_pres)
    a_ab, _ = abelianization(a)
    lhs = m_g + meet_exp
    rhs = (
        schur_multiplier(a).log_order(p)
        + schur_multiplier(k_pres).log_order(p)
        + abelian_tensor(a_ab, k_ab).log_order(p)
    )
    return lhs, rhs


def _log(value, p):
    e = 0
    while value > 1:
        value //= p
        e += 1
    return e


def jones_divisibility_check(pres, k):
    """For p-groups divisibility is an inequality of exponents."""
    lhs, rhs = jones_exponents(pres, k)
    return lhs <= rhs


# Commutator maps for class 3

@dataclass(frozen=True)
class PsiImageReport:
    dim_psi2: int
    dim_psi3: int
    lhs_exp: int
    rhs_exp: int

    @property
    def holds(self):
        return self.lhs_exp <= self.rhs_exp


class _Section:
    """An elementary abelian section upper/lower with GF(p) coordinates."""

    def __init__(self, pres, upper, lower, label):
        self.pres = pres
        self.upper = upper
        self.lower = lower
        lower_depths = set(lower.depths)
        self.reps = [b for b in upper.members if b.depth not in lower_depths]
        p = pres.p
        for x in self.reps:
            if not contains(pres, lower, power(pres, x, p)):
                raise NotApplicableError(f'{label} is not elementary abelian')
        for x, y in itertools.combinations(self.reps, 2):
            if not contains(pres, lower, commutator(pres, x, y)):
                raise NotApplicableError(f'{label} is not abelian')

    @property
    def dim(self):
        return len(self.reps)

    def coords(self, x):
        return exponents_modulo(self.pres, self.upper, self.lower, x)


def _class3_sections(pres):
    series = lower_central_series(pres)
    if len(series) - 1 != 3:
        raise NotApplicableError(f'class 3 is required, got class {len(series) - 1}')
    z = center(pres)
    bar_lower = normal_closure(pres, list(z.members) + list(series[1].members))
    bar_ab = _Section(pres, whole_group(pres), bar_lower, 'the abelianization of G/Z(G)')
    gamma2 = _Section(pres, series[1], series[2], 'gamma_2/gamma_3')
    gamma3 = _Section(pres, series[2], SubgroupBasis(), 'gamma_3')
    return series, bar_ab, gamma2, gamma3


def _tensor(u, v):
    return [a * b for a in u for b in v]


def _span_dim(vectors, width, p):
    if not vectors or not width:
        return 0
    return rank_mod_p(vectors, width, p)


def psi2_image(pres, sections=None):
    """
    F_p-dimension of the image of
    x1 (x) x2 (x) x3 -> [x1,x2] (x) x3 + [x2,x3] (x) x1 + [x3,x1] (x) x2
    in (gamma_2/gamma_3) (x) (G/Z(G))^ab.
    """
    _, bar_ab, gamma2, _ = sections or _class3_sections(pres)
    p = pres.p
    width = gamma2.dim * bar_ab.dim
    reps = bar_ab.reps
    vectors = []
    for x1, x2, x3 in itertools.product(reps, repeat=3):
        total = [0] * width
        for a, b, e in ((x1, x2, x3), (x2, x3, x1), (x3, x1, x2)):
            term = _tensor(gamma2.coords(commutator(pres, a, b)), bar_ab.coords(e))
            total = [s + t for s, t in zip(total, term)]
        vectors.append([v % p for v in total])
    return _span_dim(vectors, width, p)


def psi3_image(pres, sections=None):
    """
    F_p-dimension of the image of
    x1 (x) x2 (x) x3 (x) x4 -> [[x1,x2],x3] (x) x4 + [x4,[x1,x2]] (x) x3
                              + [[x3,x4],x1] (x) x2 + [x2,[x3,x4]] (x) x1
    in gamma_3 (x) (G/Z(G))^ab.
    """
    _, bar_ab, _, gamma3 = sections or _class3_sections(pres)
    p = pres.p
    width = gamma3.dim * bar_ab.dim
    vectors = []
    for x1, x2, x3, x4 in itertools.product(bar_ab.reps, repeat=4):
        c12 = commutator(pres, x1, x2)
        c34 = commutator(pres, x3, x4)
        terms = (
            (commutator(pres, c12, x3), x4),
            (commutator(pres, x4, c12), x3),
            (commutator(pres, c34, x1), x2),
            (commutator(pres, x2, c34), x1),
        )
        total = [0] * width
        for value, e in terms:
            term = _tensor(gamma3.coords(value), bar_ab.coords(e))
            total = [s + t for s, t in zip(total, term)]
        vectors.append([v % p for v in total])
    return _span_dim(vectors, width, p)


def ellis_inequality_check(pres, report=None):
    """
    Compare |M(G)| |gamma_2| |Im psi2| |Im psi3| with
    |M(G^ab)| |gamma_2/gamma_3 (x) Gbar^ab| |gamma_3 (x) Gbar^ab|.

    Raises:
        NotApplicableError: class other than 3, or non-elementary sections
        MultiplierSoundnessError: if M(G^ab) by tails disagrees with the classical formula
    """
    sections = _class3_sections(pres)
    series, bar_ab, gamma2, gamma3 = sections
    p = pres.p
    m = report.log_multiplier if report else schur_multiplier(pres).log_order(p)
    gab, _ = abelianization(pres)
    classical = classical_abelian_multiplier(gab).log_order(p)
    by_tails = schur_multiplier(abelian_presentation(p, gab)).log_order(p)
    if classical != by_tails:
        raise MultiplierSoundnessError(f'M(G^ab): tails give p^{by_tails}, formula gives p^{classical}')
    dim2 = psi2_image(pres, sections)
    dim3 = psi3_image(pres, sections)
    lhs = m + series[1].size_exponent + dim2 + dim3
    rhs = classical + gamma2.dim * bar_ab.dim + gamma3.dim * bar_ab.dim
    return PsiImageReport(dim2, dim3, lhs, rhs)


# Quotient scans

@dataclass(frozen=True)
class QuotientRecord:
    subgroup: str
    report: GroupReport
    jones_lhs: int
    jones_rhs: int
    attains: bool = None
    maximal_class_ok: bool = None

    @property
    def jones_holds(self):
        return self.jones_lhs <= self.jones_rhs


@dataclass(frozen=True)
class ScanResult:
    report: GroupReport
    records: tuple
    maximal_class_ok: bool = None

    @property
    def all_jones_hold(self):
        return all(r.jones_holds for r in self.records)


def _maximal_class_ok(report):
    if not report.is_maximal_class:
        return None
    return report.log_multiplier <= report.n - 2


def quotient_scan(pres, spec='', report=None):
    """
    Report on G/K for every central subgroup K of order p.

    Each record carries the quotient's report, both sides of the Jones
    divisibility, whether the quotient attains the bound (``None`` when it is
    abelian) and the maximal-class check when the quotient has maximal class.
    """
    report = report or compute_report(pres, spec)
    records = []
    for k in central_order_p_subgroups(pres):
        generator = pres.format(k.members[0])
        a = central_quotient(pres, k)
        quotient_report = compute_report(a, f'{spec or "G"} / <{generator}>')
        lhs, rhs = jones_exponents(pres, k, quotient=a, multiplier_of_g=report.log_multiplier)
        records.append(QuotientRecord(
            subgroup=generator,
            report=quotient_report,
            jones_lhs=lhs,
            jones_rhs=rhs,
            attains=None if quotient_report.is_abelian else attains_bound(quotient_report),
            maximal_class_ok=_maximal_class_ok(quotient_report),
        ))
        if lhs > rhs:
            logger.warning('divisibility fails for %s modulo <%s>', spec or 'group', generator)
    logger.info('scanned %d central quotients of %s', len(records), spec or 'group')
    return ScanResult(report, tuple(records), _maximal_class_ok(report))
