"""
Verification campaign: every published claim about the catalog groups,
recomputed and compared.

Independent jobs go to a process pool; the report lists checks sorted by id so
two runs with the same primes produce the same check list. Runtimes and
timestamps are kept apart from the checks.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from itertools import repeat

import django

from . import __version__, limits
from .bounds import (
    class3_bound_exponent,
    compute_report,
    ellis_inequality_check,
    necessary_conditions,
    niroomand_exponent,
    quotient_scan,
)
from .catalog import build_from_text
from .exceptions import GroupComputationError
from .multiplier import oracle_multiplier
from .pcgroup import check_consistency

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
ALARM = 'alarm'

ORACLE_GROUPS = (
    'elemab@2,rank=2',
    'cyclic@2,m=2',
    'elemab@2,rank=3',
    'd8@2',
    'q8@2',
    'elemab@3,rank=2',
    'es@3',
    'elemab@3,rank=3',
)
BOUND_PRIMES = (3, 5, 7)


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    inputs: dict
    expected: object
    computed: object
    verdict: str
    runtime: float = field(default=0.0, compare=False)


@dataclass
class VerificationReport:
    version: str
    primes: list
    checks: list
    started: str = ''
    finished: str = ''

    @property
    def summary(self):
        counts = {PASS: 0, FAIL: 0, ALARM: 0}
        for check in self.checks:
            counts[check.verdict] += 1
        counts['total'] = len(self.checks)
        return counts

    @property
    def ok(self):
        return self.summary[FAIL] == 0


def _verdict(ok):
    return PASS if ok else FAIL


def _init_worker():
    django.setup()


def _run_in_worker(primes, oracle_cap, job):
    """Run one job in a pool process; returns its checks and the reports it built."""
    campaign = Campaign(primes, oracle_cap=oracle_cap, threads=1)
    return campaign._run_job(job), campaign._reports


class Campaign:
    """
    One run of the verification campaign.

    Args:
        primes (list): primes to run the per-prime families at
        oracle_cap (int): largest group order sent to the bar-resolution oracle
        threads (int): worker processes; 1 runs every job in this process
    """

    def __init__(self, primes, oracle_cap=None, threads=None):
        self.primes = sorted(primes)
        self.oracle_cap = limits.oracle_cap() if oracle_cap is None else oracle_cap
        self.threads = max(1, threads or limits.default_threads())
        self._reports = {}

    # shared state

    def report(self, spec):
        cached = self._reports.get(spec)
        if cached is not None:
            return cached
        pres = build_from_text(spec)
        result = (pres, compute_report(pres, spec))
        self._reports[spec] = result
        return result

    @property
    def odd_primes(self):
        return [p for p in self.primes if p in BOUND_PRIMES]

    @property
    def example_primes(self):
        return [p for p in self.primes if p >= 5]

    # jobs

    def jobs(self):
        """
        (label, method name, args) triples; the label names the job in error
        checks. Plain data, so jobs can be sent to pool processes.
        """
        jobs = [
            ('multiplier/h37@3', 'check_h37_multiplier', ()),
            ('ellis/h37@3', 'check_ellis', ('h37@3',)),
            ('necessary-conditions/h37@3', 'check_necessary_conditions', ('h37@3',)),
            ('scan/h37@3', 'check_scan', ('h37@3',)),
            ('oracle', 'check_oracle', ()),
        ]
        for p in self.example_primes:
            for family in ('example1', 'example2'):
                jobs.append((f'multiplier/{family}@{p}', 'check_example_multiplier', (family, p)))
        for p in self.odd_primes:
            for n in (3, 4, 5):
                spec = f'g1@{p},n={n}'
                jobs.append((f'bound-attained/{spec}', 'check_attains', (spec, (n - 1) * (n - 2) // 2 + 1)))
            jobs.append((f'bound-attained/g2@{p}', 'check_attains', (f'g2@{p}', 6)))
            jobs.append((f'bound-attained/g3@{p}', 'check_attains', (f'g3@{p}', 8)))
            scans = [f'g2@{p}', f'g3@{p}']
            for n in (4, 5):
                g1 = f'g1@{p},n={n}'
                jobs.append((f'necessary-conditions/{g1}', 'check_necessary_conditions', (g1, True)))
                scans.append(g1)
            for spec in (f'g2@{p}', f'g3@{p}'):
                jobs.append((f'necessary-conditions/{spec}', 'check_necessary_conditions', (spec,)))
            if p >= 5:
                scans += [f'example1@{p}', f'example2@{p}']
                jobs.append((f'ellis/example1@{p}', 'check_ellis', (f'example1@{p}',)))
            for spec in scans:
                jobs.append((f'scan/{spec}', 'check_scan', (spec,)))
        return jobs

    def check_h37_multiplier(self):
        _, report = self.report('h37@3')
        m = report.log_multiplier
        return [Check(
            'multiplier/h37@3', 'class-3 counterexample of order 3^7',
            {'spec': 'h37@3'}, 10, m, _verdict(m == 10),
        )]

    def check_example_multiplier(self, family, p):
        spec = f'{family}@{p}'
        _, report = self.report(spec)
        computed = report.multiplier.as_list()
        return [
            Check(
                f'multiplier/{spec}', f'{family} multiplier is Z_p^3',
                {'spec': spec}, [p, p, p], computed, _verdict(computed == [p, p, p]),
            ),
            self.check_class3_bound(spec, report),
        ]

    def check_attains(self, spec, expected):
        _, report = self.report(spec)
        m = report.log_multiplier
        bound = niroomand_exponent(report.n, report.k)
        return [Check(
            f'bound-attained/{spec}', 'groups attaining the Niroomand bound',
            {'spec': spec, 'n': report.n, 'k': report.k}, expected, m,
            _verdict(m == expected == bound),
        )]

    def check_class3_bound(self, spec, report):
        bound = class3_bound_exponent(report.n, report.k)
        m = report.log_multiplier
        if report.p == 3:
            expected, ok = bound + 1, m == bound + 1
        else:
            expected, ok = bound, m <= bound
        return Check(
            f'class3-bound/{spec}', 'class at least 3 and p != 3 sharpens the bound by p',
            {'spec': spec, 'n': report.n, 'k': report.k, 'class': report.c},
            expected, m, _verdict(ok),
        )

    def check_necessary_conditions(self, spec, exempt=False):
        pres, report = self.report(spec)
        conditions = necessary_conditions(pres)
        computed = {
            'i': conditions.gab_elementary,
            'ii': conditions.center_elementary,
            'iii': conditions.center_in_derived,
            'exempt_g1': conditions.exempt_g1,
        }
        if exempt:
            expected = {'i': True, 'ii': True, 'iii': False, 'exempt_g1': True}
            ok = conditions.gab_elementary and conditions.center_elementary and conditions.exempt_g1
        else:
            expected = {'i': True, 'ii': True, 'iii': True, 'exempt_g1': False}
            ok = conditions.gab_elementary and conditions.center_elementary and conditions.center_in_derived
        return [Check(
            f'necessary-conditions/{spec}', 'conditions on groups attaining the bound',
            {'spec': spec}, expected, computed, _verdict(ok),
        )]

    def check_scan(self, spec):
        pres, report = self.report(spec)
        scan = quotient_scan(pres, spec, report=report)
        inputs = {'spec': spec, 'quotients': len(scan.records)}
        failures = sum(1 for r in scan.records if not r.jones_holds)
        checks = [Check(
            f'jones/{spec}', 'divisibility for central quotients',
            inputs, 0, failures, _verdict(failures == 0),
        )]
        if report.attains:
            missing = sum(1 for r in scan.records if r.attains is False)
            checks.append(Check(
                f'quotients-attain/{spec}', 'central order-p quotients keep attaining the bound',
                inputs, 0, missing, _verdict(missing == 0),
            ))
        flags = [scan.maximal_class_ok] + [r.maximal_class_ok for r in scan.records]
        if any(flag is not None for flag in flags):
            bad = sum(1 for flag in flags if flag is False)
            checks.append(Check(
                f'maximal-class/{spec}', 'maximal class groups have |M| <= p^(n-2)',
                {'spec': spec, 'n': report.n, 'log_multiplier': report.log_multiplier},
                0, bad, _verdict(bad == 0),
            ))
        if report.c >= 3:
            checks.append(self.check_class3_bound(spec, report))
        return checks

    def check_ellis(self, spec):
        pres, report = self.report(spec)
        psi = ellis_inequality_check(pres, report)
        inputs = {'spec': spec}
        checks = [Check(
            f'ellis/{spec}', 'class 3 inequality with the psi images',
            inputs, {'lhs_at_most': psi.rhs_exp}, psi.lhs_exp, _verdict(psi.holds),
        )]
        if spec.startswith('h37'):
            checks.append(Check(
                f'psi3/{spec}', 'psi3 vanishes on the class-3 counterexample',
                inputs, 0, psi.dim_psi3, _verdict(psi.dim_psi3 == 0),
            ))
        if spec.startswith('example1'):
            checks.append(Check(
                f'psi2/{spec}', 'psi2 vanishes on a 2-generated quotient',
                inputs, 0, psi.dim_psi2, _verdict(psi.dim_psi2 == 0),
            ))
        return checks

    def check_oracle(self):
        checks = []
        for spec in ORACLE_GROUPS:
            pres, report = self.report(spec)
            if pres.order > self.oracle_cap:
                continue
            expected = oracle_multiplier(pres, cap=self.oracle_cap).as_list()
            computed = report.multiplier.as_list()
            checks.append(Check(
                f'oracle/{spec}', 'tails method agrees with bar-resolution homology',
                {'spec': spec, 'order': pres.order}, expected, computed, _verdict(expected == computed),
            ))
        return checks

    def report_checks(self):
        """Free-rank, consistency and alarm checks for every group the run touched."""
        checks = []
        for spec, (pres, report) in sorted(self._reports.items()):
            violations = len(check_consistency(pres))
            checks.append(Check(
                f'free-rank/{spec}', 'R/[F,R] has free rank d(G)',
                {'spec': spec}, report.d, report.free_rank_check,
                _verdict(report.d == report.free_rank_check),
            ))
            checks.append(Check(
                f'consistency/{spec}', 'catalog presentations are consistent',
                {'spec': spec}, 0, violations, _verdict(violations == 0),
            ))
            for alarm in report.alarms:
                checks.append(Check(
                    f'alarm/{spec}/{alarm}', 'bound tension flagged for review',
                    {'spec': spec, 'log_multiplier': report.log_multiplier}, None, alarm, ALARM,
                ))
        return checks

    def _run_job(self, job):
        name, method, args = job
        start = time.perf_counter()
        try:
            checks = getattr(self, method)(*args)
        except GroupComputationError as exc:
            logger.error('campaign job %s failed: %s', name, exc)
            checks = [Check(f'error/{name}/{type(exc).__name__}', 'computation error', {}, None, str(exc), FAIL)]
        elapsed = time.perf_counter() - start
        return [replace(c, runtime=elapsed / max(1, len(checks))) for c in checks]

    def _run_jobs(self, jobs):
        if self.threads == 1:
            return [self._run_job(job) for job in jobs]
        results = []
        with ProcessPoolExecutor(max_workers=self.threads, initializer=_init_worker) as pool:
            outcomes = pool.map(_run_in_worker, repeat(self.primes), repeat(self.oracle_cap), jobs)
            for checks, reports in outcomes:
                results.append(checks)
                for spec, built in reports.items():
                    self._reports.setdefault(spec, built)
        return results

    def run(self):
        started = datetime.now(timezone.utc).isoformat()
        logger.info('campaign over primes %s with %d workers', self.primes, self.threads)
        results = self._run_jobs(self.jobs())
        checks = [c for batch in results for c in batch] + self.report_checks()
        by_id = {}
        for check in checks:
            by_id.setdefault(check.id, check)
        report = VerificationReport(
            version=__version__,
            primes=self.primes,
            checks=sorted(by_id.values(), key=lambda c: c.id),
            started=started,
            finished=datetime.now(timezone.utc).isoformat(),
        )
        logger.info('campaign finished: %s', report.summary)
        return report
