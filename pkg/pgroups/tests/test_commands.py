import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from pgroups.campaign import FAIL, PASS, Campaign, _run_in_worker


class SmallCampaign(Campaign):

    def jobs(self):
        return [
            ('bound-attained/g1@3,n=5', 'check_attains', ('g1@3,n=5', 7)),
            ('necessary-conditions/g2@3', 'check_necessary_conditions', ('g2@3',)),
            ('scan/es@2', 'check_scan', ('es@2',)),
        ]


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class InfoCommandTests(SimpleTestCase):

    def test_human_report(self):
        output = run('info', 'es@3')
        self.assertIn('group        es@3', output)
        self.assertIn('M(G)         Z3 x Z3  (order 3^2)', output)
        self.assertIn('bound        3^2 attained', output)
        self.assertNotIn('ALARM', output)

    def test_abelian_report(self):
        output = run('info', 'elemab@5,rank=2')
        self.assertIn('bound        n/a (abelian)', output)
        self.assertNotIn('necessary', output)

    def test_json_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'g2.json'
            run('info', 'g2@3', '--json', str(path))
            data = json.loads(path.read_text(encoding='utf-8'))
        self.assertEqual(data['group']['class'], 2)
        self.assertEqual(data['bounds']['niroomand_exp'], 6)
        self.assertEqual(data['bounds']['t'], 4)
        self.assertTrue(data['bounds']['attains'])
        self.assertEqual(data['lemma31'], {'i': True, 'ii': True, 'iii': True, 'exempt_g1': False})
        self.assertEqual(data['checks'], [])

    def test_bad_spec_exits_with_usage_status(self):
        for spec in ['h37@5', 'es@', 'nosuch@3']:
            with self.assertRaises(CommandError, msg=spec) as ctx:
                run('info', spec)
            self.assertEqual(ctx.exception.returncode, 2, spec)


class ScanCommandTests(SimpleTestCase):

    def test_table(self):
        output = run('scan', 'g2@3')
        self.assertIn('g2@3: 4 central subgroups of order 3', output)
        self.assertEqual(output.count('pass ('), 4)
        self.assertNotIn('FAIL', output)

    def test_abelian_quotients_are_not_applicable(self):
        output = run('scan', 'es@3')
        self.assertIn('n/a', output)

    def test_maximal_class_line(self):
        output = run('scan', 'example2@5')
        self.assertIn('maximal class: |M| <= p^(n-2) yes', output)


class OracleCommandTests(SimpleTestCase):

    def test_match(self):
        output = run('oracle', 'd8')
        self.assertIn('d8@2: H2 = Z2', output)
        self.assertIn('match=true', output)

    def test_cap(self):
        with self.assertRaises(CommandError) as ctx:
            run('oracle', 'h37')
        self.assertEqual(ctx.exception.returncode, 4)
        with self.assertRaises(CommandError) as ctx:
            run('oracle', 'es@3', '--oracle-cap', '8')
        self.assertEqual(ctx.exception.returncode, 4)


class BoundsCommandTests(SimpleTestCase):

    def test_values(self):
        output = run('bounds', '7', '4')
        self.assertIn('green      21', output)
        self.assertIn('niroomand  10', output)
        self.assertIn('class>=3   9', output)

    def test_abelian(self):
        self.assertIn('niroomand  n/a (abelian)', run('bounds', '4', '0'))

    def test_domain_error(self):
        with self.assertRaises(CommandError) as ctx:
            run('bounds', '3', '5')
        self.assertEqual(ctx.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):

    def test_bad_prime_list(self):
        with self.assertRaises(CommandError) as ctx:
            run('verify_paper', '--primes', '3,4')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_run_at_three(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'report.json'
            output = run('verify_paper', '--primes', '3', '--oracle-cap', '8', '--json', str(path))
            data = json.loads(path.read_text(encoding='utf-8'))
        self.assertIn('0 failed', output)
        self.assertEqual(data['primes'], [3])
        self.assertEqual(data['summary']['fail'], 0)
        ids = [check['id'] for check in data['checks']]
        self.assertEqual(ids, sorted(ids))
        for expected in [
            'multiplier/h37@3',
            'psi3/h37@3',
            'ellis/h37@3',
            'bound-attained/g3@3',
            'necessary-conditions/g1@3,n=4',
            'quotients-attain/g3@3',
            'class3-bound/h37@3',
            'oracle/d8@2',
            'free-rank/h37@3',
        ]:
            self.assertIn(expected, ids)
        self.assertNotIn('oracle/es@3', ids)
        self.assertIn('runtimes', data['timing'])


class CampaignTests(SimpleTestCase):

    def test_oracle_checks_pass(self):
        checks = Campaign([3], oracle_cap=27).check_oracle()
        self.assertEqual(len(checks), 8)
        self.assertTrue(all(c.verdict == PASS for c in checks))

    def test_failed_jobs_become_checks(self):
        checks = Campaign([3])._run_job(('scan/es@2', 'check_scan', ('es@2',)))
        self.assertEqual(len(checks), 1)
        self.assertEqual(checks[0].verdict, FAIL)
        self.assertEqual(checks[0].id, 'error/scan/es@2/SpecParameterError')

    def test_example_primes(self):
        campaign = Campaign([3, 5, 7])
        self.assertEqual(campaign.example_primes, [5, 7])
        labels = [label for label, _, _ in campaign.jobs()]
        self.assertIn('multiplier/example2@7', labels)
        self.assertIn('ellis/example1@5', labels)
        self.assertEqual(len(labels), len(set(labels)))

    def test_g1_is_scanned_at_two_sizes(self):
        labels = [label for label, _, _ in Campaign([3]).jobs()]
        for n in (4, 5):
            self.assertIn(f'scan/g1@3,n={n}', labels)
            self.assertIn(f'necessary-conditions/g1@3,n={n}', labels)

    def test_worker_returns_its_reports(self):
        checks, reports = _run_in_worker([3], 8, ('bound-attained/g1@3,n=5', 'check_attains', ('g1@3,n=5', 7)))
        self.assertEqual([c.verdict for c in checks], [PASS])
        self.assertIn('g1@3,n=5', reports)

    def test_process_pool_matches_serial_run(self):
        serial = SmallCampaign([3], oracle_cap=8, threads=1).run()
        pooled = SmallCampaign([3], oracle_cap=8, threads=2).run()
        self.assertEqual(
            [(c.id, c.verdict, c.computed) for c in pooled.checks],
            [(c.id, c.verdict, c.computed) for c in serial.checks],
        )
        self.assertIn('free-rank/g1@3,n=5', [c.id for c in pooled.checks])
