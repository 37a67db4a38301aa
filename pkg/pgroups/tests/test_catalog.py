from django.test import SimpleTestCase

from pgroups.catalog import GroupSpec, build, build_from_text, is_bound_family_group, parse_spec, render
from pgroups.exceptions import SpecParameterError, SpecSyntaxError
from pgroups.pcgroup import center, derived_subgroup, has_trivial_powers, nilpotency_class


class ParseSpecTests(SimpleTestCase):

    def test_family_and_parameters(self):
        self.assertEqual(parse_spec('g1@5,n=4'), GroupSpec('g1', 5, (('n', 4),)))
        self.assertEqual(parse_spec('elemab@3,rank=2'), GroupSpec('elemab', 3, (('rank', 2),)))

    def test_defaults_are_filled_in(self):
        self.assertEqual(parse_spec('g1@5'), GroupSpec('g1', 5, (('n', 3),)))
        self.assertEqual(render(parse_spec('  g1@5 ')), 'g1@5,n=3')

    def test_forced_prime(self):
        self.assertEqual(parse_spec('h37'), GroupSpec('h37', 3))
        self.assertEqual(parse_spec('q8').p, 2)

    def test_product(self):
        spec = parse_spec('es@3 x elemab@3,rank=1')
        self.assertEqual(spec.family, 'product')
        self.assertEqual(spec.p, 3)
        self.assertEqual(len(spec.product), 2)
        self.assertEqual(render(spec), 'es@3 x elemab@3,rank=1')

    def test_render_parses_back(self):
        for text in ['g3@7', 'h37', 'cyclic@2,m=3', 'es@5 x g2@5', 'file:groups/a.pcp']:
            spec = parse_spec(text)
            self.assertEqual(parse_spec(render(spec)), spec, text)

    def test_file_spec(self):
        self.assertEqual(parse_spec('file:groups/h37.pcp'), GroupSpec('file', path='groups/h37.pcp'))

    def test_syntax_errors_report_positions(self):
        cases = {
            'es@': 3,
            'es@3,n': 6,
            'es@3;x': 4,
            '@3': 0,
            'es@3,n=x': 7,
            '': 0,
        }
        for text, position in cases.items():
            with self.assertRaises(SpecSyntaxError, msg=text) as ctx:
                parse_spec(text)
            self.assertEqual(ctx.exception.position, position, text)

    def test_parameter_errors(self):
        for text in [
            'h37@5',
            'es@2',
            'es@4',
            'example1@3',
            'g1@5,n=2',
            'g1@5,rank=2',
            'es',
            'nosuch@3',
            'es@3 x es@5',
            'd8@3',
        ]:
            with self.assertRaises(SpecParameterError, msg=text):
                parse_spec(text)

    def test_bound_family_groups(self):
        self.assertTrue(is_bound_family_group(parse_spec('g2@3')))
        self.assertTrue(is_bound_family_group(parse_spec('es@3 x g1@3,n=4')))
        self.assertFalse(is_bound_family_group(parse_spec('d8')))
        self.assertFalse(is_bound_family_group(parse_spec('file:a.pcp')))


class BuildTests(SimpleTestCase):

    def profile(self, text):
        pres = build_from_text(text)
        return pres.n, derived_subgroup(pres).size_exponent, nilpotency_class(pres)

    def test_profiles(self):
        expected = {
            'es@5': (3, 1, 2),
            'g1@5,n=6': (6, 1, 2),
            'g2@7': (5, 2, 2),
            'g3@5': (6, 3, 2),
            'h37': (7, 4, 3),
            'example1@5': (5, 3, 3),
            'example2@7': (5, 3, 4),
            'elemab@3,rank=4': (4, 0, 1),
            'cyclic@3,m=2': (2, 0, 1),
            'd8': (3, 1, 2),
            'q8': (3, 1, 2),
            'modular@5': (3, 1, 2),
        }
        for text, profile in expected.items():
            self.assertEqual(self.profile(text), profile, text)

    def test_exponent_p_families(self):
        for text in ['es@3', 'g2@3', 'g3@3', 'h37', 'example1@5', 'example2@5']:
            self.assertTrue(has_trivial_powers(build_from_text(text)), text)

    def test_centers_of_order_eight(self):
        for text in ['d8', 'q8']:
            self.assertEqual(center(build_from_text(text)).size_exponent, 1, text)

    def test_product_equals_g1(self):
        self.assertEqual(build_from_text('es@3 x elemab@3,rank=1'), build_from_text('g1@3,n=4'))

    def test_empty_factor_builds(self):
        self.assertEqual(build_from_text('elemab@5,rank=0').n, 0)
        self.assertEqual(build_from_text('cyclic@5,m=0').n, 0)

    def test_missing_file(self):
        with self.assertRaises(SpecParameterError):
            build(parse_spec('file:/nonexistent/group.pcp'))
