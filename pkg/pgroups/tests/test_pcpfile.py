import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from pgroups import pcpfile
from pgroups.catalog import build_from_text
from pgroups.exceptions import PresentationError


class DumpTests(SimpleTestCase):

    def test_canonical_text(self):
        self.assertEqual(
            pcpfile.dumps(build_from_text('es@3')),
            'prime 3\ngenerators 3\nnames x y z\ncomm 2 1 = g3\n',
        )

    def test_powers_and_exponents(self):
        text = pcpfile.dumps(build_from_text('modular@5'))
        self.assertIn('power 1 = g3\n', text)
        self.assertIn('comm 2 1 = g3^4\n', text)

    def test_unnamed_presentation_has_no_names_line(self):
        self.assertNotIn('names', pcpfile.dumps(build_from_text('cyclic@2,m=2')))


class LoadTests(SimpleTestCase):

    def test_reads_what_it_writes(self):
        for text in ['h37', 'example1@5', 'd8', 'g1@3,n=5']:
            pres = build_from_text(text)
            again = pcpfile.loads(pcpfile.dumps(pres))
            self.assertEqual(again, pres, text)
            self.assertEqual(again.names, pres.names, text)

    def test_comments_and_blank_lines(self):
        pres = pcpfile.loads(
            '# quaternion group\n'
            'prime 2\n'
            '\n'
            'generators 3   # i, j, -1\n'
            'power 1 = g3\n'
            'power 2 = g3\n'
            'comm 2 1 = g3\n'
            'power 3 = 1\n'
        )
        self.assertEqual(pres, build_from_text('q8'))

    def test_file_round_trip(self):
        pres = build_from_text('g2@5')
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'g2.pcp'
            pcpfile.dump(pres, path)
            self.assertEqual(pcpfile.load(path), pres)
            self.assertEqual(build_from_text(f'file:{path}'), pres)

    def test_errors_name_the_line(self):
        cases = {
            'prime 3\ngenerators 2\ncomm 2 1 = g1\n': 'echelon',
            'prime 3\ngenerators 3\npower 1 = g3*g2\n': 'line 3',
            'prime 3\ngenerators 2\npower 1 = h2\n': 'line 3',
            'prime 3\ngenerators two\n': 'line 2',
            'prime 3\ngenerators 2\nrelator g1\n': 'line 3',
            'prime 3\ngenerators 2\npower 1 g2\n': 'line 3',
            'prime 3\ngenerators 2\npower 1 = g2\npower 1 = g2\n': 'line 4',
            'power 1 = g2\n': 'line 1',
            'prime 3\n': 'required',
            'prime 3\ngenerators 2\ncomm 2 1 = g5\n': 'line 3',
        }
        for text, fragment in cases.items():
            with self.assertRaises(PresentationError, msg=text) as ctx:
                pcpfile.loads(text)
            self.assertIn(fragment, str(ctx.exception), text)
