from math import gcd
from random import Random

from django.test import SimpleTestCase
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith

from pgroups.exceptions import DimensionMismatchError
from pgroups.intlinalg import (
    AbelianInvariants,
    IntMatrix,
    abelian_invariants,
    invariants_from_orders,
    nullspace_mod_p,
    p_part,
    p_valuation,
    rank_mod_p,
    smith_normal_form,
    sparse_smith_form,
    xgcd,
)


class SmithNormalFormTests(SimpleTestCase):

    def test_textbook_matrix(self):
        m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        self.assertEqual(smith_normal_form(m), ([2, 6, 12], 3))

    def test_zero_and_empty_matrices(self):
        self.assertEqual(smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]])), ([], 0))
        self.assertEqual(smith_normal_form(IntMatrix.from_rows([], 3)), ([], 0))

    def test_rank_deficient(self):
        m = IntMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 5]])
        diagonal, rank = smith_normal_form(m)
        self.assertEqual(rank, 2)
        self.assertEqual(diagonal, [1, 5])

    def test_agrees_with_sympy(self):
        rng = Random(7)
        for _ in range(25):
            rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
            diagonal, _ = smith_normal_form(IntMatrix.from_rows(rows))
            reference = sympy_smith(Matrix(rows), domain=ZZ)
            expected = [abs(int(reference[i, i])) for i in range(4) if reference[i, i] != 0]
            self.assertEqual(diagonal, expected, rows)

    def test_minor_gcd_law(self):
        # d1 is the gcd of all entries and d1*...*dn = |det| for a nonsingular square matrix
        rng = Random(11)
        checked = 0
        while checked < 25:
            rows = [[rng.randint(-12, 12) for _ in range(3)] for _ in range(3)]
            det = int(Matrix(rows).det())
            if det == 0:
                continue
            diagonal, rank = smith_normal_form(IntMatrix.from_rows(rows))
            self.assertEqual(rank, 3)
            entries_gcd = 0
            for row in rows:
                for v in row:
                    entries_gcd = gcd(entries_gcd, v)
            self.assertEqual(diagonal[0], entries_gcd)
            self.assertEqual(diagonal[0] * diagonal[1] * diagonal[2], abs(det))
            for a, b in zip(diagonal, diagonal[1:]):
                self.assertEqual(b % a, 0)
            checked += 1

    def test_sparse_matches_dense(self):
        rng = Random(3)
        for _ in range(20):
            nrows, ncols = rng.randint(1, 9), rng.randint(1, 7)
            rows = [
                [rng.choice([0, 0, 0, 1, -1, 2, 3, -4]) for _ in range(ncols)]
                for _ in range(nrows)
            ]
            dense, dense_rank = smith_normal_form(IntMatrix.from_rows(rows))
            sparse, sparse_rank = sparse_smith_form(
                [{c: v for c, v in enumerate(row) if v} for row in rows], ncols
            )
            self.assertEqual(sparse, dense, rows)
            self.assertEqual(sparse_rank, dense_rank)

    def test_row_and_column_permutations(self):
        rng = Random(19)
        for _ in range(20):
            nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
            rows = [[rng.randint(-8, 8) for _ in range(ncols)] for _ in range(nrows)]
            expected = smith_normal_form(IntMatrix.from_rows(rows, ncols))
            row_order = list(range(nrows))
            col_order = list(range(ncols))
            rng.shuffle(row_order)
            rng.shuffle(col_order)
            shuffled = [[rows[r][c] for c in col_order] for r in row_order]
            self.assertEqual(smith_normal_form(IntMatrix.from_rows(shuffled, ncols)), expected, rows)
            sparse = sparse_smith_form(
                [{c: v for c, v in enumerate(row) if v} for row in shuffled], ncols
            )
            self.assertEqual(sparse, expected, rows)


class AbelianInvariantsTests(SimpleTestCase):

    def test_diagonal_relations(self):
        inv = abelian_invariants(IntMatrix.from_rows([[2, 0], [0, 4]]), 2)
        self.assertEqual(inv, AbelianInvariants((2, 4), 0))
        self.assertEqual(inv.order, 8)
        self.assertEqual(str(inv), 'Z2 x Z4')

    def test_free_part(self):
        inv = abelian_invariants(IntMatrix.from_rows([[4, 0]]), 2)
        self.assertEqual(inv, AbelianInvariants((4,), 1))
        self.assertFalse(inv.is_finite)
        self.assertIsNone(inv.order)
        self.assertEqual(inv.as_list(), [4, 0])

    def test_coprime_factors_merge(self):
        self.assertEqual(invariants_from_orders([2, 3]).torsion, (6,))
        self.assertEqual(invariants_from_orders([1, 1]), AbelianInvariants())

    def test_redundant_relations_change_nothing(self):
        rng = Random(23)
        for _ in range(20):
            nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
            rows = [[rng.randint(-6, 6) for _ in range(ncols)] for _ in range(nrows)]
            expected = abelian_invariants(IntMatrix.from_rows(rows, ncols), ncols)
            extended = list(rows)
            for _ in range(rng.randint(1, 4)):
                coefficients = [rng.randint(-3, 3) for _ in range(nrows)]
                extended.append([sum(a * row[c] for a, row in zip(coefficients, rows)) for c in range(ncols)])
            rng.shuffle(extended)
            self.assertEqual(abelian_invariants(IntMatrix.from_rows(extended, ncols), ncols), expected, rows)

    def test_column_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            abelian_invariants(IntMatrix.from_rows([[1, 2, 3]]), 2)

    def test_broken_chain_rejected(self):
        with self.assertRaises(ValueError):
            AbelianInvariants((4, 2))

    def test_p_group_queries(self):
        inv = AbelianInvariants((3, 9))
        self.assertTrue(inv.is_p_group(3))
        self.assertFalse(inv.is_elementary(3))
        self.assertEqual(inv.log_order(3), 3)
        self.assertEqual(str(AbelianInvariants()), '1')
        with self.assertRaises(ValueError):
            AbelianInvariants((6,)).log_order(2)


class NumberTheoryTests(SimpleTestCase):

    def test_xgcd(self):
        for a, b in [(240, 46), (-7, 3), (0, 5), (12, 0)]:
            x, y, g = xgcd(a, b)
            self.assertEqual(g, gcd(a, b))
            self.assertEqual(x * a + y * b, g)

    def test_valuations(self):
        self.assertEqual(p_valuation(72, 2), 3)
        self.assertEqual(p_part(72, 3), 9)


class ModPTests(SimpleTestCase):

    def test_rank(self):
        self.assertEqual(rank_mod_p([[1, 2], [2, 4]], 2, 5), 1)
        self.assertEqual(rank_mod_p([[1, 2], [3, 1]], 2, 5), 1)
        self.assertEqual(rank_mod_p([[1, 2], [3, 1]], 2, 7), 2)

    def test_nullspace_is_echelon(self):
        rows = [[1, 1, 0, 2]]
        basis = nullspace_mod_p(rows, 4, 3)
        self.assertEqual(len(basis), 3)
        for vec in basis:
            self.assertEqual(sum(a * b for a, b in zip(rows[0], vec)) % 3, 0)
        leads = [next(i for i, v in enumerate(vec) if v) for vec in basis]
        self.assertEqual(leads, sorted(set(leads)))
        self.assertTrue(all(vec[lead] == 1 for vec, lead in zip(basis, leads)))
