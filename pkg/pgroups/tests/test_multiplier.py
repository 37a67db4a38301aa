from django.test import SimpleTestCase
from sympy.combinatorics.named_groups import DihedralGroup

from pgroups.catalog import build_from_text
from pgroups.exceptions import (
    InconsistentPresentationError,
    PresentationError,
    ResourceCapExceeded,
)
from pgroups.intlinalg import AbelianInvariants, abelian_invariants
from pgroups.multiplier import (
    TailedPresentation,
    abelian_presentation,
    classical_abelian_multiplier,
    consistency_relation_matrix,
    definition_rows,
    h2_bar_oracle,
    oracle_multiplier,
    schur_multiplier,
    tailed_collect,
)
from pgroups.pcgroup import PcPresentation, direct_product


def tailed(text):
    return TailedPresentation.from_presentation(build_from_text(text))


class TailedCollectionTests(SimpleTestCase):

    def test_power_relation_records_its_tail(self):
        tp = tailed('es@3')
        result = tailed_collect(tp, [(0, 3)])
        self.assertTrue(result.main.is_identity)
        self.assertEqual(result.tails, (1,) + (0,) * 5)

    def test_normal_word_has_no_tails(self):
        tp = tailed('es@3')
        result = tailed_collect(tp, [(0, 1), (1, 2), (2, 1)])
        self.assertEqual(result.main.exps, (1, 2, 1))
        self.assertFalse(any(result.tails))

    def test_commutator_tail(self):
        tp = tailed('es@3')
        result = tailed_collect(tp, [(1, 1), (0, 1)])
        self.assertEqual(result.main.exps, (1, 1, 1))
        self.assertEqual(result.tails[tp.comm_tail(1, 0)], 1)
        self.assertEqual(sum(result.tails), 1)

    def test_main_part_is_ordinary_collection(self):
        tp = tailed('example1@5')
        self.assertEqual(tailed_collect(tp, [(2, 1), (0, 1)]).main.exps, (1, 0, 1, 1, 0))

    def test_inverse_subtracts_the_power_tail(self):
        tp = tailed('es@3')
        result = tailed_collect(tp, [(0, -1)])
        self.assertEqual(result.main.exps, (2, 0, 0))
        self.assertEqual(result.tails, (-1,) + (0,) * 5)
        for word in ([(0, -1), (0, 1)], [(0, 1), (0, -1)], [(1, -2), (1, 2)]):
            result = tailed_collect(tp, word)
            self.assertTrue(result.main.is_identity, word)
            self.assertFalse(any(result.tails), word)

    def test_inverse_follows_the_power_relation(self):
        # g1^2 = g2 in Z4: g1^-1 = g1 g2^-1 t1^-1 and g2^-1 = g2 t2^-1
        tp = tailed('cyclic@2,m=2')
        result = tailed_collect(tp, [(0, -1)])
        self.assertEqual(result.main.exps, (1, 1))
        self.assertEqual(result.tails, (-1, -1, 0))

    def test_index_out_of_range(self):
        with self.assertRaises(PresentationError):
            tailed_collect(tailed('es@3'), [(3, -1)])

    def test_tail_layout(self):
        tp = tailed('es@3')
        self.assertEqual(tp.r, 6)
        self.assertEqual(tp.tail_of_relation()[('comm', 2, 1)], 5)
        self.assertEqual(tp.power_tail(2), 2)


class RelationMatrixTests(SimpleTestCase):

    def test_rank_two_elementary(self):
        tp = tailed('elemab@3,rank=2')
        quotient = abelian_invariants(consistency_relation_matrix(tp), tp.r)
        self.assertEqual(quotient, AbelianInvariants((3,), 2))

    def test_extraspecial_torsion(self):
        tp = tailed('es@3')
        quotient = abelian_invariants(consistency_relation_matrix(tp), tp.r)
        self.assertEqual(quotient.torsion, (3, 3))
        self.assertEqual(quotient.free_rank, 3)

    def test_one_row_per_overlap(self):
        # 1 triple, 3 pairs with two overlaps each, 3 single generators
        self.assertEqual(consistency_relation_matrix(tailed('es@3')).rows, 10)

    def test_inconsistent_presentation(self):
        pres = PcPresentation.build(2, 3, powers={0: {1: 1}}, comms={(1, 0): {2: 1}})
        with self.assertRaises(InconsistentPresentationError):
            consistency_relation_matrix(TailedPresentation.from_presentation(pres))
        with self.assertRaises(InconsistentPresentationError):
            schur_multiplier(pres)

    def test_definition_rows_match_frattini(self):
        self.assertEqual(len(definition_rows(tailed('es@3'))), 1)
        self.assertEqual(len(definition_rows(tailed('h37'))), 4)
        self.assertEqual(len(definition_rows(tailed('cyclic@2,m=3'))), 2)
        self.assertEqual(definition_rows(tailed('elemab@5,rank=3')), [])


class SchurMultiplierTests(SimpleTestCase):

    def assertMultiplier(self, text, torsion):
        self.assertEqual(schur_multiplier(build_from_text(text)).multiplier, AbelianInvariants(torsion), text)

    def assertLogMultiplier(self, text, exponent):
        pres = build_from_text(text)
        self.assertEqual(schur_multiplier(pres).log_order(pres.p), exponent, text)

    def test_small_groups(self):
        self.assertMultiplier('elemab@2,rank=2', (2,))
        self.assertMultiplier('elemab@3,rank=3', (3, 3, 3))
        self.assertMultiplier('cyclic@2,m=2', ())
        self.assertMultiplier('cyclic@5,m=3', ())
        self.assertMultiplier('d8', (2,))
        self.assertMultiplier('q8', ())
        self.assertMultiplier('modular@3', ())

    def test_extraspecial(self):
        for p in (3, 5, 7):
            self.assertMultiplier(f'es@{p}', (p, p))

    def test_bound_attaining_families(self):
        self.assertLogMultiplier('g2@3', 6)
        self.assertLogMultiplier('g2@5', 6)
        self.assertLogMultiplier('g3@3', 8)
        self.assertLogMultiplier('g1@3,n=4', 4)
        self.assertLogMultiplier('g1@5,n=5', 7)

    def test_order_three_to_the_seven(self):
        self.assertLogMultiplier('h37', 10)

    def test_class_three_and_four_examples(self):
        self.assertMultiplier('example1@5', (5, 5, 5))
        self.assertMultiplier('example2@5', (5, 5, 5))
        self.assertMultiplier('example1@7', (7, 7, 7))

    def test_free_rank_is_generator_count(self):
        result = schur_multiplier(build_from_text('h37'))
        self.assertEqual(result.free_rank_check, 3)
        self.assertEqual(result.definition_rows, 4)
        self.assertEqual(schur_multiplier(build_from_text('cyclic@2,m=2')).free_rank_check, 1)

    def test_product_formula(self):
        # |M(A x B)| = |M(A)| |M(B)| |A^ab (x) B^ab|
        es = build_from_text('es@3')
        self.assertEqual(schur_multiplier(direct_product(es, es)).log_order(3), 2 + 2 + 4)
        cyclic = build_from_text('cyclic@3,m=2')
        self.assertEqual(schur_multiplier(direct_product(es, cyclic)).log_order(3), 2 + 0 + 2)


class AbelianMultiplierTests(SimpleTestCase):

    def test_classical_formula(self):
        self.assertEqual(classical_abelian_multiplier(AbelianInvariants((2, 4, 8))), AbelianInvariants((2, 2, 4)))
        self.assertEqual(classical_abelian_multiplier(AbelianInvariants((9,))), AbelianInvariants())
        with self.assertRaises(ValueError):
            classical_abelian_multiplier(AbelianInvariants((3,), 1))

    def test_tails_agree_with_formula(self):
        for p, torsion in [(2, (2, 4)), (3, (3, 9)), (3, (3, 3, 3)), (5, (25,))]:
            invariants = AbelianInvariants(torsion)
            pres = abelian_presentation(p, invariants)
            self.assertEqual(schur_multiplier(pres).multiplier, classical_abelian_multiplier(invariants), torsion)

    def test_presentation_shape(self):
        pres = abelian_presentation(3, AbelianInvariants((3, 9)))
        self.assertEqual(pres.n, 3)
        self.assertEqual(pres.power_rhs, ((0, 0, 0), (0, 0, 1), (0, 0, 0)))
        with self.assertRaises(PresentationError):
            abelian_presentation(3, AbelianInvariants((2,)))


class OracleTests(SimpleTestCase):

    def test_small_two_groups(self):
        self.assertEqual(oracle_multiplier(build_from_text('d8')), AbelianInvariants((2,)))
        self.assertEqual(oracle_multiplier(build_from_text('q8')), AbelianInvariants())
        self.assertEqual(oracle_multiplier(build_from_text('elemab@2,rank=2')), AbelianInvariants((2,)))
        self.assertEqual(oracle_multiplier(build_from_text('cyclic@2,m=2')), AbelianInvariants())

    def test_agrees_with_tails(self):
        for text in ['elemab@2,rank=3', 'elemab@3,rank=2', 'es@3', 'modular@3', 'cyclic@3,m=3']:
            pres = build_from_text(text)
            self.assertEqual(oracle_multiplier(pres), schur_multiplier(pres).multiplier, text)

    def test_permutation_group_table(self):
        elems = sorted(DihedralGroup(4).elements, key=lambda g: g.array_form)
        index = {g: r for r, g in enumerate(elems)}
        table = [[index[a * b] for b in elems] for a in elems]
        self.assertEqual(h2_bar_oracle(table), AbelianInvariants((2,)))

    def test_cap(self):
        with self.assertRaises(ResourceCapExceeded):
            oracle_multiplier(build_from_text('h37'))
        with self.assertRaises(ResourceCapExceeded):
            oracle_multiplier(build_from_text('es@3'), cap=16)
