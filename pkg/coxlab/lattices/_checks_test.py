from fractions import Fraction

import pytest

from .._base.test_case import TestCase
from ..laplacians import ArrLaplacian
from ..scalars import Poly
from ..towers import WeightSystem, standard_tower
from ._checks import (
    localized_char_poly, multiset_coxeter_numbers, parabolic_coxeter_elements,
    verify_coxeter_identity, verify_laplacian_recursion, verify_matrix_forest,
    verify_parabolic_stabilizers)
from ._flats import enumerate_flats, flat_from_generators


class TestLaplacianRecursion(TestCase):

    def test_tower_weights(self):
        for descriptor in ('Sym(3)', 'Sym(4)', 'I2(4)', 'B3', 'D4'):
            self.assertReportOk(verify_laplacian_recursion(self.group(descriptor, enumerate=False)))

    def test_reflection_weights(self):
        for descriptor in ('Sym(4)', 'G(3,1,2)'):
            G = self.group(descriptor, enumerate=False)
            self.assertReportOk(verify_laplacian_recursion(G, WeightSystem.per_reflection(G)))

    def test_generic_lines(self):
        w = [Poly.variable(i, 4) for i in range(4)]
        L = ArrLaplacian([(1, 0), (0, 1), (1, 1), (1, 2)], norms=[1] * 4, weights=w)
        report = verify_laplacian_recursion(L)
        self.assertReportOk(report)
        self.assertEqual(report.details['flats'], [1, 4, 1])
        self.assertReportOk(verify_laplacian_recursion(L, weights=[1, 2, 3, Fraction(1, 2)]))

    def test_pseudodeterminant(self):
        G = self.group('B3', enumerate=False)
        lattice = enumerate_flats(G)
        for X in lattice.flats[1]:
            p = localized_char_poly(G, X)
            self.assertEqual(p.coefficient(X.dim), 2)
            self.assertEqual(p.coefficient(X.dim - 1), 0)


class TestMatrixForest(TestCase):

    def test_symmetric(self):
        G = self.group('Sym(3)')
        self.assertReportOk(verify_matrix_forest(G))
        G = self.group('Sym(4)')
        lattice = enumerate_flats(G)
        for ordering in [(1, 2, 3), (2, 1, 3), (3, 1, 2)]:
            report = verify_matrix_forest(G, standard_tower(G, ordering), lattice=lattice)
            self.assertReportOk(report)

    def test_other_groups(self):
        for descriptor in ('B3', 'I2(5)', 'I2(8)', 'D4', 'G(3,1,2)'):
            self.assertReportOk(verify_matrix_forest(self.group(descriptor)))

    def test_coxeter_elements(self):
        for descriptor in ('B3', 'H3', 'G(3,1,2)'):
            G = self.group(descriptor)
            origin = enumerate_flats(G).flats[-1][0]
            self.assertEqual(parabolic_coxeter_elements(G, origin),
                             sorted(G.coxeter_class().indices))

    def test_reducible_parabolic(self):
        G = self.group('Sym(4)')
        gens = G.generator_indices
        X = flat_from_generators(G, [gens[0], gens[2]])
        self.assertEqual(X.coxeter_numbers(), [2, 2])
        self.assertEqual(len(parabolic_coxeter_elements(G, X)), 1)


class TestCoxeterIdentity(TestCase):

    def test_groups(self):
        for descriptor in ('Sym(4)', 'Sym(5)', 'B3', 'B4', 'D4', 'H3', 'G(3,3,3)'):
            G = self.group(descriptor, enumerate=False)
            report = verify_coxeter_identity(G)
            self.assertReportOk(report)
            self.assertEqual(report.details['h'], G.coxeter_number)

    def test_dihedral(self):
        for m in range(3, 13):
            G = self.group(f'I2({m})', enumerate=False)
            self.assertReportOk(verify_coxeter_identity(G))

    def test_norm_variants(self):
        G = self.group('B3', enumerate=False)
        report = verify_coxeter_identity(G, norms='one')
        self.assertReportOk(report)
        self.assertEqual(report.details['h'], 3)
        G = self.group('G(3,1,2)', enumerate=False)
        for norms, h in [('one', Fraction(5, 2)), ('minus_one', Fraction(7, 2)), ('full', 6)]:
            report = verify_coxeter_identity(G, norms=norms)
            self.assertReportOk(report)
            self.assertEqual(report.details['h'], h)

    def test_bad_norms(self):
        with pytest.raises(ValueError):
            verify_coxeter_identity(self.group('B3', enumerate=False), norms='two')


class TestMultisetCoxeterNumbers(TestCase):

    def test_examples(self):
        G = self.group('B7', enumerate=False)
        gens = G.generator_indices
        X = flat_from_generators(G, [gens[k] for k in (0, 1, 2, 4, 5, 6)])
        self.assertEqual(multiset_coxeter_numbers(G, X), [6, 6, 6, 4, 4, 4])
        G = self.group('Sym(3)', enumerate=False)
        self.assertEqual(multiset_coxeter_numbers(G, flat_from_generators(G, [0])), [2])
        G = self.group('B3', enumerate=False)
        origin = enumerate_flats(G).flats[-1][0]
        self.assertEqual(multiset_coxeter_numbers(G, origin), [6, 6, 6])

    def test_all_flats(self):
        for descriptor in ('H3', 'D4', 'G(3,3,3)'):
            G = self.group(descriptor, enumerate=False)
            for X in enumerate_flats(G):
                self.assertEqual(multiset_coxeter_numbers(G, X), X.coxeter_numbers())


class TestParabolicStabilizers(TestCase):

    def test_groups(self):
        for descriptor in ('Sym(4)', 'B3', 'I2(6)', 'G(3,1,2)'):
            report = verify_parabolic_stabilizers(self.group(descriptor))
            self.assertReportOk(report)
