from fractions import Fraction

from .._base.test_case import TestCase
from ._spectrum import h_matrix, tower_spectrum
from ._tower import ParabolicTower, all_standard_towers, conjugate_tower, standard_tower


class TestHMatrix(TestCase):

    def test_d6(self):
        G = self.group('D6', enumerate=False)
        T = standard_tower(G, (1, 3, 6, 2, 5, 4))
        H = h_matrix(G, T)
        self.assertEqual(H.rows(), [
            [2, 1, 0, 1, 0, 6],
            [0, 3, 0, 1, 0, 6],
            [0, 0, 2, 0, 1, 7],
            [0, 0, 0, 4, 0, 6],
            [0, 0, 0, 0, 3, 7],
            [0, 0, 0, 0, 0, 10]])
        self.assertEqual(H.coxeter_numbers[:, -1].tolist(), [10] * 6)
        self.assertEqual(
            [str(form) for form in tower_spectrum(G, T)],
            ['2w1+w2+w4+6w6', '3w2+w4+6w6', '2w3+w5+7w6', '4w4+6w6', '3w5+7w6', '10w6'])

    def test_sym3(self):
        G = self.group('Sym(3)')
        T = standard_tower(G)
        self.assertEqual(h_matrix(G, T).rows(), [[2, 1], [0, 3]])
        self.assertEqual([str(form) for form in tower_spectrum(G, T)], ['2w1+w2', '3w2'])

    def test_rank_one(self):
        for r in (2, 3, 5):
            G = self.group(f'G({r},1,1)')
            self.assertEqual(h_matrix(G, standard_tower(G)).rows(), [[r]])

    def test_unweighted_is_coxeter_number(self):
        for descriptor in ('Sym(4)', 'B3', 'H3', 'I2(5)', 'G(3,1,2)', 'G(3,3,3)'):
            G = self.group(descriptor)
            for T in all_standard_towers(G):
                values = [1] * T.nvars
                self.assertEqual(
                    [form.evaluate(values) for form in tower_spectrum(G, T)],
                    [G.coxeter_number] * G.rank, msg=descriptor)

    def test_entries_nonnegative(self):
        G = self.group('D4', enumerate=False)
        for T in all_standard_towers(G):
            self.assertTrue((h_matrix(G, T).matrix >= 0).all())

    def test_trace(self):
        # for real groups the eigenvalues sum to tr L = 2 w(R)
        for descriptor in ('Sym(4)', 'B3', 'D4', 'H3'):
            G = self.group(descriptor, enumerate=False)
            T = standard_tower(G, list(range(G.rank, 0, -1)))
            W = T.weight_system()
            self.assertEqual(sum(tower_spectrum(G, T)), 2 * W.total())

    def test_conjugation_invariance(self):
        G = self.group('B3')
        T = standard_tower(G, (2, 3, 1))
        expected = sorted(tower_spectrum(G, T))
        for k in self.rnd.randint(G.order, size=5):
            S = conjugate_tower(T, G.elements[k])
            self.assertEqual(sorted(tower_spectrum(G, S)), expected)

    def test_non_maximal(self):
        G = self.group('Sym(4)')
        T = ParabolicTower.from_reflection_sets(G, [[0], list(range(6))])
        spectrum = tower_spectrum(G, T)
        self.assertEqual(spectrum[0].nvars, 2)
        values = [Fraction(1, 2), 3]
        self.assertEqual(sum(form.evaluate(values) for form in spectrum),
                         2 * T.weight_system(values).total_value())
