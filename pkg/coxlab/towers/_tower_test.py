import pytest

from .._base.errors import MalformedTowerError
from .._base.test_case import TestCase
from ._tower import ParabolicTower, all_standard_towers, conjugate_tower, standard_tower


class TestParabolicTower(TestCase):

    def test_sym4_step_sizes(self):
        T = standard_tower(self.group('Sym(4)'), (1, 2, 3))
        self.assertEqual([len(T.step(i)) for i in (1, 2, 3)], [1, 2, 3])
        self.assertEqual([len(level) for level in T.levels], [0, 1, 3, 6])

    def test_dihedral_step_sizes(self):
        T = standard_tower(self.group('I2(6)'), '1,2')
        self.assertEqual([len(T.step(i)) for i in (1, 2)], [1, 5])

    def test_d6_levels(self):
        G = self.group('D6', enumerate=False)
        T = standard_tower(G, (1, 3, 6, 2, 5, 4))
        # A1, A2, A2xA1, A3xA1, A3xA2, D6
        self.assertEqual([len(level) for level in T.levels], [0, 1, 3, 4, 7, 9, 30])

    def test_weight_system(self):
        G = self.group('Sym(3)')
        W = standard_tower(G).weight_system()
        self.assertEqual(W.assignment, (0, 1, 1))
        self.assertEqual(W.nvars, 2)
        self.assertEqual(W.mode, 'formal')
        self.assertTrue(W.is_hyperplane_constant(G))

    def test_all_standard_towers(self):
        towers = list(all_standard_towers(self.group('B3')))
        self.assertEqual(len(towers), 6)
        self.assertEqual(len(set(towers)), 6)

    def test_conjugate_tower(self):
        G = self.group('B3')
        T = standard_tower(G, (2, 1, 3))
        for k in self.rnd.randint(G.order, size=5):
            g = G.elements[k]
            S = conjugate_tower(T, g)
            self.assertEqual([len(level) for level in S.levels],
                             [len(level) for level in T.levels])
            self.assertEqual(S.source['conjugate_by'], g)

    def test_from_reflection_sets_non_maximal(self):
        G = self.group('Sym(4)')
        T = ParabolicTower.from_reflection_sets(G, [[], [0], [0], list(range(6))])
        self.assertEqual(T.n, 3)
        self.assertEqual(T.nvars, 2)
        self.assertEqual(T.weight_index, (0, 1, 1))
        self.assertEqual(T.source['levels'], [[0], list(range(6))])

    def test_from_reflection_sets_maximal_matches_standard(self):
        G = self.group('B3')
        S = standard_tower(G, (3, 1, 2))
        T = ParabolicTower.from_reflection_sets(G, [sorted(level) for level in S.levels])
        self.assertEqual(T, S)

    def test_malformed(self):
        G = self.group('Sym(3)')
        with pytest.raises(MalformedTowerError):
            standard_tower(G, (1, 1))
        with pytest.raises(MalformedTowerError):
            standard_tower(G, '1,x')
        with pytest.raises(MalformedTowerError):
            standard_tower(G, (1, 2, 3))
        with pytest.raises(MalformedTowerError):
            ParabolicTower.from_reflection_sets(G, [[0, 1], [0, 1, 2]])   # not parabolic
        with pytest.raises(MalformedTowerError):
            ParabolicTower.from_reflection_sets(G, [[0], [2]])            # not nested
        with pytest.raises(MalformedTowerError):
            ParabolicTower(G, [[], [0], [0, 1]])

    def test_to_json(self):
        T = standard_tower(self.group('Sym(3)'), (2, 1))
        data = T.to_json()
        self.assertEqual(data['source'], {'ordering': [2, 1]})
        self.assertEqual(data['levels'], [[], [2], [0, 1, 2]])
