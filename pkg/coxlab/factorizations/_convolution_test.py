import pytest

from .._base.errors import BudgetExceededError
from .._base.test_case import TestCase
from ..scalars import Poly
from ..towers import WeightSystem, standard_tower
from ._convolution import ConvolutionState, enumerate_series


class TestEnumerateSeries(TestCase):

    def test_sym3_unweighted(self):
        G = self.group('Sym(3)')
        W = WeightSystem.uniform(G, 1)
        F = enumerate_series(G, W, 'class', L=4)
        self.assertEqual(list(F.series.coeffs), [0, 0, 6, 0, 54])
        F = enumerate_series(G, W, 'element', L=4)
        self.assertEqual(F.coefficient(2), 3)
        self.assertEqual(F.coefficient(4), 27)
        self.assertEqual(F.target, 'element')
        self.assertEqual(F.mode, 'numeric')

    def test_sym4_cayley(self):
        G = self.group('Sym(4)')
        F = enumerate_series(G, WeightSystem.uniform(G, 1), 'element', L=3)
        self.assertEqual(F.coefficient(3), 16)

    def test_formal_per_reflection(self):
        G = self.group('Sym(3)')
        F = enumerate_series(G, WeightSystem.per_reflection(G), 'class', L=2)
        w = [Poly.variable(i, 3) for i in range(3)]
        self.assertEqual(F.coefficient(2), 2 * (w[0] * w[1] + w[0] * w[2] + w[1] * w[2]))
        self.assertEqual(F.coefficient(0), 0)
        self.assertEqual(F.mode, 'formal')

    def test_formal_uniform(self):
        G = self.group('B2')
        F = enumerate_series(G, WeightSystem.uniform(G), 'class', L=2)
        self.assertEqual(F.coefficient(2), 8 * Poly.variable(0, 1) ** 2)

    def test_specialization(self):
        for descriptor in ('Sym(3)', 'B2', 'I2(5)', 'G(3,1,2)'):
            G = self.group(descriptor)
            W = WeightSystem.per_reflection(G)
            formal = enumerate_series(G, W, 'class', L=5).series
            for _ in range(5):
                values = self.random_rationals(G.num_reflections, distinct=False)
                numeric = enumerate_series(G, W.specialize(values), 'class', L=5).series
                self.assertEqual(formal.evaluate(values), numeric)

    def test_parity(self):
        for descriptor in ('B3', 'Sym(4)', 'H3'):
            G = self.group(descriptor)
            F = enumerate_series(G, WeightSystem.uniform(G, 1), 'class', L=G.rank + 3)
            for ell in range(F.order + 1):
                if (ell - G.rank) % 2:
                    self.assertEqual(F.coefficient(ell), 0)
                elif ell >= G.rank:
                    self.assertGreater(F.coefficient(ell), 0)

    def test_class_invariance(self):
        G = self.group('B3')
        W = WeightSystem.uniform(G)
        c = G.coxeter_element()
        expected = enumerate_series(G, W, c, L=5).series
        for _ in range(5):
            h = G.elements[self.rnd.randint(G.order)]
            actual = enumerate_series(G, W, G.conjugate(c, h), L=5).series
            self.assertEqual(actual, expected)

    def test_reduced_degree(self):
        G = self.group('Sym(4)')
        T = standard_tower(G)
        F = enumerate_series(G, T.weight_system(), 'class', L=3)
        self.assertEqual(F.coefficient(3).degree(), 3)
        self.assertEqual(F.coefficient(2), 0)

    def test_state(self):
        G = self.group('Sym(3)')
        state = ConvolutionState(G, WeightSystem.uniform(G, 1))
        e = G.index(G.identity)
        self.assertEqual(state.value([e]), 1)
        state.step()
        state.step()
        self.assertEqual(state.length, 2)
        self.assertEqual(state.value([e]), 3)
        self.assertEqual(state.value(range(G.order)), 9)

    def test_budget(self):
        G = self.group('Sym(5)')
        with pytest.raises(BudgetExceededError):
            enumerate_series(G, WeightSystem.per_reflection(G), 'class', L=6, budget_mb=1)

    def test_bad_input(self):
        G = self.group('Sym(3)')
        with pytest.raises(ValueError):
            enumerate_series(G, WeightSystem.uniform(G), 'coxeter')
        with pytest.raises(ValueError):
            ConvolutionState(G, WeightSystem([0, 0], 1))

    def test_to_json(self):
        G = self.group('Sym(3)')
        F = enumerate_series(G, WeightSystem.uniform(G, 1), 'class', L=2)
        data = F.to_json()
        self.assertEqual(data['group'], 'Sym(3)')
        self.assertEqual(data['series']['coeffs'], [0, 0, 6])
