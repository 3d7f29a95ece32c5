from fractions import Fraction

import pytest

from .._base.test_case import TestCase
from ..utils import char_poly_coefficients, object_array
from ._egf import TruncatedEGF, chapuy_stump_series, egf_product_formula
from ._linear_form import LinearForm
from ._poly import Poly


class TestTruncatedEGF(TestCase):
    def test_symmetric_group_s3(self):
        w = Poly.variable(0, 1)
        lam = LinearForm([3])
        F = egf_product_formula(lam, [lam, lam], h=3, L=4)
        self.assertEqual(F.coefficient(0), 0)
        self.assertEqual(F.coefficient(1), 0)
        self.assertEqual(F.coefficient(2), 6 * w ** 2)
        self.assertEqual(F.coefficient(3), 0)
        self.assertEqual(F.coefficient(4), 54 * w ** 4)

    def test_constant_term_vanishes(self):
        lambdas = [LinearForm([2, 1]), LinearForm([0, 3])]
        F = egf_product_formula(LinearForm([1, 2]), lambdas, h=3, L=3)
        self.assertEqual(F.coefficient(0), 0)

    def test_chapuy_stump(self):
        # fixed Coxeter element of S4: Cayley's 4^2 trees
        series = chapuy_stump_series(6, 24, 4, 3, 7)
        self.assertEqual(series.coefficient(3), 16)
        # S3 with four factors
        series = chapuy_stump_series(3, 6, 3, 2, 4)
        self.assertEqual(series.coefficient(2), 3)
        self.assertEqual(series.coefficient(4), 27)

    def test_product_formula_reproduces_chapuy_stump(self):
        # all weights one, all eigenvalues h, summed over the |W|/h Coxeter elements
        for nR, order, h, n in [(6, 24, 4, 3), (9, 48, 6, 3), (15, 120, 10, 3)]:
            L = n + 4
            F = egf_product_formula(nR, [h] * n, h, L)
            expected = chapuy_stump_series(nR, order, h, n, L) * Fraction(order, h)
            self.assertEqual(F, expected)
        self.assertEqual(egf_product_formula(6, [4] * 3, 4, 3).coefficient(3), 96)

    def test_exp(self):
        t = TruncatedEGF([0, 1], 5)
        self.assertEqual(t.exp(), TruncatedEGF.exp_linear(1, 5))
        f = TruncatedEGF([0, 2, 1, 3], 5)
        g = TruncatedEGF([0, 1, 0, -1, 4], 5)
        self.assertEqual((f + g).exp(), f.exp() * g.exp())
        with pytest.raises(ValueError):
            TruncatedEGF([1, 1], 3).exp()

    def test_exp_linear_product(self):
        w = Poly.variable(0, 2)
        v = Poly.variable(1, 2)
        lhs = TruncatedEGF.exp_linear(w, 4) * TruncatedEGF.exp_linear(v, 4)
        self.assertEqual(lhs, TruncatedEGF.exp_linear(w + v, 4))

    def test_ordinary_coefficient_and_evaluate(self):
        w = Poly.variable(0, 1)
        series = TruncatedEGF.exp_linear(2 * w, 3)
        self.assertEqual(series.ordinary_coefficient(3), Fraction(8, 6) * w ** 3)
        self.assertEqual(series.evaluate([Fraction(1, 2)]), TruncatedEGF.exp_linear(1, 3))

    def test_truncation(self):
        f = TruncatedEGF([1, 2, 3, 4, 5], 4)
        g = TruncatedEGF([1, 1], 2)
        self.assertEqual((f * g).order, 2)
        self.assertEqual(f.truncate(1), TruncatedEGF([1, 2]))
        self.assertEqual(f.coefficient(9), 0)

    def test_faddeev_leverrier_over_series(self):
        a = TruncatedEGF.exp_linear(2, 3)
        b = TruncatedEGF.exp_linear(3, 3)
        one = TruncatedEGF.constant(1, 3)
        coeffs = char_poly_coefficients(object_array([[a, 0], [0, b]]), one=one)
        # det(x - A) = x^2 - (a + b) x + a b
        self.assertEqual(coeffs[0], TruncatedEGF.exp_linear(5, 3))
        self.assertEqual(coeffs[1], -(a + b))
        self.assertEqual(coeffs[2], one)

    def test_json(self):
        data = TruncatedEGF([0, Fraction(1, 2)], 2).to_json()
        self.assertEqual(data, {'order': 2, 'coeffs': [0, '1/2', 0]})
