import warnings
from fractions import Fraction

import pytest

from .._base.test_case import TestCase
from ._cyc import Cyc, _normalized_trace, zeta


class TestCyc(TestCase):
    def random_cyc(self, order):
        coeffs = [Fraction(int(self.rnd.randint(-5, 6)), int(self.rnd.randint(1, 4)))
                  for _ in range(order)]
        return Cyc.from_power_coeffs(coeffs, order)

    def test_vanishing_sum(self):
        z = zeta(3)
        self.assertEqual(1 + z + z ** 2, 0)
        self.assertFalse(1 + z + z ** 2)
        self.assertEqual(sum((zeta(7, k) for k in range(7)), Cyc(0)), 0)

    def test_square_of_i(self):
        self.assertEqual(zeta(4) ** 2, -1)
        self.assertTrue((zeta(4) ** 2).is_rational)

    def test_embedding(self):
        a = zeta(6)
        b = -zeta(3, 2)
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertAlmostEqual(complex(a), complex(b), places=12)
        # equality across different stored orders
        self.assertEqual(zeta(12, 4), zeta(3))
        self.assertEqual(zeta(12, 3) * zeta(12, 3), -1)

    def test_hash_without_warnings(self):
        _normalized_trace.cache_clear()
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            self.assertEqual(hash(zeta(10, 2) + zeta(15, 3)), hash(zeta(5) + zeta(5)))
            self.assertEqual(_normalized_trace(12, 1), 0)
            self.assertEqual(_normalized_trace(6, 1), Fraction(1, 2))

    def test_root_of_unity_order(self):
        for r in (1, 2, 3, 4, 5, 6, 8, 10, 12):
            self.assertEqual(zeta(r) ** r, 1)
            self.assertEqual(zeta(r, -1), zeta(r).conjugate())

    def test_float_agreement(self):
        for _ in range(1000):
            r1, r2 = int(self.rnd.randint(1, 13)), int(self.rnd.randint(1, 13))
            a, b = self.random_cyc(r1), self.random_cyc(r2)
            self.assertLess(abs(complex(a * b) - complex(a) * complex(b)), 1e-10)
            self.assertLess(abs(complex(a + b) - complex(a) - complex(b)), 1e-10)

    def test_conjugate_involution(self):
        for r in (3, 5, 8, 12):
            a = self.random_cyc(r)
            self.assertEqual(a.conjugate().conjugate(), a)
            self.assertAlmostEqual(complex(a * a.conjugate()).imag, 0, places=self.decimal)

    def test_inverse(self):
        for r in (3, 4, 5, 9, 12):
            a = self.random_cyc(r)
            if not a:
                continue
            self.assertEqual(a * a.inverse(), 1)
            self.assertEqual(a / a, 1)
            self.assertEqual(a ** -2 * a ** 2, 1)
        with pytest.raises(ZeroDivisionError):
            Cyc(0).inverse()

    def test_rational_arithmetic(self):
        x = Cyc(Fraction(1, 2))
        self.assertEqual(x + Fraction(1, 2), 1)
        self.assertEqual(3 * x, Fraction(3, 2))
        self.assertEqual(x.to_fraction(), Fraction(1, 2))
        with pytest.raises(ValueError):
            zeta(5).to_fraction()

    def test_galois(self):
        z = zeta(5)
        self.assertEqual(z.galois(2), zeta(5, 2))
        with pytest.raises(ValueError):
            zeta(6).galois(3)

    def test_parse(self):
        self.assertEqual(Cyc.parse("1+z+z^2", order=3), 0)
        self.assertEqual(Cyc.parse("1/2-z12^3"), Fraction(1, 2) - zeta(4))
        self.assertEqual(Cyc.parse("-3/4"), Fraction(-3, 4))
        self.assertEqual(Cyc.parse(str(zeta(5, 2) - 2)), zeta(5, 2) - 2)
        with pytest.raises(ValueError):
            Cyc.parse("1+z")
        with pytest.raises(ValueError):
            Cyc.parse("1+y")

    def test_str(self):
        self.assertEqual(str(Cyc(Fraction(2, 3))), '2/3')
        self.assertEqual(str(zeta(4)), 'z4')
        self.assertEqual(str(1 - zeta(4)), '1-z4')

    def test_not_implemented(self):
        with pytest.raises(TypeError):
            zeta(3) + 'a'
        with pytest.raises(TypeError):
            Cyc(1.5)
