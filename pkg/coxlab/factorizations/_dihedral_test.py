import pytest

from .._base.errors import MalformedTowerError
from .._base.test_case import TestCase
from ..scalars import Poly
from ._dihedral import dihedral_closed_form, dihedral_reflection_tower, verify_dihedral


class TestDihedralClosedForm(TestCase):

    def test_examples(self):
        F = dihedral_closed_form(3, [1, 1, 1], L=2)
        self.assertEqual(F.coefficient(2), 6)
        F = dihedral_closed_form(4, [1, 2, 3, 4], L=5)
        self.assertEqual(F.coefficient(2), 48)
        for ell in (0, 1, 3, 5):
            self.assertEqual(F.coefficient(ell), 0)

    def test_formal(self):
        F = dihedral_closed_form(4, L=2)
        w = [Poly.variable(a, 4) for a in range(4)]
        self.assertEqual(
            F.coefficient(2), 2 * (w[0] * w[1] + w[1] * w[2] + w[2] * w[3] + w[3] * w[0]))
        self.assertEqual(F.mode, 'formal')

    def test_against_enumeration(self):
        for m in (3, 4, 5):
            self.assertReportOk(verify_dihedral(m, L=6))
        for m in range(3, 9):
            self.assertReportOk(verify_dihedral(m, self.random_rationals(m), L=8))

    def test_bad_input(self):
        with pytest.raises(ValueError):
            dihedral_closed_form(2)
        with pytest.raises(ValueError):
            dihedral_closed_form(4, [1, 2, 3])


class TestDihedralReflectionTower(TestCase):

    def test_chains(self):
        for m, chain in [(6, (2, 6)), (6, (3, 6)), (6, (1, 6)), (12, (2, 6, 12)), (8, '2,4,8')]:
            self.assertReportOk(dihedral_reflection_tower(m, chain, L=6))

    def test_single_step(self):
        report = dihedral_reflection_tower(5, (5,))
        self.assertReportOk(report)
        self.assertEqual(report.details['spectrum'], ['5w1', '5w1'])

    def test_spectrum(self):
        report = dihedral_reflection_tower(6, (2, 6), L=4)
        self.assertEqual(report.details['spectrum'], ['6w2', '4w1+2w2'])

    def test_malformed(self):
        for m, chain in [(6, (4, 6)), (6, (2, 3)), (6, (3, 2, 6)), (6, ()), (6, 'a,6')]:
            with pytest.raises(MalformedTowerError):
                dihedral_reflection_tower(m, chain)
