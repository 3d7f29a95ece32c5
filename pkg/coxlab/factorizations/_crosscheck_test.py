import pytest

from .._base.test_case import TestCase
from ..symfuncs import Partition, partitions
from ..towers import WeightSystem, standard_tower
from ._crosscheck import frobenius_crosscheck_Sn, gelfand_tsetlin_spectrum, gt_crosscheck_Sn


class TestFrobenius(TestCase):

    def test_sym3_formal(self):
        self.assertReportOk(frobenius_crosscheck_Sn(3, L=5))

    def test_sym4_tower(self):
        G = self.group('Sym(4)')
        W = standard_tower(G, (2, 1, 3)).weight_system()
        self.assertReportOk(frobenius_crosscheck_Sn(4, W, L=5))

    def test_sym4_numeric(self):
        G = self.group('Sym(4)')
        self.assertReportOk(frobenius_crosscheck_Sn(4, WeightSystem.uniform(G, 1), L=6))
        W = WeightSystem.per_reflection(G, self.random_rationals(6))
        self.assertReportOk(frobenius_crosscheck_Sn(4, W, L=5))

    def test_range(self):
        with pytest.raises(ValueError):
            frobenius_crosscheck_Sn(6)


class TestGelfandTsetlin(TestCase):

    def test_hook_spectrum(self):
        self.assertMultisetEqual(
            gelfand_tsetlin_spectrum((3, 1)), [(1, 2, -1), (1, -1, 2), (-1, 1, 2)])
        self.assertEqual(gelfand_tsetlin_spectrum((4,)), [(1, 2, 3)])
        self.assertEqual(gelfand_tsetlin_spectrum((1, 1, 1)), [(-1, -2)])

    def test_contents(self):
        for n in range(2, 6):
            for lam in partitions(n):
                spectrum = gelfand_tsetlin_spectrum(lam)
                self.assertEqual(len(spectrum), lam.dimension())
                for exps in spectrum:
                    self.assertEqual(sorted(exps + (0,)), sorted(Partition(lam).contents()))

    def test_crosscheck(self):
        for n in (3, 4, 5):
            report = gt_crosscheck_Sn(n, L=6)
            self.assertReportOk(report)
            self.assertEqual(report.details['chains'], 2 ** (n - 1))

    def test_range(self):
        with pytest.raises(ValueError):
            gt_crosscheck_Sn(7)
