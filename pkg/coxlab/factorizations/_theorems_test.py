from .._base.test_case import TestCase
from ..towers import all_standard_towers, standard_tower
from ._theorems import (
    chapuy_stump_check, reduced_count, reduced_count_divisibility, unweighted_reduced_count,
    verify_main_theorem, verify_reduced_count)


class TestMainTheorem(TestCase):

    def test_sym4_all_towers(self):
        G = self.group('Sym(4)')
        for T in all_standard_towers(G):
            self.assertReportOk(verify_main_theorem(G, T, L=7))

    def test_b3(self):
        G = self.group('B3')
        self.assertReportOk(verify_main_theorem(G, standard_tower(G), L=7))
        for T in all_standard_towers(G):
            self.assertReportOk(verify_main_theorem(G, T, L=5))

    def test_d4_all_towers(self):
        G = self.group('D4')
        towers = list(all_standard_towers(G))
        self.assertEqual(len(towers), 24)
        for T in towers:
            self.assertReportOk(verify_main_theorem(G, T))

    def test_dihedral_all_towers(self):
        for m in range(3, 13):
            G = self.group(f'I2({m})')
            for T in all_standard_towers(G):
                self.assertReportOk(verify_main_theorem(G, T, L=6))

    def test_dihedral(self):
        G = self.group('I2(5)')
        report = verify_main_theorem(G, standard_tower(G), L=6)
        self.assertReportOk(report)
        self.assertEqual(report.name, 'mainthm[I2(5)|1,2]')
        self.assertEqual(len(report.details['spectrum']), 2)

    def test_complex(self):
        G = self.group('G(3,1,2)')
        self.assertReportOk(verify_main_theorem(G, standard_tower(G)))
        G = self.group('G(3,1,3)')
        self.assertReportOk(verify_main_theorem(G, standard_tower(G), L=5))
        self.assertReportOk(verify_main_theorem(G, standard_tower(G, (3, 1, 2)), L=5))

    def test_g333_all_towers(self):
        G = self.group('G(3,3,3)')
        for T in all_standard_towers(G):
            self.assertReportOk(verify_main_theorem(G, T))

    def test_h3_all_towers(self):
        G = self.group('H3')
        for T in all_standard_towers(G):
            self.assertReportOk(verify_main_theorem(G, T, L=5))


class TestReducedCounts(TestCase):

    def test_unweighted_class(self):
        for descriptor, expected in [('Sym(3)', 6), ('B2', 8), ('H3', 600)]:
            G = self.group(descriptor)
            T = standard_tower(G)
            self.assertEqual(reduced_count(G, T, values=[1] * T.nvars), expected)

    def test_determinant_formula(self):
        for descriptor in ('Sym(4)', 'B3', 'I2(5)', 'G(3,1,2)', 'D4'):
            G = self.group(descriptor)
            self.assertReportOk(verify_reduced_count(G))
        G = self.group('B3')
        for T in all_standard_towers(G):
            self.assertReportOk(verify_reduced_count(G, T, values=self.random_rationals(3)))

    def test_fixed_element(self):
        for descriptor, expected in [('Sym(3)', 3), ('Sym(4)', 16), ('Sym(5)', 125), ('B2', 4),
                                     ('B3', 27), ('H3', 50), ('I2(7)', 7), ('G(3,1,2)', 4)]:
            report = unweighted_reduced_count(self.group(descriptor))
            self.assertReportOk(report)
            self.assertEqual(report.details['count'], expected)

    def test_chapuy_stump(self):
        for descriptor in ('Sym(4)', 'B3', 'I2(6)', 'G(3,1,2)', 'G(3,3,3)'):
            self.assertReportOk(chapuy_stump_check(self.group(descriptor)))

    def test_divisibility(self):
        for descriptor in ('Sym(4)', 'B3', 'D4', 'H3'):
            G = self.group(descriptor)
            for T in list(all_standard_towers(G))[:2]:
                report = reduced_count_divisibility(G, T)
                self.assertReportOk(report)
                self.assertGreater(report.details['monomials'], 0)
