import pytest

from .._base.errors import GroupCapExceededError
from .._base.test_case import TestCase
from ._jm import jm_commute, jm_matrices, jm_spectrum, jm_spectrum_check
from ._tower import standard_tower


class TestJucysMurphy(TestCase):

    def test_sym3_regular(self):
        G = self.group('Sym(3)')
        T = standard_tower(G)
        self.assertEqual(dict(jm_spectrum(G, T, 2, 'regular')), {2: 1, 1: 2, -1: 2, -2: 1})
        self.assertEqual(dict(jm_spectrum(G, T, 1, 'regular')), {1: 3, -1: 3})

    def test_first_involution(self):
        for descriptor in ('Sym(4)', 'B3', 'H3', 'I2(7)'):
            G = self.group(descriptor)
            spectrum = jm_spectrum(G, standard_tower(G), 1)
            self.assertLessEqual(set(spectrum), {1, -1})
            self.assertEqual(sum(spectrum.values()), G.rank)

    def test_b2_reflection(self):
        G = self.group('B2')
        report = jm_spectrum_check(G, standard_tower(G))
        self.assertReportOk(report)
        self.assertEqual(report.details['steps'][1]['bounds'], [-3, 3])

    def test_spectrum_checks(self):
        for descriptor in ('Sym(4)', 'B3', 'G(3,1,2)', 'G(3,3,3)', 'I2(6)'):
            G = self.group(descriptor)
            T = standard_tower(G, list(range(G.rank, 0, -1)))
            self.assertReportOk(jm_spectrum_check(G, T))
            self.assertReportOk(jm_spectrum_check(G, T, 'regular'))

    def test_complex_first_step(self):
        G = self.group('G(3,1,2)')
        spectrum = jm_spectrum(G, standard_tower(G), 1, 'regular')
        self.assertEqual(dict(spectrum), {2: 6, -1: 12})

    def test_regular_cap(self):
        G = self.group('F4', enumerate=False)
        with pytest.raises(GroupCapExceededError):
            jm_spectrum(G, standard_tower(G), 1, 'regular')
        with pytest.raises(ValueError):
            jm_spectrum(G, standard_tower(G), 1, 'adjoint')

    def test_commute(self):
        for descriptor in ('Sym(5)', 'B3', 'D4', 'G(3,1,3)', 'H3'):
            G = self.group(descriptor, enumerate=False)
            self.assertReportOk(jm_commute(G, standard_tower(G)))

    def test_matrices_sum_to_sum_of_reflections(self):
        G = self.group('Sym(4)')
        J = jm_matrices(G, standard_tower(G))
        total = sum(J[1:], J[0])
        # the sum of all reflections is central: 6 * tr(tau) / 3 = 2
        self.assertEqual(total.tolist(), [[2, 0, 0], [0, 2, 0], [0, 0, 2]])
