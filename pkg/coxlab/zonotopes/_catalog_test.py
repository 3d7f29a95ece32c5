import pytest

from .._base.errors import UnsupportedFamilyError
from .._base.test_case import TestCase
from ._catalog import connection_index, root_catalog


class TestRootCatalog(TestCase):

    def test_num_positive_roots(self):
        expected = {
            'A1': 1, 'A2': 3, 'A3': 6, 'B2': 4, 'B3': 9, 'C3': 9, 'D4': 12, 'E6': 36, 'E7': 63,
            'E8': 120, 'F4': 24, 'G2': 6}
        for label, count in expected.items():
            self.assertEqual(root_catalog(label).num_positive_roots, count, msg=label)

    def test_matches_groups(self):
        for label, descriptor in [('A3', 'Sym(4)'), ('B3', 'B3'), ('D4', 'D4'), ('F4', 'F4')]:
            G = self.group(descriptor, enumerate=False)
            self.assertEqual(root_catalog(label).num_positive_roots, G.num_hyperplanes)

    def test_cartan(self):
        for label in ('A4', 'B3', 'C4', 'D5', 'E6', 'F4', 'G2'):
            cat = root_catalog(label)
            for i, row in enumerate(cat.cartan):
                self.assertEqual(row[i], 2)
                self.assertTrue(all(isinstance(a, int) and a <= 0 for j, a in enumerate(row)
                                    if j != i))
        self.assertEqual(root_catalog('G2').cartan, ((2, -3), (-1, 2)))

    def test_highest_root(self):
        self.assertEqual(root_catalog('E6').positive_roots[-1], (1, 2, 2, 3, 2, 1))
        self.assertEqual(root_catalog('G2').positive_roots[-1], (3, 2))
        self.assertEqual(root_catalog('B3').positive_roots[-1], (1, 2, 2))

    def test_connection_index(self):
        for n in range(1, 7):
            self.assertEqual(connection_index(f'A{n}'), n + 1)
        for label, index in [('B2', 2), ('B5', 2), ('C3', 2), ('D4', 4), ('D5', 4), ('E6', 3),
                             ('E7', 2), ('E8', 1), ('F4', 1), ('G2', 1)]:
            self.assertEqual(connection_index(root_catalog(label)), index, msg=label)

    def test_unknown(self):
        for label in ('E5', 'X3', 'D3', 'G3', 'A0', 'E'):
            with pytest.raises(UnsupportedFamilyError):
                root_catalog(label)

    def test_to_json(self):
        data = root_catalog('A2').to_json()
        self.assertEqual(data['cartan'], [[2, -1], [-1, 2]])
        self.assertEqual((data['num_positive_roots'], data['connection_index']), (3, 3))
