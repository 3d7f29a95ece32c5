import pytest

from .._base.test_case import TestCase
from ._characters import (
    CharacterTable, coxeter_number_char, cycle_type, exterior_power_check,
    gr1n_hook_character_data, mn_character, verify_hook_vanishing)
from ._partition import Partition, partitions


class TestMurnaghanNakayama(TestCase):

    def test_values(self):
        self.assertEqual(mn_character((2, 1), (3,)), -1)
        self.assertEqual(mn_character((2, 1), (1, 1, 1)), 2)
        self.assertEqual(mn_character((2, 2), (4,)), 0)
        self.assertEqual(mn_character((2, 2), (2, 2)), 2)
        with pytest.raises(ValueError):
            mn_character((2, 1), (2,))

    def test_identity_is_dimension(self):
        for lam in partitions(6):
            self.assertEqual(mn_character(lam, (1,) * 6), lam.dimension())

    def test_sign(self):
        for mu in partitions(5):
            sign = (-1) ** (5 - len(mu))
            self.assertEqual(mn_character((1,) * 5, mu), sign)

    def test_cycle_type(self):
        self.assertEqual(cycle_type((1, 2, 0, 4, 3, 5)), (3, 2, 1))


class TestCharacterTable(TestCase):

    def test_sym3(self):
        table = CharacterTable(3)
        self.assertEqual(table.values.tolist(), [[1, 1, 1], [-1, 0, 2], [1, -1, 1]])
        self.assertEqual(table.class_sizes.tolist(), [2, 3, 1])
        self.assertEqual(table.value((2, 1), (3,)), -1)

    def test_orthogonality(self):
        for n in range(1, 8):
            table = CharacterTable(n)
            self.assertReportOk(table.row_orthogonality())
            self.assertReportOk(table.column_orthogonality())

    def test_frame(self):
        df = CharacterTable(4).to_frame()
        self.assertEqual(df.shape, (5, 5))
        self.assertEqual(df.loc['(2,2)', '(4)'], 0)
        self.assertEqual(df.loc['(3,1)', '(1,1,1,1)'], 3)
        self.assertEqual(CharacterTable(4).to_json()['class_sizes'], [6, 8, 3, 6, 1])


class TestCoxeterNumbers(TestCase):

    def test_values(self):
        self.assertEqual(coxeter_number_char((3, 1)), 4)
        self.assertEqual(coxeter_number_char((2, 2)), 6)
        self.assertEqual(coxeter_number_char((4,)), 0)
        self.assertEqual(coxeter_number_char((1,)), 0)

    def test_hooks(self):
        for n in range(2, 8):
            for k in range(n):
                self.assertEqual(coxeter_number_char(Partition.hook(n, k)), n * k)

    def test_hook_vanishing(self):
        for n in range(1, 10):
            self.assertReportOk(verify_hook_vanishing(n))
        values = verify_hook_vanishing(5).details['values']
        self.assertEqual(
            [values[str(Partition.hook(5, k))] for k in range(5)], [1, -1, 1, -1, 1])
        self.assertEqual(values['(3,2)'], 0)
        with pytest.raises(ValueError):
            verify_hook_vanishing(10)

    def test_exterior_powers(self):
        for n in range(2, 7):
            self.assertReportOk(exterior_power_check(n))
        with pytest.raises(ValueError):
            exterior_power_check(7)


class TestImprimitiveHooks(TestCase):

    def test_all(self):
        for r in (2, 3):
            for n in (1, 2, 3):
                self.assertReportOk(gr1n_hook_character_data(r, n))

    def test_b2(self):
        rows = gr1n_hook_character_data(2, 2).details['rows']
        row = next(row for row in rows if row['q'] == 1 and row['k'] == 0)
        self.assertEqual(row['value_at_inverse_coxeter'], -1)
        self.assertEqual(row['coxeter_number'], 4)
        row = next(row for row in rows if row['q'] == 0 and row['k'] == 1)
        self.assertEqual(row['coxeter_number'], 4)
        self.assertEqual(row['dimension'], 1)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            gr1n_hook_character_data(4, 2)
