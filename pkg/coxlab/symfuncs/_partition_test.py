import pytest

from .._base.test_case import TestCase
from ._partition import Partition, partitions


class TestPartition(TestCase):

    def test_canonical(self):
        lam = Partition([1, 3, 0, 1])
        self.assertEqual(lam, (3, 1, 1))
        self.assertEqual(str(lam), '(3,1,1)')
        self.assertEqual(lam.size, 5)
        self.assertEqual(Partition.parse('1,3,1'), lam)
        self.assertEqual(Partition.parse(''), ())
        with pytest.raises(ValueError):
            Partition([2, -1])
        with pytest.raises(ValueError):
            Partition.parse('2,x')

    def test_hooks(self):
        self.assertEqual(Partition.hook(4, 1), (3, 1))
        self.assertEqual(Partition.hook(4, 3), (1, 1, 1, 1))
        self.assertIsNone(Partition.hook(4, 4))
        self.assertIsNone(Partition.hook(4, -1))
        self.assertTrue(Partition.hook(6, 2).is_hook())
        self.assertEqual(Partition.hook(6, 2).hook_height(), 2)
        with pytest.raises(ValueError):
            Partition((2, 2)).hook_height()

    def test_quasihooks(self):
        self.assertEqual(Partition.quasihook(5, 1), (3, 2))
        self.assertEqual(Partition.quasihook(5, 2), (2, 2, 1))
        self.assertIsNone(Partition.quasihook(5, 3))
        self.assertIsNone(Partition.quasihook(5, 0))
        self.assertFalse(Partition.quasihook(7, 3).is_hook())

    def test_conjugate_and_contents(self):
        self.assertEqual(Partition((3, 1)).conjugate(), (2, 1, 1))
        self.assertEqual(Partition((2, 1)).contents(), [0, 1, -1])
        for lam in partitions(6):
            self.assertEqual(lam.conjugate().conjugate(), lam)

    def test_dimension(self):
        self.assertEqual(Partition((3, 2)).dimension(), 5)
        self.assertEqual(Partition((2, 2)).dimension(), 2)
        self.assertEqual(Partition((3, 2, 1)).dimension(), 16)
        for lam in partitions(5):
            self.assertEqual(len(list(lam.standard_tableaux())), lam.dimension())
        self.assertEqual(sum(lam.dimension() ** 2 for lam in partitions(6)), 720)

    def test_partitions(self):
        self.assertEqual(partitions(4), [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
        self.assertEqual(len(partitions(7)), 15)
        self.assertEqual(partitions(0), [()])
