import pytest

from .._base.errors import RegularityError
from .._base.test_case import TestCase
from ._base import GroupElement


class TestReflectionGroup(TestCase):

    def test_coxeter_class_sizes(self):
        for descriptor, size in [('Sym(3)', 2), ('B2', 2), ('H3', 12), ('I2(6)', 2),
                                 ('G(3,1,2)', 3), ('G(3,3,3)', 9), ('D4', 32)]:
            G = self.group(descriptor)
            C = G.coxeter_class()
            self.assertEqual(C.size, size, msg=descriptor)
            self.assertEqual(C.size * G.coxeter_number, G.order)
            for c in C.members:
                self.assertEqual(G.element_order(c), G.coxeter_number)

    def test_regular_elements_sym3(self):
        G = self.group('Sym(3)')
        c = G.product(G.generators)
        self.assertTrue(G.is_regular_element(c, 1))
        self.assertFalse(G.is_regular_element(G.generators[0], 1))
        self.assertFalse(G.is_regular_element(G.identity, 1))

    def test_dihedral_coxeter_elements(self):
        G = self.group('I2(6)')
        rho1 = GroupElement((0, 1), (1, 5))
        rho_minus1 = GroupElement((0, 1), (5, 1))
        self.assertTrue(G.is_regular_element(rho1, 1))
        self.assertEqual(set(G.coxeter_class().members), {rho1, rho_minus1})
        self.assertEqual(G.coxeter_element(), rho_minus1)

    def test_group_axioms(self):
        G = self.group('G(3,1,2)')
        for g in G.elements[:10]:
            self.assertEqual(G.multiply(g, G.inverse(g)), G.identity)
            self.assertEqual(G.multiply(G.inverse(g), g), G.identity)
        g, h, k = G.elements[5], G.elements[7], G.elements[11]
        self.assertEqual(G.multiply(G.multiply(g, h), k), G.multiply(g, G.multiply(h, k)))

    def test_validate(self):
        for descriptor in ('Sym(4)', 'B3', 'I2(5)', 'H3', 'G(3,1,2)', 'G(3,3,3)'):
            G = self.group(descriptor)
            self.assertReportOk(G.validate(num_pairs=100))

    def test_trace_identity(self):
        for descriptor in ('Sym(4)', 'B3', 'D4', 'H3', 'G(3,1,3)', 'G(4,4,3)', 'I2(7)'):
            self.assertReportOk(self.group(descriptor).trace_identity())

    def test_multiplication_table(self):
        G = self.group('Sym(3)')
        table = G.multiplication_table()
        self.assertEqual(table.shape, (6, 3))
        for g in range(6):
            for j, tau in enumerate(G.reflections):
                self.assertEqual(G.elements[table[g, j]], G.multiply(G.elements[g], tau))

    def test_closure(self):
        G = self.group('B3')
        self.assertEqual(len(G.closure(G.generators)), 48)
        self.assertEqual(len(G.closure(G.generators[1:])), 6)

    def test_reflection_index(self):
        G = self.group('B2')
        self.assertEqual(G.generator_indices, (2, 0))
        with pytest.raises(ValueError):
            G.reflection_index(G.identity)

    def test_regularity_error_signals_bad_generators(self):
        G = self.group('Sym(4)')

        class Broken(type(G)):
            def _make_generators(self):
                yield self.transposition(0, 1)
                yield self.transposition(0, 1)
                yield self.transposition(2, 3)

        with pytest.raises(RegularityError):
            Broken(4).coxeter_class()
