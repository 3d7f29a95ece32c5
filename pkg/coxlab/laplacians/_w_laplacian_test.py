from .._base.test_case import TestCase
from ..scalars import Poly
from ..towers import WeightSystem, standard_tower
from ._char_poly import char_poly
from ._w_laplacian import build_w_laplacian


class TestWLaplacian(TestCase):

    def test_unweighted_is_scalar(self):
        for descriptor in ('Sym(4)', 'B3', 'D4', 'H3', 'I2(5)', 'G(3,1,2)', 'G(4,4,3)'):
            G = self.group(descriptor, enumerate=False)
            L = build_w_laplacian(G, WeightSystem.uniform(G, 1))
            n, h = G.rank, G.coxeter_number
            expected = [[h if a == b else 0 for b in range(n)] for a in range(n)]
            self.assertEqual(L.matrix.tolist(), expected, msg=descriptor)
            self.assertEqual(L.trace(), h * n)

    def test_formal_uniform_trace(self):
        G = self.group('G(3,1,2)', enumerate=False)
        L = build_w_laplacian(G, WeightSystem.uniform(G))
        self.assertEqual(L.trace(), 12 * Poly.variable(0, 1))

    def test_trace_per_hyperplane(self):
        G = self.group('G(3,1,2)', enumerate=False)
        values = self.random_rationals(G.num_hyperplanes)
        L = build_w_laplacian(G, WeightSystem.per_hyperplane(G, values))
        self.assertEqual(L.trace(), sum(w * H.order for w, H in zip(values, G.hyperplanes)))

    def test_dihedral_tower(self):
        m = 5
        G = self.group(f'I2({m})', enumerate=False)
        L = build_w_laplacian(G, standard_tower(G).weight_system())
        w0, w1 = Poly.variable(0, 2), Poly.variable(1, 2)
        self.assertEqual(L.matrix[0, 0], w0 + (m - 1) * w1)
        self.assertEqual(L.matrix[1, 1], w0 + (m - 1) * w1)
        self.assertEqual(L.matrix[0, 1] * L.matrix[1, 0], (w1 - w0) ** 2)
        p = char_poly(L)
        self.assertEqual(
            p.coeffs, (m * w1 * (2 * w0 + (m - 2) * w1), 2 * w0 + 2 * (m - 1) * w1, 1))

    def test_sym_char_polys(self):
        G = self.group('Sym(4)', enumerate=False)
        p = char_poly(build_w_laplacian(G, WeightSystem.uniform(G, 1)))
        self.assertEqual(p.coeffs, (64, 48, 12, 1))
        self.assertEqual(p.det, 64)
        G = self.group('Sym(3)', enumerate=False)
        p = char_poly(build_w_laplacian(G, WeightSystem.uniform(G, 1)))
        self.assertEqual(p.coeffs, (9, 6, 1))

    def test_self_adjoint(self):
        for descriptor in ('B3', 'Sym(4)', 'G(3,1,2)', 'H3'):
            G = self.group(descriptor, enumerate=False)
            W = WeightSystem.per_hyperplane(G, self.random_rationals(G.num_hyperplanes))
            self.assertTrue(build_w_laplacian(G, W).is_self_adjoint(), msg=descriptor)

    def test_evaluate(self):
        G = self.group('B3', enumerate=False)
        W = WeightSystem.per_reflection(G)
        values = self.random_rationals(G.num_reflections)
        formal = build_w_laplacian(G, W)
        numeric = build_w_laplacian(G, W.specialize(values))
        self.assertEqual(formal.evaluate(values).tolist(), numeric.matrix.tolist())

    def test_to_json(self):
        G = self.group('Sym(3)', enumerate=False)
        data = build_w_laplacian(G, standard_tower(G).weight_system()).to_json()
        self.assertEqual(data['mode'], 'formal')
        self.assertEqual(len(data['matrix']), 2)
