import pytest

from .._base.errors import NotHyperplaneConstantError
from .._base.test_case import TestCase
from ..towers import WeightSystem
from ._arrangement import ArrLaplacian, arr_from_group, rrt_check
from ._checks import burman_check
from ._w_laplacian import build_w_laplacian


class TestArrLaplacian(TestCase):

    def test_equals_w_laplacian(self):
        for descriptor in ('B3', 'Sym(4)', 'G(3,1,2)', 'G(3,3,3)', 'I2(5)'):
            G = self.group(descriptor, enumerate=False)
            W = WeightSystem.per_hyperplane(G, self.random_rationals(G.num_hyperplanes))
            A = arr_from_group(G, W)
            L = build_w_laplacian(G, W)
            self.assertEqual(A.matrix.tolist(), L.matrix.tolist(), msg=descriptor)

    def test_equals_w_laplacian_formal(self):
        G = self.group('G(3,1,2)', enumerate=False)
        W = WeightSystem.per_hyperplane(G)
        self.assertEqual(arr_from_group(G, W).matrix.tolist(),
                         build_w_laplacian(G, W).matrix.tolist())

    def test_b3_unweighted(self):
        G = self.group('B3', enumerate=False)
        A = arr_from_group(G, WeightSystem.uniform(G, 1))
        self.assertEqual(A.matrix.tolist(), [[6, 0, 0], [0, 6, 0], [0, 0, 6]])

    def test_not_hyperplane_constant(self):
        G = self.group('G(3,1,2)', enumerate=False)
        with pytest.raises(NotHyperplaneConstantError):
            arr_from_group(G, WeightSystem.per_reflection(G))
        with pytest.raises(ValueError):
            arr_from_group(G, WeightSystem.uniform(G), norms='two')

    def test_norm_variants_trace(self):
        G = self.group('G(3,1,2)', enumerate=False)
        W = WeightSystem.uniform(G, 1)
        traces = {}
        for norms in ('full', 'one', 'minus_one'):
            M = arr_from_group(G, W, norms).matrix
            traces[norms] = sum(M[i, i] for i in range(G.rank))
        self.assertEqual(traces, {'full': 12, 'one': 5, 'minus_one': 7})

    def test_explicit_normals(self):
        A = ArrLaplacian.from_normals([(1, 0), (0, 1), (1, 1)], weights=[1, 2, 3])
        self.assertEqual(A.matrix.tolist(), [[5, 3], [3, 7]])
        self.assertEqual(list(A.char_poly().coeffs), [26, 12, 1])
        with pytest.raises(ValueError):
            ArrLaplacian.from_normals([(1, 0), (1, 0, 0)])

    def test_rrt(self):
        G = self.group('A1', enumerate=False)
        self.assertReportOk(rrt_check(G, WeightSystem.uniform(G, 1)))
        G = self.group('Sym(3)', enumerate=False)
        self.assertReportOk(rrt_check(G, WeightSystem.per_reflection(G, self.random_rationals(3))))
        G = self.group('G(3,1,2)', enumerate=False)
        W = WeightSystem.per_reflection(G, self.random_rationals(G.num_reflections))
        self.assertReportOk(rrt_check(G, W))
        self.assertReportOk(rrt_check(G, WeightSystem.per_reflection(G)))

    def test_burman(self):
        for descriptor in ('Sym(4)', 'B3', 'G(3,1,2)'):
            G = self.group(descriptor, enumerate=False)
            self.assertReportOk(burman_check(arr_from_group(G, WeightSystem.per_hyperplane(G))))
        G = self.group('H3', enumerate=False)
        self.assertReportOk(burman_check(arr_from_group(G, WeightSystem.uniform(G, 1))))
