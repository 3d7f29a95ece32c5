import pytest

from .._base.errors import BudgetExceededError
from .._base.test_case import TestCase
from ..laplacians import ArrLaplacian
from ._flats import closure, enumerate_flats, flat_from_generators


class TestEnumerateFlats(TestCase):

    def test_counts(self):
        for descriptor, counts in [
                ('Sym(3)', (1, 3, 1)), ('Sym(4)', (1, 6, 7, 1)), ('B3', (1, 9, 13, 1)),
                ('H3', (1, 15, 31, 1)), ('I2(5)', (1, 5, 1)), ('I2(6)', (1, 6, 1))]:
            G = self.group(descriptor, enumerate=False)
            lattice = enumerate_flats(G)
            self.assertEqual(lattice.counts, counts)
            self.assertEqual(len(lattice), sum(counts))

    def test_components(self):
        G = self.group('B3', enumerate=False)
        lattice = enumerate_flats(G)
        V = lattice.flats[0][0]
        self.assertEqual((V.codim, V.dim, V.hyperplanes, V.components), (0, 3, (), ()))
        origin = lattice.flats[-1][0]
        self.assertEqual(origin.dim, 0)
        self.assertEqual(len(origin.hyperplanes), 9)
        self.assertEqual(origin.coxeter_numbers(), [6, 6, 6])
        for X in lattice:
            self.assertEqual(sum(c.rank for c in X.components), X.codim)
            self.assertEqual(len(X.basis), 3 - X.codim)
        kinds = sorted(tuple(X.coxeter_numbers()) for X in lattice.flats[2])
        self.assertEqual(kinds.count((2, 2)), 6)
        self.assertEqual(kinds.count((3, 3)), 4)
        self.assertEqual(kinds.count((4, 4)), 3)

    def test_basis_is_orthogonal_to_normals(self):
        G = self.group('H3', enumerate=False)
        for X in enumerate_flats(G):
            for j in X.hyperplanes:
                for v in X.basis:
                    self.assertEqual(G.hermitian(v, G.hyperplanes[j].normal), 0)

    def test_closure_idempotent(self):
        for descriptor in ('Sym(4)', 'B3', 'H3'):
            G = self.group(descriptor, enumerate=False)
            N = G.num_hyperplanes
            for _ in range(100):
                k = self.rnd.randint(0, N + 1)
                S = sorted(self.rnd.choice(N, size=k, replace=False).tolist())
                closed = closure(G, S)
                self.assertTrue(set(S) <= set(closed))
                self.assertEqual(closure(G, closed), closed)

    def test_lookup(self):
        G = self.group('Sym(4)', enumerate=False)
        lattice = enumerate_flats(G)
        for X in lattice:
            self.assertIs(lattice.lookup(reversed(X.hyperplanes)), X)

    def test_explicit_arrangement(self):
        L = ArrLaplacian([(1, 0), (0, 1), (1, 1), (1, 2)], norms=[1] * 4)
        lattice = enumerate_flats(L)
        self.assertEqual(lattice.counts, (1, 4, 1))
        self.assertEqual(lattice.flats[1][0].reflections, frozenset())

    def test_cap(self):
        with pytest.raises(BudgetExceededError):
            enumerate_flats(self.group('Sym(9)', enumerate=False))
        with pytest.raises(BudgetExceededError):
            enumerate_flats(self.group('Sym(4)', enumerate=False), hyperplane_cap=5)

    def test_export(self):
        G = self.group('Sym(3)', enumerate=False)
        lattice = enumerate_flats(G)
        df = lattice.to_frame()
        self.assertEqual(len(df), 5)
        self.assertEqual(list(df['codim']), [0, 1, 1, 1, 2])
        self.assertEqual(list(df['coxeter_product']), [1, 2, 2, 2, 9])
        data = lattice.to_json()
        self.assertEqual(data['counts'], [1, 3, 1])
        self.assertEqual(data['flats'][2][0]['coxeter_numbers'], [3, 3])


class TestFlatFromGenerators(TestCase):

    def test_reflection(self):
        G = self.group('Sym(3)', enumerate=False)
        X = flat_from_generators(G, [0])
        self.assertEqual((X.codim, X.coxeter_numbers()), (1, [2]))

    def test_large_ambient(self):
        G = self.group('B7', enumerate=False)
        gens = G.generator_indices
        X = flat_from_generators(G, [gens[k] for k in (0, 1, 2, 4, 5, 6)])
        self.assertEqual(X.codim, 6)
        self.assertEqual(X.coxeter_numbers(), [6, 6, 6, 4, 4, 4])
        self.assertEqual(sorted(c.rank for c in X.components), [3, 3])

    def test_closure_adds_hyperplanes(self):
        G = self.group('Sym(4)', enumerate=False)
        gens = G.generator_indices
        X = flat_from_generators(G, gens[:2])
        self.assertEqual(len(X.hyperplanes), 3)
        self.assertEqual(X.coxeter_numbers(), [3, 3])
