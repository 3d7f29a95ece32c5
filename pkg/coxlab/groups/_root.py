from collections import deque
from fractions import Fraction

from .._base.errors import UnsupportedFamilyError
from ..scalars import simplify, zeta
from ..utils import object_array, zeros
from ._base import GroupElement, ReflectionGroup


__all__ = (
    'RootGroup',
)


def _golden_ratio():
    return simplify(1 + zeta(5) + zeta(5, 4))


def _h3_gram():
    phi = _golden_ratio()
    half = Fraction(1, 2)
    return [[1, -phi * half, 0], [-phi * half, 1, -half], [0, -half, 1]]


def _f4_gram():
    half = Fraction(1, 2)
    return [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 1, -half], [0, 0, -half, 1]]


ROOT_GROUPS = {
    'H3': (_h3_gram, 120),
    'F4': (_f4_gram, 1152),
}


class RootGroup(ReflectionGroup):
    r"""

    A real reflection group given by the Gram matrix of its simple roots.

    The roots are generated from the simple roots by the simple reflections
    :math:`s_i(v) = v - 2\langle v,\alpha_i\rangle/\langle\alpha_i,\alpha_i\rangle\,\alpha_i`, with
    coordinates in the simple-root basis. Elements are stored as the permutations they induce on
    the roots. For :math:`H_3` the coordinates live in :math:`\mathbb{Q}(\zeta_5)`, which contains
    the golden ratio :math:`1 + \zeta_5 + \zeta_5^4`.

    Parameters
    ----------
    label : str

        Either ``'H3'`` or ``'F4'``.

    \*\*kwargs

        Passed on to :class:`ReflectionGroup`.

    """
    family = 'root'

    def __init__(self, label, **kwargs):
        if label not in ROOT_GROUPS:
            raise UnsupportedFamilyError(
                f"no root model for {label!r}; available: {sorted(ROOT_GROUPS)}")
        make_gram, self._order = ROOT_GROUPS[label]
        self.label = label
        gram = object_array(make_gram())
        n = gram.shape[0]
        self.gram = gram
        self.rank = n
        self._init_roots()
        super().__init__(label, rank=n, gram=gram, modulus=1, **kwargs)

    @property
    def name(self):
        return self.label

    @property
    def order(self):
        return self._order

    def _reflect(self, v, beta):
        c = simplify(Fraction(2) * self.hermitian(v, beta) / self.hermitian(beta, beta))
        return tuple(simplify(x - c * b) for x, b in zip(v, beta))

    def _init_roots(self):
        n = self.rank
        simple = [tuple(1 if i == k else 0 for i in range(n)) for k in range(n)]
        self.roots = list(simple)
        self._root_index = {v: i for i, v in enumerate(self.roots)}
        queue = deque(self.roots)
        while queue:
            v = queue.popleft()
            for alpha in simple:
                w = self._reflect(v, alpha)
                if w not in self._root_index:
                    self._root_index[w] = len(self.roots)
                    self.roots.append(w)
                    queue.append(w)
        self.simple_root_indices = tuple(range(n))
        self.logger.debug(f"{self.label}: {len(self.roots)} roots")

    def is_positive(self, v):
        first = next(x for x in v if x != 0)
        return complex(first).real > 0

    def positive_roots(self):
        return [v for v in self.roots if self.is_positive(v)]

    def root_reflection(self, beta):
        r""" the reflection in the root :math:`\beta` as a permutation of the roots """
        return GroupElement(
            tuple(self._root_index[self._reflect(v, beta)] for v in self.roots), ())

    def matrix(self, g):
        M = zeros(self.rank)
        for k, i in enumerate(self.simple_root_indices):
            for j, x in enumerate(self.roots[g.perm[i]]):
                M[j, k] = x
        return M

    def _make_generators(self):
        for i in self.simple_root_indices:
            yield self.root_reflection(self.roots[i])

    def _reflection_data(self):
        for beta in self.positive_roots():
            yield self.root_reflection(beta), beta, -1

    def _enumerate(self):
        return iter(self.closure(self.generators))
