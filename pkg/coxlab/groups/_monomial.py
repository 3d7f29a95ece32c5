from itertools import permutations, product
from math import factorial

from .._base.errors import UnsupportedFamilyError
from ..scalars import simplify, zeta
from ..utils import identity, zeros
from ._base import GroupElement, ReflectionGroup


__all__ = (
    'MonomialGroup',
    'SymmetricGroup',
)


class MonomialGroup(ReflectionGroup):
    r"""

    The imprimitive reflection group :math:`G(r,p,n)` for :math:`p\in\{1,r\}`.

    Elements are :math:`n\times n` monomial matrices whose nonzero entries are :math:`r`-th roots of
    unity with product a :math:`(r/p)`-th root of unity. The reflections are

    * :math:`(i\,j)_a` for :math:`i<j` and :math:`0\le a<r`, exchanging :math:`e_i \mapsto \zeta^a
      e_j` and :math:`e_j\mapsto\zeta^{-a}e_i`, with normal :math:`e_i - \zeta^a e_j`;
    * for :math:`p=1` also the diagonal reflections
      :math:`\operatorname{diag}(1,\dots,\zeta^k,\dots,1)` for :math:`1\le k<r`, with normal
      :math:`e_i`.

    The standard generators are the diagonal reflection at position 0 (for :math:`p=1`) or the
    twisted transposition :math:`(0\,1)_1` (for :math:`p=r`), followed by the transpositions
    :math:`(0\,1), (1\,2), \dots, (n-2\,\,n-1)`.

    Parameters
    ----------
    r, p, n : int

        The parameters of :math:`G(r,p,n)`.

    descriptor : str, optional

        The descriptor to report, e.g. ``'B3'``. Defaults to ``'G(r,p,n)'``.

    \*\*kwargs

        Passed on to :class:`ReflectionGroup`.

    """
    family = 'G(r,p,n)'

    def __init__(self, r, p, n, descriptor=None, **kwargs):
        if r < 2 or p not in (1, r) or n < 1:
            raise UnsupportedFamilyError(f"unsupported monomial group G({r},{p},{n})")
        if p == r and (n < 2 or (r == 2 and n == 2)):
            raise UnsupportedFamilyError(
                f"G({r},{p},{n}) is not an irreducible well-generated group")
        self.r, self.p, self.n = r, p, n
        super().__init__(
            descriptor or f"G({r},{p},{n})", rank=n, gram=identity(n), modulus=r, **kwargs)

    @property
    def name(self):
        return f"G({self.r},{self.p},{self.n})"

    @property
    def order(self):
        return self.r ** self.n * factorial(self.n) // self.p

    def entry(self, k):
        return simplify(zeta(self.r, k))

    def matrix(self, g):
        M = zeros(self.rank)
        for i, (j, k) in enumerate(zip(g.perm, g.twist)):
            M[j, i] = self.entry(k)
        return M

    def transposition(self, i, j, a=0):
        r""" the reflection :math:`(i\,j)_a` """
        perm, twist = list(range(self.n)), [0] * self.n
        perm[i], perm[j] = j, i
        twist[i], twist[j] = a % self.r, (-a) % self.r
        return GroupElement(tuple(perm), tuple(twist))

    def diagonal(self, i, k=1):
        r""" the diagonal element with :math:`\zeta^k` in position :math:`i` """
        twist = [0] * self.n
        twist[i] = k % self.r
        return GroupElement(tuple(range(self.n)), tuple(twist))

    def _transposition_normal(self, i, j, a):
        normal = [0] * self.rank
        normal[i], normal[j] = 1, -self.entry(a)
        return normal

    def _make_generators(self):
        if self.p == 1:
            yield self.diagonal(0)
        else:
            yield self.transposition(0, 1, 1)
        for i in range(self.n - 1):
            yield self.transposition(i, i + 1)

    def _reflection_data(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                for a in range(self.r):
                    yield self.transposition(i, j, a), self._transposition_normal(i, j, a), -1
        if self.p == 1:
            for i in range(self.n):
                normal = [0] * self.n
                normal[i] = 1
                for k in range(1, self.r):
                    yield self.diagonal(i, k), normal, self.entry(k)

    def _enumerate(self):
        for perm in permutations(range(self.n)):
            for twist in product(range(self.r), repeat=self.n):
                if sum(twist) % self.p == 0:
                    yield GroupElement(perm, twist)


class SymmetricGroup(MonomialGroup):
    r"""

    The symmetric group :math:`S_n` acting on its :math:`(n-1)`-dimensional reflection
    representation.

    Elements are permutations of :math:`\{0,\dots,n-1\}`; the representation is written in the basis
    of simple roots :math:`\alpha_k = e_k - e_{k+1}`, so that the invariant form is the Cartan
    matrix of type :math:`A_{n-1}` and the normal of the transposition :math:`(i\,j)` is
    :math:`\alpha_i + \dots + \alpha_{j-1}`. The standard generators are the adjacent
    transpositions.

    Parameters
    ----------
    n : int

        The number of points, at least 2.

    descriptor : str, optional

        The descriptor to report, e.g. ``'A3'``. Defaults to ``'Sym(n)'``.

    \*\*kwargs

        Passed on to :class:`ReflectionGroup`.

    """
    family = 'Sym'

    def __init__(self, n, descriptor=None, **kwargs):
        if n < 2:
            raise UnsupportedFamilyError(f"Sym({n}) has no reflections")
        self.r, self.p, self.n = 1, 1, n
        gram = zeros(n - 1)
        for k in range(n - 1):
            gram[k, k] = 2
            if k + 1 < n - 1:
                gram[k, k + 1] = gram[k + 1, k] = -1
        ReflectionGroup.__init__(
            self, descriptor or f"Sym({n})", rank=n - 1, gram=gram, modulus=1, **kwargs)

    @property
    def name(self):
        return f"Sym({self.n})"

    @property
    def order(self):
        return factorial(self.n)

    def _root(self, a, b):
        r""" the coordinates of :math:`e_a - e_b` in the simple-root basis """
        v = [0] * self.rank
        lo, hi, sign = (a, b, 1) if a < b else (b, a, -1)
        for k in range(lo, hi):
            v[k] = sign
        return v

    def matrix(self, g):
        M = zeros(self.rank)
        for k in range(self.rank):
            column = self._root(g.perm[k], g.perm[k + 1])
            for i, x in enumerate(column):
                M[i, k] = x
        return M

    def _transposition_normal(self, i, j, a):
        return self._root(i, j)

    def _make_generators(self):
        for i in range(self.n - 1):
            yield self.transposition(i, i + 1)
