import re
from fractions import Fraction
from typing import NamedTuple, Tuple

from .._base.errors import UnsupportedFamilyError
from ..utils import bareiss_det, object_array, pretty_repr


__all__ = (
    'RootCatalog',
    'connection_index',
    'root_catalog',
)


class RootCatalog(NamedTuple):
    r"""

    A crystallographic root system in the basis of its simple roots.

    Parameters
    ----------
    label : str

        The Cartan type, e.g. ``'E6'``.

    gram : tuple of tuples

        The Gram matrix :math:`(\alpha_i,\alpha_j)` of the simple roots. Short roots have norm 2,
        except in type :math:`B_n` where the roots are :math:`\pm e_i\pm e_j, \pm e_i`.

    cartan : tuple of tuples

        The Cartan matrix :math:`a_{ij} = 2(\alpha_i,\alpha_j)/(\alpha_i,\alpha_i)`.

    positive_roots : tuple of tuples

        The positive roots as integer vectors in the simple-root basis, simple roots first.

    """
    label: str
    gram: Tuple[Tuple, ...]
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self):
        return len(self.gram)

    @property
    def num_positive_roots(self):
        return len(self.positive_roots)

    def pairing(self, u, v):
        r""" the inner product of two vectors given in the simple-root basis """
        n = self.rank
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(n) for j in range(n))

    def reflect(self, v, i):
        r""" the simple reflection :math:`s_i(v) = v - \langle v, \alpha_i^\vee\rangle\alpha_i` """
        c = Fraction(2 * self.pairing(v, [int(k == i) for k in range(self.rank)]),
                     self.gram[i][i])
        if c.denominator != 1:
            raise ValueError(f"{self.label} is not crystallographic at {v}")
        out = list(v)
        out[i] -= c.numerator
        return tuple(out)

    def gram_det(self):
        r""" :math:`\det(\alpha_i,\alpha_j)`, the squared covolume of the root lattice """
        return bareiss_det(object_array(self.gram))

    def to_json(self):
        return {
            'label': self.label,
            'rank': self.rank,
            'gram': [[str(x) for x in row] for row in self.gram],
            'cartan': [list(row) for row in self.cartan],
            'num_positive_roots': self.num_positive_roots,
            'connection_index': connection_index(self),
        }

    def __repr__(self):
        return pretty_repr(self)


def _path(n):
    G = [[0] * n for _ in range(n)]
    for i in range(n):
        G[i][i] = 2
        if i + 1 < n:
            G[i][i + 1] = G[i + 1][i] = -1
    return G


def _gram(family, n):
    if family == 'A' and n >= 1:
        return _path(n)
    if family == 'B' and n >= 2:
        G = _path(n)
        G[n - 1][n - 1] = 1
        return G
    if family == 'C' and n >= 2:
        G = _path(n)
        G[n - 1][n - 1] = 4
        G[n - 2][n - 1] = G[n - 1][n - 2] = -2
        return G
    if family == 'D' and n >= 4:
        G = _path(n)
        G[n - 2][n - 1] = G[n - 1][n - 2] = 0
        G[n - 3][n - 1] = G[n - 1][n - 3] = -1
        return G
    if family == 'E' and n in (6, 7, 8):
        # 1-3-4-5-6-7-8 with 2 attached to 4
        G = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for a, b in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]:
            if max(a, b) <= n:
                G[a - 1][b - 1] = G[b - 1][a - 1] = -1
        return G
    if family == 'F' and n == 4:
        return [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if family == 'G' and n == 2:
        return [[2, -3], [-3, 6]]
    raise UnsupportedFamilyError(f"unknown root system: {family}{n}")


def _positive_roots(cat):
    n = cat.rank
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    seen, out, queue = set(simple), list(simple), list(simple)
    while queue:
        v = queue.pop()
        for i in range(n):
            x = cat.reflect(v, i)
            if x not in seen and all(c >= 0 for c in x):
                seen.add(x)
                out.append(x)
                queue.append(x)
    return tuple(simple + sorted(set(out) - set(simple), key=lambda v: (sum(v), v)))


def root_catalog(label):
    r"""

    Build the root catalog of a Cartan type.

    Parameters
    ----------
    label : str

        One of ``A<n>``, ``B<n>``, ``C<n>``, ``D<n>``, ``E6``, ``E7``, ``E8``, ``F4``, ``G2``.

    Returns
    -------
    cat : RootCatalog

        The catalog. Positive roots are generated by closing the simple roots under the simple
        reflections.

    Raises
    ------
    UnsupportedFamilyError

        If the label is not recognized.

    """
    m = re.fullmatch(r'\s*([A-G])\s*(\d+)\s*', str(label))
    if not m:
        raise UnsupportedFamilyError(f"cannot parse root system label: {label!r}")
    family, n = m.group(1), int(m.group(2))
    gram = _gram(family, n)
    cartan = tuple(
        tuple(int(Fraction(2 * gram[i][j], gram[i][i])) for j in range(n)) for i in range(n))
    cat = RootCatalog(f"{family}{n}", tuple(map(tuple, gram)), cartan, ())
    return cat._replace(positive_roots=_positive_roots(cat))


def connection_index(cat):
    r"""

    The connection index :math:`I(W) = \det(a_{ij})`, the index of the root lattice in the weight
    lattice.

    Parameters
    ----------
    cat : RootCatalog or str

        The catalog or its label.

    Returns
    -------
    index : int

        E.g. :math:`n+1` for :math:`A_n` and 3 for :math:`E_6`.

    """
    if not isinstance(cat, RootCatalog):
        cat = root_catalog(cat)
    return int(bareiss_det(object_array(cat.cartan)))
