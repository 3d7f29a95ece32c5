import logging
from typing import NamedTuple, Tuple

import numpy as np

from ..groups import components
from ..scalars import LinearForm


__all__ = (
    'HMatrix',
    'h_matrix',
    'tower_spectrum',
)


class HMatrix(NamedTuple):
    r"""

    The upper-triangular integer matrix of Coxeter-number increments of a tower.

    Row :math:`j` follows the irreducible component born at step :math:`j` (the component of
    :math:`W_j` containing :math:`W_j\setminus W_{j-1}`) up the tower: the partial sum of the row
    up to column :math:`i` is the Coxeter number of the component of :math:`W_i` that contains it.

    Parameters
    ----------
    matrix : 2d int ndarray, shape: [n, n]

        The increments.

    births : tuple of int

        For each row, a hyperplane index of the component born at that step.

    weight_index : tuple of int

        The weight variable of each column.

    """
    matrix: np.ndarray
    births: Tuple[int, ...]
    weight_index: Tuple[int, ...]

    @property
    def coxeter_numbers(self):
        r""" the running row sums: entry :math:`(j, i)` is :math:`h` of the active component """
        return np.triu(np.cumsum(self.matrix, axis=1))

    def rows(self):
        return self.matrix.tolist()

    def to_json(self):
        return {'matrix': self.rows(), 'weight_index': list(self.weight_index)}

    def __repr__(self):
        return f"HMatrix({self.rows()})"


def h_matrix(G, T):
    r"""

    Compute the matrix of Coxeter-number increments of a tower.

    The columns are filled from left to right: at step :math:`i` the components of :math:`W_i`
    are recomputed and each row :math:`j\le i` records how much the Coxeter number of its active
    component grew.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    T : ParabolicTower

        A tower of :code:`G`.

    Returns
    -------
    H : HMatrix

        The matrix.

    """
    n = T.n
    H = np.zeros((n, n), dtype=np.int64)
    births = tuple(G.reflection_hyperplane[min(T.step(j))] for j in range(1, n + 1))
    current = [0] * n
    for i in range(1, n + 1):
        h_of = {p: c.coxeter_number for c in components(G, T.levels[i]) for p in c.hyperplanes}
        for j in range(i):
            h = h_of[births[j]]
            H[j, i - 1] = h - current[j]
            current[j] = h
    logging.getLogger('coxlab.towers.h_matrix').debug(f"{G.descriptor}: {H.tolist()}")
    return HMatrix(H, births, T.weight_index)


def tower_spectrum(G, T):
    r"""

    The eigenvalues of the weighted Laplacian :math:`L_W^T(\omega)` as linear forms.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    T : ParabolicTower

        A tower of :code:`G`.

    Returns
    -------
    spectrum : list of LinearForm

        The row reads :math:`\lambda_j = \sum_{i\ge j} H_{j,i}\,\omega_i` of :func:`h_matrix`, one
        per row (a multiset).

    """
    H = h_matrix(G, T)
    out = []
    for row in H.matrix:
        coeffs = [0] * T.nvars
        for i, a in enumerate(row):
            coeffs[T.weight_index[i]] += int(a)
        out.append(LinearForm(coeffs))
    return out
