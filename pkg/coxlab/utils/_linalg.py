r"""

Exact linear algebra over object arrays.

The entries are exact ring elements: :class:`int`, :class:`fractions.Fraction`, cyclotomic
numbers, polynomials or truncated series. Nothing here relies on numpy broadcasting of such
objects; all elementwise work is done through explicit loops so that the ring operations of the
entries are the only arithmetic involved.

"""
from fractions import Fraction
from numbers import Integral

import numpy as np


__all__ = (
    'EchelonBasis',
    'as_field',
    'bareiss_det',
    'char_poly_coefficients',
    'divide_root',
    'identity',
    'integer_dets',
    'integer_roots',
    'interpolate',
    'null_space',
    'object_array',
    'rank',
    'trace',
    'zeros',
)


def as_field(x):
    r""" promote integers to rationals so that ``/`` stays exact """
    if isinstance(x, (Integral, np.integer)):
        return Fraction(int(x))
    return x


def zeros(n, m=None):
    out = np.empty((n, n if m is None else m), dtype=object)
    out.fill(0)
    return out


def identity(n, one=1):
    out = zeros(n)
    for i in range(n):
        out[i, i] = one
    return out


def object_array(rows):
    r"""

    Create a two-dimensional object array from nested sequences without letting numpy look
    inside the entries.

    """
    rows = [list(r) for r in rows]
    n, m = len(rows), (len(rows[0]) if rows else 0)
    out = np.empty((n, m), dtype=object)
    for i, r in enumerate(rows):
        if len(r) != m:
            raise ValueError("ragged rows")
        for j, x in enumerate(r):
            out[i, j] = x
    return out


def trace(M):
    return sum((M[i, i] for i in range(M.shape[0])), 0)


def char_poly_coefficients(A, one=1):
    r"""

    Coefficients of :math:`\det(x I - A)` by the Faddeev-LeVerrier recursion.

    The recursion only divides by the integers :math:`1,\dots,n`, so it is exact over any ring
    of characteristic zero that contains the rationals.

    Parameters
    ----------
    A : 2d object ndarray

        A square matrix with exact entries.

    one : ring element, optional

        The unit of the coefficient ring.

    Returns
    -------
    coeffs : list

        The coefficients :math:`c_0,\dots,c_n`, lowest degree first, with :math:`c_n` = ``one``.

    """
    n = A.shape[0]
    coeffs = [0] * n + [one]
    M = zeros(n)
    for k in range(1, n + 1):
        M = A.dot(M) if k > 1 else zeros(n)
        for i in range(n):
            M[i, i] = M[i, i] + coeffs[n - k + 1]
        coeffs[n - k] = -trace(A.dot(M)) * Fraction(1, k)
    return coeffs


def bareiss_det(M):
    r"""

    Determinant by fraction-free Gaussian elimination with row pivoting.

    Parameters
    ----------
    M : 2d array or nested sequence

        A square matrix over a field (rationals or cyclotomic numbers).

    Returns
    -------
    det : field element

        The determinant.

    """
    M = [[as_field(x) for x in row] for row in (M.tolist() if isinstance(M, np.ndarray) else M)]
    n = len(M)
    if n == 0:
        return Fraction(1)
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if M[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    return M[n - 1][n - 1] if sign > 0 else -M[n - 1][n - 1]


def integer_dets(stack):
    r"""

    Exact determinants of a stack of integer matrices.

    This is :func:`bareiss_det` vectorized over the leading axis in ``int64``. Every intermediate
    entry is a minor of the input and every division is exact, so the result is exact as long as
    the products of two such minors fit in 64 bits.

    Parameters
    ----------
    stack : 3d array of int, shape: [batch, n, n]

        The matrices.

    Returns
    -------
    dets : 1d array of int64, shape: [batch]

        The determinants.

    """
    M = np.array(stack, dtype=np.int64)
    if M.ndim != 3 or M.shape[1] != M.shape[2]:
        raise ValueError(f"expected a stack of square matrices, got shape: {M.shape}")
    batch, n, _ = M.shape
    if n == 0:
        return np.ones(batch, dtype=np.int64)
    rows = np.arange(batch)
    sign = np.ones(batch, dtype=np.int64)
    prev = np.ones(batch, dtype=np.int64)
    singular = np.zeros(batch, dtype=bool)
    for k in range(n - 1):
        nonzero = M[:, k:, k] != 0
        has_pivot = nonzero.any(axis=1)
        singular |= ~has_pivot
        pivot = k + np.argmax(nonzero, axis=1)
        swap = pivot != k
        if swap.any():
            r, p = rows[swap], pivot[swap]
            M[r, k], M[r, p] = M[r, p], M[r, k]
            sign[swap] = -sign[swap]
        piv = np.where(has_pivot, M[:, k, k], 1)
        M[:, k + 1:, k + 1:] = (
            M[:, k + 1:, k + 1:] * piv[:, None, None]
            - M[:, k + 1:, k, None] * M[:, k, None, k + 1:]) // prev[:, None, None]
        prev = piv
    return np.where(singular, 0, sign * M[:, n - 1, n - 1])


class EchelonBasis:
    r"""

    An incrementally built row-echelon basis of a subspace.

    Parameters
    ----------
    vectors : iterable of sequences, optional

        Initial vectors; dependent ones are skipped.

    """
    def __init__(self, vectors=()):
        self._rows = []
        for v in vectors:
            self.add(v)

    @property
    def rank(self):
        return len(self._rows)

    def reduce(self, v):
        v = [as_field(x) for x in v]
        for p, row in self._rows:
            f = v[p]
            if f != 0:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v):
        r"""

        Add a vector.

        Returns
        -------
        added : bool

            Whether the vector was independent of the basis.

        """
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        inv = Fraction(1) / v[p]
        self._rows.append((p, [x * inv for x in v]))
        return True

    def contains(self, v):
        return all(x == 0 for x in self.reduce(v))

    def copy(self):
        other = EchelonBasis()
        other._rows = list(self._rows)
        return other


def rank(vectors):
    return EchelonBasis(vectors).rank


def null_space(rows, ncols):
    r"""

    An exact basis of :math:`\{x : R x = 0\}`.

    Parameters
    ----------
    rows : sequence of sequences

        The rows of :math:`R`.

    ncols : int

        The number of columns of :math:`R`.

    Returns
    -------
    basis : list of lists

        Basis vectors of the null space.

    """
    R = [[as_field(x) for x in row] for row in rows]
    pivots, r = [], 0
    for c in range(ncols):
        p = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = Fraction(1) / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -R[i][f]
        basis.append(x)
    return basis


def divide_root(coeffs, root):
    r"""

    Synthetic division by :math:`(x - \text{root})`.

    Parameters
    ----------
    coeffs : list

        Polynomial coefficients, lowest degree first.

    root : ring element

        The root.

    Returns
    -------
    quotient, remainder : list, ring element

        The quotient (lowest degree first) and the remainder.

    """
    n = len(coeffs) - 1
    quotient = [0] * n
    acc = coeffs[n]
    for i in range(n - 1, -1, -1):
        quotient[i] = acc
        acc = coeffs[i] + root * acc
    return quotient, acc


def integer_roots(coeffs, candidates):
    r"""

    Extract integer roots with multiplicity.

    Parameters
    ----------
    coeffs : list of int

        Polynomial coefficients, lowest degree first.

    candidates : iterable of int

        The integers to try.

    Returns
    -------
    roots : list of int

        The roots found, with multiplicity.

    rest : list of int

        The coefficients of the cofactor that remains after dividing out all roots found.

    """
    roots, rest = [], list(coeffs)
    for k in candidates:
        while len(rest) > 1:
            quotient, remainder = divide_root(rest, k)
            if remainder != 0:
                break
            roots.append(k)
            rest = quotient
    return roots, rest


def interpolate(xs, ys):
    r"""

    The coefficients of the unique polynomial of degree < len(xs) through the given points.

    Parameters
    ----------
    xs, ys : sequences

        Distinct nodes and the values at the nodes.

    Returns
    -------
    coeffs : list

        Coefficients, lowest degree first.

    """
    xs = [as_field(x) for x in xs]
    table = [as_field(y) for y in ys]
    n = len(xs)
    newton = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        newton.append(table[0])
    coeffs = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # coeffs <- coeffs * (x - xs[k]) + newton[k]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[k] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] = coeffs[0] + newton[k]
    return coeffs
