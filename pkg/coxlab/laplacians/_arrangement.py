import logging
from fractions import Fraction
from itertools import combinations
from math import comb

from .._base.errors import NotHyperplaneConstantError
from ..scalars import Poly, conj, simplify
from ..utils import (
    EchelonBasis, VerificationReport, bareiss_det, check_subsets, identity, object_array,
    zeros)
from ._char_poly import char_poly


__all__ = (
    'ArrLaplacian',
    'arr_from_group',
    'rrt_check',
)


NORM_VARIANTS = ('full', 'one', 'minus_one')


def _hermitian(gram, u, v):
    total = 0
    for i, vi in enumerate(v):
        if vi == 0:
            continue
        for j, uj in enumerate(u):
            if uj != 0 and gram[i, j] != 0:
                total = total + conj(vi) * gram[i, j] * uj
    return simplify(total)


class ArrLaplacian:
    r"""

    The Laplacian of a weighted hyperplane arrangement,

    .. math::

        L_\mathcal{A}(\omega)\ =\ \sum_i \omega_i\,(I - S_{r_i}),\qquad
        (I - S_r)\,v\ =\ \langle v, r\rangle\,r,

    where the vector :math:`r_i` is normal to the :math:`i`-th hyperplane and scaled to a chosen
    norm :math:`\langle r_i, r_i\rangle = c_i`. For :math:`c_i = 2` and a real arrangement
    :math:`S_{r_i}` is the reflection in the hyperplane.

    Normals are kept unscaled: with :math:`\nu_i = \langle n_i, n_i\rangle` the matrix is
    :math:`\sum_i \omega_i (c_i/\nu_i)\, n_i n_i^* G`, so no square roots are needed.

    Parameters
    ----------
    normals : sequence of sequences

        The normal vectors :math:`n_i`.

    gram : 2d object ndarray, optional

        The matrix :math:`G` of the Hermitian form :math:`\langle u, v\rangle = v^*Gu`. Defaults to
        the identity.

    norms : sequence of scalars, optional

        The norms :math:`c_i`. Defaults to 2 for every normal.

    weights : sequence, optional

        The weights :math:`\omega_i` (scalars or polynomials). Defaults to 1.

    """
    def __init__(self, normals, gram=None, norms=None, weights=None):
        self.normals = [tuple(simplify(x) for x in n) for n in normals]
        if not self.normals:
            raise ValueError("an arrangement needs at least one hyperplane")
        self.n = len(self.normals[0])
        if any(len(v) != self.n for v in self.normals):
            raise ValueError("all normals must have the same dimension")
        self.gram = identity(self.n) if gram is None else gram
        N = len(self.normals)
        self.norms = [2] * N if norms is None else [simplify(c) for c in norms]
        self.weights = [1] * N if weights is None else list(weights)
        if (len(self.norms), len(self.weights)) != (N, N):
            raise ValueError(f"expected {N} norms and weights")
        self.scales = []
        for v, c in zip(self.normals, self.norms):
            nu = _hermitian(self.gram, v, v)
            if nu == 0:
                raise ValueError(f"normal {v} is isotropic")
            self.scales.append(simplify(Fraction(1) * c / nu))
        self.matrix = self._build()

    @classmethod
    def from_normals(cls, normals, gram=None, norms=None, weights=None):
        return cls(normals, gram, norms, weights)

    def _rank_one(self, i):
        r""" the matrix :math:`n_i n_i^* G` """
        v = self.normals[i]
        row = [_hermitian(self.gram, [1 if k == j else 0 for k in range(self.n)], v)
               for j in range(self.n)]
        out = zeros(self.n)
        for a in range(self.n):
            if v[a] != 0:
                for b in range(self.n):
                    if row[b] != 0:
                        out[a, b] = simplify(v[a] * row[b])
        return out

    def _build(self):
        M = zeros(self.n)
        for i, (w, kappa) in enumerate(zip(self.weights, self.scales)):
            P = self._rank_one(i)
            for a in range(self.n):
                for b in range(self.n):
                    if P[a, b] != 0:
                        M[a, b] = M[a, b] + w * kappa * P[a, b]
        for a in range(self.n):
            for b in range(self.n):
                M[a, b] = simplify(M[a, b])
        return M

    def evaluate(self, values):
        r""" the numeric matrix at the given weight values """
        out = zeros(self.n)
        for a in range(self.n):
            for b in range(self.n):
                x = self.matrix[a, b]
                out[a, b] = simplify(x.evaluate(values)) if isinstance(x, Poly) else x
        return out

    def char_poly(self):
        return char_poly(self)

    def burman_expansion(self, subset_cap=None):
        r"""

        The coefficients of :math:`\det(x + L)` by direct summation over independent subsets:

        .. math::

            [x^{n-k}]\,\det(x + L)\ =\ \sum_{|S| = k}\ \prod_{i\in S}\omega_i\frac{c_i}{\nu_i}\,
                \det\big(\langle n_s, n_t\rangle\big)_{s,t\in S}

        Parameters
        ----------
        subset_cap : int, optional

            Overrides the subset budget.

        Returns
        -------
        coeffs : list

            The coefficients, lowest degree first.

        """
        N = len(self.normals)
        check_subsets(sum(comb(N, k) for k in range(self.n + 1)), 'Burman expansion',
                      subset_cap=subset_cap)
        gram = [[_hermitian(self.gram, u, v) for v in self.normals] for u in self.normals]
        coeffs = [0] * (self.n + 1)
        for k in range(self.n + 1):
            total = 0
            for S in combinations(range(N), k):
                if k and EchelonBasis(self.normals[i] for i in S).rank < k:
                    continue
                det = bareiss_det(object_array([[gram[s][t] for t in S] for s in S])) if k else 1
                term = det
                for i in S:
                    term = term * self.weights[i] * self.scales[i]
                total = total + term
            coeffs[self.n - k] = simplify(total)
        return coeffs

    def to_json(self):
        return {
            'normals': [[str(x) for x in v] for v in self.normals],
            'norms': [str(c) for c in self.norms],
            'weights': [str(w) for w in self.weights],
            'matrix': [[str(x) for x in row] for row in self.matrix.tolist()],
        }

    def __repr__(self):
        return f"ArrLaplacian(n={self.n}, hyperplanes={len(self.normals)})"


def arr_from_group(G, weights, norms='full'):
    r"""

    Realize the :math:`W`-Laplacian of hyperplane-constant weights as an arrangement Laplacian.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    weights : WeightSystem

        Weights that are constant on every cyclic block.

    norms : {'full', 'one', 'minus_one'}, optional

        The norms :math:`c_H`: :math:`e_H` (which reproduces the :math:`W`-Laplacian), :math:`1`
        or :math:`e_H - 1`.

    Returns
    -------
    L : ArrLaplacian

        The arrangement Laplacian of the reflection arrangement.

    Raises
    ------
    NotHyperplaneConstantError

        If the weights differ on a cyclic block.

    """
    if norms not in NORM_VARIANTS:
        raise ValueError(f"norms must be one of {NORM_VARIANTS}, got: {norms!r}")
    if not weights.is_hyperplane_constant(G):
        raise NotHyperplaneConstantError(
            f"weights of {G.descriptor} are not constant on the cyclic blocks")
    c = {'full': lambda e: e, 'one': lambda e: 1, 'minus_one': lambda e: e - 1}[norms]
    L = ArrLaplacian(
        [H.normal for H in G.hyperplanes], gram=G.gram,
        norms=[c(H.order) for H in G.hyperplanes],
        weights=[weights.hyperplane_weight(G, j) for j in range(G.num_hyperplanes)])
    logging.getLogger('coxlab.laplacians.arr_from_group').debug(
        f"{G.descriptor}: {G.num_hyperplanes} hyperplanes, norms={norms}")
    return L


def rrt_check(G, weights):
    r"""

    Check the factorization :math:`L_W(\omega) = R\,\Omega\,R^*G`.

    The columns of :math:`R` are the normals :math:`n_\tau` of the reflections and :math:`\Omega`
    is diagonal with entries :math:`w(\tau)(1-\zeta_\tau)/\nu_\tau`, where :math:`\zeta_\tau` is
    the non-trivial eigenvalue of :math:`\tau`. This is the identity for normals scaled to
    :math:`\langle r_\tau, r_\tau\rangle = 1 - \zeta_\tau`, with the scale moved into
    :math:`\Omega`.

    Returns
    -------
    report : VerificationReport

        The first differing entry, if any.

    """
    from ._w_laplacian import WLaplacian
    name = f"rrt[{G.descriptor}]"
    N = G.num_reflections
    R = zeros(G.rank, N)
    Omega = zeros(N)
    for i in range(N):
        H = G.hyperplanes[G.reflection_hyperplane[i]]
        for a, x in enumerate(H.normal):
            R[a, i] = x
        Omega[i, i] = simplify(
            weights.weight(i) * (1 - G.reflection_eigenvalue[i]) * Fraction(1) / H.norm)
    RH = zeros(N, G.rank)
    for a in range(G.rank):
        for i in range(N):
            RH[i, a] = conj(R[a, i]) if R[a, i] != 0 else 0
    rhs = R.dot(Omega).dot(RH).dot(G.gram)
    lhs = WLaplacian(G, weights).matrix
    for a in range(G.rank):
        for b in range(G.rank):
            if simplify(lhs[a, b] - rhs[a, b]) != 0:
                return VerificationReport.failure(
                    name, {'entry': [a, b], 'laplacian': lhs[a, b], 'rrt': simplify(rhs[a, b])})
    return VerificationReport.success(name, reflections=N)
