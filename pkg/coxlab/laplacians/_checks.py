from itertools import combinations

from .._base.errors import UnsupportedFamilyError
from ..groups import SymmetricGroup
from ..scalars import LinearForm, simplify
from ..utils import (
    VerificationReport, bareiss_det, compare_coefficients, first_discrepancy, identity, zeros)
from ..towers import tower_spectrum
from ._char_poly import char_poly
from ._w_laplacian import WLaplacian


__all__ = (
    'burman_check',
    'char_poly_bareiss_check',
    'graph_laplacian_Kn',
    'kn_minor_check',
    'tower_spectrum_check',
    'wedge_spectrum',
)


def wedge_spectrum(lambdas, k):
    r"""

    The eigenvalues of :math:`L` on the exterior power :math:`\wedge^k V`.

    Parameters
    ----------
    lambdas : sequence of LinearForm

        The eigenvalues of :math:`L` on :math:`V`.

    k : int

        The degree, :math:`0\le k\le n`.

    Returns
    -------
    spectrum : list of LinearForm

        All :math:`\binom{n}{k}` sums :math:`\lambda_{i_1}+\dots+\lambda_{i_k}`.

    """
    lambdas = list(lambdas)
    if not 0 <= k <= len(lambdas):
        raise ValueError(f"k must lie in 0..{len(lambdas)}, got: {k}")
    nvars = lambdas[0].nvars if lambdas else 0
    return [sum(S, LinearForm.zero(nvars)) for S in combinations(lambdas, k)]


def char_poly_bareiss_check(L, x0, values=None):
    r"""

    Compare :math:`\det(x_0 + L)` from the characteristic polynomial against fraction-free
    Gaussian elimination of the instantiated matrix.

    Parameters
    ----------
    L : WLaplacian or ArrLaplacian

        The Laplacian.

    x0 : rational

        The evaluation point.

    values : sequence of rationals, optional

        Weight values, required if the Laplacian is formal.

    Returns
    -------
    report : VerificationReport

        Both values.

    """
    name = 'char_poly_bareiss'
    M = L.matrix if values is None else L.evaluate(values)
    n = M.shape[0]
    A = M + x0 * identity(n)
    direct = simplify(bareiss_det(A))
    via_poly = char_poly(L).at(x0, values)
    if direct != via_poly:
        return VerificationReport.failure(
            name, {'x': x0, 'bareiss': direct, 'char_poly': via_poly})
    return VerificationReport.success(name, x=x0, value=direct)


def tower_spectrum_check(G, T, values=None):
    r"""

    Check that the tower spectrum consists of the roots of :math:`\det(x + L_W^T(\omega))`.

    With formal weights the characteristic polynomial is divided by
    :math:`\prod_j (x + \lambda_j(\omega))`; every remainder must vanish. With numeric weights the
    roots are checked at the given point.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    T : ParabolicTower

        A tower of :code:`G`.

    values : sequence of rationals, optional

        Weight values. If omitted, the check is formal.

    Returns
    -------
    report : VerificationReport

        The first nonzero remainder, if any.

    """
    name = f"tower_spectrum[{G.descriptor}]"
    forms = tower_spectrum(G, T)
    L = WLaplacian(G, T.weight_system(values))
    p = char_poly(L)
    if values is None:
        _, remainders = p.divide(forms)
        for j, r in enumerate(remainders):
            if r != 0:
                return VerificationReport.failure(
                    name, {'eigenvalue': str(forms[j]), 'remainder': str(r)})
        return VerificationReport.success(name, spectrum=[str(f) for f in forms])
    expected = [1]
    for f in forms:
        root = -f.evaluate(list(values))
        expected = [0] + expected
        for i in range(len(expected) - 1):
            expected[i] = expected[i] - root * expected[i + 1]
    return compare_coefficients(
        name, list(p.coeffs), [simplify(c) for c in expected], labels=('char_poly', 'tower'),
        values=[str(v) for v in values])


def burman_check(L):
    r"""

    Compare the Faddeev-LeVerrier coefficients of an arrangement Laplacian against its
    independent-subset expansion.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    return compare_coefficients(
        'burman', list(char_poly(L).coeffs), L.burman_expansion(),
        labels=('char_poly', 'burman'))


def graph_laplacian_Kn(n, weights):
    r"""

    The weighted Laplacian of the complete graph :math:`K_n`.

    Parameters
    ----------
    n : int

        The number of vertices.

    weights : dict

        The edge weights :math:`\omega_{ij}`, keyed by pairs :math:`i<j`.

    Returns
    -------
    L : 2d object ndarray

        The :math:`n\times n` graph Laplacian.

    """
    L = zeros(n)
    for (i, j), w in weights.items():
        L[i, i] = L[i, i] + w
        L[j, j] = L[j, j] + w
        L[i, j] = L[i, j] - w
        L[j, i] = L[j, i] - w
    return L


def _transposition(tau):
    moved = [k for k, p in enumerate(tau.perm) if p != k]
    if len(moved) != 2:
        raise ValueError(f"{tau} is not a transposition")
    return tuple(moved)


def kn_minor_check(G, weights):
    r"""

    Relate the :math:`S_n` Laplacian to the graph Laplacian of :math:`K_n`.

    The :math:`W`-Laplacian is the graph Laplacian restricted to the sum-zero hyperplane, so
    :math:`\det L_W(\omega) = n\cdot\det L_{K_n}(\omega)^{(1)}`, where the superscript denotes
    any first minor (the weighted spanning-tree count).

    Parameters
    ----------
    G : SymmetricGroup

        The symmetric group :math:`S_n`.

    weights : WeightSystem

        Numeric weights.

    Returns
    -------
    report : VerificationReport

        Both determinants.

    """
    if not isinstance(G, SymmetricGroup):
        raise UnsupportedFamilyError(f"kn_minor_check requires a symmetric group, got {G.name}")
    if weights.mode != 'numeric':
        raise ValueError("kn_minor_check requires numeric weights")
    n = G.rank + 1
    edge_weights = {_transposition(tau): weights.weight(i) for i, tau in enumerate(G.reflections)}
    K = graph_laplacian_Kn(n, edge_weights)
    minor = simplify(bareiss_det(K[1:, 1:])) if n > 1 else 1
    det = simplify(bareiss_det(WLaplacian(G, weights).matrix))
    name = f"kn_minor[{G.descriptor}]"
    discrepancy = first_discrepancy([det], [n * minor], labels=('det_L', 'n_times_minor'))
    if discrepancy:
        return VerificationReport.failure(name, discrepancy)
    return VerificationReport.success(name, det=det, minor=minor)
