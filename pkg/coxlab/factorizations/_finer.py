import logging
from itertools import combinations

from .._base.errors import UnsupportedFamilyError
from ..groups import GroupElement, MonomialGroup, SymmetricGroup, build_group
from ..laplacians import CharPoly
from ..scalars import TruncatedEGF, simplify, zeta
from ..towers import WeightSystem, tower_spectrum
from ..utils import (
    VerificationReport, char_poly_coefficients, compare_coefficients, identity, trace, zeros)
from ._convolution import enumerate_series
from ._theorems import tower_label


__all__ = (
    'det_one_minus_exp',
    'finer_formula_Bn',
    'finer_formula_Gr1n',
    'finer_spectrum_matches_tower',
    'u_laplacian',
)


def _check_family(G):
    if not isinstance(G, MonomialGroup) or isinstance(G, SymmetricGroup) or G.p != 1:
        raise UnsupportedFamilyError(
            f"the representation U is only defined for G(r,1,n), got: {G.descriptor}")


def _u_matrix(G, S, g, q):
    r""" :math:`\rho_U(g)` for :math:`U = \pi^*(\text{standard}) \oplus \xi^{q\sum a_i}` """
    n = G.n
    M = zeros(n)
    if S is not None:
        block = S.matrix(GroupElement(g.perm, (0,) * n))
        for i in range(n - 1):
            for j in range(n - 1):
                M[i, j] = block[i, j]
    M[n - 1, n - 1] = simplify(zeta(G.r, q * sum(g.twist) % G.r))
    return M


def u_laplacian(G, weights, q=1):
    r"""

    The Laplacian :math:`\sum_\tau w(\tau)\,(I - \rho_U(\tau))` on the :math:`n`-dimensional
    representation

    .. math::

        U\ =\ \pi^*\big(V_{(n-1,1)}\big)\ \oplus\ \xi^{\,q(a_1+\dots+a_n)}

    of :math:`G(r,1,n)`, where :math:`\pi:G(r,1,n)\to S_n` forgets the twists,
    :math:`V_{(n-1,1)}` is the reflection representation of :math:`S_n` and :math:`\xi` is the
    linear character reading off the product of the nonzero entries. For :math:`B_n` and
    :math:`q = 1` the linear character is the product of the signs.

    Parameters
    ----------
    G : MonomialGroup

        A group :math:`G(r,1,n)`.

    weights : WeightSystem

        Formal or numeric weights.

    q : int, optional

        The exponent of the linear character, nonzero modulo :math:`r`.

    Returns
    -------
    M : 2d object ndarray

        The matrix in the simple-root basis of the first summand.

    """
    _check_family(G)
    if q % G.r == 0:
        raise ValueError(f"q must be nonzero modulo r = {G.r}, got: {q}")
    n = G.n
    S = SymmetricGroup(n) if n >= 2 else None
    M = zeros(n)
    one = identity(n)
    for j, tau in enumerate(G.reflections):
        w = weights.weight(j)
        D = one - _u_matrix(G, S, tau, q)
        for a in range(n):
            for b in range(n):
                if D[a, b] != 0:
                    M[a, b] = M[a, b] + w * D[a, b]
    for a in range(n):
        for b in range(n):
            M[a, b] = simplify(M[a, b])
    return M


def _wedge_derivation(M, k):
    r""" the action of :math:`M` on :math:`\wedge^k` as a derivation """
    n = M.shape[0]
    subsets = list(combinations(range(n), k))
    position = {S: i for i, S in enumerate(subsets)}
    D = zeros(len(subsets))
    for col, S in enumerate(subsets):
        for i in S:
            for j in range(n):
                if M[j, i] == 0:
                    continue
                if j == i:
                    D[col, col] = D[col, col] + M[i, i]
                    continue
                if j in S:
                    continue
                rest = [s for s in S if s != i]
                T = tuple(sorted(rest + [j]))
                between = sum(1 for s in rest if min(i, j) < s < max(i, j))
                entry = M[j, i] if between % 2 == 0 else -M[j, i]
                D[position[T], col] = D[position[T], col] + entry
    return D


def det_one_minus_exp(M, L):
    r"""

    The series :math:`\det\big(I - e^{-tM}\big) = \prod_i\big(1 - e^{-t\lambda_i}\big)` without
    computing the eigenvalues :math:`\lambda_i` of :math:`M`.

    With :math:`D_k` the derivation action of :math:`M` on :math:`\wedge^k`,

    .. math::

        \det\big(I - e^{-tM}\big)\ =\ \sum_{k=0}^n (-1)^k\operatorname{tr} e^{-tD_k}
            \ =\ \sum_{\ell\ge 0}\frac{t^\ell}{\ell!}\sum_{k=0}^n (-1)^{k+\ell}
            \operatorname{tr} D_k^\ell.

    Parameters
    ----------
    M : 2d object ndarray

        A square matrix with exact entries, possibly polynomials in the weights.

    L : int

        The truncation order.

    Returns
    -------
    series : TruncatedEGF

        The truncated series.

    """
    n = M.shape[0]
    coeffs = [1] + [0] * L
    for k in range(1, n + 1):
        D = _wedge_derivation(M, k)
        power = identity(D.shape[0])
        for ell in range(L + 1):
            tr = trace(power)
            coeffs[ell] = coeffs[ell] + (tr if (k + ell) % 2 == 0 else -tr)
            if ell < L:
                power = power.dot(D)
    return TruncatedEGF(coeffs, L)


def _finer(G, weights, name, L, budget_mb, q=1):
    L = G.rank + 4 if L is None else int(L)
    M = u_laplacian(G, weights, q)
    total = weights.total() if weights.mode == 'formal' else weights.total_value()
    rhs = TruncatedEGF.exp_linear(total, L) * det_one_minus_exp(M, L) / G.coxeter_number
    lhs = enumerate_series(G, weights, 'class', L, budget_mb).series
    logging.getLogger('coxlab.factorizations.finer').debug(
        f"{name}: U-Laplacian {[[str(x) for x in row] for row in M.tolist()]}")
    return compare_coefficients(
        name, lhs.coeffs, rhs.coeffs, labels=('enumeration', 'finer_formula'),
        mode=weights.mode, L=L)


def finer_formula_Bn(n, values=None, L=None, budget_mb=None):
    r"""

    Check the product formula for arbitrary weights on the reflections of :math:`B_n`,

    .. math::

        F(t,\omega)\ =\ \frac{e^{t\,w(R)}}{2n}\prod_{i=1}^n\left(1 - e^{-t\lambda_i}\right),

    where :math:`\lambda_1,\dots,\lambda_n` are the eigenvalues of
    :math:`\sum_\tau w(\tau)(1-\tau)` on the representation :math:`U` of :func:`u_laplacian`.

    Parameters
    ----------
    n : int

        The rank.

    values : sequence of rationals or WeightSystem, optional

        One weight per reflection. Formal if omitted.

    L : int, optional

        The truncation order. Defaults to :math:`n + 4`.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    G = build_group(f"G(2,1,{n})")
    weights = values if isinstance(values, WeightSystem) else (
        WeightSystem.per_reflection(G, values))
    return _finer(G, weights, f"finer_bn[{G.descriptor}]", L, budget_mb)


def finer_formula_Gr1n(r, n, values=None, L=None, budget_mb=None, q=1):
    r"""

    The analog of :func:`finer_formula_Bn` for :math:`G(r,1,n)`, with prefactor :math:`1/(rn)`,
    for weights that are constant on every cyclic block.

    Parameters
    ----------
    r, n : int

        The parameters of :math:`G(r,1,n)`.

    values : sequence of rationals or WeightSystem, optional

        One weight per hyperplane, or a weight system. Formal if omitted.

    L : int, optional

        The truncation order. Defaults to :math:`n + 4`.

    q : int, optional

        The exponent of the linear character of :math:`U`, nonzero modulo :math:`r`.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    Raises
    ------
    NotHyperplaneConstantError

        If a weight system is passed whose weights differ on a cyclic block.

    """
    G = build_group(f"G({r},1,{n})")
    weights = values if isinstance(values, WeightSystem) else (
        WeightSystem.per_hyperplane(G, values))
    weights.check_hyperplane_constant(G)
    return _finer(G, weights, f"finer_gr1n[{G.descriptor}|q={q}]", L, budget_mb, q)


def finer_spectrum_matches_tower(G, T, q=1):
    r"""

    Check that under tower weights the eigenvalues on :math:`U` are the tower spectrum, i.e.
    :math:`\det(x + M_U) = \prod_i (x + \lambda_i(\omega))`.

    Raises
    ------
    UnsupportedFamilyError

        Unless :math:`G = G(r,1,n)`.

    """
    _check_family(G)
    M = u_laplacian(G, T.weight_system(), q)
    spectrum = tower_spectrum(G, T)
    p = CharPoly(char_poly_coefficients(-M))
    name = f"finer_spectrum[{G.descriptor}|{tower_label(T)}]"
    details = {'spectrum': [str(f) for f in spectrum]}
    if not p.has_roots(spectrum):
        return VerificationReport.failure(name, {'char_poly': str(p)}, **details)
    return VerificationReport.success(name, **details)
