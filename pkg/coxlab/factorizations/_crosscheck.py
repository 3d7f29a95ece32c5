import logging
from collections import defaultdict
from fractions import Fraction
from math import comb

from ..groups import build_group
from ..scalars import LinearForm, TruncatedEGF
from ..symfuncs import (
    CharacterTable, Partition, coxeter_number_char, cycle_type, mn_character, partitions)
from ..towers import WeightSystem, standard_tower
from ..utils import compare_coefficients
from ._convolution import ConvolutionState, enumerate_series


__all__ = (
    'frobenius_crosscheck_Sn',
    'gelfand_tsetlin_spectrum',
    'gt_crosscheck_Sn',
)


FROBENIUS_MAX_N = 5
GT_MAX_N = 6


def frobenius_crosscheck_Sn(n, weights=None, L=None, budget_mb=None):
    r"""

    Evaluate the factorization series of :math:`S_n` through the character table,

    .. math::

        F(t,\omega)\ =\ \frac{|C|}{|G|}\sum_\chi \chi(c^{-1})\,\chi\big(e^{tA(\omega)}\big),
        \qquad A(\omega) = \sum_\tau w(\tau)\,\tau,

    and compare with the enumeration. The powers :math:`A(\omega)^\ell` are expanded in the group
    algebra and their class sums paired with every irreducible character.

    Parameters
    ----------
    n : int

        The degree, at most 5.

    weights : WeightSystem, optional

        Defaults to one formal variable per transposition.

    L : int, optional

        The truncation order. Defaults to :math:`n + 3`.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    if not 2 <= n <= FROBENIUS_MAX_N:
        raise ValueError(f"n must lie in 2..{FROBENIUS_MAX_N}, got: {n}")
    G = build_group(f"Sym({n})")
    weights = WeightSystem.per_reflection(G) if weights is None else weights
    L = n + 3 if L is None else int(L)

    classes = defaultdict(list)
    for i, g in enumerate(G.elements):
        classes[cycle_type(g.perm)].append(i)
    table = CharacterTable(n)
    coxeter = Partition((n,))
    scale = Fraction(G.coxeter_class().size, G.order)

    state = ConvolutionState(G, weights, budget_mb)
    coeffs = []
    for ell in range(L + 1):
        if ell:
            state.step()
        sums = {mu: state.value(indices) for mu, indices in classes.items()}
        total = 0
        for lam in table.partitions:
            chi_c = table.value(lam, coxeter)
            if chi_c == 0:
                continue
            chi_A = sum((table.value(lam, mu) * s for mu, s in sums.items()), 0)
            total = total + chi_c * chi_A
        coeffs.append(total * scale)
    rhs = TruncatedEGF(coeffs, L)
    lhs = enumerate_series(G, weights, 'class', L, budget_mb).series
    return compare_coefficients(
        f"frobenius[{G.descriptor}]", lhs.coeffs, rhs.coeffs,
        labels=('enumeration', 'character_sum'), mode=weights.mode, L=L)


def _central_value(mu):
    r""" :math:`\tilde\chi_\mu` on the sum of all transpositions of :math:`S_{|\mu|}` """
    m = mu.size
    return comb(m, 2) - coxeter_number_char(mu) if m >= 2 else 0


def gelfand_tsetlin_spectrum(lam):
    r"""

    The exponents contributed by :math:`\chi_\lambda` along the standard tower
    :math:`S_1\subset S_2\subset\dots\subset S_n`.

    Every chain :math:`\lambda^{(1)}\subset\dots\subset\lambda^{(n)} = \lambda` of the Young lattice
    contributes the exponent vector

    .. math::

        \big(\tilde\chi_{\lambda^{(i+1)}}(A_{i+1})
            - \tilde\chi_{\lambda^{(i)}}(A_i)\big)_{i=1}^{n-1},

    where :math:`A_i` is the sum of the transpositions of :math:`S_i`. The entries are the contents
    of the added cells.

    Returns
    -------
    spectrum : list of tuple of int

        One exponent vector per standard Young tableau.

    """
    lam = Partition(lam)
    out = []
    for chain in lam.standard_tableaux():
        values = [_central_value(mu) for mu in chain[1:]]
        out.append(tuple(b - a for a, b in zip(values, values[1:])))
    return out


def gt_crosscheck_Sn(n, L=None, budget_mb=None):
    r"""

    Evaluate the factorization series of :math:`S_n` under the weights of the standard tower by
    Young-lattice branching,

    .. math::

        F(t,\omega)\ =\ \frac{|C|}{|G|}\sum_\lambda \chi_\lambda(c^{-1})
            \sum_{\lambda^{(1)}\subset\dots\subset\lambda^{(n)}=\lambda}
            \exp\Big(t\sum_{i=1}^{n-1}\big(\tilde\chi_{\lambda^{(i+1)}}(A_{i+1})
                - \tilde\chi_{\lambda^{(i)}}(A_i)\big)\,\omega_i\Big),

    and compare with the enumeration.

    Parameters
    ----------
    n : int

        The degree, at most 6.

    L : int, optional

        The truncation order. Defaults to :math:`n + 3`.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    if not 2 <= n <= GT_MAX_N:
        raise ValueError(f"n must lie in 2..{GT_MAX_N}, got: {n}")
    G = build_group(f"Sym({n})")
    T = standard_tower(G)
    L = n + 3 if L is None else int(L)
    rhs = TruncatedEGF.zero(L)
    chains = 0
    for lam in partitions(n):
        chi_c = mn_character(lam, (n,))
        if chi_c == 0:
            continue
        for exps in gelfand_tsetlin_spectrum(lam):
            rhs = rhs + chi_c * TruncatedEGF.exp_linear(LinearForm(exps), L)
            chains += 1
    rhs = rhs * Fraction(G.coxeter_class().size, G.order)
    logging.getLogger('coxlab.factorizations.gt_crosscheck_Sn').debug(
        f"Sym({n}): {chains} chains through hooks")
    lhs = enumerate_series(G, T.weight_system(), 'class', L, budget_mb).series
    return compare_coefficients(
        f"gelfand_tsetlin[{G.descriptor}]", lhs.coeffs, rhs.coeffs,
        labels=('enumeration', 'branching_sum'), chains=chains, L=L)
