import logging
from fractions import Fraction
from math import factorial

from ..laplacians import WLaplacian, char_poly
from ..scalars import Poly, chapuy_stump_series, egf_product_formula, simplify
from ..towers import WeightSystem, standard_tower, tower_spectrum
from ..utils import VerificationReport, compare_coefficients
from ._convolution import ConvolutionState, enumerate_series


__all__ = (
    'chapuy_stump_check',
    'reduced_count',
    'reduced_count_divisibility',
    'unweighted_reduced_count',
    'verify_main_theorem',
    'verify_reduced_count',
)


def tower_label(T):
    ordering = T.source.get('ordering')
    return ','.join(map(str, ordering)) if ordering else 'custom'


def verify_main_theorem(G, T, L=None, budget_mb=None):
    r"""

    Compare brute-force enumeration with the product formula

    .. math::

        F_W^T(t,\omega)\ =\ \frac{e^{t\,w_T(R)}}{h}
            \prod_{i=1}^n\left(1 - e^{-t\lambda_i(\omega)}\right),

    where :math:`\lambda_1,\dots,\lambda_n` is the tower spectrum. Both sides are computed in the
    formal weights of the tower.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    T : ParabolicTower

        The tower.

    L : int, optional

        The truncation order, at least :math:`n`. Defaults to :math:`n + 4`.

    budget_mb : int, optional

        Overrides the memory budget of the enumeration.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    L = G.rank + 4 if L is None else int(L)
    if L < G.rank:
        raise ValueError(f"L must be at least the rank {G.rank}, got: {L}")
    weights = T.weight_system()
    spectrum = tower_spectrum(G, T)
    lhs = enumerate_series(G, weights, 'class', L, budget_mb).series
    rhs = egf_product_formula(weights.total(), spectrum, G.coxeter_number, L)
    return compare_coefficients(
        f"mainthm[{G.descriptor}|{tower_label(T)}]", lhs.coeffs, rhs.coeffs,
        labels=('enumeration', 'product_formula'), spectrum=[str(f) for f in spectrum], L=L)


def _reduced(G, weights, indices, budget_mb=None):
    state = ConvolutionState(G, weights, budget_mb)
    for _ in range(G.rank):
        state.step()
    return state.value(indices)


def reduced_count(G, T=None, values=None, budget_mb=None):
    r"""

    The weighted number of reduced factorizations, summed over the Coxeter class.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    T : ParabolicTower, optional

        The tower whose weights are used. Defaults to the standard tower.

    values : sequence of rationals, optional

        Numeric weight values. Formal if omitted.

    Returns
    -------
    count : Poly or rational

        The coefficient of :math:`t^n/n!` in :math:`F_W^T`.

    """
    T = standard_tower(G) if T is None else T
    return _reduced(G, T.weight_system(values), G.coxeter_class().indices, budget_mb)


def verify_reduced_count(G, T=None, values=None, budget_mb=None):
    r"""

    Check the determinant formula for reduced factorizations,

    .. math::

        \sum_{c}\ \sum_{\tau_1\cdots\tau_n = c} w_T(\tau_1)\cdots w_T(\tau_n)\ =\
            \frac{n!}{h}\,\det L_W^T(\omega),

    where :math:`c` runs over the Coxeter class. The identity fails for a single Coxeter element,
    so only the class sum is compared.

    Returns
    -------
    report : VerificationReport

        Both sides.

    """
    T = standard_tower(G) if T is None else T
    weights = T.weight_system(values)
    count = reduced_count(G, T, values, budget_mb)
    det = char_poly(WLaplacian(G, weights)).det
    expected = simplify(det * Fraction(factorial(G.rank), G.coxeter_number))
    name = f"reduced[{G.descriptor}|{tower_label(T)}]"
    details = {'count': count, 'det': det}
    if count != expected:
        return VerificationReport.failure(
            name, {'enumeration': count, 'determinant_formula': expected}, **details)
    return VerificationReport.success(name, **details)


def unweighted_reduced_count(G, budget_mb=None):
    r"""

    Count the reduced factorizations of the standard Coxeter element and compare with
    :math:`h^n\,n!/|W|`.

    Returns
    -------
    report : VerificationReport

        The count in ``details['count']``.

    """
    weights = WeightSystem.uniform(G, 1)
    count = _reduced(G, weights, (G.index(G.coxeter_element()),), budget_mb)
    n, h = G.rank, G.coxeter_number
    expected = simplify(Fraction(h ** n * factorial(n), G.order))
    name = f"unweighted_reduced[{G.descriptor}]"
    if count != expected:
        return VerificationReport.failure(
            name, {'enumeration': count, 'formula': expected}, count=count)
    return VerificationReport.success(name, count=count)


def chapuy_stump_check(G, L=None, budget_mb=None):
    r"""

    Compare the unweighted factorization series of the standard Coxeter element with

    .. math::

        \frac{e^{t|R|}}{|W|}\left(1 - e^{-th}\right)^n.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    L = G.rank + 4 if L is None else int(L)
    lhs = enumerate_series(G, WeightSystem.uniform(G, 1), 'element', L, budget_mb).series
    rhs = chapuy_stump_series(G.num_reflections, G.order, G.coxeter_number, G.rank, L)
    return compare_coefficients(
        f"chapuy_stump[{G.descriptor}]", lhs.coeffs, rhs.coeffs,
        labels=('enumeration', 'closed_form'), L=L)


def reduced_count_divisibility(G, T=None, budget_mb=None):
    r"""

    Check that every coefficient of the formal reduced count is divisible by :math:`n!`.

    Returns
    -------
    report : VerificationReport

        The first monomial whose coefficient is not a multiple of :math:`n!`, if any.

    """
    T = standard_tower(G) if T is None else T
    count = reduced_count(G, T, budget_mb=budget_mb)
    nfact = factorial(G.rank)
    name = f"divisibility[{G.descriptor}|{tower_label(T)}]"
    terms = count.terms if isinstance(count, Poly) else {(): count}
    logging.getLogger('coxlab.factorizations.reduced_count_divisibility').debug(
        f"{name}: {len(terms)} monomials")
    for exps, c in sorted(terms.items()):
        if c % nfact:
            return VerificationReport.failure(
                name, {'monomial': list(exps), 'coefficient': c, 'modulus': nfact})
    return VerificationReport.success(name, monomials=len(terms), modulus=nfact)
