from fractions import Fraction

from .._base.errors import MalformedTowerError
from ..groups import build_group
from ..scalars import (
    LinearForm, Poly, TruncatedEGF, egf_product_formula, parse_weights, simplify, zeta)
from ..towers import WeightSystem
from ..utils import compare_coefficients
from ._convolution import FactorizationSeries, enumerate_series


__all__ = (
    'dihedral_closed_form',
    'dihedral_reflection_tower',
    'verify_dihedral',
)


def _omegas(m, values):
    if values is None:
        return [Poly.variable(a, m) for a in range(m)], 'formal'
    values = [Fraction(x) for x in parse_weights(values)]
    if len(values) != m:
        raise ValueError(f"I2({m}) has {m} reflections, got {len(values)} weights")
    return values, 'numeric'


def dihedral_closed_form(m, values=None, L=6):
    r"""

    The factorization series of the dihedral group :math:`I_2(m)` with one weight per reflection,

    .. math::

        F(t,\omega)\ =\ \frac{1}{m}\sum_{i=0}^{m-1}\left(\zeta^i+\zeta^{-i}\right)H(t,\zeta^i),
        \qquad H(t,u) = \cosh\Big(t\sqrt{P(u)\,P(u^{-1})}\Big),\quad
        P(u) = \sum_{a=0}^{m-1}\omega_a u^a,

    where :math:`\zeta = e^{2\pi i/m}` and :math:`\omega_a` is the weight of the reflection
    :math:`t_a`. The hyperbolic cosine is expanded as the even series with coefficients
    :math:`(P(u)P(u^{-1}))^{\ell/2}`, so the roots of unity are summed out exactly.

    Parameters
    ----------
    m : int

        The order parameter, at least 3.

    values : sequence of rationals, optional

        The weights :math:`\omega_0,\dots,\omega_{m-1}`. Formal if omitted.

    L : int, optional

        The truncation order.

    Returns
    -------
    series : FactorizationSeries

        The series summed over the Coxeter class.

    """
    if m < 3:
        raise ValueError(f"I2(m) requires m >= 3, got: {m}")
    omegas, mode = _omegas(m, values)
    coeffs = [0] * (L + 1)
    for i in range(m):
        P = sum((w * zeta(m, a * i % m) for a, w in enumerate(omegas)), 0)
        Q = sum((w * zeta(m, -a * i % m) for a, w in enumerate(omegas)), 0)
        X = P * Q
        c = zeta(m, i) + zeta(m, -i % m)
        power = 1
        for ell in range(0, L + 1, 2):
            coeffs[ell] = coeffs[ell] + c * power
            power = power * X
    coeffs = [simplify(c * Fraction(1, m)) for c in coeffs]
    return FactorizationSeries(f"I2({m})", 'class', mode, TruncatedEGF(coeffs, L))


def verify_dihedral(m, values=None, L=6, budget_mb=None):
    r"""

    Compare :func:`dihedral_closed_form` with brute-force enumeration.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    G = build_group(f"I2({m})")
    weights = WeightSystem.per_reflection(G, values)
    lhs = enumerate_series(G, weights, 'class', L, budget_mb).series
    rhs = dihedral_closed_form(m, values, L).series
    return compare_coefficients(
        f"dihedral[I2({m})]", lhs.coeffs, rhs.coeffs,
        labels=('enumeration', 'closed_form'), mode=weights.mode, L=L)


def _parse_chain(m, chain):
    if isinstance(chain, str):
        try:
            chain = [int(x) for x in chain.split(',') if x.strip()]
        except ValueError:
            raise MalformedTowerError(f"malformed divisor chain: {chain!r}")
    chain = tuple(int(x) for x in chain)
    if not chain or chain[-1] != m:
        raise MalformedTowerError(f"a divisor chain of I2({m}) must end in {m}, got: {chain}")
    if chain[0] < 1 or any(b <= a or b % a for a, b in zip(chain, chain[1:])):
        raise MalformedTowerError(
            f"{chain} is not a strictly increasing chain of divisors m1 | m2 | ... | {m}")
    return chain


def dihedral_reflection_tower(m, chain, L=None, budget_mb=None):
    r"""

    Check the product formula for a tower of reflection subgroups of :math:`I_2(m)`.

    A divisor chain :math:`m_1\mid m_2\mid\dots\mid m_k = m` gives the reflection subgroups
    :math:`I_2(m_1)\subset\dots\subset I_2(m_k)`, where :math:`I_2(m_i)` consists of the reflections
    :math:`t_a` with :math:`a\equiv 0 \bmod m/m_i`. A reflection gets the weight :math:`\omega_i` of
    the first subgroup it belongs to, and the series is compared with

    .. math::

        \frac{e^{t\,w(R)}}{m}\left(1 - e^{-t\lambda_1}\right)\left(1 - e^{-t\lambda_2}\right),
        \qquad \lambda_1 = m\,\omega_k,\quad
        \lambda_2 = 2m_1\omega_1 + \sum_{i=2}^{k-1}2(m_i - m_{i-1})\,\omega_i
            + (m - 2m_{k-1})\,\omega_k.

    For :math:`k = 1` both eigenvalues are :math:`m\,\omega_1`.

    Parameters
    ----------
    m : int

        The order parameter, at least 3.

    chain : sequence of int or str

        The divisor chain, e.g. ``(2, 6)`` or ``"2,6"``.

    L : int, optional

        The truncation order. Defaults to 6.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    Raises
    ------
    MalformedTowerError

        If the chain is not a strictly increasing divisor chain ending in :math:`m`.

    """
    chain = _parse_chain(m, chain)
    L = 6 if L is None else int(L)
    k = len(chain)
    G = build_group(f"I2({m})")
    assignment = [min(i for i, mi in enumerate(chain) if a % (m // mi) == 0) for a in range(m)]
    weights = WeightSystem(assignment, k)
    lam1 = LinearForm.unit(k - 1, k, m)
    if k == 1:
        lam2 = LinearForm.unit(0, 1, m)
    else:
        coeffs = [0] * k
        coeffs[0] = 2 * chain[0]
        for i in range(1, k - 1):
            coeffs[i] = 2 * (chain[i] - chain[i - 1])
        coeffs[k - 1] += m - 2 * chain[k - 2]
        lam2 = LinearForm(coeffs)
    lhs = enumerate_series(G, weights, 'class', L, budget_mb).series
    rhs = egf_product_formula(weights.total(), [lam1, lam2], m, L)
    return compare_coefficients(
        f"dihedral_tower[I2({m})|{','.join(map(str, chain))}]", lhs.coeffs, rhs.coeffs,
        labels=('enumeration', 'product_formula'), spectrum=[str(lam1), str(lam2)], L=L)
