import logging
from fractions import Fraction
from math import comb, factorial
from numbers import Integral

import numpy as np

from ..utils import jsonable
from ._cyc import Cyc
from ._linear_form import LinearForm
from ._poly import Poly
from ._scalar import simplify


__all__ = (
    'TruncatedEGF',
    'chapuy_stump_series',
    'egf_product_formula',
)


_COEFFS = (Integral, Fraction, Cyc, Poly, np.integer)


def _tidy(c):
    return c if isinstance(c, Poly) else simplify(c)


class TruncatedEGF:
    r"""

    An exponential generating function :math:`\sum_{\ell=0}^L c_\ell\,t^\ell/\ell!` truncated at
    order :math:`L`.

    The coefficients are exact ring elements: integers, rationals, cyclotomic numbers or
    :class:`Poly` instances in the weight variables. Products are binomial convolutions, so the
    series of :math:`f\,g` is correct up to the smaller of the two truncation orders.

    Parameters
    ----------
    coeffs : sequence

        The coefficients :math:`c_0,\dots,c_m`.

    order : int, optional

        The truncation order :math:`L`. Shorter coefficient lists are padded with zeros, longer
        ones are cut. Defaults to ``len(coeffs) - 1``.

    """
    __slots__ = ('order', 'coeffs')

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"truncation order must be non-negative, got: {order}")
        coeffs = coeffs[:order + 1] + [0] * (order + 1 - len(coeffs))
        self.order = int(order)
        self.coeffs = tuple(_tidy(c) for c in coeffs)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    @classmethod
    def exp_linear(cls, p, order):
        r"""

        The series :math:`e^{t p} = \sum_\ell p^\ell\,t^\ell/\ell!`.

        Parameters
        ----------
        p : scalar or Poly or LinearForm

            The exponent, constant in :math:`t`.

        order : int

            The truncation order.

        """
        if isinstance(p, LinearForm):
            p = p.to_poly()
        coeffs, power = [], 1
        for _ in range(order + 1):
            coeffs.append(power)
            power = power * p
        return cls(coeffs, order)

    def coefficient(self, ell):
        r""" the coefficient :math:`c_\ell` of :math:`t^\ell/\ell!` (zero beyond the truncation) """
        return self.coeffs[ell] if 0 <= ell <= self.order else 0

    def ordinary_coefficient(self, ell):
        r""" the coefficient :math:`c_\ell/\ell!` of :math:`t^\ell` """
        return _tidy(self.coefficient(ell) * Fraction(1, factorial(ell)))

    def truncate(self, order):
        return TruncatedEGF(self.coeffs, min(order, self.order))

    # --- arithmetic ---------------------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedEGF):
            order = min(self.order, other.order)
            return TruncatedEGF(
                (a + b for a, b in zip(self.coeffs[:order + 1], other.coeffs)), order)
        if isinstance(other, _COEFFS):
            return TruncatedEGF((self.coeffs[0] + other,) + self.coeffs[1:], self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedEGF((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if not isinstance(other, (TruncatedEGF,) + _COEFFS):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if not isinstance(other, _COEFFS):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedEGF):
            order = min(self.order, other.order)
            out = []
            for n in range(order + 1):
                acc = 0
                for k in range(n + 1):
                    a, b = self.coeffs[k], other.coeffs[n - k]
                    if a != 0 and b != 0:
                        acc = acc + comb(n, k) * a * b
                out.append(acc)
            return TruncatedEGF(out, order)
        if isinstance(other, _COEFFS):
            if other == 0:
                return TruncatedEGF.zero(self.order)
            return TruncatedEGF((c * other for c in self.coeffs), self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, _COEFFS) or isinstance(other, Poly):
            return NotImplemented
        return self * (Fraction(1) / other)

    def exp(self):
        r"""

        The series :math:`e^{f}`, defined when :math:`c_0 = 0`.

        Uses :math:`g_{n+1} = \sum_{k=0}^{n}\binom{n}{k} f_{k+1}\,g_{n-k}`, which is
        :math:`g' = f'g` read off coefficientwise.

        """
        if self.coeffs[0] != 0:
            raise ValueError("exp of a truncated series requires a vanishing constant term")
        g = [1]
        for n in range(self.order):
            acc = 0
            for k in range(n + 1):
                f = self.coeffs[k + 1]
                if f != 0:
                    acc = acc + comb(n, k) * f * g[n - k]
            g.append(acc)
        return TruncatedEGF(g, self.order)

    # --- evaluation ---------------------------------------------------------------------------

    def evaluate(self, values):
        r"""

        Specialize all polynomial coefficients at the given weight values.

        """
        return TruncatedEGF(
            (c.evaluate(values) if isinstance(c, Poly) else c for c in self.coeffs), self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __str__(self):
        terms = []
        for ell, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(f"({c})*t^{ell}/{ell}!")
        return ' + '.join(terms) or '0'

    def __repr__(self):
        return f"TruncatedEGF(order={self.order}, coeffs={list(self.coeffs)!r})"

    def to_json(self):
        return {'order': self.order, 'coeffs': [jsonable(c) for c in self.coeffs]}


def egf_product_formula(wR, lambdas, h, L):
    r"""

    Expand the product formula

    .. math::

        \frac{e^{t\,w(R)}}{h}\prod_{i=1}^n\left(1 - e^{-t\lambda_i}\right)

    as a truncated exponential generating function.

    Parameters
    ----------
    wR : LinearForm or Poly or scalar

        The total weight :math:`w(R) = \sum_{\tau\in R} w(\tau)`.

    lambdas : sequence of LinearForm or Poly or scalar

        The eigenvalues :math:`\lambda_1,\dots,\lambda_n`.

    h : int

        The Coxeter number.

    L : int

        The truncation order.

    Returns
    -------
    series : TruncatedEGF

        The truncated expansion.

    """
    lambdas = list(lambdas)
    if h <= 0:
        raise ValueError(f"the Coxeter number must be positive, got: {h}")
    if not lambdas:
        raise ValueError("the product formula needs at least one eigenvalue")
    series = TruncatedEGF.exp_linear(wR, L)
    for lam in lambdas:
        if isinstance(lam, LinearForm):
            lam = lam.to_poly()
        series = series * (1 - TruncatedEGF.exp_linear(-lam, L))
    logging.getLogger('coxlab.scalars.egf_product_formula').debug(
        f"expanded product formula with {len(lambdas)} factors to order {L}")
    return series / h


def chapuy_stump_series(nR, order, h, n, L):
    r"""

    The unweighted factorization series of a single Coxeter element,

    .. math::

        \frac{e^{t|R|}}{|W|}\left(1 - e^{-th}\right)^n.

    Parameters
    ----------
    nR : int

        The number of reflections :math:`|R|`.

    order : int

        The group order :math:`|W|`.

    h : int

        The Coxeter number.

    n : int

        The rank.

    L : int

        The truncation order.

    Returns
    -------
    series : TruncatedEGF

        The truncated expansion with rational coefficients.

    """
    series = TruncatedEGF.exp_linear(nR, L)
    factor = 1 - TruncatedEGF.exp_linear(-h, L)
    for _ in range(n):
        series = series * factor
    return series / order
