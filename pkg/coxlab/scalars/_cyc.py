import re
import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Integral

import numpy as np
import sympy
from sympy.functions.combinatorial.numbers import mobius, totient


__all__ = (
    'Cyc',
    'zeta',
)


@lru_cache(maxsize=None)
def _cyclotomic(order):
    r""" coefficients of the cyclotomic polynomial, lowest degree first """
    x = sympy.Symbol('x')
    coeffs = sympy.Poly(sympy.cyclotomic_poly(order, x), x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _reduce(coeffs, order):
    phi = _cyclotomic(order)
    d = len(phi) - 1
    c = list(coeffs) + [Fraction(0)] * max(0, d - len(coeffs))
    for k in range(len(c) - 1, d - 1, -1):
        a = c[k]
        if a:
            for j in range(d):
                c[k - d + j] -= a * phi[j]
        c[k] = 0
    return tuple(Fraction(x) for x in c[:d])


@lru_cache(maxsize=None)
def _power_table(order):
    r""" the powers of the primitive root of the given order in the power basis """
    d = len(_cyclotomic(order)) - 1
    current = (Fraction(1),) + (Fraction(0),) * (d - 1)
    table = [current]
    for _ in range(order - 1):
        current = _reduce((Fraction(0),) + current, order)
        table.append(current)
    return tuple(table)


@lru_cache(maxsize=None)
def _normalized_trace(order, j):
    g = gcd(j, order)
    m = order // g
    return Fraction(int(mobius(m)), int(totient(m)))


def _lcm(a, b):
    return a * b // gcd(a, b)


class Cyc:
    r"""

    An exact element of a cyclotomic field :math:`\mathbb{Q}(\zeta_r)`.

    Elements are stored in the power basis :math:`1, \zeta_r, \dots, \zeta_r^{\varphi(r)-1}` with
    rational coefficients, i.e. as polynomials in :math:`\zeta_r` reduced modulo the :math:`r`-th
    cyclotomic polynomial. This representation is canonical for a fixed order. Orders
    :math:`r \equiv 2 \pmod 4` are never stored (:math:`\mathbb{Q}(\zeta_{2m}) = \mathbb{Q}
    (\zeta_m)` for odd :math:`m`) and rational elements always live at order 1. Elements of
    different orders are compared after embedding both into the field of the least common order.

    Parameters
    ----------
    value : int or Fraction or Cyc, optional

        A rational value (or another cyclotomic number to copy).

    """
    __slots__ = ('order', 'coeffs')

    def __init__(self, value=0):
        if isinstance(value, Cyc):
            self.order, self.coeffs = value.order, value.coeffs
        elif isinstance(value, (Integral, Fraction, np.integer)):
            self.order, self.coeffs = 1, (Fraction(int(value) if isinstance(
                value, np.integer) else value),)
        else:
            raise TypeError(f"cannot convert {type(value).__name__} to Cyc")

    @classmethod
    def _make(cls, order, coeffs):
        if order > 1 and not any(coeffs[1:]):
            order, coeffs = 1, (coeffs[0],)
        z = cls.__new__(cls)
        z.order, z.coeffs = order, tuple(coeffs)
        return z

    @classmethod
    def from_power_coeffs(cls, coeffs, order):
        r"""

        Create the element :math:`\sum_k c_k \zeta_r^k`.

        Parameters
        ----------
        coeffs : sequence of rationals

            The coefficients :math:`c_k`, any length.

        order : int

            The order :math:`r` of the root of unity.

        Returns
        -------
        z : Cyc

            The reduced element.

        """
        if order < 1:
            raise ValueError(f"order must be positive, got: {order}")
        out = cls(0)
        for k, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                out = out + zeta(order, k) * c
        return out

    @staticmethod
    def zeta(order, k=1):
        return zeta(order, k)

    # --- conversions ------------------------------------------------------------------------

    @property
    def is_rational(self):
        return self.order == 1

    def to_fraction(self):
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __complex__(self):
        return sum(
            (complex(c) * cmath.exp(2j * cmath.pi * k / self.order)
             for k, c in enumerate(self.coeffs) if c), 0j)

    def __bool__(self):
        return any(self.coeffs)

    # --- arithmetic ---------------------------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyc):
            return other
        if isinstance(other, (Integral, Fraction, np.integer)):
            return Cyc(other)
        return None

    def _lift(self, order):
        if self.order == order:
            return self.coeffs
        table = _power_table(order)
        step = order // self.order
        acc = [Fraction(0)] * len(table[0])
        for j, c in enumerate(self.coeffs):
            if c:
                for i, t in enumerate(table[(j * step) % order]):
                    if t:
                        acc[i] += c * t
        return tuple(acc)

    def _align(self, other):
        order = _lcm(self.order, other.order)
        return order, self._lift(order), other._lift(order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order, a, b = self._align(other)
        return Cyc._make(order, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc._make(self.order, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.order == 1:
            c = other.coeffs[0]
            return Cyc._make(self.order, tuple(x * c for x in self.coeffs))
        if self.order == 1:
            return other * self
        order, a, b = self._align(other)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc._make(order, _reduce(prod, order))

    __rmul__ = __mul__

    def galois(self, a):
        r"""

        Apply the Galois automorphism :math:`\zeta_r \mapsto \zeta_r^a`.

        Parameters
        ----------
        a : int

            An integer coprime to the order.

        """
        if gcd(a, self.order) != 1:
            raise ValueError(f"{a} is not a unit modulo {self.order}")
        if self.order == 1:
            return self
        table = _power_table(self.order)
        acc = [Fraction(0)] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if c:
                for i, t in enumerate(table[(j * a) % self.order]):
                    if t:
                        acc[i] += c * t
        return Cyc._make(self.order, tuple(acc))

    def conjugate(self):
        return self.galois(self.order - 1) if self.order > 1 else self

    def inverse(self):
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        if self.order == 1:
            return Cyc(1 / self.coeffs[0])
        others = Cyc(1)
        for a in range(2, self.order):
            if gcd(a, self.order) == 1:
                others = others * self.galois(a)
        norm = (self * others).to_fraction()
        return others * (1 / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, (Integral, np.integer)):
            return NotImplemented
        k = int(k)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Cyc(1)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- comparison ---------------------------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        _, a, b = self._align(other)
        return a == b

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        # the normalized trace is independent of the field an element is embedded in
        return hash(sum(
            (c * _normalized_trace(self.order, j) for j, c in enumerate(self.coeffs) if c),
            Fraction(0)))

    # --- text ---------------------------------------------------------------------------------

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            z = f"z{self.order}" if j == 1 else f"z{self.order}^{j}"
            if c == 1:
                terms.append(z)
            elif c == -1:
                terms.append(f"-{z}")
            else:
                terms.append(f"{c}*{z}")
        return '+'.join(terms).replace('+-', '-')

    def __repr__(self):
        return f"Cyc({self})"

    def to_json(self):
        return str(self)

    @classmethod
    def parse(cls, text, order=None):
        r"""

        Parse a cyclotomic literal.

        The grammar is a sum of terms ``c``, ``c*z``, ``c*z^k`` where ``c`` is a rational literal
        ``p`` or ``p/q``. The root may carry its order, as in ``z12^5``; a bare ``z`` refers to the
        declared ``order``.

        Parameters
        ----------
        text : str

            The literal, e.g. ``"1+2*z+z^2"`` or ``"1/2-z12^3"``.

        order : int, optional

            The order of a bare ``z``.

        Returns
        -------
        z : Cyc

            The parsed element.

        """
        s = text.replace(' ', '')
        if not s:
            raise ValueError("empty cyclotomic literal")
        out = cls(0)
        for m in re.finditer(r'([+-]?)([^+-]+)', s):
            sign, body = m.groups()
            tm = _TERM.fullmatch(body)
            if tm is None:
                raise ValueError(f"malformed cyclotomic term {body!r} in {text!r}")
            coef, z, z_order, power = tm.groups()
            if coef is None and z is None:
                raise ValueError(f"malformed cyclotomic term {body!r} in {text!r}")
            c = Fraction(coef) if coef is not None else Fraction(1)
            if sign == '-':
                c = -c
            if z is None:
                out = out + c
                continue
            r = int(z_order) if z_order else order
            if r is None:
                raise ValueError(f"literal {text!r} uses a bare z but no order was declared")
            out = out + zeta(r, int(power) if power else 1) * c
        return out


_TERM = re.compile(r'(\d+(?:/\d+)?)?\*?(?:(z)(\d+)?(?:\^(\d+))?)?')


@lru_cache(maxsize=None)
def zeta(order, k=1):
    r"""

    The root of unity :math:`\zeta_r^k = e^{2\pi i k / r}` as an exact cyclotomic number.

    Parameters
    ----------
    order : int

        The order :math:`r`.

    k : int, optional

        The exponent.

    Returns
    -------
    z : Cyc

        The root of unity, stored at its canonical order.

    """
    if order < 1:
        raise ValueError(f"order must be positive, got: {order}")
    k %= order
    g = gcd(k, order)
    r, k = order // g, k // g
    sign = 1
    if r % 4 == 2:
        # zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
        m = r // 2
        sign = -1 if k % 2 else 1
        r, k = m, (k * (m + 1) // 2) % m
    if r == 1:
        return Cyc(sign)
    return Cyc._make(r, tuple(sign * c for c in _power_table(r)[k]))
