from fractions import Fraction
from functools import total_ordering
from numbers import Integral

import numpy as np

from ._scalar import simplify


__all__ = (
    'LinearForm',
)


@total_ordering
class LinearForm:
    r"""

    An integer linear form :math:`\sum_i a_i\,\omega_i` in the weight variables.

    Eigenvalues of weighted W-Laplacians are always of this shape. Forms are ordered
    lexicographically by their coefficient vectors, which gives spectra a canonical multiset order.

    Parameters
    ----------
    coeffs : sequence of int

        The coefficients :math:`a_1,\dots,a_n`.

    """
    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        for a in coeffs:
            if not isinstance(a, (Integral, np.integer)):
                if isinstance(a, Fraction) and a.denominator == 1:
                    continue
                raise TypeError(f"linear form coefficients must be integers, got: {a!r}")
        self.coeffs = tuple(int(a) for a in coeffs)

    @classmethod
    def zero(cls, nvars):
        return cls((0,) * nvars)

    @classmethod
    def unit(cls, i, nvars, scale=1):
        r""" the form :math:`\text{scale}\cdot\omega_{i+1}` (zero-based ``i``) """
        coeffs = [0] * nvars
        coeffs[i] = scale
        return cls(coeffs)

    @property
    def nvars(self):
        return len(self.coeffs)

    def _check(self, other):
        if not isinstance(other, LinearForm):
            return False
        if other.nvars != self.nvars:
            raise ValueError(f"cannot combine forms in {self.nvars} and {other.nvars} variables")
        return True

    def __add__(self, other):
        if isinstance(other, (Integral, np.integer)) and other == 0:
            return self
        if not self._check(other):
            return NotImplemented
        return LinearForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(-a for a in self.coeffs)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return LinearForm(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, k):
        if not isinstance(k, (Integral, np.integer)):
            return NotImplemented
        return LinearForm(int(k) * a for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __lt__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs < other.coeffs

    def __hash__(self):
        return hash(('LinearForm', self.coeffs))

    def is_nonnegative(self):
        return all(a >= 0 for a in self.coeffs)

    def evaluate(self, values):
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        return simplify(sum((a * v for a, v in zip(self.coeffs, values) if a), 0))

    def to_poly(self):
        from ._poly import Poly
        return Poly.from_linear_form(self)

    def merge(self, index_map, nvars):
        r"""

        Collapse variables: :math:`\omega_i \mapsto \omega_{\text{index_map}[i]}`.

        """
        coeffs = [0] * nvars
        for i, a in enumerate(self.coeffs):
            coeffs[index_map[i]] += a
        return LinearForm(coeffs)

    def __str__(self):
        parts = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            term = f"w{i + 1}" if abs(a) == 1 else f"{abs(a)}w{i + 1}"
            if a < 0:
                parts.append(f"-{term}")
            else:
                parts.append(f"+{term}" if parts else term)
        return ''.join(parts) or '0'

    def __repr__(self):
        return f"LinearForm({self})"

    def to_json(self):
        return str(self)
