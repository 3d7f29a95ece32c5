from fractions import Fraction
from numbers import Integral

import numpy as np

from ._cyc import Cyc
from ._scalar import simplify


__all__ = (
    'Poly',
)


_SCALARS = (Integral, Fraction, Cyc, np.integer)


class Poly:
    r"""

    A sparse multivariate polynomial in the weight variables :math:`\omega_1,\dots,\omega_k`.

    Coefficients are exact scalars: integers, rationals or cyclotomic numbers. Terms are keyed by
    exponent vectors and zero coefficients are never stored, so two polynomials are equal iff
    their term maps are equal.

    Parameters
    ----------
    terms : dict

        A map from exponent tuples (of length ``nvars``) to coefficients.

    nvars : int

        The number of variables.

    """
    __slots__ = ('nvars', '_terms')

    def __init__(self, terms, nvars):
        self.nvars = int(nvars)
        self._terms = {}
        for exps, c in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise ValueError(f"exponent vector {exps} does not have {self.nvars} entries")
            c = simplify(c)
            if c != 0:
                self._terms[exps] = c

    @classmethod
    def _from_clean(cls, terms, nvars):
        p = cls.__new__(cls)
        p.nvars, p._terms = nvars, terms
        return p

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i, nvars):
        r"""

        The variable :math:`\omega_{i+1}` (zero-based index ``i``).

        """
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = 1
        return cls({tuple(exps): 1}, nvars)

    @classmethod
    def from_linear_form(cls, form):
        r"""

        The polynomial :math:`\sum_i a_i\omega_i` of a :class:`LinearForm`.

        """
        n = len(form.coeffs)
        terms = {}
        for i, a in enumerate(form.coeffs):
            if a:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = a
        return cls(terms, n)

    @property
    def terms(self):
        return dict(self._terms)

    def monomials(self):
        return iter(sorted(self._terms.items(), reverse=True))

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * self.nvars, 0)

    # --- arithmetic ---------------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, _SCALARS):
            return Poly.constant(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            s = simplify(terms.get(exps, 0) + c)
            if s != 0:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Poly._from_clean(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_clean({e: -c for e, c in self._terms.items()}, self.nvars)

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
        if isinstance(other, _SCALARS):
            if other == 0:
                return Poly._from_clean({}, self.nvars)
            return Poly._from_clean(
                {e: simplify(c * other) for e, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(terms, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return self * (Fraction(1) / other)

    def __pow__(self, k):
        if not isinstance(k, (Integral, np.integer)) or k < 0:
            return NotImplemented
        out = Poly.constant(1, self.nvars)
        base = self
        k = int(k)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return Poly._from_clean(
            {e: simplify(c.conjugate()) for e, c in self._terms.items()}, self.nvars)

    # --- evaluation ---------------------------------------------------------------------------

    def evaluate(self, values):
        r"""

        Evaluate at a point.

        Parameters
        ----------
        values : sequence of scalars

            One value per variable.

        Returns
        -------
        value : scalar

            The exact value.

        """
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        total = 0
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term = term * v ** e
            total = total + term
        return simplify(total)

    def substitute(self, index_map, nvars):
        r"""

        Substitute :math:`\omega_i \mapsto \omega_{\text{index_map}[i]}`.

        Several variables may be mapped onto the same target, which merges them.

        Parameters
        ----------
        index_map : sequence of int

            The target index of each variable.

        nvars : int

            The number of variables of the result.

        """
        terms = {}
        for exps, c in self._terms.items():
            new = [0] * nvars
            for i, e in enumerate(exps):
                new[index_map[i]] += e
            new = tuple(new)
            terms[new] = terms.get(new, 0) + c
        return Poly(terms, nvars)

    # --- comparison ---------------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, _SCALARS):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.nvars: simplify(other)}
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    # --- text ---------------------------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for exps, c in self.monomials():
            mono = '*'.join(
                f"w{i + 1}" if e == 1 else f"w{i + 1}^{e}" for i, e in enumerate(exps) if e)
            coef = str(c)
            if isinstance(c, Cyc) and not c.is_rational:
                coef = f"({coef})"
            if not mono:
                parts.append(coef)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coef}*{mono}")
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self):
        r"""

        Serialize as a map from comma-joined exponent vectors to scalar strings.

        """
        return {','.join(map(str, e)): str(c) for e, c in self.monomials()}

    @classmethod
    def from_json(cls, data, nvars):
        terms = {}
        for key, value in data.items():
            exps = tuple(int(e) for e in key.split(',')) if key else ()
            terms[exps] = Cyc.parse(value)
        return cls(terms, nvars)
