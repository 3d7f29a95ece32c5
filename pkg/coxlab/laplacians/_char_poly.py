from ..scalars import Poly, simplify
from ..utils import char_poly_coefficients, divide_root


__all__ = (
    'CharPoly',
    'char_poly',
)


def _evaluate(c, values):
    return simplify(c.evaluate(values)) if isinstance(c, Poly) else c


class CharPoly:
    r"""

    The polynomial :math:`\det(x + L)` of a Laplacian.

    Parameters
    ----------
    coeffs : sequence

        The coefficients in :math:`x`, lowest degree first. In formal mode they are
        :class:`Poly <coxlab.scalars.Poly>` objects in the weights; in numeric mode exact scalars.

    """
    def __init__(self, coeffs):
        self.coeffs = tuple(simplify(c) for c in coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def det(self):
        r""" the constant term :math:`\det L` """
        return self.coeffs[0]

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k <= self.degree else 0

    def evaluate(self, values):
        r""" specialize the weights """
        return CharPoly(_evaluate(c, values) for c in self.coeffs)

    def at(self, x, values=None):
        r""" the value at :math:`x`, optionally after specializing the weights """
        coeffs = self.coeffs if values is None else self.evaluate(values).coeffs
        total = 0
        for c in reversed(coeffs):
            total = total * x + c
        return simplify(total)

    def divide(self, forms):
        r"""

        Divide by :math:`\prod_j (x + \lambda_j(\omega))`.

        Parameters
        ----------
        forms : sequence of LinearForm

            The forms :math:`\lambda_j`.

        Returns
        -------
        quotient : list

            The coefficients of the quotient.

        remainders : list

            The remainder of each successive division by a linear factor; all zero iff every
            :math:`-\lambda_j` is a root (with multiplicity).

        """
        coeffs, remainders = list(self.coeffs), []
        for form in forms:
            root = -Poly.from_linear_form(form)
            coeffs, remainder = divide_root(coeffs, root)
            remainders.append(remainder)
        return coeffs, remainders

    def has_roots(self, forms):
        r""" whether :math:`\det(x+L) = \prod_j(x + \lambda_j)` for the given forms """
        forms = list(forms)
        if len(forms) != self.degree:
            return False
        quotient, remainders = self.divide(forms)
        return all(r == 0 for r in remainders) and quotient == [1]

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            x = '' if k == 0 else 'x' if k == 1 else f'x^{k}'
            if c == 1 and k:
                terms.append(x)
            elif k:
                terms.append(f"({c})*{x}")
            else:
                terms.append(f"{c}" if not isinstance(c, Poly) else f"({c})")
        return ' + '.join(terms) or '0'

    def __repr__(self):
        return f"CharPoly({self})"

    def to_json(self):
        return {'degree': self.degree, 'coefficients': [str(c) for c in self.coeffs]}


def char_poly(L):
    r"""

    The characteristic polynomial :math:`\det(x + L)` of a Laplacian.

    It is computed by the Faddeev-LeVerrier recursion on :math:`-L`, which divides only by
    integers and therefore stays exact over :math:`\mathbb{Q}(\zeta_r)[\omega]`.

    Parameters
    ----------
    L : WLaplacian or ArrLaplacian

        The Laplacian.

    Returns
    -------
    p : CharPoly

        The polynomial, with leading coefficient 1 and constant term :math:`\det L`.

    """
    return CharPoly(char_poly_coefficients(-L.matrix))
