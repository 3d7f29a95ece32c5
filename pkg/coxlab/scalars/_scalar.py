from fractions import Fraction
from numbers import Integral

import numpy as np

from .._base.errors import NonIntegralSpectrumError
from ._cyc import Cyc


__all__ = (
    'as_integer',
    'conj',
    'parse_rational',
    'parse_scalar',
    'parse_weights',
    'simplify',
)


def simplify(x):
    r"""

    Bring an exact scalar into its simplest type.

    Rational cyclotomic numbers become :class:`fractions.Fraction`, integral fractions become
    :class:`int`. Anything else is returned unchanged.

    """
    if isinstance(x, Cyc):
        if not x.is_rational:
            return x
        x = x.to_fraction()
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def conj(x):
    r""" complex conjugate of an exact scalar (or anything with a ``conjugate`` method) """
    return x.conjugate()


def as_integer(x, what='value'):
    r"""

    Convert an exact scalar to :class:`int`.

    Raises
    ------
    NonIntegralSpectrumError

        If the value is not a rational integer.

    """
    y = simplify(x)
    if isinstance(y, (Integral, np.integer)):
        return int(y)
    raise NonIntegralSpectrumError(f"{what} {x} is not an integer")


def parse_rational(text):
    r"""

    Parse a rational literal ``"p"`` or ``"p/q"``.

    """
    text = str(text).strip()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational literal: {text!r}")
    if '.' in text or 'e' in text.lower():
        raise ValueError(f"rational literals must be of the form p or p/q, got: {text!r}")
    return simplify(value)


def parse_scalar(text, order=None):
    r"""

    Parse a rational or cyclotomic literal.

    """
    text = str(text).strip()
    if 'z' in text:
        return simplify(Cyc.parse(text, order=order))
    return parse_rational(text)


def parse_weights(text):
    r"""

    Parse a comma-separated list of rationals, e.g. ``"1,2/3,5"``.

    """
    if isinstance(text, (list, tuple)):
        return [parse_rational(x) for x in text]
    parts = [p for p in str(text).split(',') if p.strip()]
    if not parts:
        raise ValueError(f"empty weight list: {text!r}")
    return [parse_rational(p) for p in parts]
