r"""
.. autosummary::
    :nosignatures:

    coxlab.scalars.Cyc
    coxlab.scalars.Poly
    coxlab.scalars.LinearForm
    coxlab.scalars.TruncatedEGF
    coxlab.scalars.egf_product_formula
    coxlab.scalars.chapuy_stump_series
    coxlab.scalars.zeta

----

Exact Scalars
=============

Everything in this package is computed exactly. Weights are rationals (:class:`fractions.Fraction`)
or formal variables :math:`\omega_1,\dots,\omega_k`, matrix entries of complex reflection groups
live in cyclotomic fields :math:`\mathbb{Q}(\zeta_r)`, and generating functions are truncated
exponential series whose coefficients are polynomials in the weights.

.. code:: python

    import coxlab

    z = coxlab.scalars.zeta(3)
    assert 1 + z + z ** 2 == 0

    w1 = coxlab.scalars.Poly.variable(0, nvars=1)
    F = coxlab.scalars.egf_product_formula(3 * w1, [3 * w1, 3 * w1], h=3, L=2)
    assert F.coefficient(2) == 6 * w1 ** 2


Object Reference
----------------

.. autoclass:: coxlab.scalars.Cyc
.. autoclass:: coxlab.scalars.Poly
.. autoclass:: coxlab.scalars.LinearForm
.. autoclass:: coxlab.scalars.TruncatedEGF
.. autofunction:: coxlab.scalars.egf_product_formula
.. autofunction:: coxlab.scalars.chapuy_stump_series
.. autofunction:: coxlab.scalars.zeta

"""

from ._cyc import Cyc, zeta
from ._scalar import as_integer, conj, parse_rational, parse_scalar, parse_weights, simplify
from ._poly import Poly
from ._linear_form import LinearForm
from ._egf import TruncatedEGF, chapuy_stump_series, egf_product_formula


__all__ = (
    'Cyc',
    'LinearForm',
    'Poly',
    'TruncatedEGF',
    'as_integer',
    'chapuy_stump_series',
    'conj',
    'cyc_reduce',
    'egf_product_formula',
    'parse_rational',
    'parse_scalar',
    'parse_weights',
    'simplify',
    'zeta',
)


def cyc_reduce(z):
    r"""

    The canonical representative of a cyclotomic number.

    :class:`Cyc` values are always kept reduced, so this only normalizes the type: rational values
    become :class:`fractions.Fraction` or :class:`int`.

    """
    return simplify(Cyc(z) if not isinstance(z, Cyc) else z)
