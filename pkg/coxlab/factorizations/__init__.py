r"""
.. autosummary::
    :nosignatures:

    coxlab.factorizations.ConvolutionState
    coxlab.factorizations.FactorizationSeries
    coxlab.factorizations.enumerate_series
    coxlab.factorizations.verify_main_theorem
    coxlab.factorizations.reduced_count
    coxlab.factorizations.verify_reduced_count
    coxlab.factorizations.unweighted_reduced_count
    coxlab.factorizations.chapuy_stump_check
    coxlab.factorizations.reduced_count_divisibility
    coxlab.factorizations.dihedral_closed_form
    coxlab.factorizations.verify_dihedral
    coxlab.factorizations.dihedral_reflection_tower
    coxlab.factorizations.u_laplacian
    coxlab.factorizations.det_one_minus_exp
    coxlab.factorizations.finer_formula_Bn
    coxlab.factorizations.finer_formula_Gr1n
    coxlab.factorizations.finer_spectrum_matches_tower
    coxlab.factorizations.frobenius_crosscheck_Sn
    coxlab.factorizations.gelfand_tsetlin_spectrum
    coxlab.factorizations.gt_crosscheck_Sn

----

Factorizations
==============

Weighted reflection factorizations of Coxeter elements are counted by brute force: the group
algebra element :math:`A(\omega) = \sum_\tau w(\tau)\,\tau` is applied :math:`\ell` times to the
identity, and the coefficients at the Coxeter elements are collected into a truncated exponential
generating function. In formal mode the counts are kept per weight monomial, so the result is a
polynomial in the tower variables that can be compared with the product formula exactly.

.. code:: python

    import coxlab

    G = coxlab.groups.build_group('Sym(3)')
    W = coxlab.towers.WeightSystem.uniform(G, 1)
    F = coxlab.factorizations.enumerate_series(G, W, target='class', L=4)
    assert F.coefficient(2) == 6

    T = coxlab.towers.standard_tower(G)
    report = coxlab.factorizations.verify_main_theorem(G, T)
    assert report.ok

Every ``verify_*`` and ``*_check`` function returns a
:class:`VerificationReport <coxlab.utils.VerificationReport>`; a mismatch is reported, never
raised.


Object Reference
----------------

.. autoclass:: coxlab.factorizations.ConvolutionState
.. autoclass:: coxlab.factorizations.FactorizationSeries
.. autofunction:: coxlab.factorizations.enumerate_series
.. autofunction:: coxlab.factorizations.verify_main_theorem
.. autofunction:: coxlab.factorizations.reduced_count
.. autofunction:: coxlab.factorizations.verify_reduced_count
.. autofunction:: coxlab.factorizations.unweighted_reduced_count
.. autofunction:: coxlab.factorizations.chapuy_stump_check
.. autofunction:: coxlab.factorizations.reduced_count_divisibility
.. autofunction:: coxlab.factorizations.dihedral_closed_form
.. autofunction:: coxlab.factorizations.verify_dihedral
.. autofunction:: coxlab.factorizations.dihedral_reflection_tower
.. autofunction:: coxlab.factorizations.u_laplacian
.. autofunction:: coxlab.factorizations.det_one_minus_exp
.. autofunction:: coxlab.factorizations.finer_formula_Bn
.. autofunction:: coxlab.factorizations.finer_formula_Gr1n
.. autofunction:: coxlab.factorizations.finer_spectrum_matches_tower
.. autofunction:: coxlab.factorizations.frobenius_crosscheck_Sn
.. autofunction:: coxlab.factorizations.gelfand_tsetlin_spectrum
.. autofunction:: coxlab.factorizations.gt_crosscheck_Sn

"""

from ._convolution import ConvolutionState, FactorizationSeries, enumerate_series
from ._theorems import (
    chapuy_stump_check, reduced_count, reduced_count_divisibility, unweighted_reduced_count,
    verify_main_theorem, verify_reduced_count)
from ._dihedral import dihedral_closed_form, dihedral_reflection_tower, verify_dihedral
from ._finer import (
    det_one_minus_exp, finer_formula_Bn, finer_formula_Gr1n, finer_spectrum_matches_tower,
    u_laplacian)
from ._crosscheck import frobenius_crosscheck_Sn, gelfand_tsetlin_spectrum, gt_crosscheck_Sn


__all__ = (
    'ConvolutionState',
    'FactorizationSeries',
    'chapuy_stump_check',
    'det_one_minus_exp',
    'dihedral_closed_form',
    'dihedral_reflection_tower',
    'enumerate_series',
    'finer_formula_Bn',
    'finer_formula_Gr1n',
    'finer_spectrum_matches_tower',
    'frobenius_crosscheck_Sn',
    'gelfand_tsetlin_spectrum',
    'gt_crosscheck_Sn',
    'reduced_count',
    'reduced_count_divisibility',
    'u_laplacian',
    'unweighted_reduced_count',
    'verify_dihedral',
    'verify_main_theorem',
    'verify_reduced_count',
)
