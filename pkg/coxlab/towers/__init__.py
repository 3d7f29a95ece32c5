r"""
.. autosummary::
    :nosignatures:

    coxlab.towers.ParabolicTower
    coxlab.towers.standard_tower
    coxlab.towers.all_standard_towers
    coxlab.towers.conjugate_tower
    coxlab.towers.WeightSystem
    coxlab.towers.HMatrix
    coxlab.towers.h_matrix
    coxlab.towers.tower_spectrum
    coxlab.towers.jm_matrices
    coxlab.towers.jm_commute
    coxlab.towers.jm_spectrum
    coxlab.towers.jm_spectrum_check

----

Parabolic Towers
================

A tower is a maximal chain of parabolic subgroups :math:`\{1\}=W_0<W_1<\dots<W_n=W`. It induces
the weight system :math:`w_T(\tau)=\omega_i` for :math:`\tau\in W_i\setminus W_{i-1}` and the
Jucys-Murphy elements :math:`J_{T,i}`, the sums of the reflections born at step :math:`i`. The
eigenvalues of the weighted Laplacian are read off from the Coxeter numbers of the irreducible
components along the tower:

.. code:: python

    import coxlab

    G = coxlab.groups.build_group('D6', enumerate=False)
    T = coxlab.towers.standard_tower(G, (1, 3, 6, 2, 5, 4))
    H = coxlab.towers.h_matrix(G, T)
    assert H.rows()[0] == [2, 1, 0, 1, 0, 6]

    spectrum = coxlab.towers.tower_spectrum(G, T)
    assert str(spectrum[0]) == '2w1+w2+w4+6w6'

Towers of standard generators are given by a generator ordering; arbitrary (possibly non-maximal)
towers by their reflection sets, see :meth:`ParabolicTower.from_reflection_sets`.


Object Reference
----------------

.. autoclass:: coxlab.towers.ParabolicTower
.. autofunction:: coxlab.towers.standard_tower
.. autofunction:: coxlab.towers.all_standard_towers
.. autofunction:: coxlab.towers.conjugate_tower
.. autoclass:: coxlab.towers.WeightSystem
.. autoclass:: coxlab.towers.HMatrix
.. autofunction:: coxlab.towers.h_matrix
.. autofunction:: coxlab.towers.tower_spectrum
.. autofunction:: coxlab.towers.jm_matrices
.. autofunction:: coxlab.towers.jm_commute
.. autofunction:: coxlab.towers.jm_spectrum
.. autofunction:: coxlab.towers.jm_spectrum_check

"""

from ._weights import WeightSystem
from ._tower import ParabolicTower, all_standard_towers, conjugate_tower, standard_tower
from ._spectrum import HMatrix, h_matrix, tower_spectrum
from ._jm import jm_commute, jm_matrices, jm_spectrum, jm_spectrum_check


__all__ = (
    'HMatrix',
    'ParabolicTower',
    'WeightSystem',
    'all_standard_towers',
    'conjugate_tower',
    'h_matrix',
    'jm_commute',
    'jm_matrices',
    'jm_spectrum',
    'jm_spectrum_check',
    'standard_tower',
    'tower_spectrum',
)
