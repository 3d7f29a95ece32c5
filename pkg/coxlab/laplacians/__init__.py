r"""
.. autosummary::
    :nosignatures:

    coxlab.laplacians.WLaplacian
    coxlab.laplacians.build_w_laplacian
    coxlab.laplacians.ArrLaplacian
    coxlab.laplacians.arr_from_group
    coxlab.laplacians.CharPoly
    coxlab.laplacians.char_poly
    coxlab.laplacians.rrt_check
    coxlab.laplacians.wedge_spectrum
    coxlab.laplacians.tower_spectrum_check
    coxlab.laplacians.char_poly_bareiss_check
    coxlab.laplacians.burman_check
    coxlab.laplacians.graph_laplacian_Kn
    coxlab.laplacians.kn_minor_check

----

Laplacians
==========

The weighted :math:`W`-Laplacian :math:`L_W(\omega)=\sum_\tau w(\tau)(I-\rho_V(\tau))` and the
Laplacian of a weighted hyperplane arrangement. Matrices have exact entries: polynomials in the
weights (formal mode) or cyclotomic numbers (numeric mode). Characteristic polynomials
:math:`\det(x+L)` are computed with the Faddeev-LeVerrier recursion.

.. code:: python

    import coxlab

    G = coxlab.groups.build_group('Sym(3)')
    T = coxlab.towers.standard_tower(G)
    L = coxlab.laplacians.build_w_laplacian(G, T.weight_system())
    p = coxlab.laplacians.char_poly(L)
    assert p.has_roots(coxlab.towers.tower_spectrum(G, T))

    # unweighted: L = h * I
    L = coxlab.laplacians.build_w_laplacian(G, T.weight_system([1, 1]))
    assert L.matrix.tolist() == [[3, 0], [0, 3]]


Object Reference
----------------

.. autoclass:: coxlab.laplacians.WLaplacian
.. autofunction:: coxlab.laplacians.build_w_laplacian
.. autoclass:: coxlab.laplacians.ArrLaplacian
.. autofunction:: coxlab.laplacians.arr_from_group
.. autoclass:: coxlab.laplacians.CharPoly
.. autofunction:: coxlab.laplacians.char_poly
.. autofunction:: coxlab.laplacians.rrt_check
.. autofunction:: coxlab.laplacians.wedge_spectrum
.. autofunction:: coxlab.laplacians.tower_spectrum_check
.. autofunction:: coxlab.laplacians.char_poly_bareiss_check
.. autofunction:: coxlab.laplacians.burman_check
.. autofunction:: coxlab.laplacians.graph_laplacian_Kn
.. autofunction:: coxlab.laplacians.kn_minor_check

"""

from ._char_poly import CharPoly, char_poly
from ._w_laplacian import WLaplacian, build_w_laplacian
from ._arrangement import ArrLaplacian, arr_from_group, rrt_check
from ._checks import (
    burman_check, char_poly_bareiss_check, graph_laplacian_Kn, kn_minor_check,
    tower_spectrum_check, wedge_spectrum)


__all__ = (
    'ArrLaplacian',
    'CharPoly',
    'WLaplacian',
    'arr_from_group',
    'build_w_laplacian',
    'burman_check',
    'char_poly',
    'char_poly_bareiss_check',
    'graph_laplacian_Kn',
    'kn_minor_check',
    'rrt_check',
    'tower_spectrum_check',
    'wedge_spectrum',
)
