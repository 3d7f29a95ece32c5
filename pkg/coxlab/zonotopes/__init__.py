r"""
.. autosummary::
    :nosignatures:

    coxlab.zonotopes.RootCatalog
    coxlab.zonotopes.root_catalog
    coxlab.zonotopes.connection_index
    coxlab.zonotopes.shephard_sum
    coxlab.zonotopes.zonotope_volume
    coxlab.zonotopes.volume_string
    coxlab.zonotopes.verify_volume_theorem
    coxlab.zonotopes.verify_volume_theorem_E6
    coxlab.zonotopes.unimodular_check
    coxlab.zonotopes.baumeister_wegener_check

----

Root Zonotopes
==============

The root zonotope :math:`Z_W` of a Weyl group is the Minkowski sum of the segments
:math:`[0,\alpha]` over the positive roots. Its volume is the Shephard sum of
:math:`|\det|` over all bases of positive roots, in units of the covolume of the root lattice.
Root systems are generated from Gram data in the basis of simple roots; determinants are computed
in batches with numpy and volumes are kept exact with sympy.

.. code:: python

    import coxlab

    cat = coxlab.zonotopes.root_catalog('E6')
    assert cat.num_positive_roots == 36
    assert coxlab.zonotopes.connection_index(cat) == 3
    assert coxlab.zonotopes.shephard_sum(cat) == 895536

    vol = coxlab.zonotopes.zonotope_volume(cat)
    assert coxlab.zonotopes.volume_string(vol) == 'sqrt(3)*895536'


Object Reference
----------------

.. autoclass:: coxlab.zonotopes.RootCatalog
.. autofunction:: coxlab.zonotopes.root_catalog
.. autofunction:: coxlab.zonotopes.connection_index
.. autofunction:: coxlab.zonotopes.shephard_sum
.. autofunction:: coxlab.zonotopes.zonotope_volume
.. autofunction:: coxlab.zonotopes.volume_string
.. autofunction:: coxlab.zonotopes.verify_volume_theorem
.. autofunction:: coxlab.zonotopes.verify_volume_theorem_E6
.. autofunction:: coxlab.zonotopes.unimodular_check
.. autofunction:: coxlab.zonotopes.baumeister_wegener_check

"""

from ._catalog import RootCatalog, connection_index, root_catalog
from ._volume import (
    E6_SUBGROUP_POSET, baumeister_wegener_check, shephard_sum, unimodular_check,
    verify_volume_theorem, verify_volume_theorem_E6, volume_string, zonotope_volume)


__all__ = (
    'E6_SUBGROUP_POSET',
    'RootCatalog',
    'baumeister_wegener_check',
    'connection_index',
    'root_catalog',
    'shephard_sum',
    'unimodular_check',
    'verify_volume_theorem',
    'verify_volume_theorem_E6',
    'volume_string',
    'zonotope_volume',
)
