r"""
.. autosummary::
    :nosignatures:

    coxlab.lattices.Flat
    coxlab.lattices.IntersectionLattice
    coxlab.lattices.enumerate_flats
    coxlab.lattices.flat_from_generators
    coxlab.lattices.closure
    coxlab.lattices.localized_char_poly
    coxlab.lattices.verify_laplacian_recursion
    coxlab.lattices.parabolic_coxeter_elements
    coxlab.lattices.verify_matrix_forest
    coxlab.lattices.verify_coxeter_identity
    coxlab.lattices.multiset_coxeter_numbers
    coxlab.lattices.verify_parabolic_stabilizers

----

Intersection Lattices
=====================

The flats of a reflection arrangement (or of an explicit arrangement of normals) are enumerated
breadth-first, each flat being keyed by the closed set of hyperplanes that contain it. A flat of a
group carries the reflections of its parabolic subgroup :math:`W_X` and the decomposition of
:math:`W_X` into irreducible components, each with its rank and Coxeter number.

.. code:: python

    import coxlab

    G = coxlab.groups.build_group('B3')
    lattice = coxlab.lattices.enumerate_flats(G)
    assert lattice.counts == (1, 9, 13, 1)

    # (6 + x)^3 = sum over flats of prod h_i(W_X) x^dim(X)
    assert coxlab.lattices.verify_coxeter_identity(G, lattice=lattice).ok

    # the B3 x A3 parabolic of B7, without enumerating the lattice of B7
    G = coxlab.groups.build_group('B7')
    gens = G.generator_indices
    X = coxlab.lattices.flat_from_generators(G, [gens[k] for k in (0, 1, 2, 4, 5, 6)])
    assert coxlab.lattices.multiset_coxeter_numbers(G, X) == [6, 6, 6, 4, 4, 4]


Object Reference
----------------

.. autoclass:: coxlab.lattices.Flat
.. autoclass:: coxlab.lattices.IntersectionLattice
.. autofunction:: coxlab.lattices.enumerate_flats
.. autofunction:: coxlab.lattices.flat_from_generators
.. autofunction:: coxlab.lattices.closure
.. autofunction:: coxlab.lattices.localized_char_poly
.. autofunction:: coxlab.lattices.verify_laplacian_recursion
.. autofunction:: coxlab.lattices.parabolic_coxeter_elements
.. autofunction:: coxlab.lattices.verify_matrix_forest
.. autofunction:: coxlab.lattices.verify_coxeter_identity
.. autofunction:: coxlab.lattices.multiset_coxeter_numbers
.. autofunction:: coxlab.lattices.verify_parabolic_stabilizers

"""

from ._flats import Flat, IntersectionLattice, closure, enumerate_flats, flat_from_generators
from ._checks import (
    localized_char_poly, multiset_coxeter_numbers, parabolic_coxeter_elements,
    verify_coxeter_identity, verify_laplacian_recursion, verify_matrix_forest,
    verify_parabolic_stabilizers)


__all__ = (
    'Flat',
    'IntersectionLattice',
    'closure',
    'enumerate_flats',
    'flat_from_generators',
    'localized_char_poly',
    'multiset_coxeter_numbers',
    'parabolic_coxeter_elements',
    'verify_coxeter_identity',
    'verify_laplacian_recursion',
    'verify_matrix_forest',
    'verify_parabolic_stabilizers',
)
