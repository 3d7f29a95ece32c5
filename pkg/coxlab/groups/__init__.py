r"""
.. autosummary::
    :nosignatures:

    coxlab.groups.build_group
    coxlab.groups.ReflectionGroup
    coxlab.groups.MonomialGroup
    coxlab.groups.SymmetricGroup
    coxlab.groups.RootGroup
    coxlab.groups.GroupElement
    coxlab.groups.CoxeterClass

----

Reflection Groups
=================

The supported groups are the symmetric groups, the imprimitive groups :math:`G(r,1,n)` and
:math:`G(r,r,n)` (which include the types :math:`B_n`, :math:`D_n` and the dihedral groups
:math:`I_2(m)`), and the exceptional real groups :math:`H_3` and :math:`F_4`. Every group is built
from a descriptor string:

.. code:: python

    import coxlab

    G = coxlab.groups.build_group('B3')
    assert (G.order, G.num_reflections, G.coxeter_number) == (48, 9, 6)

    C = G.coxeter_class()
    assert C.size == G.order // G.coxeter_number

The standard generators of :math:`G(r,1,n)` are the diagonal reflection
:math:`\operatorname{diag}(\zeta_r,1,\dots,1)` followed by the transpositions :math:`(0\,1), (1\,2),
\dots`; for :math:`G(r,r,n)` the first generator is the twisted transposition
:math:`e_0\mapsto\zeta_r e_1,\ e_1\mapsto\zeta_r^{-1}e_0`. The Coxeter element is the product of
the generators in this order, and its regularity is certified rather than assumed.


Object Reference
----------------

.. autofunction:: coxlab.groups.build_group
.. autofunction:: coxlab.groups.parse_descriptor
.. autoclass:: coxlab.groups.ReflectionGroup
.. autoclass:: coxlab.groups.MonomialGroup
.. autoclass:: coxlab.groups.SymmetricGroup
.. autoclass:: coxlab.groups.RootGroup
.. autoclass:: coxlab.groups.GroupElement
.. autoclass:: coxlab.groups.Hyperplane
.. autoclass:: coxlab.groups.CoxeterClass
.. autoclass:: coxlab.groups.Component
.. autofunction:: coxlab.groups.parabolic_closure
.. autofunction:: coxlab.groups.components

"""

from ._base import CoxeterClass, GroupElement, Hyperplane, ReflectionGroup
from ._monomial import MonomialGroup, SymmetricGroup
from ._root import RootGroup
from ._build import build_group, parse_descriptor
from ._parabolic import Component, components, normal_span, parabolic_closure


__all__ = (
    'Component',
    'CoxeterClass',
    'GroupElement',
    'Hyperplane',
    'MonomialGroup',
    'ReflectionGroup',
    'RootGroup',
    'SymmetricGroup',
    'build_group',
    'components',
    'coxeter_class',
    'is_regular_element',
    'normal_span',
    'parabolic_closure',
    'parse_descriptor',
)


def coxeter_class(G):
    r""" the certified Coxeter class of a group, see :meth:`ReflectionGroup.coxeter_class` """
    return G.coxeter_class()


def is_regular_element(G, w, k=1):
    r""" see :meth:`ReflectionGroup.is_regular_element` """
    return G.is_regular_element(w, k)
