from fractions import Fraction
from typing import FrozenSet, NamedTuple, Tuple

import networkx as nx

from .._base.errors import RegularityError
from ..utils import EchelonBasis, pretty_repr


__all__ = (
    'Component',
    'components',
    'normal_span',
    'parabolic_closure',
)


class Component(NamedTuple):
    r"""

    An irreducible component of a parabolic subgroup.

    Parameters
    ----------
    reflections : frozenset of int

        The reflections of the component.

    hyperplanes : tuple of int

        The hyperplanes of the component.

    rank : int

        The rank of the component.

    coxeter_number : int

        :math:`(|\mathcal{R}_c| + |\mathcal{R}^*_c|)/\operatorname{rank}_c`.

    """
    reflections: FrozenSet[int]
    hyperplanes: Tuple[int, ...]
    rank: int
    coxeter_number: int

    def __repr__(self):
        return pretty_repr(self)


def _hyperplanes_of(G, reflections):
    return sorted({G.reflection_hyperplane[i] for i in reflections})


def normal_span(G, reflections):
    r""" an :class:`EchelonBasis` of the span of the normals of the given reflections """
    return EchelonBasis(G.hyperplanes[j].normal for j in _hyperplanes_of(G, reflections))


def parabolic_closure(G, reflections):
    r"""

    The reflections of the parabolic subgroup generated by the given reflections.

    A reflection belongs to the closure iff its normal lies in the span of the normals of the given
    reflections, i.e. iff it fixes their common fixed space pointwise.

    Parameters
    ----------
    G : ReflectionGroup

        The ambient group.

    reflections : iterable of int

        Reflection indices.

    Returns
    -------
    closure : frozenset of int

        The reflection indices of the parabolic closure.

    """
    basis = normal_span(G, reflections)
    out = set()
    for H in G.hyperplanes:
        if basis.contains(H.normal):
            out.update(H.reflections)
    return frozenset(out)


def components(G, reflections):
    r"""

    Split a set of reflections into irreducible components.

    Two hyperplanes are joined whenever their normals are not orthogonal; the components are the
    connected components of that graph.

    Parameters
    ----------
    G : ReflectionGroup

        The ambient group.

    reflections : iterable of int

        The reflections of a parabolic subgroup.

    Returns
    -------
    components : list of Component

        The components, ordered by their smallest hyperplane index.

    """
    hyperplanes = _hyperplanes_of(G, reflections)
    graph = nx.Graph()
    graph.add_nodes_from(hyperplanes)
    for a, i in enumerate(hyperplanes):
        for j in hyperplanes[a + 1:]:
            if G.hermitian(G.hyperplanes[i].normal, G.hyperplanes[j].normal) != 0:
                graph.add_edge(i, j)
    out = []
    for nodes in nx.connected_components(graph):
        nodes = tuple(sorted(nodes))
        refl = frozenset(k for j in nodes for k in G.hyperplanes[j].reflections)
        rank = EchelonBasis(G.hyperplanes[j].normal for j in nodes).rank
        h = Fraction(len(refl) + len(nodes), rank)
        if h.denominator != 1:
            raise RegularityError(
                f"component {nodes} of {G.descriptor} has non-integral Coxeter number {h}")
        out.append(Component(refl, nodes, rank, h.numerator))
    return sorted(out, key=lambda c: c.hyperplanes[0])
