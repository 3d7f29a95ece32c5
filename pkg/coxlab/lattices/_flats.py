import logging
from collections import Counter
from typing import NamedTuple, Tuple

import pandas as pd

from .._base.errors import BudgetExceededError
from ..groups import Component, ReflectionGroup, components, parabolic_closure
from ..scalars import conj, simplify
from ..utils import EchelonBasis, null_space, pretty_repr


__all__ = (
    'Flat',
    'IntersectionLattice',
    'closure',
    'enumerate_flats',
    'flat_from_generators',
)


DEFAULT_HYPERPLANE_CAP = 30


class Flat(NamedTuple):
    r"""

    A flat :math:`X` of a hyperplane arrangement, keyed by the closed set of hyperplanes that
    contain it.

    Parameters
    ----------
    hyperplanes : tuple of int

        The indices of all hyperplanes containing :math:`X`, sorted.

    codim : int

        The codimension of :math:`X`.

    basis : tuple of tuples

        An exact basis of :math:`X` itself.

    reflections : frozenset of int

        The reflections of the parabolic subgroup :math:`W_X`. Empty for an explicit arrangement.

    components : tuple of Component

        The irreducible factors of :math:`W_X`. Empty for an explicit arrangement.

    """
    hyperplanes: Tuple[int, ...]
    codim: int
    basis: Tuple[Tuple, ...]
    reflections: frozenset
    components: Tuple[Component, ...]

    @property
    def dim(self):
        return len(self.basis)

    def coxeter_numbers(self):
        r"""

        The multiset :math:`\{h_i(W_X)\}`: the Coxeter number of every component, repeated rank
        many times.

        Returns
        -------
        numbers : list of int

            Sorted in decreasing order.

        """
        return sorted((c.coxeter_number for c in self.components for _ in range(c.rank)),
                      reverse=True)

    def coxeter_product(self):
        r""" :math:`\prod_i h_i(W_X)` over the multiset of :meth:`coxeter_numbers` """
        out = 1
        for h in self.coxeter_numbers():
            out *= h
        return out

    def to_json(self):
        return {
            'hyperplanes': list(self.hyperplanes),
            'codim': self.codim,
            'basis': [[str(x) for x in v] for v in self.basis],
            'reflections': sorted(self.reflections),
            'coxeter_numbers': self.coxeter_numbers(),
        }

    def __repr__(self):
        return pretty_repr(self)


class _Arrangement:
    r""" uniform access to the hyperplanes of a group or an explicit arrangement """
    def __init__(self, source):
        if isinstance(source, ReflectionGroup):
            self.group = source
            self.normals = [H.normal for H in source.hyperplanes]
            self.gram = source.gram
            self.label = source.descriptor
        else:
            self.group = None
            self.normals = list(source.normals)
            self.gram = source.gram
            self.label = repr(source)
        self.n = len(self.normals[0])

    def closure(self, hyperplanes):
        basis = EchelonBasis(self.normals[j] for j in hyperplanes)
        return tuple(j for j, v in enumerate(self.normals) if basis.contains(v)), basis.rank

    def subspace(self, hyperplanes):
        r""" the common zero set of :math:`v\mapsto\langle v, n_j\rangle` """
        rows = []
        for j in hyperplanes:
            v = self.normals[j]
            rows.append([simplify(sum((conj(v[i]) * self.gram[i, k]
                                       for i in range(self.n) if v[i] != 0), 0))
                         for k in range(self.n)])
        if not rows:
            return tuple(tuple(1 if i == k else 0 for i in range(self.n)) for k in range(self.n))
        return tuple(tuple(simplify(x) for x in v) for v in null_space(rows, self.n))

    def make_flat(self, hyperplanes):
        hyperplanes, codim = self.closure(hyperplanes)
        if self.group is None:
            reflections, comps = frozenset(), ()
        else:
            G = self.group
            reflections = frozenset(i for j in hyperplanes for i in G.hyperplanes[j].reflections)
            comps = tuple(components(G, reflections)) if reflections else ()
        return Flat(hyperplanes, codim, self.subspace(hyperplanes), reflections, comps)


def closure(source, hyperplanes):
    r"""

    The closure of a set of hyperplanes: all hyperplanes containing their intersection.

    Parameters
    ----------
    source : ReflectionGroup or ArrLaplacian

        The arrangement.

    hyperplanes : iterable of int

        Hyperplane indices.

    Returns
    -------
    closed : tuple of int

        The sorted indices of the closed set.

    """
    return _Arrangement(source).closure(list(hyperplanes))[0]


def flat_from_generators(G, reflection_indices):
    r"""

    The flat fixed by the given reflections, together with its parabolic subgroup.

    This does not enumerate the flats of :code:`G`, so it is available for groups with many
    hyperplanes.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    reflection_indices : iterable of int

        Positions in :attr:`G.reflections <coxlab.groups.ReflectionGroup.reflections>`.

    Returns
    -------
    flat : Flat

        The flat :math:`X = \bigcap_i H_{\tau_i}`.

    """
    reflections = parabolic_closure(G, reflection_indices)
    arr = _Arrangement(G)
    return arr.make_flat(sorted({G.reflection_hyperplane[i] for i in reflections}))


class IntersectionLattice:
    r"""

    The flats of a hyperplane arrangement, grouped by codimension.

    Parameters
    ----------
    label : str

        The descriptor of the group, or a repr of the arrangement.

    n : int

        The ambient dimension.

    flats : list of list of Flat

        ``flats[k]`` holds the flats of codimension :math:`k`.

    """
    def __init__(self, label, n, flats):
        self.label = label
        self.n = n
        self.flats = flats
        self._lookup = {X.hyperplanes: X for level in flats for X in level}

    @property
    def counts(self):
        return tuple(len(level) for level in self.flats)

    def __iter__(self):
        for level in self.flats:
            yield from level

    def __len__(self):
        return len(self._lookup)

    def lookup(self, hyperplanes):
        r""" the flat with the given closed hyperplane set """
        return self._lookup[tuple(sorted(hyperplanes))]

    def to_frame(self):
        r"""

        A summary with one row per flat.

        Returns
        -------
        df : pandas.DataFrame

            Columns ``codim``, ``hyperplanes``, ``type`` (the component Coxeter numbers with
            ranks) and ``coxeter_product``.

        """
        rows = []
        for X in self:
            kinds = Counter((c.rank, c.coxeter_number) for c in X.components)
            rows.append({
                'codim': X.codim,
                'hyperplanes': ','.join(map(str, X.hyperplanes)),
                'type': ' x '.join(f"{k}*(n={r},h={h})" if k > 1 else f"(n={r},h={h})"
                                   for (r, h), k in sorted(kinds.items())),
                'coxeter_product': X.coxeter_product() if X.components or not X.codim else None,
            })
        return pd.DataFrame(rows, columns=['codim', 'hyperplanes', 'type', 'coxeter_product'])

    def to_json(self):
        return {
            'arrangement': self.label,
            'n': self.n,
            'counts': list(self.counts),
            'flats': [[X.to_json() for X in level] for level in self.flats],
        }

    def __repr__(self):
        return f"IntersectionLattice({self.label!r}, counts={self.counts})"


def enumerate_flats(source, hyperplane_cap=DEFAULT_HYPERPLANE_CAP):
    r"""

    Enumerate the intersection lattice by breadth-first search.

    Every flat of codimension :math:`k+1` is the closure of a flat of codimension :math:`k` with
    one more hyperplane; closures are memoized by their hyperplane set.

    Parameters
    ----------
    source : ReflectionGroup or ArrLaplacian

        The arrangement.

    hyperplane_cap : int, optional

        The maximal number of hyperplanes.

    Returns
    -------
    lattice : IntersectionLattice

        All flats, from :math:`V` to the smallest one.

    Raises
    ------
    BudgetExceededError

        If the arrangement has more hyperplanes than the cap.

    """
    logger = logging.getLogger('coxlab.lattices.enumerate_flats')
    arr = _Arrangement(source)
    N = len(arr.normals)
    if N > hyperplane_cap:
        raise BudgetExceededError(
            f"{arr.label} has {N} hyperplanes, which exceeds the lattice cap of {hyperplane_cap}")
    levels = [[arr.make_flat(())]]
    seen = {levels[0][0].hyperplanes}
    while True:
        nxt = []
        for X in levels[-1]:
            for j in range(N):
                if j in X.hyperplanes:
                    continue
                key, _ = arr.closure(X.hyperplanes + (j,))
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(arr.make_flat(key))
        if not nxt:
            break
        levels.append(sorted(nxt, key=lambda X: X.hyperplanes))
        logger.debug(f"{arr.label}: {len(nxt)} flats of codimension {len(levels) - 1}")
    return IntersectionLattice(arr.label, arr.n, levels)
