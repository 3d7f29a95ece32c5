from itertools import permutations

from .._base.errors import MalformedTowerError
from ..groups import normal_span, parabolic_closure
from ._weights import WeightSystem


__all__ = (
    'ParabolicTower',
    'all_standard_towers',
    'conjugate_tower',
    'standard_tower',
)


class ParabolicTower:
    r"""

    A maximal chain of parabolic subgroups :math:`\{1\} = W_0 < W_1 < \dots < W_n = W`.

    Every level is stored as the set of reflection indices it contains. A level is the full
    pointwise stabilizer of its flat, so its reflections are exactly those whose normal lies in
    the span of its normals, and level :math:`i` has rank :math:`i`.

    Parameters
    ----------
    group : ReflectionGroup

        The ambient group.

    levels : sequence of sets of int

        The reflection sets of :math:`W_0, \dots, W_n`.

    weight_index : sequence of int, optional

        The weight variable (0-based) of each step :math:`W_{i-1} < W_i`. Defaults to one
        variable per step. Steps that refine a single level of a non-maximal chain share their
        variable.

    source : dict, optional

        Where the tower came from, e.g. ``{'ordering': (1, 3, 2)}``.

    Raises
    ------
    MalformedTowerError

        If the levels are not nested, not parabolic or of the wrong ranks.

    """
    def __init__(self, group, levels, weight_index=None, source=None):
        self.group = group
        self.levels = tuple(frozenset(level) for level in levels)
        self.source = dict(source or {})
        n = group.rank
        if len(self.levels) != n + 1:
            raise MalformedTowerError(
                f"a tower of {group.descriptor} has {n + 1} levels, got {len(self.levels)}")
        if self.levels[0]:
            raise MalformedTowerError("the bottom level of a tower must be trivial")
        if self.levels[-1] != frozenset(range(group.num_reflections)):
            raise MalformedTowerError("the top level of a tower must contain all reflections")
        for i, level in enumerate(self.levels):
            if i and not self.levels[i - 1] < level:
                raise MalformedTowerError(f"level {i} does not strictly contain level {i - 1}")
            if parabolic_closure(group, level) != level:
                raise MalformedTowerError(f"level {i} is not a parabolic subgroup")
            if normal_span(group, level).rank != i:
                raise MalformedTowerError(f"level {i} does not have rank {i}")
        self.weight_index = tuple(range(n) if weight_index is None else weight_index)
        if len(self.weight_index) != n:
            raise MalformedTowerError(f"expected {n} weight indices, got {self.weight_index}")

    @classmethod
    def from_reflection_sets(cls, group, levels):
        r"""

        Build a tower from explicit reflection sets.

        The given chain may be non-maximal or contain repeated sets. Missing levels are filled in
        by adding one reflection at a time (and closing); the inserted levels share the weight
        variable of the given level they refine. The trivial level may be omitted.

        Parameters
        ----------
        group : ReflectionGroup

            The ambient group.

        levels : sequence of sequences of int

            The reflection indices of each given level, smallest first.

        Returns
        -------
        tower : ParabolicTower

            The refined maximal tower.

        """
        given = []
        for level in map(frozenset, levels):
            if any(not 0 <= i < group.num_reflections for i in level):
                raise MalformedTowerError(f"reflection index out of range in level {sorted(level)}")
            if level and (not given or given[-1] != level):
                given.append(level)
        if not given:
            raise MalformedTowerError("a tower needs at least one nontrivial level")
        chain, weight_index = [frozenset()], []
        for k, level in enumerate(given):
            if not chain[-1] <= level:
                raise MalformedTowerError(f"level {sorted(level)} does not contain its predecessor")
            if parabolic_closure(group, level) != level:
                raise MalformedTowerError(f"level {sorted(level)} is not a parabolic subgroup")
            while chain[-1] != level:
                span = normal_span(group, chain[-1])
                tau = next(i for i in sorted(level) if not span.contains(_normal(group, i)))
                chain.append(parabolic_closure(group, chain[-1] | {tau}))
                weight_index.append(k)
        return cls(group, chain, weight_index, source={'levels': [sorted(x) for x in given]})

    @property
    def n(self):
        return len(self.levels) - 1

    @property
    def nvars(self):
        return max(self.weight_index) + 1

    def step(self, i):
        r""" the reflections :math:`\mathcal{R}\cap(W_i\setminus W_{i-1})`, for :math:`i\ge1` """
        if not 1 <= i <= self.n:
            raise IndexError(f"tower step {i} out of range 1..{self.n}")
        return self.levels[i] - self.levels[i - 1]

    def birth_step(self, tau):
        r""" the smallest :math:`i` with :math:`\tau\in W_i` """
        return next(i for i in range(1, self.n + 1) if tau in self.levels[i])

    def weight_system(self, values=None):
        r"""

        The parabolic weight system :math:`w_T(\tau) = \omega_i` for
        :math:`\tau\in W_i\setminus W_{i-1}`.

        Parameters
        ----------
        values : sequence of rationals, optional

            Numeric values of :math:`\omega_1,\dots` (one per weight variable).

        Returns
        -------
        weights : WeightSystem

            The induced weight system.

        """
        assignment = [
            self.weight_index[self.birth_step(tau) - 1]
            for tau in range(self.group.num_reflections)]
        return WeightSystem(assignment, self.nvars, values)

    def to_json(self):
        return {
            'group': self.group.descriptor,
            'source': {k: list(v) if isinstance(v, tuple) else v for k, v in self.source.items()},
            'levels': [sorted(level) for level in self.levels],
            'weight_index': list(self.weight_index),
        }

    def __eq__(self, other):
        return (isinstance(other, ParabolicTower) and self.group is other.group
                and (self.levels, self.weight_index) == (other.levels, other.weight_index))

    def __hash__(self):
        return hash((self.levels, self.weight_index))

    def __repr__(self):
        sizes = [len(level) for level in self.levels]
        return f"ParabolicTower({self.group.descriptor!r}, source={self.source}, sizes={sizes})"


def _normal(G, tau):
    return G.hyperplanes[G.reflection_hyperplane[tau]].normal


def _parse_ordering(ordering, n):
    if isinstance(ordering, str):
        try:
            ordering = [int(x) for x in ordering.split(',') if x.strip()]
        except ValueError:
            raise MalformedTowerError(f"malformed generator ordering: {ordering!r}")
    ordering = tuple(int(x) for x in ordering)
    if sorted(ordering) != list(range(1, n + 1)):
        raise MalformedTowerError(f"ordering {ordering} is not a permutation of 1..{n}")
    return ordering


def standard_tower(G, ordering=None):
    r"""

    The standard tower of a generator ordering.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    ordering : sequence of int or str, optional

        A permutation :math:`\sigma` of :math:`1,\dots,n` (e.g. ``(1, 3, 2)`` or ``"1,3,2"``).
        Level :math:`i` is the parabolic closure of :math:`s_{\sigma(1)},\dots,s_{\sigma(i)}`.
        Defaults to the identity ordering.

    Returns
    -------
    tower : ParabolicTower

        The tower.

    Raises
    ------
    MalformedTowerError

        If the ordering is not a permutation of :math:`1,\dots,n`.

    """
    n = G.rank
    ordering = _parse_ordering(range(1, n + 1) if ordering is None else ordering, n)
    gens = G.generator_indices
    levels = [frozenset()]
    for i in range(1, n + 1):
        levels.append(parabolic_closure(G, [gens[k - 1] for k in ordering[:i]]))
    return ParabolicTower(G, levels, source={'ordering': ordering})


def all_standard_towers(G):
    r""" yields the standard towers of all :math:`n!` generator orderings """
    for ordering in permutations(range(1, G.rank + 1)):
        yield standard_tower(G, ordering)


def conjugate_tower(T, g):
    r"""

    The conjugate tower :math:`g\,T\,g^{-1}`.

    Parameters
    ----------
    T : ParabolicTower

        The tower.

    g : GroupElement

        The conjugating element.

    Returns
    -------
    tower : ParabolicTower

        The tower whose levels are :math:`g W_i g^{-1}`, with the same weight variables.

    """
    G = T.group
    image = [G.reflection_index(G.conjugate(tau, g)) for tau in G.reflections]
    levels = [frozenset(image[i] for i in level) for level in T.levels]
    source = dict(T.source, conjugate_by=g)
    return ParabolicTower(G, levels, T.weight_index, source=source)
