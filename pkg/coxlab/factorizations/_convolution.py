from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .._base.mixins import LoggerMixin
from ..groups import GroupElement
from ..scalars import Poly, TruncatedEGF, simplify
from ..utils import check_memory, pretty_repr


__all__ = (
    'ConvolutionState',
    'FactorizationSeries',
    'enumerate_series',
)


TARGETS = ('class', 'element')


@lru_cache(maxsize=None)
def _monomials(nvars, degree):
    r""" the exponent vectors of total degree ``degree``, in lexicographically decreasing order """
    if nvars == 1:
        return ((degree,),)
    return tuple((e,) + rest for e in range(degree, -1, -1)
                 for rest in _monomials(nvars - 1, degree - e))


def _bump(exps, v):
    exps = list(exps)
    exps[v] += 1
    return tuple(exps)


class ConvolutionState(LoggerMixin):
    r"""

    Repeated right multiplication by :math:`A(\omega) = \sum_\tau w(\tau)\,\tau` in the group
    algebra, starting from the identity.

    After :math:`\ell` steps the coefficient of :math:`g` is

    .. math::

        [g]\,A(\omega)^\ell\ =\ \sum_{\tau_1\cdots\tau_\ell = g} w(\tau_1)\cdots w(\tau_\ell).

    In **formal** mode all monomials have degree :math:`\ell`, so the state is an integer array of
    shape ``[|W|, #monomials]`` whose columns are the exponent vectors of degree :math:`\ell`. In
    **numeric** mode it is a vector of exact rationals.

    Parameters
    ----------
    group : ReflectionGroup

        The group. Its elements are enumerated.

    weights : WeightSystem

        The weights of the reflections.

    budget_mb : int, optional

        Overrides the memory budget, see :func:`coxlab.utils.check_memory`.

    """
    def __init__(self, group, weights, budget_mb=None):
        if len(weights.assignment) != group.num_reflections:
            raise ValueError(
                f"weight system has {len(weights.assignment)} entries, {group.descriptor} has "
                f"{group.num_reflections} reflections")
        self.group = group
        self.weights = weights
        self.budget_mb = budget_mb
        self.mul = group.multiplication_table()
        self.length = 0
        e = group.index(group.identity)
        if self.formal:
            self.monomials = _monomials(weights.nvars, 0)
            self.coeffs = np.zeros((group.order, 1), dtype=np.int64)
            self.coeffs[e, 0] = 1
        else:
            self.coeffs = np.zeros(group.order, dtype=object)
            self.coeffs[e] = 1

    @property
    def formal(self):
        return self.weights.mode == 'formal'

    def step(self):
        r""" multiply the state by :math:`A(\omega)` from the right """
        G = self.group
        what = f"convolution step {self.length + 1} of {G.descriptor}"
        if self.formal:
            # every entry is bounded by |R|^l
            if self.coeffs.dtype != object and G.num_reflections ** (self.length + 1) >= 2 ** 62:
                self.logger.debug(f"{what}: switching to arbitrary precision")
                self.coeffs = self.coeffs.astype(object)
            monomials = _monomials(self.weights.nvars, self.length + 1)
            check_memory(G.order * len(monomials) * self.coeffs.itemsize, what, self.budget_mb)
            index = {m: j for j, m in enumerate(monomials)}
            shifts = {
                v: np.array([index[_bump(m, v)] for m in self.monomials], dtype=np.int64)
                for v in set(self.weights.assignment)}
            new = np.zeros((G.order, len(monomials)), dtype=self.coeffs.dtype)
            for j, v in enumerate(self.weights.assignment):
                new[np.ix_(self.mul[:, j], shifts[v])] += self.coeffs
            self.monomials = monomials
        else:
            check_memory(G.order * 64, what, self.budget_mb)
            new = np.zeros(G.order, dtype=object)
            for j in range(G.num_reflections):
                new[self.mul[:, j]] += self.weights.weight(j) * self.coeffs
        self.coeffs = new
        self.length += 1
        self.logger.debug(f"{what}: {self.coeffs.size} entries")

    def value(self, indices):
        r"""

        The sum of the coefficients at the given elements.

        Parameters
        ----------
        indices : sequence of int

            Positions in the element list of the group.

        Returns
        -------
        value : Poly or rational

            A homogeneous polynomial of degree :attr:`length` in formal mode.

        """
        indices = list(indices)
        if self.formal:
            row = self.coeffs[indices].sum(axis=0)
            return Poly({m: int(c) for m, c in zip(self.monomials, row) if c},
                        self.weights.nvars)
        return simplify(sum((self.coeffs[i] for i in indices), 0))

    def __repr__(self):
        return (f"ConvolutionState(group={self.group.descriptor!r}, mode={self.weights.mode!r}, "
                f"length={self.length})")


class FactorizationSeries(NamedTuple):
    r"""

    The weighted factorization series

    .. math::

        F(t,\omega)\ =\ \sum_{\ell\ge 0}\frac{t^\ell}{\ell!}
            \sum_{c}\ \sum_{\tau_1\cdots\tau_\ell = c} w(\tau_1)\cdots w(\tau_\ell),

    where :math:`c` runs over the target: the Coxeter class or a single element.

    Parameters
    ----------
    group : str

        The descriptor of the group.

    target : str

        ``'class'``, ``'element'`` (the standard Coxeter element) or the repr of another element.

    mode : str

        ``'formal'`` or ``'numeric'``.

    series : TruncatedEGF

        The truncated series.

    """
    group: str
    target: str
    mode: str
    series: TruncatedEGF

    def coefficient(self, ell):
        return self.series.coefficient(ell)

    @property
    def order(self):
        return self.series.order

    def to_json(self):
        return {
            'group': self.group,
            'target': self.target,
            'mode': self.mode,
            'series': self.series.to_json(),
        }

    def __repr__(self):
        return pretty_repr(self)


def _target_indices(G, target):
    if isinstance(target, GroupElement):
        return (G.index(target),), repr(target)
    if target == 'class':
        return G.coxeter_class().indices, target
    if target == 'element':
        return (G.index(G.coxeter_element()),), target
    raise ValueError(f"target must be one of {TARGETS} or a GroupElement, got: {target!r}")


def enumerate_series(G, weights, target='class', L=None, budget_mb=None):
    r"""

    Count weighted reflection factorizations by brute force.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    weights : WeightSystem

        Formal or numeric weights.

    target : {'class', 'element'} or GroupElement, optional

        Sum over the whole Coxeter class, or count the factorizations of a single element.

    L : int, optional

        The truncation order. Defaults to :math:`n + 4`.

    budget_mb : int, optional

        Overrides the memory budget of the convolution state.

    Returns
    -------
    series : FactorizationSeries

        The exact series, with :class:`Poly <coxlab.scalars.Poly>` coefficients in formal mode.

    Raises
    ------
    BudgetExceededError

        If a convolution step would exceed the memory budget.

    """
    L = G.rank + 4 if L is None else int(L)
    if L < 0:
        raise ValueError(f"L must be non-negative, got: {L}")
    indices, label = _target_indices(G, target)
    state = ConvolutionState(G, weights, budget_mb)
    coeffs = [state.value(indices)]
    for _ in range(L):
        state.step()
        coeffs.append(state.value(indices))
    return FactorizationSeries(G.descriptor, label, weights.mode, TruncatedEGF(coeffs, L))
