import logging
from fractions import Fraction
from itertools import combinations, islice
from math import comb

import numpy as np
import sympy

from ..laplacians import ArrLaplacian, char_poly
from ..utils import (
    VerificationReport, bareiss_det, check_subsets, integer_dets, object_array)
from ._catalog import RootCatalog, connection_index, root_catalog


__all__ = (
    'E6_SUBGROUP_POSET',
    'baumeister_wegener_check',
    'shephard_sum',
    'unimodular_check',
    'verify_volume_theorem',
    'verify_volume_theorem_E6',
    'volume_string',
    'zonotope_volume',
)


CHUNK = 100000

# (number of subgroups, Coxeter multiset, connection index) of the reflection subgroups of E6 of
# full rank, the group itself first
E6_SUBGROUP_POSET = (
    (1, (12,) * 6, 3),
    (36, (2,) + (6,) * 5, 12),
    (40, (3,) * 6, 27),
)


def _as_catalog(cat):
    return cat if isinstance(cat, RootCatalog) else root_catalog(cat)


def _minors(vectors, n, subset_cap=None, what='minors'):
    r""" the :math:`n\times n` minors of all :math:`n`-subsets, in chunks """
    roots = np.asarray(vectors, dtype=np.int64)
    total = comb(len(roots), n)
    check_subsets(total, what, subset_cap=subset_cap)
    subsets = combinations(range(len(roots)), n)
    done = 0
    while True:
        idx = np.array(list(islice(subsets, CHUNK)), dtype=np.int64)
        if not len(idx):
            break
        yield integer_dets(roots[idx])
        done += len(idx)
        logging.getLogger('coxlab.zonotopes.minors').debug(f"{what}: {done}/{total}")


def shephard_sum(cat, power=1, subset_cap=None):
    r"""

    The Shephard sum

    .. math::

        \sum_{S}\ |\det(r_S)|^p

    over all :math:`n`-subsets :math:`S` of positive roots, determinants taken in the simple-root
    basis. For :math:`p = 1` this is the volume of the root zonotope in units of the covolume of
    the root lattice.

    Parameters
    ----------
    cat : RootCatalog or str

        The root system.

    power : int, optional

        The exponent :math:`p`.

    subset_cap : int, optional

        Overrides the subset budget.

    Returns
    -------
    total : int

        The sum, e.g. 895536 for :math:`E_6`.

    Raises
    ------
    BudgetExceededError

        If :math:`\binom{|\Phi^+|}{n}` exceeds the subset cap.

    """
    cat = _as_catalog(cat)
    total = 0
    for dets in _minors(cat.positive_roots, cat.rank, subset_cap, f"Shephard sum of {cat.label}"):
        total += int((np.abs(dets) ** power).sum())
    return total


def volume_string(expr):
    r""" render :math:`a\sqrt{d}` as ``'sqrt(d)*a'`` """
    coeff, radical = sympy.sympify(expr).as_coeff_Mul()
    if radical == 1:
        return str(coeff)
    return f"{radical}*{coeff}"


def zonotope_volume(cat, subset_cap=None):
    r"""

    The volume of the root zonotope :math:`Z_W = \sum_{\alpha\in\Phi^+}[0,\alpha]`.

    Returns
    -------
    volume : sympy.Expr

        :func:`shephard_sum` times the covolume :math:`\sqrt{\det(\alpha_i,\alpha_j)}` of the root
        lattice, exactly.

    """
    cat = _as_catalog(cat)
    return shephard_sum(cat, subset_cap=subset_cap) * sympy.sqrt(sympy.Integer(cat.gram_det()))


def verify_volume_theorem(cat, poset, subset_cap=None):
    r"""

    Compare the Shephard sum with the expansion over reflection subgroups of full rank,

    .. math::

        \operatorname{Vol}(Z_W)\ =\ \frac{\prod_i h_i(W)}{\sqrt{I(W)}}\ +\ \sum_{W''<W}
            \prod_i h_i(W'')\left(\frac{1}{\sqrt{I(W'')}} - \frac{1}{\sqrt{I(W)}}\right),

    with volumes normalized so that the root lattice has covolume :math:`\sqrt{I(W)}`.

    Parameters
    ----------
    cat : RootCatalog or str

        A simply-laced root system.

    poset : sequence of tuples

        ``(count, coxeter_numbers, connection_index)`` for :math:`W` itself followed by every
        conjugacy type of proper reflection subgroup of full rank.

    Returns
    -------
    report : VerificationReport

        Both volumes as strings.

    """
    cat = _as_catalog(cat)
    index_W = connection_index(cat)
    name = f"volume_theorem[{cat.label}]"
    (_, numbers, index), rest = poset[0], poset[1:]
    if index != index_W:
        raise ValueError(f"the first poset entry must be {cat.label} itself, got index {index}")
    total = sympy.prod(numbers) / sympy.sqrt(index_W)
    for count, numbers, index in rest:
        total += count * sympy.prod(numbers) * (1 / sympy.sqrt(index) - 1 / sympy.sqrt(index_W))
    formula = sympy.simplify(total)
    shephard = shephard_sum(cat, subset_cap=subset_cap) * sympy.sqrt(index_W)
    details = {'formula': volume_string(formula), 'shephard': volume_string(shephard)}
    if sympy.simplify(formula - shephard) != 0:
        return VerificationReport.failure(name, dict(details), **details)
    return VerificationReport.success(name, **details)


def verify_volume_theorem_E6(subset_cap=None):
    r"""

    The expansion of :func:`verify_volume_theorem` for :math:`E_6`, whose proper reflection
    subgroups of full rank are 36 of type :math:`A_1\times A_5` and 40 of type :math:`A_2^3`:

    .. math::

        \frac{12^6}{\sqrt3} + 36\cdot 2\cdot 6^5\left(\frac{1}{\sqrt{12}}-\frac{1}{\sqrt3}\right)
            + 40\cdot 3^6\left(\frac{1}{\sqrt{27}}-\frac{1}{\sqrt3}\right)\ =\ 895536\sqrt3.

    """
    return verify_volume_theorem('E6', E6_SUBGROUP_POSET, subset_cap=subset_cap)


def unimodular_check(cat, subset_cap=None):
    r"""

    Check that the root system is unimodular: every independent :math:`n`-subset of positive roots
    has determinant :math:`\pm1`, so that

    .. math::

        \sum_S |\det r_S|\ =\ \sum_S \det(r_S)^2\ =\ \det\Big(\sum_{\alpha\in\Phi^+}
            \alpha\,\alpha^T\Big),

    the last sum being the Laplacian of the arrangement of the roots with unit weights and norms
    :math:`\langle\alpha,\alpha\rangle`, in the standard form of the simple-root coordinates.

    Returns
    -------
    report : VerificationReport

        All three values. Root systems of type :math:`A` pass; the others report a discrepancy.

    """
    cat = _as_catalog(cat)
    roots = cat.positive_roots
    L = ArrLaplacian(roots, norms=[sum(x * x for x in r) for r in roots])
    det = char_poly(L).det
    absolute = shephard_sum(cat, 1, subset_cap)
    squared = shephard_sum(cat, 2, subset_cap)
    name = f"unimodular[{cat.label}]"
    details = {'absolute': absolute, 'squared': squared, 'laplacian': det}
    if squared != det:
        return VerificationReport.failure(name, {'squared': squared, 'laplacian': det}, **details)
    if absolute != squared:
        return VerificationReport.failure(name, {'absolute': absolute, 'squared': squared},
                                          **details)
    return VerificationReport.success(name, **details)


def _subsystem(cat, S):
    r""" the roots :math:`\pm w(r)` of the reflection subgroup generated by the roots in S """
    def reflect(v, r):
        c = Fraction(2 * cat.pairing(v, r), cat.pairing(r, r))
        return tuple(int(a - c * b) for a, b in zip(v, r))

    out = set(S) | {tuple(-x for x in r) for r in S}
    queue = list(out)
    while queue:
        v = queue.pop()
        for r in S:
            x = reflect(v, r)
            if x not in out:
                out.add(x)
                queue.append(x)
    return out


def _simple_system(roots):
    positive = [r for r in roots if sum(r) > 0]
    sums = {tuple(a + b for a, b in zip(u, v)) for u, v in combinations(positive, 2)}
    return sorted(r for r in positive if r not in sums)


def baumeister_wegener_check(cat, max_rank=3):
    r"""

    Check that every independent :math:`n`-subset of positive roots is a :math:`\mathbb{Z}`-basis
    of the root lattice of the reflection subgroup :math:`W'` it generates:

    .. math::

        \det(r_S)^2\,\det(\alpha_i,\alpha_j)\ =\ \det(\alpha'_i,\alpha'_j),

    where :math:`\alpha'` are the simple roots of :math:`W'`, found as the indecomposable positive
    roots of the subsystem.

    Parameters
    ----------
    cat : RootCatalog or str

        The root system.

    max_rank : int, optional

        Larger root systems are rejected.

    Returns
    -------
    report : VerificationReport

        The first subset that is not a lattice basis, if any.

    """
    cat = _as_catalog(cat)
    n = cat.rank
    if n > max_rank:
        raise ValueError(f"{cat.label} has rank {n} > {max_rank}")
    name = f"baumeister_wegener[{cat.label}]"
    gram_det = cat.gram_det()
    checked = 0
    for S in combinations(cat.positive_roots, n):
        d = bareiss_det(object_array(S))
        if d == 0:
            continue
        simple = _simple_system(_subsystem(cat, S))
        if len(simple) != n:
            raise ValueError(f"subsystem of {S} has {len(simple)} simple roots, expected {n}")
        sub_det = bareiss_det(object_array(
            [[cat.pairing(u, v) for v in simple] for u in simple]))
        checked += 1
        if d * d * gram_det != sub_det:
            return VerificationReport.failure(
                name, {'subset': [list(r) for r in S], 'det': d, 'subsystem': simple})
    return VerificationReport.success(name, subsets=checked)

