import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np
import pandas as pd

from ..groups import GroupElement, MonomialGroup, SymmetricGroup
from ..scalars import as_integer, conj, simplify, zeta
from ..utils import VerificationReport, char_poly_coefficients
from ._partition import Partition, partitions


__all__ = (
    'CharacterTable',
    'centralizer_order',
    'coxeter_number_char',
    'cycle_type',
    'exterior_power_check',
    'gr1n_hook_character_data',
    'mn_character',
    'verify_hook_vanishing',
)


HOOK_VANISHING_MAX_N = 9
EXTERIOR_POWER_MAX_N = 6


def _beta_set(lam):
    ell = len(lam)
    return tuple(sorted(p + ell - 1 - i for i, p in enumerate(lam)))


@lru_cache(maxsize=None)
def _mn(beta, mu):
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beads = set(beta)
    total = 0
    for x in beta:
        y = x - r
        if y < 0 or y in beads:
            continue
        # moving a bead past the beads in between removes a rim hook of that height
        sign = -1 if sum(1 for z in beta if y < z < x) % 2 else 1
        total += sign * _mn(tuple(sorted((beads - {x}) | {y})), rest)
    return total


def mn_character(lam, mu):
    r"""

    The irreducible character :math:`\chi_\lambda(\mu)` of :math:`S_n` by the Murnaghan-Nakayama
    rule.

    Rim hooks are removed on the abacus: a rim hook of size :math:`r` corresponds to moving a bead
    of the beta-set from position :math:`x` to the free position :math:`x - r`, with sign
    :math:`(-1)^{\text{height}}` given by the number of beads it jumps over.

    Parameters
    ----------
    lam : Partition or sequence of int

        The irreducible representation.

    mu : Partition or sequence of int

        The cycle type of the class.

    Returns
    -------
    value : int

        The character value.

    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"|lambda| = {lam.size} differs from |mu| = {mu.size}")
    return _mn(_beta_set(lam), tuple(mu))


def centralizer_order(mu):
    r""" :math:`z_\mu = \prod_i i^{m_i} m_i!` """
    out = 1
    for part, mult in Counter(Partition(mu)).items():
        out *= part ** mult * factorial(mult)
    return out


def cycle_type(perm):
    r""" the cycle type of a permutation given as a tuple of images """
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        parts.append(length)
    return Partition(parts)


def _class_representative(mu):
    perm, start = [], 0
    for m in mu:
        perm.extend(start + (t + 1) % m for t in range(m))
        start += m
    return tuple(perm)


class CharacterTable:
    r"""

    The character table of :math:`S_n`.

    Rows are indexed by the partitions :math:`\lambda\vdash n` (irreducible representations) and
    columns by the cycle types :math:`\mu\vdash n` (conjugacy classes), both in reverse
    lexicographic order.

    Parameters
    ----------
    n : int

        The degree of the symmetric group.

    """
    def __init__(self, n):
        if n < 1:
            raise ValueError(f"n must be positive, got: {n}")
        self.n = n
        self.partitions = partitions(n)
        self.classes = list(self.partitions)
        self.values = np.array(
            [[mn_character(lam, mu) for mu in self.classes] for lam in self.partitions],
            dtype=np.int64)
        self.class_sizes = np.array(
            [factorial(n) // centralizer_order(mu) for mu in self.classes], dtype=np.int64)
        logging.getLogger('coxlab.symfuncs.CharacterTable').debug(
            f"computed {len(self.partitions)}x{len(self.classes)} character table of S_{n}")

    def value(self, lam, mu):
        i = self.partitions.index(Partition(lam))
        j = self.classes.index(Partition(mu))
        return int(self.values[i, j])

    def inner_product(self, chi, psi):
        r""" :math:`\frac{1}{n!}\sum_\mu |C_\mu|\,\chi(\mu)\psi(\mu)` for class functions """
        total = sum(int(s) * int(a) * int(b) for s, a, b in zip(self.class_sizes, chi, psi))
        return Fraction(total, factorial(self.n))

    def row_orthogonality(self):
        r""" check :math:`\langle\chi_\lambda, \chi_\nu\rangle = \delta_{\lambda\nu}` """
        name = f"row_orthogonality[S{self.n}]"
        for i, lam in enumerate(self.partitions):
            for k, nu in enumerate(self.partitions):
                ip = self.inner_product(self.values[i], self.values[k])
                if ip != (i == k):
                    return VerificationReport.failure(
                        name, {'lambda': str(lam), 'nu': str(nu), 'inner_product': ip})
        return VerificationReport.success(name, irreducibles=len(self.partitions))

    def column_orthogonality(self):
        r""" check :math:`\sum_\lambda\chi_\lambda(\mu)\chi_\lambda(\nu) = \delta_{\mu\nu}z_\mu` """
        name = f"column_orthogonality[S{self.n}]"
        gram = self.values.T.dot(self.values)
        for j, mu in enumerate(self.classes):
            for k, nu in enumerate(self.classes):
                expected = centralizer_order(mu) if j == k else 0
                if gram[j, k] != expected:
                    return VerificationReport.failure(
                        name, {'mu': str(mu), 'nu': str(nu), 'sum': int(gram[j, k]),
                               'expected': expected})
        return VerificationReport.success(name, classes=len(self.classes))

    def to_frame(self):
        r"""

        The table as a :class:`pandas.DataFrame`.

        Returns
        -------
        df : pandas.DataFrame

            Rows labeled by the irreducibles, columns by the cycle types.

        """
        return pd.DataFrame(
            self.values, index=pd.Index([str(p) for p in self.partitions], name='lambda'),
            columns=pd.Index([str(mu) for mu in self.classes], name='mu'))

    def to_json(self):
        return {
            'n': self.n,
            'partitions': [list(p) for p in self.partitions],
            'classes': [list(mu) for mu in self.classes],
            'class_sizes': self.class_sizes.tolist(),
            'values': self.values.tolist(),
        }

    def __repr__(self):
        return f"CharacterTable(n={self.n})"


def coxeter_number_char(lam):
    r"""

    The Coxeter number :math:`c_\chi = |\mathcal{R}| - \tilde\chi(\mathcal{R})` of an irreducible
    character of :math:`S_n`, where :math:`\tilde\chi = \chi/\chi(1)`.

    All reflections of :math:`S_n` are transpositions, so

    .. math::

        c_\lambda\ =\ \binom{n}{2}\Big(1 - \frac{\chi_\lambda(\tau)}{\chi_\lambda(1)}\Big).

    Raises
    ------
    NonIntegralSpectrumError

        If the result is not an integer.

    """
    lam = Partition(lam)
    n = lam.size
    if n < 2:
        return 0
    tau = Partition((2,) + (1,) * (n - 2))
    dim = lam.dimension()
    c = comb(n, 2) * Fraction(dim - mn_character(lam, tau), dim)
    return as_integer(c, what=f"Coxeter number of {lam}")


def verify_hook_vanishing(n):
    r"""

    Check that on an :math:`n`-cycle the hooks :math:`(n-k, 1^k)` take the value :math:`(-1)^k` and
    every other irreducible character vanishes.

    Parameters
    ----------
    n : int

        The degree, at most 9.

    Returns
    -------
    report : VerificationReport

        The values on the :math:`n`-cycle, keyed by partition.

    """
    if not 1 <= n <= HOOK_VANISHING_MAX_N:
        raise ValueError(f"n must lie in 1..{HOOK_VANISHING_MAX_N}, got: {n}")
    name = f"hook_vanishing[S{n}]"
    values = {}
    for lam in partitions(n):
        value = mn_character(lam, (n,))
        values[str(lam)] = value
        expected = (-1) ** lam.hook_height() if lam.is_hook() else 0
        if value != expected:
            return VerificationReport.failure(
                name, {'lambda': str(lam), 'value': value, 'expected': expected})
    return VerificationReport.success(name, values=values)


def exterior_power_check(n):
    r"""

    Check that the hook character :math:`(n-k, 1^k)` is the character of :math:`\wedge^k V` for
    the reflection representation :math:`V` of :math:`S_n`.

    The trace of :math:`\wedge^k\rho(g)` is the elementary symmetric function :math:`e_k` of the
    eigenvalues of :math:`\rho(g)`, read off from its characteristic polynomial.

    Parameters
    ----------
    n : int

        The degree, at most 6.

    Returns
    -------
    report : VerificationReport

        The first class and degree where the values differ, if any.

    """
    if not 2 <= n <= EXTERIOR_POWER_MAX_N:
        raise ValueError(f"n must lie in 2..{EXTERIOR_POWER_MAX_N}, got: {n}")
    name = f"exterior_power[S{n}]"
    G = SymmetricGroup(n)
    for mu in partitions(n):
        g = GroupElement(_class_representative(mu), G.identity.twist)
        coeffs = char_poly_coefficients(G.matrix(g))
        for k in range(n):
            wedge = simplify((-1) ** k * coeffs[n - 1 - k])
            chi = mn_character(Partition.hook(n, k), mu)
            if wedge != chi:
                return VerificationReport.failure(
                    name, {'mu': str(mu), 'k': k, 'exterior_power': wedge, 'hook': chi})
    return VerificationReport.success(name, classes=len(partitions(n)))


def gr1n_hook_character_data(r, n):
    r"""

    Character data of the hook representations of :math:`G(r,1,n)`.

    The irreducible representation indexed by the :math:`r`-tuple of partitions with the hook
    :math:`(n-k, 1^k)` in position :math:`q` and empty partitions elsewhere is the inflation of the
    :math:`S_n`-representation :math:`(n-k, 1^k)` tensored with the linear character
    :math:`g\mapsto\xi^{q\,\sum_i a_i}`, where :math:`\zeta^{a_i}` are the nonzero entries of
    :math:`g` and :math:`\xi = e^{2\pi i/r}`.

    For each :math:`0\le q<r` and :math:`0\le k<n` the character is checked to be irreducible, to
    take the value :math:`(-1)^k\xi^{-q}` on :math:`c^{-1}` and to have Coxeter number :math:`hk`
    (:math:`q = 0`) or :math:`h(k+1)` (:math:`q\neq 0`), with :math:`h = rn`.

    Parameters
    ----------
    r, n : int

        The parameters, :math:`2\le r\le 3` and :math:`1\le n\le 3`.

    Returns
    -------
    report : VerificationReport

        The computed data in ``details['rows']``.

    """
    if not (2 <= r <= 3 and 1 <= n <= 3):
        raise ValueError(f"expected 2 <= r <= 3 and 1 <= n <= 3, got: r={r}, n={n}")
    name = f"gr1n_hooks[G({r},1,{n})]"
    G = MonomialGroup(r, 1, n)
    h = G.coxeter_number
    c_inv = G.inverse(G.coxeter_element())
    xi = zeta(r, 1)

    def character(lam, q, g):
        return simplify(mn_character(lam, cycle_type(g.perm)) * xi ** (q * sum(g.twist) % r))

    rows = []
    for q in range(r):
        for k in range(n):
            lam = Partition.hook(n, k)
            dim = lam.dimension()
            norm = simplify(sum(
                (character(lam, q, g) * conj(character(lam, q, g)) for g in G.elements), 0)
                * Fraction(1, G.order))
            value = character(lam, q, c_inv)
            coxeter_number = simplify(sum(
                (1 - character(lam, q, tau) * Fraction(1, dim) for tau in G.reflections), 0))
            row = {'q': q, 'k': k, 'partition': str(lam), 'dimension': dim,
                   'value_at_inverse_coxeter': value, 'coxeter_number': coxeter_number}
            rows.append(row)
            expected_value = simplify((-1) ** k * xi ** ((-q) % r))
            expected_number = h * k if q == 0 else h * (k + 1)
            for key, got, expected in (('norm', norm, 1),
                                       ('value_at_inverse_coxeter', value, expected_value),
                                       ('coxeter_number', coxeter_number, expected_number)):
                if got != expected:
                    return VerificationReport.failure(
                        name, {'q': q, 'k': k, 'check': key, 'computed': got,
                               'expected': expected}, rows=rows)
    return VerificationReport.success(name, rows=rows)
