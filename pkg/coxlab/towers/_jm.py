import logging
from collections import Counter

import numpy as np

from .._base.errors import NonIntegralSpectrumError
from ..scalars import as_integer, simplify
from ..utils import (
    VerificationReport, char_poly_coefficients, check_group_order, integer_roots, zeros)


__all__ = (
    'jm_commute',
    'jm_matrices',
    'jm_spectrum',
    'jm_spectrum_check',
)


REGULAR_CAP = 400


def jm_matrices(G, T):
    r"""

    The Jucys-Murphy elements :math:`J_{T,i} = \sum_{\tau\in\mathcal{R}\cap(W_i\setminus
    W_{i-1})}\tau` in the reflection representation.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    T : ParabolicTower

        A tower of :code:`G`.

    Returns
    -------
    matrices : list of 2d object ndarrays

        :math:`\rho_V(J_{T,1}), \dots, \rho_V(J_{T,n})`.

    """
    out = []
    for i in range(1, T.n + 1):
        J = zeros(G.rank)
        for tau in sorted(T.step(i)):
            J = J + G.matrix(G.reflections[tau])
        out.append(J)
    return out


def _equal(A, B):
    return all(simplify(a - b) == 0 for a, b in zip(A.flat, B.flat))


def jm_commute(G, T):
    r"""

    Check that the Jucys-Murphy matrices commute pairwise.

    Returns
    -------
    report : VerificationReport

        The first non-commuting pair, if any.

    """
    name = f"jm_commute[{G.descriptor}]"
    J = jm_matrices(G, T)
    for i in range(len(J)):
        for j in range(i + 1, len(J)):
            if not _equal(J[i].dot(J[j]), J[j].dot(J[i])):
                return VerificationReport.failure(name, {'i': i + 1, 'j': j + 1})
    return VerificationReport.success(name, n=len(J))


def _reflection_spectrum(G, J, bound):
    coeffs = [as_integer(c, 'characteristic polynomial coefficient')
              for c in char_poly_coefficients(J)]
    roots, rest = integer_roots(coeffs, range(-bound, bound + 1))
    if len(rest) > 1:
        raise NonIntegralSpectrumError(
            f"characteristic polynomial {coeffs} of a Jucys-Murphy element of {G.descriptor} has "
            f"non-integral roots")
    return Counter(roots)


def _apply(x, support, mul):
    r""" right multiplication :math:`x\mapsto x\,J` in the group algebra """
    out = np.zeros_like(x)
    for tau in support:
        out[mul[:, tau]] += x
    return out


def _regular_spectrum(G, support, bound):
    mul = G.multiplication_table()
    e = G.index(G.identity)
    delta = np.zeros(G.order, dtype=object)
    delta.fill(0)
    delta[e] = 1

    def product(values):
        x = delta.copy()
        for m in values:
            x = _apply(x, support, mul) - m * x
        return x

    eigenvalues = list(range(-bound, bound + 1))
    if any(product(eigenvalues)):
        raise NonIntegralSpectrumError(
            f"a Jucys-Murphy element of {G.descriptor} has non-integral eigenvalues")
    for m in list(eigenvalues):
        rest = [k for k in eigenvalues if k != m]
        if not any(product(rest)):
            eigenvalues = rest
    spectrum = Counter()
    for k in eigenvalues:
        others = [m for m in eigenvalues if m != k]
        numer = product(others)[e] * G.order
        denom = 1
        for m in others:
            denom *= k - m
        if numer % denom:
            raise NonIntegralSpectrumError(f"multiplicity of eigenvalue {k} is not an integer")
        spectrum[k] = numer // denom
    return spectrum


def jm_spectrum(G, T, i, rep='reflection'):
    r"""

    The spectrum of :math:`J_{T,i}`.

    In the reflection representation the integral characteristic polynomial is computed exactly
    and its integer roots are divided out. In the regular representation the minimal polynomial
    is certified in the group algebra, and the multiplicity of an eigenvalue :math:`k` is
    :math:`|W|` times the coefficient of the identity in the spectral projector
    :math:`\prod_{m\ne k}(J - m)/(k - m)`.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    T : ParabolicTower

        A tower of :code:`G`.

    i : int

        The step, :math:`1\le i\le n`.

    rep : {'reflection', 'regular'}, optional

        The representation.

    Returns
    -------
    spectrum : Counter

        Eigenvalue multiplicities.

    Raises
    ------
    NonIntegralSpectrumError

        If an eigenvalue is not an integer.

    """
    support = sorted(T.step(i))
    bound = len(support)
    if rep == 'reflection':
        J = zeros(G.rank)
        for tau in support:
            J = J + G.matrix(G.reflections[tau])
        return _reflection_spectrum(G, J, bound)
    if rep == 'regular':
        check_group_order(G.order, G.descriptor, group_cap=REGULAR_CAP)
        return _regular_spectrum(G, support, bound)
    raise ValueError(f"rep must be 'reflection' or 'regular', got: {rep!r}")


def jm_spectrum_check(G, T, rep='reflection'):
    r"""

    Check that every Jucys-Murphy element has an integral spectrum within
    :math:`[-|\mathcal{R}^*_i\setminus\mathcal{R}^*_{i-1}|,\ |\mathcal{R}_i\setminus
    \mathcal{R}_{i-1}|]`.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    T : ParabolicTower

        A tower of :code:`G`.

    rep : {'reflection', 'regular'}, optional

        The representation. The regular representation requires :math:`|W|\le 400`.

    Returns
    -------
    report : VerificationReport

        The spectra (eigenvalue to multiplicity) and bounds per step.

    """
    name = f"jm_spectrum[{G.descriptor}|{rep}]"
    steps = []
    for i in range(1, T.n + 1):
        support = T.step(i)
        lower = -len({G.reflection_hyperplane[tau] for tau in support})
        upper = len(support)
        spectrum = jm_spectrum(G, T, i, rep)
        steps.append({'step': i, 'spectrum': dict(sorted(spectrum.items())),
                      'bounds': [lower, upper]})
        outside = [k for k in spectrum if not lower <= k <= upper]
        if outside:
            return VerificationReport.failure(
                name, {'step': i, 'eigenvalue': outside[0], 'bounds': [lower, upper]},
                steps=steps)
    logging.getLogger('coxlab.towers.jm_spectrum_check').debug(f"{name}: {steps}")
    return VerificationReport.success(name, steps=steps)
