import logging
from fractions import Fraction
from math import comb, factorial

from .._base.errors import RegularityError
from ..factorizations._theorems import tower_label
from ..groups import ReflectionGroup, components
from ..laplacians import ArrLaplacian, CharPoly, WLaplacian, char_poly
from ..laplacians._arrangement import NORM_VARIANTS
from ..scalars import as_integer, simplify
from ..towers import standard_tower
from ..utils import (
    VerificationReport, char_poly_coefficients, compare_coefficients, identity, integer_roots,
    object_array, zeros)
from ._flats import enumerate_flats


__all__ = (
    'localized_char_poly',
    'multiset_coxeter_numbers',
    'parabolic_coxeter_elements',
    'verify_coxeter_identity',
    'verify_laplacian_recursion',
    'verify_matrix_forest',
    'verify_parabolic_stabilizers',
)


def _group_localized(G, weights, reflections):
    n = G.rank
    M = zeros(n)
    one = identity(n)
    for i in reflections:
        w = 1 if weights is None else weights.weight(i)
        D = one - G.matrix(G.reflections[i])
        for a in range(n):
            for b in range(n):
                if D[a, b] != 0:
                    M[a, b] = M[a, b] + w * D[a, b]
    return M


def localized_char_poly(source, flat, weights=None):
    r"""

    The characteristic polynomial :math:`\det(x + L_{\mathcal{A}_X})` of the Laplacian of the
    localization :math:`\mathcal{A}_X = \{H : X\subseteq H\}`.

    Parameters
    ----------
    source : ReflectionGroup or ArrLaplacian

        The arrangement. For a group the localized Laplacian is
        :math:`\sum_{\tau\in W_X} w(\tau)(I - \tau)`.

    flat : Flat

        The flat :math:`X`.

    weights : WeightSystem, optional

        The reflection weights of a group. Unweighted if omitted.

    Returns
    -------
    p : CharPoly

        A polynomial divisible by :math:`x^{\dim X}`; the coefficient of :math:`x^{\dim X}` is the
        pseudodeterminant.

    """
    if isinstance(source, ReflectionGroup):
        M = _group_localized(source, weights, sorted(flat.reflections))
    elif not flat.hyperplanes:
        M = zeros(source.n)
    else:
        js = flat.hyperplanes
        M = ArrLaplacian(
            [source.normals[j] for j in js], gram=source.gram,
            norms=[source.norms[j] for j in js], weights=[source.weights[j] for j in js]).matrix
    return CharPoly(char_poly_coefficients(-M))


def verify_laplacian_recursion(source, weights=None, lattice=None):
    r"""

    Check the expansion of the characteristic polynomial over the intersection lattice,

    .. math::

        \det(x + L_\mathcal{A}(\omega))\ =\ \sum_X \operatorname{pdet}(L_{\mathcal{A}_X}(\omega))
            \,x^{\dim X}.

    Parameters
    ----------
    source : ReflectionGroup or ArrLaplacian

        A group (its :math:`W`-Laplacian) or an explicit arrangement.

    weights : WeightSystem or sequence, optional

        For a group, the reflection weights; defaults to the formal weights of the standard
        tower. For an arrangement, replacement hyperplane weights.

    lattice : IntersectionLattice, optional

        Precomputed flats of the arrangement.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    if isinstance(source, ReflectionGroup):
        G = source
        weights = standard_tower(G).weight_system() if weights is None else weights
        full = char_poly(WLaplacian(G, weights))
        name = f"recursion[{G.descriptor}]"
    else:
        if weights is not None:
            source = ArrLaplacian(source.normals, source.gram, source.norms, weights)
        full = char_poly(source)
        name = f"recursion[{len(source.normals)} hyperplanes]"
    lattice = enumerate_flats(source) if lattice is None else lattice
    rhs = [0] * (lattice.n + 1)
    for X in lattice:
        pdet = localized_char_poly(source, X, weights).coefficient(X.dim)
        rhs[X.dim] = rhs[X.dim] + pdet
    return compare_coefficients(
        name, list(full.coeffs), [simplify(c) for c in rhs],
        labels=('char_poly', 'flat_sum'), flats=list(lattice.counts))


def parabolic_coxeter_elements(G, flat):
    r"""

    The Coxeter elements of the parabolic subgroup :math:`W_X`.

    A Coxeter element of :math:`W_X` is a product :math:`c_1\cdots c_m` of Coxeter elements of its
    irreducible components, and :math:`c_i` is an element of the component with a regular
    eigenvector for :math:`e^{2\pi i/h_i}`.

    Returns
    -------
    indices : list of int

        Positions in :attr:`G.elements <coxlab.groups.ReflectionGroup.elements>`.

    Raises
    ------
    RegularityError

        If some component does not have :math:`|W_i|/h_i` Coxeter elements.

    """
    acc = {G.identity}
    for comp in flat.components:
        sub = G.closure([G.reflections[i] for i in sorted(comp.reflections)])
        cox = [g for g in sub if g != G.identity and G.is_regular_element(
            g, 1, h=comp.coxeter_number, hyperplanes=comp.hyperplanes)]
        if len(cox) * comp.coxeter_number != len(sub):
            raise RegularityError(
                f"component {comp.hyperplanes} of {G.descriptor} has {len(cox)} Coxeter "
                f"elements, expected {len(sub)}/{comp.coxeter_number}")
        acc = {G.multiply(a, c) for a in acc for c in cox}
    return sorted(G.index(g) for g in acc)


def _restricted_reduced(G, weights, reflections, targets, length):
    mul = G.multiplication_table()
    state = {G.index(G.identity): 1}
    for _ in range(length):
        new = {}
        for g, c in state.items():
            for j in reflections:
                x = int(mul[g, j])
                new[x] = new.get(x, 0) + c * weights.weight(j)
        state = new
    return sum((state.get(g, 0) for g in targets), 0)


def verify_matrix_forest(G, T=None, lattice=None):
    r"""

    Check the Matrix-Forest expansion of the tower-weighted :math:`W`-Laplacian,

    .. math::

        \det(x + L_W^T(\omega))\ =\ \sum_X \frac{|C_{W_X}(c_X)|}{(n-k)!}
            \sum_{c_X}\ \sum_{\tau_1\cdots\tau_{n-k} = c_X} w_T(\tau_1)\cdots w_T(\tau_{n-k})
            \,x^k,

    where :math:`k = \dim X`, :math:`c_X` runs over the Coxeter elements of :math:`W_X`, the
    reflections :math:`\tau_j` are those of :math:`W_X` and the centralizer order
    :math:`|C_{W_X}(c_X)|` is the product of the Coxeter numbers of the components of :math:`W_X`.

    Parameters
    ----------
    G : ReflectionGroup

        The group. Its elements are enumerated.

    T : ParabolicTower, optional

        The tower. Defaults to the standard tower.

    lattice : IntersectionLattice, optional

        Precomputed flats of :code:`G`.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    T = standard_tower(G) if T is None else T
    weights = T.weight_system()
    lattice = enumerate_flats(G) if lattice is None else lattice
    logger = logging.getLogger('coxlab.lattices.verify_matrix_forest')
    rhs = [0] * (G.rank + 1)
    for X in lattice:
        targets = parabolic_coxeter_elements(G, X)
        count = _restricted_reduced(G, weights, sorted(X.reflections), targets, X.codim)
        centralizer = 1
        for comp in X.components:
            centralizer *= comp.coxeter_number
        rhs[X.dim] = rhs[X.dim] + count * Fraction(centralizer, factorial(X.codim))
        logger.debug(f"{G.descriptor}: flat {X.hyperplanes} has {len(targets)} Coxeter elements")
    lhs = char_poly(WLaplacian(G, weights))
    return compare_coefficients(
        f"matrix_forest[{G.descriptor}|{tower_label(T)}]", list(lhs.coeffs),
        [simplify(c) for c in rhs], labels=('char_poly', 'forest_sum'),
        flats=list(lattice.counts))


def verify_coxeter_identity(G, norms='full', lattice=None):
    r"""

    Check the identity among parabolic Coxeter numbers,

    .. math::

        (h + x)^n\ =\ \sum_X \prod_i h_i(W_X)\,x^{\dim X}.

    With ``norms='one'`` or ``'minus_one'`` every hyperplane contributes :math:`c_H = 1` or
    :math:`c_H = e_H - 1` instead of :math:`e_H`; a component :math:`W_i` then contributes
    :math:`\sum_{H} c_H/\operatorname{rank} W_i` and :math:`h` becomes :math:`|\mathcal{R}^*|/n` or
    :math:`|\mathcal{R}|/n`.

    Parameters
    ----------
    G : ReflectionGroup

        An irreducible group.

    norms : {'full', 'one', 'minus_one'}, optional

        The normalization of the hyperplane normals.

    lattice : IntersectionLattice, optional

        Precomputed flats of :code:`G`.

    Returns
    -------
    report : VerificationReport

        The first differing coefficient, if any.

    """
    if norms not in NORM_VARIANTS:
        raise ValueError(f"norms must be one of {NORM_VARIANTS}, got: {norms!r}")
    if len(components(G, range(G.num_reflections))) != 1:
        raise ValueError(f"{G.descriptor} is not irreducible")
    c = {'full': lambda e: e, 'one': lambda e: 1, 'minus_one': lambda e: e - 1}[norms]
    cH = [c(H.order) for H in G.hyperplanes]
    lattice = enumerate_flats(G) if lattice is None else lattice
    n = G.rank
    h = Fraction(sum(cH), n)
    lhs = [simplify(comb(n, k) * h ** (n - k)) for k in range(n + 1)]
    rhs = [0] * (n + 1)
    for X in lattice:
        term = Fraction(1)
        for comp in X.components:
            term *= Fraction(sum(cH[j] for j in comp.hyperplanes), comp.rank) ** comp.rank
        rhs[X.dim] += term
    return compare_coefficients(
        f"coxeter_identity[{G.descriptor}|{norms}]", lhs, [simplify(x) for x in rhs],
        labels=('power', 'flat_sum'), h=simplify(h), flats=list(lattice.counts))


def multiset_coxeter_numbers(G, flat):
    r"""

    The multiset :math:`\{h_i(W_X)\}` of a flat, checked against the spectrum of the unweighted
    localized Laplacian.

    The unweighted Laplacian of :math:`W_X` acts on the span of the normals of every component
    :math:`W_i` as :math:`h_i`, so :math:`\det(x + L_{W_X}) = x^{\dim X}\prod_i (x + h_i)`.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    flat : Flat

        A flat of :code:`G`.

    Returns
    -------
    numbers : list of int

        The component Coxeter numbers with rank multiplicity, in decreasing order.

    Raises
    ------
    RegularityError

        If the localized Laplacian has a nonzero eigenvalue that is not an integer, or its
        integer eigenvalues differ from the component data.

    """
    numbers = flat.coxeter_numbers()
    p = localized_char_poly(G, flat)
    coeffs = [as_integer(x, 'localized characteristic polynomial coefficient') for x in p.coeffs]
    bound = G.num_reflections + G.num_hyperplanes
    roots, rest = integer_roots(coeffs, range(0, -bound - 1, -1))
    if len(rest) != 1:
        raise RegularityError(
            f"localized Laplacian of flat {flat.hyperplanes} of {G.descriptor} has eigenvalues "
            f"that are not integers")
    spectrum = sorted((-r for r in roots if r != 0), reverse=True)
    if spectrum != numbers:
        raise RegularityError(
            f"flat {flat.hyperplanes} of {G.descriptor}: Laplacian spectrum {spectrum} differs "
            f"from the component Coxeter numbers {numbers}")
    return numbers


def verify_parabolic_stabilizers(G, lattice=None):
    r"""

    Check for every flat that its pointwise stabilizer, computed from the group elements, is the
    subgroup generated by the reflections of the flat.

    Returns
    -------
    report : VerificationReport

        The first flat whose stabilizer differs, if any.

    """
    lattice = enumerate_flats(G) if lattice is None else lattice
    name = f"stabilizers[{G.descriptor}]"
    matrices = [G.matrix(g) for g in G.elements]
    for X in lattice:
        vectors = [object_array([[x] for x in v]) for v in X.basis]
        stabilizer = {
            k for k, M in enumerate(matrices)
            if all(all(simplify(a) == b for a, b in zip(M.dot(v).flat, v.flat))
                   for v in vectors)}
        generated = {G.index(g) for g in G.closure(G.reflections[i] for i in X.reflections)}
        if stabilizer != generated:
            return VerificationReport.failure(
                name, {'flat': list(X.hyperplanes), 'stabilizer': len(stabilizer),
                       'generated': len(generated)})
    return VerificationReport.success(name, flats=len(lattice))
