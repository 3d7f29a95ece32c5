from abc import ABC, abstractmethod
from collections import deque
from fractions import Fraction
from typing import Any, NamedTuple, Tuple

import numpy as np
import scipy.linalg

from .._base.errors import RegularityError
from .._base.mixins import LoggerMixin, RandomStateMixin
from ..scalars import conj, simplify
from ..utils import (
    VerificationReport, check_group_order, identity, jsonable, pretty_repr, rank, trace, zeros)


__all__ = (
    'CoxeterClass',
    'GroupElement',
    'Hyperplane',
    'ReflectionGroup',
)


class GroupElement(NamedTuple):
    r"""

    A group element in permutation form.

    For the monomial groups :math:`G(r,p,n)` (and :math:`S_n`) the element is the monomial matrix
    with entry :math:`\zeta_r^{\text{twist}[i]}` in position :math:`(\text{perm}[i], i)`. For groups
    given by a root system the element is the permutation it induces on the roots, and
    :attr:`twist` is empty.

    """
    perm: Tuple[int, ...]
    twist: Tuple[int, ...]

    def __repr__(self):
        return pretty_repr(self)


class Hyperplane(NamedTuple):
    r"""

    A reflecting hyperplane :math:`H` together with its cyclic block of reflections.

    Parameters
    ----------
    normal : tuple

        A normal vector in the coordinates of the reflection representation, with its first
        nonzero coordinate real and positive.

    norm : scalar

        The Hermitian norm :math:`\langle n, n\rangle`.

    order : int

        The order :math:`e_H` of the cyclic pointwise stabilizer of :math:`H`.

    reflections : tuple of int

        The indices of :math:`\tau_H, \tau_H^2, \dots, \tau_H^{e_H - 1}` in the list of reflections.

    """
    normal: Tuple[Any, ...]
    norm: Any
    order: int
    reflections: Tuple[int, ...]

    def __repr__(self):
        return pretty_repr(self)


class CoxeterClass(NamedTuple):
    r"""

    The conjugacy class of the Coxeter element.

    Parameters
    ----------
    representative : GroupElement

        The product of the standard generators in their listed order.

    members : tuple of GroupElement

        The full conjugacy class.

    indices : tuple of int

        The positions of the members in the element list of the group.

    """
    representative: GroupElement
    members: Tuple[GroupElement, ...]
    indices: Tuple[int, ...]

    @property
    def size(self):
        return len(self.members)

    def __repr__(self):
        return pretty_repr(self)


class ReflectionGroup(ABC, LoggerMixin, RandomStateMixin):
    r"""

    Abstract base class for finite reflection groups :math:`W \subset GL(V)`.

    A group knows its rank, its standard generators, its reflections :math:`\mathcal{R}` and its
    reflecting hyperplanes :math:`\mathcal{R}^*`, as well as the Hermitian form that the reflection
    representation preserves. The elements themselves are only enumerated when first needed, at
    which point the group order is checked against the group cap.

    Parameters
    ----------
    descriptor : str

        The descriptor the group was built from, e.g. ``'B3'``.

    rank : int

        The dimension :math:`n` of the reflection representation.

    gram : 2d object ndarray

        The Hermitian form :math:`G` in the coordinates of the reflection representation, such
        that :math:`\langle u, v\rangle = v^* G\,u`.

    modulus : int

        The modulus of the twist exponents (the :math:`r` of :math:`G(r,p,n)`).

    group_cap : int, optional

        Overrides the group cap of the active budget.

    random_seed : int, optional

        Seed for the random combinations used by the floating-point regularity check.

    """
    family = None

    def __init__(self, descriptor, rank, gram, modulus=1, group_cap=None, random_seed=None):
        self.descriptor = descriptor
        self.rank = rank
        self.gram = gram
        self.modulus = modulus
        self.group_cap = group_cap
        self.random_seed = random_seed
        self._cache = {}
        self.generators = tuple(self._make_generators())
        self._init_reflections()

    # --- family-specific interface ------------------------------------------------------------

    @property
    @abstractmethod
    def order(self):
        r""" the group order :math:`|W|`, known without enumerating the elements """
        pass

    @property
    @abstractmethod
    def name(self):
        r""" the canonical family name, e.g. ``'G(2,1,3)'`` """
        pass

    @abstractmethod
    def matrix(self, g):
        r"""

        The matrix :math:`\rho_V(g)` of an element in the reflection representation.

        Parameters
        ----------
        g : GroupElement

            The element.

        Returns
        -------
        M : 2d object ndarray

            An exact :math:`n\times n` matrix.

        """
        pass

    @abstractmethod
    def _make_generators(self):
        pass

    @abstractmethod
    def _reflection_data(self):
        r""" yields (element, normal, eigenvalue) for every reflection, grouped by hyperplane """
        pass

    @abstractmethod
    def _enumerate(self):
        pass

    # --- group structure ----------------------------------------------------------------------

    @property
    def identity(self):
        n = len(self.generators[0].perm)
        return GroupElement(tuple(range(n)), (0,) * len(self.generators[0].twist))

    def multiply(self, g, h):
        r""" the product :math:`g\,h` (apply :math:`h` first) """
        pg, tg = g
        ph, th = h
        perm = tuple(pg[i] for i in ph)
        if not tg:
            return GroupElement(perm, ())
        r = self.modulus
        return GroupElement(perm, tuple((th[i] + tg[j]) % r for i, j in enumerate(ph)))

    def inverse(self, g):
        pg, tg = g
        q = [0] * len(pg)
        for i, j in enumerate(pg):
            q[j] = i
        if not tg:
            return GroupElement(tuple(q), ())
        r = self.modulus
        return GroupElement(tuple(q), tuple((-tg[j]) % r for j in q))

    def product(self, elements):
        out = self.identity
        for g in elements:
            out = self.multiply(out, g)
        return out

    def conjugate(self, g, x):
        r""" the conjugate :math:`x\,g\,x^{-1}` """
        return self.multiply(self.multiply(x, g), self.inverse(x))

    def element_order(self, g):
        e, k = g, 1
        one = self.identity
        while e != one:
            e = self.multiply(e, g)
            k += 1
        return k

    @property
    def elements(self):
        r""" all group elements; enumerated on first access """
        if 'elements' not in self._cache:
            check_group_order(self.order, self.descriptor, group_cap=self.group_cap)
            self.logger.debug(f"enumerating {self.order} elements of {self.descriptor}")
            elements = list(self._enumerate())
            if len(elements) != self.order:
                raise RuntimeError(
                    f"enumerated {len(elements)} elements of {self.descriptor}, "
                    f"expected {self.order}")
            self._cache['elements'] = elements
            self._cache['index'] = {g: i for i, g in enumerate(elements)}
        return self._cache['elements']

    def index(self, g):
        r""" the position of an element in :attr:`elements` """
        self.elements
        return self._cache['index'][g]

    def multiplication_table(self):
        r"""

        Right multiplication by reflections as an index table.

        Returns
        -------
        table : 2d int ndarray, shape: [\|W\|, \|R\|]

            ``table[g, j]`` is the index of :math:`g\,\tau_j`.

        """
        if 'mul' not in self._cache:
            elements = self.elements
            table = np.empty((len(elements), len(self.reflections)), dtype=np.int64)
            for i, g in enumerate(elements):
                for j, tau in enumerate(self.reflections):
                    table[i, j] = self.index(self.multiply(g, tau))
            self._cache['mul'] = table
        return self._cache['mul']

    def closure(self, generators):
        r"""

        The subgroup generated by the given elements, enumerated by breadth-first search.

        Parameters
        ----------
        generators : iterable of GroupElement

            The generators.

        Returns
        -------
        elements : list of GroupElement

            The subgroup, identity first.

        """
        generators = list(generators)
        seen = {self.identity}
        out = [self.identity]
        queue = deque(out)
        while queue:
            g = queue.popleft()
            for s in generators:
                x = self.multiply(g, s)
                if x not in seen:
                    seen.add(x)
                    out.append(x)
                    queue.append(x)
        return out

    def conjugacy_class(self, g):
        r""" the conjugacy class of :math:`g`, ordered as in :attr:`elements` """
        members = {self.conjugate(g, x) for x in self.elements}
        return sorted(members, key=self.index)

    # --- reflections and hyperplanes ----------------------------------------------------------

    def _init_reflections(self):
        self.reflections = []
        self.reflection_hyperplane = []
        self.reflection_eigenvalue = []
        hyperplanes, blocks = {}, []
        for g, normal, eigenvalue in self._reflection_data():
            normal = tuple(simplify(x) for x in normal)
            if normal not in hyperplanes:
                hyperplanes[normal] = len(blocks)
                blocks.append((normal, []))
            j = hyperplanes[normal]
            blocks[j][1].append(len(self.reflections))
            self.reflections.append(g)
            self.reflection_hyperplane.append(j)
            self.reflection_eigenvalue.append(simplify(eigenvalue))
        self.hyperplanes = [
            Hyperplane(normal, self.hermitian(normal, normal), len(refl) + 1, tuple(refl))
            for normal, refl in blocks]
        self._reflection_index = {g: i for i, g in enumerate(self.reflections)}

    def reflection_index(self, g):
        r""" the position of a reflection in :attr:`reflections` """
        try:
            return self._reflection_index[g]
        except KeyError:
            raise ValueError(f"{g} is not a reflection of {self.descriptor}")

    @property
    def generator_indices(self):
        return tuple(self.reflection_index(s) for s in self.generators)

    def hermitian(self, u, v):
        r""" the invariant form :math:`\langle u, v\rangle = v^* G\,u` """
        n = self.rank
        total = 0
        for i in range(n):
            if v[i] == 0:
                continue
            row = 0
            for j in range(n):
                if u[j] != 0 and self.gram[i, j] != 0:
                    row = row + self.gram[i, j] * u[j]
            total = total + conj(v[i]) * row
        return simplify(total)

    def normal_matrix(self, hyperplanes=None):
        r"""

        The normals as the columns of an :math:`n\times N` matrix.

        """
        if hyperplanes is None:
            hyperplanes = range(len(self.hyperplanes))
        hyperplanes = list(hyperplanes)
        out = zeros(self.rank, len(hyperplanes))
        for k, j in enumerate(hyperplanes):
            for i, x in enumerate(self.hyperplanes[j].normal):
                out[i, k] = x
        return out

    @property
    def num_reflections(self):
        return len(self.reflections)

    @property
    def num_hyperplanes(self):
        return len(self.hyperplanes)

    @property
    def coxeter_number(self):
        r""" :math:`h = (|\mathcal{R}| + |\mathcal{R}^*|)/n` """
        h = Fraction(self.num_reflections + self.num_hyperplanes, self.rank)
        if h.denominator != 1:
            raise RegularityError(
                f"(|R| + |R*|)/n = {h} is not an integer for {self.descriptor}")
        return h.numerator

    @property
    def reflections_are_involutions(self):
        r"""

        Whether every reflecting hyperplane carries a single reflection of order two.

        Every reflection then has determinant :math:`-1`, so factorizations of a Coxeter element
        have length :math:`\ell \equiv n \pmod 2`.

        """
        return all(H.order == 2 for H in self.hyperplanes)

    # --- Coxeter elements ---------------------------------------------------------------------

    def coxeter_element(self):
        r""" the product :math:`s_1 s_2 \cdots s_n` of the standard generators in listed order """
        return self.product(self.generators)

    def numeric_matrix(self, g):
        M = self.matrix(g)
        return np.array([[complex(x) for x in row] for row in M.tolist()], dtype=complex)

    def numeric_gram(self):
        return np.array([[complex(x) for x in row] for row in self.gram.tolist()], dtype=complex)

    def is_regular_element(self, w, k=1, h=None, hyperplanes=None, attempts=8, tol=1e-8):
        r"""

        Check whether an element has a regular :math:`e^{2\pi i k/h}`-eigenvector.

        The eigenspace is computed in floating point. A candidate eigenvector (a random combination
        if the eigenspace is not a line) is accepted if its pairing with every hyperplane normal
        exceeds ``tol`` in absolute value.

        Parameters
        ----------
        w : GroupElement

            The element.

        k : int, optional

            The exponent of the eigenvalue.

        h : int, optional

            The order of the root of unity. Defaults to the Coxeter number.

        hyperplanes : sequence of int, optional

            Restrict to the subspace spanned by the normals of these hyperplanes and only certify
            against them. This is used for the irreducible components of parabolic subgroups.

        attempts : int, optional

            The number of random combinations to try for eigenspaces of dimension larger than one.

        tol : float, optional

            The certification tolerance.

        Returns
        -------
        is_regular : bool

            Whether a regular eigenvector was found.

        """
        if h is None:
            h = self.coxeter_number
        if hyperplanes is None:
            hyperplanes = range(len(self.hyperplanes))
        hyperplanes = list(hyperplanes)
        M = self.numeric_matrix(w)
        G = self.numeric_gram()
        N = np.array(
            [[complex(x) for x in self.hyperplanes[j].normal] for j in hyperplanes],
            dtype=complex).T
        B = scipy.linalg.orth(N)
        eigval = np.exp(2j * np.pi * k / h)
        Y = scipy.linalg.null_space((M - eigval * np.eye(self.rank)) @ B)
        if Y.shape[1] == 0:
            return False
        V = B @ Y
        candidates = [V[:, 0]] if V.shape[1] == 1 else [
            V @ (self.rnd.randn(V.shape[1]) + 1j * self.rnd.randn(V.shape[1]))
            for _ in range(attempts)]
        for v in candidates:
            v = v / np.linalg.norm(v)
            pairings = N.conj().T @ G @ v
            if np.all(np.abs(pairings) > tol):
                return True
        return False

    def coxeter_class(self):
        r"""

        The Coxeter class, with its defining properties certified.

        Raises
        ------
        RegularityError

            If the class size is not :math:`|W|/h`, the representative does not have order
            :math:`h` or it has no regular :math:`e^{2\pi i/h}`-eigenvector.

        """
        if 'coxeter_class' not in self._cache:
            c = self.coxeter_element()
            h = self.coxeter_number
            members = self.conjugacy_class(c)
            if len(members) * h != self.order:
                raise RegularityError(
                    f"Coxeter class of {self.descriptor} has {len(members)} elements, "
                    f"expected |W|/h = {Fraction(self.order, h)}")
            if self.element_order(c) != h:
                raise RegularityError(
                    f"Coxeter element of {self.descriptor} has order {self.element_order(c)}, "
                    f"expected h = {h}")
            if not self.is_regular_element(c, 1):
                raise RegularityError(
                    f"Coxeter element of {self.descriptor} has no regular "
                    f"exp(2 pi i/{h})-eigenvector")
            self._cache['coxeter_class'] = CoxeterClass(
                c, tuple(members), tuple(self.index(g) for g in members))
        return self._cache['coxeter_class']

    # --- invariants ---------------------------------------------------------------------------

    def trace_identity(self):
        r"""

        Check :math:`\sum_{\tau\in\mathcal{R}}\operatorname{tr}(I - \rho_V(\tau)) = h\,n`.

        """
        total = sum(
            (self.rank - trace(self.matrix(tau)) for tau in self.reflections), 0)
        expected = self.coxeter_number * self.rank
        total = simplify(total)
        if total == expected:
            return VerificationReport.success(f"trace-identity[{self.descriptor}]", value=total)
        return VerificationReport.failure(
            f"trace-identity[{self.descriptor}]", {'lhs': total, 'rhs': expected})

    def validate(self, num_pairs=500):
        r"""

        Check the structural invariants of the group.

        This checks that every reflection fixes its hyperplane pointwise and has the recorded
        eigenvalue on the normal, that each hyperplane block is cyclic of order :math:`e_H`, and
        that :meth:`matrix` is a homomorphism on random pairs of elements.

        Parameters
        ----------
        num_pairs : int, optional

            The number of random pairs for the homomorphism check.

        Returns
        -------
        report : VerificationReport

            The outcome.

        """
        name = f"group-invariants[{self.descriptor}]"
        for j, H in enumerate(self.hyperplanes):
            tau = self.reflections[H.reflections[0]]
            powers = [tau]
            while len(powers) < H.order:
                powers.append(self.multiply(powers[-1], tau))
            if powers[-1] != self.identity or set(powers[:-1]) != {
                    self.reflections[i] for i in H.reflections}:
                return VerificationReport.failure(name, {'hyperplane': j, 'check': 'cyclic block'})
            for i in H.reflections:
                M = self.matrix(self.reflections[i])
                image = [simplify(sum((M[a, b] * H.normal[b] for b in range(self.rank)), 0))
                         for a in range(self.rank)]
                lam = self.reflection_eigenvalue[i]
                if any(x != simplify(lam * y) for x, y in zip(image, H.normal)):
                    return VerificationReport.failure(
                        name, {'reflection': i, 'check': 'eigenvalue on normal'})
                if rank((identity(self.rank) - M).tolist()) != 1:
                    return VerificationReport.failure(
                        name, {'reflection': i, 'check': 'codimension one'})
        elements = self.elements
        for _ in range(num_pairs):
            g = elements[self.rnd.randint(len(elements))]
            h = elements[self.rnd.randint(len(elements))]
            lhs = self.matrix(self.multiply(g, h))
            rhs = self.matrix(g).dot(self.matrix(h))
            if any(simplify(a) != simplify(b) for a, b in zip(lhs.flat, rhs.flat)):
                return VerificationReport.failure(
                    name, {'check': 'homomorphism', 'g': g, 'h': h})
        return VerificationReport.success(name, order=self.order)

    def card(self):
        r"""

        Summary data of the group.

        Returns
        -------
        card : dict

            The descriptor, family name, rank, order, :math:`|\mathcal{R}|`,
            :math:`|\mathcal{R}^*|`, Coxeter number and the generator matrices.

        """
        return {
            'descriptor': self.descriptor,
            'family': self.name,
            'rank': self.rank,
            'order': self.order,
            'num_reflections': self.num_reflections,
            'num_hyperplanes': self.num_hyperplanes,
            'coxeter_number': self.coxeter_number,
            'hyperplane_orders': sorted({H.order for H in self.hyperplanes}),
            'generators': [jsonable(self.matrix(s)) for s in self.generators],
        }

    def to_json(self):
        return self.card()

    def __repr__(self):
        return (f"{type(self).__name__}({self.descriptor!r}, rank={self.rank}, "
                f"order={self.order}, h={self.coxeter_number})")
