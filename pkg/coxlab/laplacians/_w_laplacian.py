import logging

from ..scalars import Poly, conj, simplify
from ..utils import identity, jsonable, trace, zeros
from ._char_poly import char_poly


__all__ = (
    'WLaplacian',
    'build_w_laplacian',
)


def _evaluate(x, values):
    return simplify(x.evaluate(values)) if isinstance(x, Poly) else x


class WLaplacian:
    r"""

    The weighted :math:`W`-Laplacian

    .. math::

        L_W(\omega)\ =\ \sum_{\tau\in\mathcal{R}} w(\tau)\,(I_n - \rho_V(\tau))

    in the coordinates of the reflection representation.

    Parameters
    ----------
    group : ReflectionGroup

        The group.

    weights : WeightSystem

        The weight system. In formal mode the entries are polynomials of degree one in the weights;
        in numeric mode they are exact cyclotomic numbers.

    """
    def __init__(self, group, weights):
        if len(weights.assignment) != group.num_reflections:
            raise ValueError(
                f"weight system covers {len(weights.assignment)} reflections, "
                f"{group.descriptor} has {group.num_reflections}")
        self.group = group
        self.weights = weights
        n = group.rank
        M = zeros(n)
        one = identity(n)
        for i, tau in enumerate(group.reflections):
            w = weights.weight(i)
            D = one - group.matrix(tau)
            for a in range(n):
                for b in range(n):
                    if D[a, b] != 0:
                        M[a, b] = M[a, b] + w * D[a, b]
        for a in range(n):
            for b in range(n):
                M[a, b] = simplify(M[a, b])
        self.matrix = M

    @property
    def n(self):
        return self.group.rank

    @property
    def mode(self):
        return self.weights.mode

    def evaluate(self, values):
        r""" the numeric matrix at the given weight values """
        out = zeros(self.n)
        for a in range(self.n):
            for b in range(self.n):
                out[a, b] = _evaluate(self.matrix[a, b], values)
        return out

    def trace(self):
        return simplify(trace(self.matrix))

    def is_self_adjoint(self):
        r"""

        Whether :math:`L` is self-adjoint for the invariant form, i.e. :math:`L^*G = GL`.

        This holds whenever the weights are real.

        """
        G = self.group.gram
        LH = zeros(self.n)
        for a in range(self.n):
            for b in range(self.n):
                LH[a, b] = conj(self.matrix[b, a]) if self.matrix[b, a] != 0 else 0
        lhs, rhs = LH.dot(G), G.dot(self.matrix)
        return all(simplify(x - y) == 0 for x, y in zip(lhs.flat, rhs.flat))

    def char_poly(self):
        return char_poly(self)

    def to_json(self):
        return {
            'group': self.group.descriptor,
            'mode': self.mode,
            'matrix': [[str(x) for x in row] for row in self.matrix.tolist()],
            'weights': jsonable(self.weights),
        }

    def __repr__(self):
        return f"WLaplacian({self.group.descriptor!r}, mode={self.mode!r})"


def build_w_laplacian(G, weights):
    r"""

    Build the weighted :math:`W`-Laplacian.

    Parameters
    ----------
    G : ReflectionGroup

        The group.

    weights : WeightSystem

        The weights, formal or numeric.

    Returns
    -------
    L : WLaplacian

        The Laplacian.

    """
    L = WLaplacian(G, weights)
    logging.getLogger('coxlab.laplacians.build_w_laplacian').debug(
        f"built {weights.mode} Laplacian of {G.descriptor} with {weights.nvars} weights")
    return L
