from fractions import Fraction

from .._base.errors import NotHyperplaneConstantError
from ..scalars import LinearForm, Poly, parse_weights


__all__ = (
    'WeightSystem',
)


class WeightSystem:
    r"""

    A weight system :math:`w:\mathcal{R}\to\mathbb{C}`, assigning one weight variable to every
    reflection.

    In **formal** mode the weight of a reflection is the variable :math:`\omega_k` (a
    :class:`Poly <coxlab.scalars.Poly>`); in **numeric** mode it is an exact rational value.

    Parameters
    ----------
    assignment : sequence of int

        The (0-based) variable index of each reflection, in the order of
        :attr:`ReflectionGroup.reflections <coxlab.groups.ReflectionGroup.reflections>`.

    nvars : int, optional

        The number of weight variables. Defaults to ``max(assignment) + 1``.

    values : sequence of rationals, optional

        Numeric values of the variables. If given, the system is in numeric mode.

    """
    def __init__(self, assignment, nvars=None, values=None):
        self.assignment = tuple(int(k) for k in assignment)
        if nvars is None:
            nvars = max(self.assignment, default=-1) + 1
        if any(not 0 <= k < nvars for k in self.assignment):
            raise ValueError(f"variable indices {self.assignment} out of range for nvars={nvars}")
        self.nvars = nvars
        if values is not None:
            values = tuple(Fraction(x) for x in parse_weights(values))
            if len(values) != nvars:
                raise ValueError(f"expected {nvars} weight values, got {len(values)}")
        self.values = values

    @classmethod
    def uniform(cls, G, value=None):
        r""" a single variable :math:`\omega` shared by all reflections """
        return cls([0] * G.num_reflections, 1, None if value is None else [value])

    @classmethod
    def per_reflection(cls, G, values=None):
        r""" one variable per reflection """
        return cls(range(G.num_reflections), G.num_reflections, values)

    @classmethod
    def per_hyperplane(cls, G, values=None):
        r""" one variable per reflecting hyperplane """
        return cls(G.reflection_hyperplane, G.num_hyperplanes, values)

    @property
    def mode(self):
        return 'formal' if self.values is None else 'numeric'

    def weight(self, i):
        r""" the weight of the :math:`i`-th reflection """
        k = self.assignment[i]
        if self.values is None:
            return Poly.variable(k, self.nvars)
        return self.values[k]

    def specialize(self, values):
        r""" the same assignment in numeric mode """
        return WeightSystem(self.assignment, self.nvars, values)

    def is_hyperplane_constant(self, G):
        r""" whether all reflections of every cyclic block share their weight """
        return all(len({self.assignment[i] for i in H.reflections}) == 1 for H in G.hyperplanes)

    def check_hyperplane_constant(self, G):
        if not self.is_hyperplane_constant(G):
            bad = next(j for j, H in enumerate(G.hyperplanes)
                       if len({self.assignment[i] for i in H.reflections}) > 1)
            raise NotHyperplaneConstantError(
                f"weights differ on the cyclic block of hyperplane {bad} of {G.descriptor}")

    def hyperplane_weight(self, G, j):
        r""" the common weight of the reflections of the :math:`j`-th hyperplane """
        self.check_hyperplane_constant(G)
        return self.weight(G.hyperplanes[j].reflections[0])

    def total(self):
        r"""

        The total weight :math:`w(\mathcal{R}) = \sum_\tau w(\tau)` as a linear form.

        """
        coeffs = [0] * self.nvars
        for k in self.assignment:
            coeffs[k] += 1
        return LinearForm(coeffs)

    def total_value(self):
        r""" :meth:`total` evaluated at the numeric values """
        if self.values is None:
            raise ValueError("total_value requires a numeric weight system")
        return self.total().evaluate(self.values)

    def to_json(self):
        out = {'assignment': list(self.assignment), 'nvars': self.nvars, 'mode': self.mode}
        if self.values is not None:
            out['values'] = [str(x) for x in self.values]
        return out

    def __eq__(self, other):
        return (isinstance(other, WeightSystem)
                and (self.assignment, self.nvars, self.values)
                == (other.assignment, other.nvars, other.values))

    def __hash__(self):
        return hash((self.assignment, self.nvars, self.values))

    def __repr__(self):
        return (f"WeightSystem(nvars={self.nvars}, mode={self.mode!r}, "
                f"assignment={self.assignment})")
