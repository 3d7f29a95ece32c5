from functools import lru_cache
from math import factorial
from numbers import Integral


__all__ = (
    'Partition',
    'partitions',
)


class Partition(tuple):
    r"""

    An integer partition :math:`\lambda = (\lambda_1\ge\lambda_2\ge\dots>0)`.

    The parts are sorted and zeros are dropped on construction, so two partitions compare equal
    iff they have the same parts.

    Parameters
    ----------
    parts : iterable of int

        The parts, in any order.

    """
    def __new__(cls, parts=()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, Integral) or p < 0:
                raise ValueError(f"partition parts must be nonnegative integers, got: {parts}")
        return super().__new__(cls, sorted((int(p) for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text):
        r""" parse ``"3,1,1"``; an empty string is the empty partition """
        text = str(text).strip().strip('()[]')
        if not text:
            return cls()
        try:
            return cls(int(p) for p in text.split(','))
        except ValueError:
            raise ValueError(f"cannot parse partition: {text!r}")

    @classmethod
    def hook(cls, n, k):
        r"""

        The hook :math:`(n-k, 1^k)` of height :math:`k+1`.

        Returns
        -------
        hook : Partition or None

            None unless :math:`0\le k<n`.

        """
        if not 0 <= k < n:
            return None
        return cls((n - k,) + (1,) * k)

    @classmethod
    def quasihook(cls, n, k):
        r"""

        The quasi-hook :math:`(n-k-1, 2, 1^{k-1})` of height :math:`k+1`.

        Returns
        -------
        quasihook : Partition or None

            None unless :math:`1\le k\le n-3`.

        """
        if not 1 <= k <= n - 3:
            return None
        return cls((n - k - 1, 2) + (1,) * (k - 1))

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def is_hook(self):
        return len(self) < 2 or self[1] == 1

    def hook_height(self):
        r""" the :math:`k` with :math:`\lambda = (n-k, 1^k)`; raises ValueError for non-hooks """
        if not self.is_hook():
            raise ValueError(f"{self} is not a hook")
        return len(self) - 1

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self):
        return [(i, j) for i, p in enumerate(self) for j in range(p)]

    def contents(self):
        r""" the contents :math:`j - i` of the cells, row by row """
        return [j - i for i, j in self.cells()]

    def hook_lengths(self):
        c = self.conjugate()
        return [self[i] - j + c[j] - i - 1 for i, j in self.cells()]

    def dimension(self):
        r""" the number of standard Young tableaux, by the hook length formula """
        out = factorial(self.size)
        for h in self.hook_lengths():
            out //= h
        return out

    def contains(self, other):
        other = Partition(other)
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def removable_cells(self):
        return [(i, p - 1) for i, p in enumerate(self) if i + 1 == len(self) or self[i + 1] < p]

    def remove_cell(self, i):
        parts = list(self)
        parts[i] -= 1
        return Partition(parts)

    def standard_tableaux(self):
        r"""

        Enumerate the standard Young tableaux as chains of partitions.

        Yields
        ------
        chain : tuple of Partition

            The shapes :math:`\emptyset = \lambda^{(0)}\subset\dots\subset\lambda^{(n)} = \lambda`,
            each obtained from the previous one by adding the cell labeled with its size.

        """
        if not self:
            yield (self,)
            return
        for i, _ in self.removable_cells():
            for chain in self.remove_cell(i).standard_tableaux():
                yield chain + (self,)

    def __str__(self):
        return '(' + ','.join(str(p) for p in self) + ')'

    def __repr__(self):
        return f"Partition{tuple(self)}"

    def to_json(self):
        return list(self)


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions(n):
    r"""

    All partitions of :math:`n` in reverse lexicographic order, starting with :math:`(n)`.

    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got: {n}")
    return [Partition(p) for p in _partitions(n, n)]
