from collections import Counter

from ..utils import VerificationReport
from ._partition import Partition, partitions


__all__ = (
    'hook_restriction_formula',
    'lr_coefficient',
    'quasihook_restriction_formula',
    'restriction',
    'verify_hook_restriction',
    'verify_quasihook_restriction',
)


def lr_coefficient(lam, alpha, beta):
    r"""

    The Littlewood-Richardson coefficient :math:`c^{\alpha,\beta}_\lambda`.

    It counts the semistandard fillings of the skew shape :math:`\lambda/\alpha` with content
    :math:`\beta` whose reading word (rows from top to bottom, each row from right to left) is a
    lattice word. The fillings are enumerated by backtracking in reading order.

    Parameters
    ----------
    lam, alpha, beta : Partition or sequence of int

        Partitions with :math:`|\alpha| + |\beta| = |\lambda|`.

    Returns
    -------
    c : int

        The coefficient; zero unless :math:`\alpha,\beta\subseteq\lambda`.

    """
    lam, alpha, beta = Partition(lam), Partition(alpha), Partition(beta)
    if alpha.size + beta.size != lam.size:
        raise ValueError(
            f"|alpha| + |beta| = {alpha.size + beta.size} differs from |lambda| = {lam.size}")
    if not (lam.contains(alpha) and lam.contains(beta)):
        return 0
    cells = [(i, j) for i, row in enumerate(lam)
             for j in range(row - 1, (alpha[i] if i < len(alpha) else 0) - 1, -1)]
    filling, counts = {}, [0] * (len(beta) + 1)

    def count(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = filling.get((i - 1, j), 0) + 1
        hi = filling.get((i, j + 1), len(beta))
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] == beta[v - 1] or (v > 1 and counts[v] == counts[v - 1]):
                continue
            counts[v] += 1
            filling[i, j] = v
            total += count(pos + 1)
            del filling[i, j]
            counts[v] -= 1
        return total

    return count(0)


def restriction(lam, a):
    r"""

    The restriction of :math:`\lambda` from :math:`S_n` to the Young subgroup
    :math:`S_a\times S_{n-a}`.

    Returns
    -------
    terms : Counter

        The multiplicities :math:`c^{\alpha,\beta}_\lambda`, keyed by pairs
        :math:`(\alpha,\beta)`; zero terms are omitted.

    """
    lam = Partition(lam)
    n = lam.size
    if not 1 <= a < n:
        raise ValueError(f"a must lie in 1..{n - 1}, got: {a}")
    terms = Counter()
    for alpha in partitions(a):
        if not lam.contains(alpha):
            continue
        for beta in partitions(n - a):
            c = lr_coefficient(lam, alpha, beta)
            if c:
                terms[alpha, beta] = c
    return terms


def _add(terms, alpha, beta, c=1):
    if alpha is not None and beta is not None:
        terms[alpha, beta] += c


def _hook_sum(terms, n, k, a, left=Partition.hook, right=Partition.hook):
    r""" the sum over :math:`i + j + \epsilon = k` with :math:`\epsilon\in\{0,1\}` """
    for eps in (0, 1):
        for i in range(k - eps + 1):
            _add(terms, left(a, i), right(n - a, k - eps - i))


def hook_restriction_formula(n, k, a):
    r"""

    The restriction of the hook :math:`(n-k, 1^k)` to :math:`S_a\times S_b` as a sum of hooks,

    .. math::

        \sum_{\substack{i,j\ge 0,\ \epsilon\in\{0,1\}\\ i+j+\epsilon = k}}
            (a-i, 1^i)\otimes(b-j, 1^j),

    where hooks outside their range are zero.

    """
    terms = Counter()
    _hook_sum(terms, n, k, a)
    return terms


def _hook_pair_multiplicity(eps, i, j, a, b):
    r""" multiplicity of :math:`(a-i, 1^i)\otimes(b-j, 1^j)` in the quasi-hook restriction """
    grow_row = (i < a - 1) + (j < b - 1)
    grow_col = (i > 0) + (j > 0)
    if eps == 1:
        return grow_row - 1
    if eps == 0:
        return grow_row + grow_col + (a == 1) + (b == 1) - 2
    if eps == -1:
        return grow_col - 1
    return 0


def quasihook_restriction_formula(n, k, a):
    r"""

    The restriction of the quasi-hook :math:`(n-k-1, 2, 1^{k-1})` to :math:`S_a\times S_b`.

    By Pieri's rule the quasi-hook is :math:`(1)\cdot(n-k-1, 1^k) - (n-k, 1^k) - (n-k-1, 1^{k+1})`,
    and restricting each factor with the hook formula gives

    .. math::

        \sum_{i+j+\epsilon=k} Q_{a,i}\otimes H_{b,j} + H_{a,i}\otimes Q_{b,j}
        \;+\; \sum_{i+j+\epsilon=k} c_{ij}\, H_{a,i}\otimes H_{b,j},

    with :math:`H_{a,i} = (a-i, 1^i)` and :math:`Q_{a,i} = (a-i-1, 2, 1^{i-1})`, where
    :math:`\epsilon\in\{0,1\}` in the first sum and :math:`\epsilon\in\{-1,0,1\}` in the second.
    Writing :math:`r` for the number of factors that are not a single column (:math:`i<a-1`,
    :math:`j<b-1`) and :math:`s` for the number that are not a single row (:math:`i>0`,
    :math:`j>0`), the multiplicities are

    .. math::

        c_{ij} = \begin{cases}
            r - 1 & \epsilon = 1 \\
            r + s - 2 + [a=1] + [b=1] & \epsilon = 0 \\
            s - 1 & \epsilon = -1
        \end{cases}

    For interior hooks this is the familiar :math:`1, 2, 1` pattern; rows and columns lose the
    terms that admit no Littlewood-Richardson filling, so a constant :math:`1, 2, 1` pattern with a
    single correction in :math:`(a)\otimes\cdot` overcounts.

    Terms outside their range are zero.

    """
    b = n - a
    terms = Counter()
    _hook_sum(terms, n, k, a, left=Partition.quasihook)
    _hook_sum(terms, n, k, a, right=Partition.quasihook)
    for i in range(a):
        for j in range(b):
            c = _hook_pair_multiplicity(k - i - j, i, j, a, b)
            if c:
                _add(terms, Partition.hook(a, i), Partition.hook(b, j), c)
    return Counter({key: c for key, c in terms.items() if c})


def _term(key):
    alpha, beta = key
    return f"{alpha}⊗{beta}"


def _compare(name, formula, actual, **details):
    keys = sorted(set(formula) | set(actual))
    differing = [
        {'term': _term(key), 'formula': formula.get(key, 0), 'lr': actual.get(key, 0)}
        for key in keys if formula.get(key, 0) != actual.get(key, 0)]
    details['lr'] = {_term(key): c for key, c in sorted(actual.items())}
    if differing:
        discrepancy = dict(differing[0])
        discrepancy['differing_terms'] = len(differing)
        return VerificationReport.failure(name, discrepancy, differing=differing, **details)
    return VerificationReport.success(name, **details)


def verify_hook_restriction(n, k, a):
    r"""

    Compare the hook restriction formula with the restriction computed from Littlewood-Richardson
    coefficients.

    Parameters
    ----------
    n, k : int

        The hook :math:`(n-k, 1^k)`, :math:`0\le k<n`.

    a : int

        The Young subgroup :math:`S_a\times S_{n-a}`, :math:`1\le a<n`.

    Returns
    -------
    report : VerificationReport

        All differing terms, if any.

    """
    lam = Partition.hook(n, k)
    if lam is None:
        raise ValueError(f"hook({n},{k}) requires 0 <= k < n")
    return _compare(
        f"hook_restriction[n={n},k={k},a={a}]", hook_restriction_formula(n, k, a),
        restriction(lam, a))


def verify_quasihook_restriction(n, k, a):
    r"""

    Compare the quasi-hook restriction formula with the restriction computed from
    Littlewood-Richardson coefficients.

    Mismatching terms are reported in ``details['differing']`` together with both
    multiplicities.

    Parameters
    ----------
    n, k : int

        The quasi-hook :math:`(n-k-1, 2, 1^{k-1})`, :math:`1\le k\le n-3`.

    a : int

        The Young subgroup :math:`S_a\times S_{n-a}`, :math:`1\le a<n`.

    Returns
    -------
    report : VerificationReport

        All differing terms, if any.

    """
    lam = Partition.quasihook(n, k)
    if lam is None:
        raise ValueError(f"quasihook({n},{k}) requires 1 <= k <= n - 3")
    return _compare(
        f"quasihook_restriction[n={n},k={k},a={a}]", quasihook_restriction_formula(n, k, a),
        restriction(lam, a))
