import re
import logging

from .._base.errors import UnsupportedFamilyError
from ._monomial import MonomialGroup, SymmetricGroup
from ._root import ROOT_GROUPS, RootGroup


__all__ = (
    'build_group',
    'parse_descriptor',
)


_PATTERNS = (
    (re.compile(r'^A(\d+)$'), lambda n: ('sym', int(n) + 1)),
    (re.compile(r'^B(\d+)$'), lambda n: ('monomial', 2, 1, int(n))),
    (re.compile(r'^D(\d+)$'), lambda n: ('monomial', 2, 2, int(n))),
    (re.compile(r'^I2\((\d+)\)$'), lambda m: ('dihedral', int(m))),
    (re.compile(r'^(?:Sym|S)\(?(\d+)\)?$'), lambda n: ('sym', int(n))),
    (re.compile(r'^G\((\d+),(\d+),(\d+)\)$'), lambda r, p, n: ('monomial', int(r), int(p), int(n))),
)


def parse_descriptor(descriptor):
    r"""

    Parse a group descriptor.

    Supported descriptors are ``A<n>`` (:math:`S_{n+1}`), ``B<n>`` (:math:`G(2,1,n)`), ``D<n>``
    (:math:`G(2,2,n)`), ``I2(m)`` (:math:`G(m,m,2)`), ``Sym(n)``, ``G(r,p,n)`` with
    :math:`p\in\{1,r\}`, and the root models ``H3`` and ``F4``.

    Parameters
    ----------
    descriptor : str

        The descriptor, e.g. ``'B3'`` or ``'G(3,1,2)'``.

    Returns
    -------
    parsed : tuple

        The family tag followed by its integer parameters.

    Raises
    ------
    UnsupportedFamilyError

        If the descriptor is not recognized.

    """
    s = str(descriptor).replace(' ', '')
    if s in ROOT_GROUPS:
        return ('root', s)
    for pattern, make in _PATTERNS:
        m = pattern.match(s)
        if m:
            return make(*m.groups())
    raise UnsupportedFamilyError(
        f"unknown group descriptor {descriptor!r}; expected one of A<n>, B<n>, D<n>, I2(m), "
        f"Sym(n), G(r,p,n), {', '.join(sorted(ROOT_GROUPS))}")


def build_group(descriptor, cap=None, enumerate=True, random_seed=None):
    r"""

    Build a reflection group from its descriptor.

    Parameters
    ----------
    descriptor : str

        The group descriptor, see :func:`parse_descriptor`.

    cap : int, optional

        Overrides the group cap of the active budget.

    enumerate : bool, optional

        Whether to enumerate the elements right away. Without enumeration the card data (rank,
        order, reflections, hyperplanes, Coxeter number, generators) is still available.

    random_seed : int, optional

        Seed of the regularity check.

    Returns
    -------
    group : ReflectionGroup

        The group.

    Raises
    ------
    UnsupportedFamilyError

        If the descriptor is not recognized or describes an unsupported group.

    GroupCapExceededError

        If ``enumerate=True`` and the group order exceeds the cap.

    """
    parsed = parse_descriptor(descriptor)
    kwargs = {'descriptor': str(descriptor).replace(' ', ''), 'group_cap': cap,
              'random_seed': random_seed}
    tag = parsed[0]
    if tag == 'root':
        kwargs.pop('descriptor')
        G = RootGroup(parsed[1], **kwargs)
    elif tag == 'sym':
        G = SymmetricGroup(parsed[1], **kwargs)
    elif tag == 'dihedral':
        m = parsed[1]
        if m < 3:
            raise UnsupportedFamilyError(f"I2({m}) requires m >= 3")
        G = MonomialGroup(m, m, 2, **kwargs)
    else:
        r, p, n = parsed[1:]
        if r == 1 and p == 1:
            G = SymmetricGroup(n, **kwargs)
        else:
            G = MonomialGroup(r, p, n, **kwargs)
    logging.getLogger('coxlab.groups.build_group').debug(
        f"built {G.descriptor}: rank={G.rank}, |W|={G.order}, |R|={G.num_reflections}, "
        f"|R*|={G.num_hyperplanes}")
    if enumerate:
        G.elements
    return G
