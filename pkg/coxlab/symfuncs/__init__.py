r"""
.. autosummary::
    :nosignatures:

    coxlab.symfuncs.Partition
    coxlab.symfuncs.partitions
    coxlab.symfuncs.mn_character
    coxlab.symfuncs.CharacterTable
    coxlab.symfuncs.coxeter_number_char
    coxlab.symfuncs.lr_coefficient
    coxlab.symfuncs.restriction
    coxlab.symfuncs.verify_hook_restriction
    coxlab.symfuncs.verify_quasihook_restriction
    coxlab.symfuncs.verify_hook_vanishing
    coxlab.symfuncs.exterior_power_check
    coxlab.symfuncs.gr1n_hook_character_data

----

Symmetric functions
===================

Characters of the symmetric group. Irreducible characters are evaluated with the
Murnaghan-Nakayama rule, restrictions to Young subgroups with Littlewood-Richardson coefficients.
The hooks :math:`(n-k, 1^k)` and quasi-hooks :math:`(n-k-1, 2, 1^{k-1})` are the only
irreducibles that matter on Coxeter elements; their constructors return None outside their range,
so that out-of-range terms of a virtual character simply drop out.

.. code:: python

    from coxlab.symfuncs import Partition, mn_character, coxeter_number_char, restriction

    hook = Partition.hook(4, 1)                  # (3,1)
    assert mn_character(hook, (4,)) == -1         # value on a Coxeter element
    assert coxeter_number_char(hook) == 4         # h * k with h = 4

    # restriction to S_2 x S_2
    print(restriction(hook, 2))
    # Counter({((2,), (2,)): 1, ((2,), (1, 1)): 1, ((1, 1), (2,)): 1})


Object Reference
----------------

.. autoclass:: coxlab.symfuncs.Partition
.. autofunction:: coxlab.symfuncs.partitions
.. autofunction:: coxlab.symfuncs.mn_character
.. autoclass:: coxlab.symfuncs.CharacterTable
.. autofunction:: coxlab.symfuncs.coxeter_number_char
.. autofunction:: coxlab.symfuncs.lr_coefficient
.. autofunction:: coxlab.symfuncs.restriction
.. autofunction:: coxlab.symfuncs.verify_hook_restriction
.. autofunction:: coxlab.symfuncs.verify_quasihook_restriction
.. autofunction:: coxlab.symfuncs.verify_hook_vanishing
.. autofunction:: coxlab.symfuncs.exterior_power_check
.. autofunction:: coxlab.symfuncs.gr1n_hook_character_data

"""

from ._partition import Partition, partitions
from ._characters import (
    CharacterTable, centralizer_order, coxeter_number_char, cycle_type, exterior_power_check,
    gr1n_hook_character_data, mn_character, verify_hook_vanishing)
from ._lr import (
    hook_restriction_formula, lr_coefficient, quasihook_restriction_formula, restriction,
    verify_hook_restriction, verify_quasihook_restriction)


__all__ = (
    'CharacterTable',
    'Partition',
    'centralizer_order',
    'coxeter_number_char',
    'cycle_type',
    'exterior_power_check',
    'gr1n_hook_character_data',
    'hook_restriction_formula',
    'lr_coefficient',
    'mn_character',
    'partitions',
    'quasihook_restriction_formula',
    'restriction',
    'verify_hook_restriction',
    'verify_hook_vanishing',
    'verify_quasihook_restriction',
)
