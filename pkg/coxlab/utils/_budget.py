import os
import logging
from collections import namedtuple
from contextlib import contextmanager

from .._base.errors import BudgetExceededError, GroupCapExceededError


__all__ = (
    'Budget',
    'get_budget',
    'budget_override',
    'check_group_order',
    'check_memory',
    'check_subsets',
)


Budget = namedtuple('Budget', ('group_cap', 'budget_mb', 'subset_cap'))

DEFAULT_BUDGET = Budget(group_cap=50000, budget_mb=2048, subset_cap=10 ** 7)
BUDGET_ENV_VARS = Budget(
    group_cap='COXLAB_GROUP_CAP', budget_mb='COXLAB_BUDGET_MB', subset_cap='COXLAB_SUBSET_CAP')

_overrides = {}


def get_budget(**overrides):
    r"""

    Get the active resource budget.

    Values are resolved in the following order: explicit keyword arguments, an enclosing
    :func:`budget_override` block, the environment variables ``COXLAB_GROUP_CAP``,
    ``COXLAB_BUDGET_MB`` and ``COXLAB_SUBSET_CAP``, and finally the defaults (50000 group
    elements, 2048 MiB, :math:`10^7` subsets).

    Parameters
    ----------
    \*\*overrides

        Any of ``group_cap``, ``budget_mb`` or ``subset_cap``. Values that are None are ignored.

    Returns
    -------
    budget : Budget

        The resolved budget.

    """
    values = {}
    for field in Budget._fields:
        value = overrides.get(field)
        if value is None:
            value = _overrides.get(field)
        if value is None:
            raw = os.environ.get(getattr(BUDGET_ENV_VARS, field))
            if raw is not None:
                try:
                    value = int(raw)
                except ValueError:
                    raise ValueError(
                        f"{getattr(BUDGET_ENV_VARS, field)} must be an integer, got: {raw!r}")
        if value is None:
            value = getattr(DEFAULT_BUDGET, field)
        if value <= 0:
            raise ValueError(f"{field} must be positive, got: {value}")
        values[field] = value
    return Budget(**values)


@contextmanager
def budget_override(**kwargs):
    r"""

    Temporarily override the resource budget, e.g. from command-line flags.

    Parameters
    ----------
    \*\*kwargs

        Any of ``group_cap``, ``budget_mb`` or ``subset_cap``. Values that are None are ignored.

    """
    unknown = set(kwargs) - set(Budget._fields)
    if unknown:
        raise TypeError(f"unknown budget fields: {sorted(unknown)}")
    previous = dict(_overrides)
    _overrides.update({k: v for k, v in kwargs.items() if v is not None})
    try:
        yield get_budget()
    finally:
        _overrides.clear()
        _overrides.update(previous)


def check_group_order(order, descriptor, group_cap=None):
    cap = get_budget(group_cap=group_cap).group_cap
    if order > cap:
        raise GroupCapExceededError(
            f"group {descriptor} has {order} elements, which exceeds the cap of {cap}; "
            f"raise it with --group-cap or {BUDGET_ENV_VARS.group_cap}")


def check_memory(nbytes, what, budget_mb=None):
    budget_mb = get_budget(budget_mb=budget_mb).budget_mb
    required_mb = nbytes / 2 ** 20
    logging.getLogger('coxlab.utils.check_memory').debug(
        f"{what}: {required_mb:.1f} MiB of {budget_mb} MiB")
    if required_mb > budget_mb:
        raise BudgetExceededError(
            f"{what} needs {required_mb:.1f} MiB, which exceeds the budget of {budget_mb} MiB; "
            f"raise it with --budget-mb or {BUDGET_ENV_VARS.budget_mb}")


def check_subsets(count, what, subset_cap=None):
    cap = get_budget(subset_cap=subset_cap).subset_cap
    if count > cap:
        raise BudgetExceededError(
            f"{what} requires {count} subsets, which exceeds the cap of {cap}; "
            f"raise it with --subset-cap or {BUDGET_ENV_VARS.subset_cap}")
