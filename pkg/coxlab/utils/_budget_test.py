import pytest

from .._base.errors import BudgetExceededError, GroupCapExceededError
from ._budget import (
    DEFAULT_BUDGET, get_budget, budget_override, check_group_order, check_memory, check_subsets)


def test_defaults(monkeypatch):
    for var in ('COXLAB_GROUP_CAP', 'COXLAB_BUDGET_MB', 'COXLAB_SUBSET_CAP'):
        monkeypatch.delenv(var, raising=False)
    assert get_budget() == DEFAULT_BUDGET
    assert get_budget().group_cap == 50000


def test_env(monkeypatch):
    monkeypatch.setenv('COXLAB_GROUP_CAP', '100')
    assert get_budget().group_cap == 100
    assert get_budget(group_cap=7).group_cap == 7


def test_env_malformed(monkeypatch):
    monkeypatch.setenv('COXLAB_BUDGET_MB', 'lots')
    with pytest.raises(ValueError, match=r"COXLAB_BUDGET_MB must be an integer"):
        get_budget()


def test_override(monkeypatch):
    monkeypatch.delenv('COXLAB_SUBSET_CAP', raising=False)
    with budget_override(subset_cap=10):
        assert get_budget().subset_cap == 10
        with pytest.raises(BudgetExceededError, match=r"exceeds the cap of 10"):
            check_subsets(11, 'demo')
    assert get_budget().subset_cap == DEFAULT_BUDGET.subset_cap


def test_checks():
    with pytest.raises(GroupCapExceededError):
        check_group_order(101, 'demo', group_cap=100)
    check_group_order(100, 'demo', group_cap=100)
    with pytest.raises(BudgetExceededError):
        check_memory(2 * 2 ** 20, 'demo', budget_mb=1)
