class CoxlabError(Exception):
    pass


class BudgetExceededError(CoxlabError):
    pass


class GroupCapExceededError(BudgetExceededError):
    pass


class MalformedTowerError(CoxlabError):
    pass


class NonIntegralSpectrumError(CoxlabError):
    pass


class NotHyperplaneConstantError(CoxlabError):
    pass


class RegularityError(CoxlabError):
    pass


class UnsupportedFamilyError(CoxlabError):
    pass
