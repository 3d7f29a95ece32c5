r"""

Utilities
=========

This is a collection of utility (helper) functions used throughout the package: logging and
archiving, JSON serialization, resource budgets, verification reports and exact linear algebra.


Object Reference
----------------

.. autosummary::
    :nosignatures:

    coxlab.utils.VerificationReport
    coxlab.utils.EchelonBasis
    coxlab.utils.Budget
    coxlab.utils.bareiss_det
    coxlab.utils.budget_override
    coxlab.utils.char_poly_coefficients
    coxlab.utils.compare_coefficients
    coxlab.utils.dump
    coxlab.utils.dumps
    coxlab.utils.enable_logging
    coxlab.utils.first_discrepancy
    coxlab.utils.get_budget
    coxlab.utils.integer_dets
    coxlab.utils.integer_roots
    coxlab.utils.interpolate
    coxlab.utils.jsonable
    coxlab.utils.load
    coxlab.utils.loads
    coxlab.utils.merge_reports
    coxlab.utils.null_space
    coxlab.utils.pretty_repr
    coxlab.utils.rank
    coxlab.utils.to_json

"""

from ._budget import (
    Budget, get_budget, budget_override, check_group_order, check_memory, check_subsets)
from ._linalg import (
    EchelonBasis, as_field, bareiss_det, char_poly_coefficients, divide_root, identity,
    integer_dets, integer_roots, interpolate, null_space, object_array, rank, trace, zeros)
from ._misc import (
    enable_logging, dump, dumps, load, loads, jsonable, to_json, pretty_repr)
from ._report import VerificationReport, compare_coefficients, first_discrepancy, merge_reports


__all__ = (
    'Budget',
    'EchelonBasis',
    'VerificationReport',
    'as_field',
    'bareiss_det',
    'budget_override',
    'char_poly_coefficients',
    'check_group_order',
    'check_memory',
    'check_subsets',
    'compare_coefficients',
    'divide_root',
    'dump',
    'dumps',
    'enable_logging',
    'first_discrepancy',
    'get_budget',
    'identity',
    'integer_dets',
    'integer_roots',
    'interpolate',
    'jsonable',
    'load',
    'loads',
    'merge_reports',
    'null_space',
    'object_array',
    'pretty_repr',
    'rank',
    'to_json',
    'trace',
    'zeros',
)
