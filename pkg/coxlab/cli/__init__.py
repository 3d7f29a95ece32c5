r"""
.. autosummary::
    :nosignatures:

    coxlab.cli.main
    coxlab.cli.run
    coxlab.cli.build_parser
    coxlab.cli.CommandResult

----

Command Line
============

Every computation and verification of the library is available from the ``coxlab`` command.
Results are written to stdout as JSON (tables as CSV), using the same serializer as the library,
and the exit code is 0 if ok, 1 on a discrepancy and 2 on a usage or library error.

.. code:: bash

    coxlab verify mainthm --group B3 --all-standard-towers --length 7
    coxlab tower-spectrum --group D6 --tower 1,3,6,2,5,4
    coxlab zonotope --type E6
    coxlab chartable --n 5 --format csv

    # resource budgets, also settable through COXLAB_GROUP_CAP and COXLAB_BUDGET_MB
    coxlab --group-cap 100000 --budget-mb 4096 verify reduced --group G(3,3,3)

The same commands can be run from python:

.. code:: python

    import coxlab

    result = coxlab.cli.run(['zonotope', '--type', 'E6'])
    assert result.status == 'ok'
    assert result.render() == '{"shephard_sum": 895536, "volume": "sqrt(3)*895536"}'


Object Reference
----------------

.. autofunction:: coxlab.cli.main
.. autofunction:: coxlab.cli.run
.. autofunction:: coxlab.cli.build_parser
.. autoclass:: coxlab.cli.CommandResult

"""

from ._cli import CommandResult, UsageError, build_parser, main, run


__all__ = (
    'CommandResult',
    'UsageError',
    'build_parser',
    'main',
    'run',
)
