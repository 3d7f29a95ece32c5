import os
import json
import logging
import tempfile
from fractions import Fraction

import numpy as np

from ._misc import enable_logging, dump, dumps, load, loads, jsonable, to_json, pretty_repr
from ._report import VerificationReport


def test_dump_load():
    with tempfile.TemporaryDirectory() as d:
        a = [Fraction(1, 3)]
        b = {'a': a}

        # references preserved
        dump((a, b), os.path.join(d, 'ab.pkl.lz4'))
        a_new, b_new = load(os.path.join(d, 'ab.pkl.lz4'))
        b_new['a'].append(7)
        assert b_new['a'] == [Fraction(1, 3), 7]
        assert a_new == [Fraction(1, 3), 7]

        # references not preserved
        dump(a, os.path.join(d, 'a.pkl.lz4'))
        dump(b, os.path.join(d, 'b.pkl.lz4'))
        a_new = load(os.path.join(d, 'a.pkl.lz4'))
        b_new = load(os.path.join(d, 'b.pkl.lz4'))
        b_new['a'].append(7)
        assert b_new['a'] == [Fraction(1, 3), 7]
        assert a_new == [Fraction(1, 3)]


def test_dumps_loads_report():
    report = VerificationReport.success('demo', length=7)
    report_new = loads(dumps(report))
    assert report_new == report
    assert report_new.status == 'ok'


def test_jsonable_rationals():
    assert jsonable(Fraction(6, 3)) == 2
    assert jsonable(Fraction(2, 3)) == '2/3'
    assert jsonable(np.int64(5)) == 5
    assert jsonable({(1, 2): [Fraction(1, 2)]}) == {'(1, 2)': ['1/2']}


def test_to_json_report():
    report = VerificationReport.failure('demo', {'coefficient': 3, 'lhs': 1, 'rhs': Fraction(1, 2)})
    data = json.loads(to_json(report))
    assert data['status'] == 'discrepancy'
    assert data['discrepancy'] == {'coefficient': 3, 'lhs': 1, 'rhs': '1/2'}


def test_pretty_repr_namedtuple():
    s = pretty_repr(VerificationReport.success('demo'))
    assert s.startswith('VerificationReport(')
    assert "name='demo'" in s
    assert "name='demo',\n  " in s
    assert pretty_repr({'x': (1, Fraction(1, 2))}) == "{\n  'x': (\n    1,\n    1/2)}"


def test_enable_logging_file():
    with tempfile.TemporaryDirectory() as d:
        filepath = os.path.join(d, 'logs', 'run.log')
        enable_logging('batch', output_filepath=filepath, output_level=logging.DEBUG)
        root = logging.getLogger('')
        handlers = [h for h in root.handlers if isinstance(h, logging.FileHandler)]
        try:
            logging.getLogger('coxlab.test').warning("hello")
            for h in handlers:
                h.flush()
            with open(filepath) as f:
                assert '[batch|coxlab.test|WARNING] hello' in f.read()
        finally:
            for h in handlers:
                root.removeHandler(h)
                h.close()
