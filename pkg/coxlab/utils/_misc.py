import os
import json
import logging
from fractions import Fraction
from numbers import Integral

import numpy as np
import lz4.frame
import cloudpickle as pickle


__all__ = (
    'enable_logging',
    'dump',
    'dumps',
    'load',
    'loads',
    'jsonable',
    'to_json',
    'pretty_repr',
)


def enable_logging(name=None, level=logging.INFO, output_filepath=None, output_level=None):
    r"""

    Send the log records of coxlab to stderr, and optionally to a file.

    Verification reports log one INFO line each; group enumeration, convolution steps, lattice
    levels and Shephard-sum chunks log their progress at DEBUG.

    Parameters
    ----------
    name : str, optional

        A label that is prepended to every record, e.g. the name of a batch job.

    level : int, optional

        Level of the stderr handler.

    output_filepath : str, optional

        Also write the records to this file. Missing directories are created.

    output_level : int, optional

        Level of the file handler. Defaults to ``level``.

    """
    fmt = '[%(name)s|%(levelname)s] %(message)s'
    if name is not None:
        fmt = f'[{name}|%(name)s|%(levelname)s] %(message)s'
    logging.basicConfig(level=level, format=fmt)
    if output_filepath is not None:
        os.makedirs(os.path.dirname(output_filepath) or '.', exist_ok=True)
        handler = logging.FileHandler(output_filepath)
        handler.setLevel(level if output_level is None else output_level)
        handler.setFormatter(logging.Formatter(fmt))
        logging.getLogger('').addHandler(handler)


def dump(obj, filepath):
    r"""

    Archive an exact result, e.g. a :class:`VerificationReport <coxlab.utils.VerificationReport>`
    or a :class:`FactorizationSeries <coxlab.factorizations.FactorizationSeries>`, as an
    lz4-compressed cloudpickle.

    Objects dumped together (e.g. as one tuple) keep their shared references; objects dumped
    separately do not.

    Parameters
    ----------
    obj : object

        The object to archive.

    filepath : str

        The target file. Missing directories are created.

    """
    dirpath = os.path.dirname(filepath)
    if dirpath:
        os.makedirs(dirpath, exist_ok=True)
    with lz4.frame.open(filepath, 'wb') as f:
        f.write(pickle.dumps(obj))


def dumps(obj):
    r""" the bytes that :func:`dump` would write """
    return lz4.frame.compress(pickle.dumps(obj))


def load(filepath):
    r""" read back an object archived with :func:`dump` """
    with lz4.frame.open(filepath, 'rb') as f:
        return pickle.loads(f.read())


def loads(s):
    r""" read back an object serialized with :func:`dumps` """
    return pickle.loads(lz4.frame.decompress(s))


def jsonable(o):
    r"""

    Convert an object into plain JSON-compatible data.

    Objects that implement ``to_json()`` are converted through it. Rationals with unit denominator
    become integers, all other rationals become ``"p/q"`` strings.

    Parameters
    ----------
    o : object

        Any object.

    Returns
    -------
    data : dict, list, str, int, float, bool or None

        The JSON-compatible representation.

    """
    if o is None or isinstance(o, (bool, str, float)):
        return o
    if isinstance(o, (Integral, np.integer)):
        return int(o)
    if isinstance(o, Fraction):
        return int(o) if o.denominator == 1 else str(o)
    if hasattr(o, 'to_json'):
        return jsonable(o.to_json())
    if isinstance(o, np.ndarray):
        return [jsonable(x) for x in o.tolist()]
    if hasattr(o, '_asdict'):
        return {k: jsonable(v) for k, v in o._asdict().items()}
    if isinstance(o, dict):
        return {str(k): jsonable(v) for k, v in o.items()}
    if isinstance(o, (list, tuple, set, frozenset)):
        return [jsonable(x) for x in o]
    return str(o)


def to_json(obj, indent=None):
    r"""

    Serialize an object to a JSON string.

    This is the one serializer shared by the library and the command-line interface.

    Parameters
    ----------
    obj : object

        Any object supported by :func:`jsonable`.

    indent : int, optional

        Passed on to :func:`json.dumps`.

    Returns
    -------
    s : str

        The JSON document.

    """
    return json.dumps(jsonable(obj), indent=indent)


def pretty_repr(o, d=0):
    r"""

    Multi-line :func:`repr` used by the report classes.

    Arrays are abbreviated to their shape and dtype, rationals are shown as ``p/q``, and named
    tuples and dicts are indented one level per nesting depth ``d``.

    """
    if isinstance(o, np.ndarray):
        return f"array(shape={o.shape}, dtype={o.dtype})"
    if isinstance(o, Fraction):
        return str(o)
    if hasattr(o, '_asdict'):
        items = [f"{k}={pretty_repr(v, d + 1)}" for k, v in o._asdict().items()]
        return _block(f"{type(o).__name__}(", items, ")", d)
    if isinstance(o, dict):
        items = [f"{k!r}: {pretty_repr(v, d + 1)}" for k, v in o.items()]
        return _block("{", items, "}", d)
    if isinstance(o, (tuple, list)):
        opening, closing = "()" if isinstance(o, tuple) else "[]"
        return _block(opening, [pretty_repr(v, d + 1) for v in o], closing, d)
    return repr(o)


def _block(opening, items, closing, d):
    indent = "\n" + "  " * (d + 1)
    return opening + indent + ("," + indent).join(items) + closing
