import logging
from collections import namedtuple
from itertools import zip_longest

from ._misc import jsonable


__all__ = (
    'VerificationReport',
    'compare_coefficients',
    'first_discrepancy',
    'merge_reports',
)


_VerificationReport = namedtuple('VerificationReport', ('name', 'ok', 'details', 'discrepancy'))


class VerificationReport(_VerificationReport):
    r"""

    The outcome of a verification.

    A mathematical mismatch never raises; it is reported through a report whose status is
    ``'discrepancy'`` and whose :attr:`discrepancy` holds the first differing coefficient together
    with both values.

    Parameters
    ----------
    name : str

        Short name of the verified statement, e.g. ``'mainthm[B3|1,2,3]'``.

    ok : bool

        Whether both sides agree.

    details : dict

        Supporting data, e.g. the spectrum or the compared lengths.

    discrepancy : dict or None

        The first difference found, or None if :attr:`ok`.

    """
    __slots__ = ()

    @property
    def status(self):
        return 'ok' if self.ok else 'discrepancy'

    @classmethod
    def success(cls, name, **details):
        report = cls(name=name, ok=True, details=details, discrepancy=None)
        report.log()
        return report

    @classmethod
    def failure(cls, name, discrepancy, **details):
        report = cls(name=name, ok=False, details=details, discrepancy=discrepancy)
        report.log()
        return report

    def log(self):
        logger = logging.getLogger('coxlab.VerificationReport')
        if self.ok:
            logger.info(f"{self.name}: ok")
        else:
            logger.info(f"{self.name}: discrepancy {jsonable(self.discrepancy)}")

    def to_json(self):
        return {
            'name': self.name,
            'status': self.status,
            'details': jsonable(self.details),
            'discrepancy': jsonable(self.discrepancy),
        }


def first_discrepancy(lhs, rhs, labels=('lhs', 'rhs'), index_label='index'):
    r"""

    Find the first position where two coefficient sequences differ.

    Parameters
    ----------
    lhs, rhs : sequence

        The sequences to compare. A shorter sequence is padded with zeros.

    labels : pair of str, optional

        The keys under which the two differing values are reported.

    index_label : str, optional

        The key under which the position is reported.

    Returns
    -------
    discrepancy : dict or None

        A dict with the position and both values, or None if the sequences agree.

    """
    for i, (a, b) in enumerate(zip_longest(lhs, rhs, fillvalue=0)):
        if a != b:
            return {index_label: i, labels[0]: a, labels[1]: b}
    return None


def compare_coefficients(name, lhs, rhs, labels=('lhs', 'rhs'), index_label='coefficient',
                         **details):
    discrepancy = first_discrepancy(lhs, rhs, labels=labels, index_label=index_label)
    if discrepancy is None:
        return VerificationReport.success(name, **details)
    return VerificationReport.failure(name, discrepancy, **details)


def merge_reports(name, reports):
    r"""

    Combine several reports into one.

    Parameters
    ----------
    name : str

        The name of the combined report.

    reports : iterable of VerificationReport

        The reports to combine.

    Returns
    -------
    report : VerificationReport

        A report that is ok if all parts are ok. Its discrepancy is that of the first failing part,
        tagged with the name of that part.

    """
    reports = list(reports)
    details = {'checked': [r.name for r in reports]}
    for r in reports:
        if not r.ok:
            discrepancy = dict(r.discrepancy or {})
            discrepancy['check'] = r.name
            return VerificationReport.failure(name, discrepancy, **details)
    return VerificationReport.success(name, **details)
