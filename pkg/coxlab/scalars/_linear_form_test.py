from fractions import Fraction

import pytest

from ._linear_form import LinearForm
from ._poly import Poly


def test_arithmetic():
    a = LinearForm([2, 1, 0])
    b = LinearForm([0, 3, 1])
    assert a + b == LinearForm([2, 4, 1])
    assert b - a == LinearForm([-2, 2, 1])
    assert 3 * a == LinearForm([6, 3, 0])
    assert sum([a, b]) == a + b


def test_str():
    assert str(LinearForm([2, 1, 0, 1, 0, 6])) == '2w1+w2+w4+6w6'
    assert str(LinearForm([0, -1])) == '-w2'
    assert str(LinearForm.zero(3)) == '0'


def test_evaluate():
    form = LinearForm([2, 1, 0])
    assert form.evaluate([1, 1, 1]) == 3
    assert form.evaluate([Fraction(1, 2), 3, 7]) == 4
    with pytest.raises(ValueError):
        form.evaluate([1, 2])


def test_ordering_and_hash():
    forms = [LinearForm([0, 3]), LinearForm([2, 1]), LinearForm([0, 3])]
    assert sorted(forms) == [LinearForm([0, 3]), LinearForm([0, 3]), LinearForm([2, 1])]
    assert len(set(forms)) == 2


def test_merge_and_poly():
    form = LinearForm([1, 2, 3])
    assert form.merge([0, 0, 1], 2) == LinearForm([3, 3])
    assert form.to_poly() == Poly({(1, 0, 0): 1, (0, 1, 0): 2, (0, 0, 1): 3}, 3)


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        LinearForm([Fraction(1, 2)])
