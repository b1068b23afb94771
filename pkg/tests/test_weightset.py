from fractions import Fraction
import pytest
from regweight import WeightSet
from regweight.weightset import format_rational, to_rational


def test_to_rational():
    assert to_rational("-0.25") == Fraction(-1, 4)
    assert to_rational(" 7/3 ") == Fraction(7, 3)
    assert to_rational(5) == Fraction(5)
    assert to_rational(Fraction(1, 2)) == Fraction(1, 2)
    for bad in [0.5, True, "abc", "1/0", None]:
        with pytest.raises(ValueError):
            to_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-6, 4)) == "-3/2"


def test_weight_set():
    q = WeightSet.parse("2,-1,0")
    assert q.values == (-1, 0, 2)
    assert (q.a, q.b, q.c) == (-1, 0, 2)
    assert list(q) == [-1, 0, 2]
    assert 2 in q
    assert 1 not in q
    assert q == WeightSet([0, 2, -1])
    assert str(q) == "{-1, 0, 2}"
    assert WeightSet.parse("1/2,0.75,3").values == (Fraction(1, 2), Fraction(3, 4), 3)

    for bad in ["1,1,2", "1,2", "1,2,3,4", "1,x,3"]:
        with pytest.raises(ValueError):
            WeightSet.parse(bad)


def test_affine_branch():
    assert WeightSet.parse("0,1,3").affine_branch == "ascending"
    assert WeightSet.parse("5,7,8").affine_branch == "descending"
    assert WeightSet.parse("-3,-1,0").affine_branch == "descending"
    assert WeightSet.parse("1,2,3").affine_branch == "arithmetic"
    assert WeightSet.parse("1,2,3").is_arithmetic
    assert not WeightSet.parse("-1,0,2").is_arithmetic
