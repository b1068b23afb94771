from fractions import Fraction
import pytest
from regweight import WeightDomainError, WeightSet, verify_proper
from tests.conftest import cycle


def test_all_zero(k4):
    report = verify_proper(k4, [0] * 6, WeightSet.parse("-1,0,1"))
    assert not report.is_proper
    assert report.count == 6
    assert report.degrees == [0, 0, 0, 0]
    assert report.to_dict()["conflicts"][0] == {"u": 0, "v": 1, "degree": "0/1"}
    assert str(report).startswith("ConflictReport(6 conflicts: 0-1 at 0")


def test_proper_triangle():
    g = cycle(3)
    # Edges are (0, 1), (0, 2), (1, 2).
    report = verify_proper(g, [Fraction(-1), Fraction(0), Fraction(2)],
                           WeightSet.parse("-1,0,2"))
    assert report.is_proper
    assert report.degrees == [-1, 1, 2]
    assert report.to_dict() == {"proper": True, "conflicts": []}
    assert str(report) == "ConflictReport(proper)"


def test_mapping():
    g = cycle(3)
    q = WeightSet.parse("-1,0,2")
    assert verify_proper(g, {0: -1, 1: 0, 2: 2}, q).is_proper
    with pytest.raises(WeightDomainError):
        verify_proper(g, {0: -1, 2: 2}, q)


def test_domain(k4):
    q = WeightSet.parse("-1,0,1")
    with pytest.raises(WeightDomainError):
        verify_proper(k4, [0] * 5, q)
    with pytest.raises(WeightDomainError):
        verify_proper(k4, [0, 0, 0, 0, 0, 2], q)
