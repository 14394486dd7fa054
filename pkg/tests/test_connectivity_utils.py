import pytest
from pydantic import ValidationError

from exceptions import ParameterError, ParseError
from utils.connectivity_utils import ConnectivityMatrix


def matrix(values, k=3):
    return ConnectivityMatrix(n=len(values), k=k, values=values)


def test_empty_has_zero_off_diagonal():
    m = ConnectivityMatrix.empty(3, 2)
    assert m.values == [[None, 0, 0], [0, None, 0], [0, 0, None]]
    assert m.pairs() == [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]


def test_validation():
    with pytest.raises(ValidationError):
        matrix([[0, 1], [1, None]])
    with pytest.raises(ValidationError):
        matrix([[None, 4], [1, None]])
    with pytest.raises(ValidationError):
        ConnectivityMatrix(n=3, k=1, values=[[None, 0], [0, None]])


def test_get_and_set():
    m = ConnectivityMatrix.empty(2, 2)
    m.set(0, 1, 2)
    assert m.get(0, 1) == 2
    with pytest.raises(ParameterError):
        m.set(1, 1, 0)
    with pytest.raises(ParameterError):
        m.set(1, 0, 3)
    with pytest.raises(ParameterError):
        m.get(0, 0)


def test_text_format():
    m = matrix([[None, 1], [0, None]], k=2)
    assert m.to_text() == "-\t1\n0\t-\n"
    assert ConnectivityMatrix.from_text(m.to_text(), 2) == m
    assert ConnectivityMatrix.empty(0, 1).to_text() == ""


def test_from_text_errors():
    with pytest.raises(ParseError, match="line 2"):
        ConnectivityMatrix.from_text("-\t1\n0\n", 2)
    with pytest.raises(ParseError, match="line 1"):
        ConnectivityMatrix.from_text("-\tx\n0\t-\n", 2)


def test_mismatches():
    a = matrix([[None, 1, 2], [0, None, 1], [3, 0, None]])
    b = matrix([[None, 1, 0], [0, None, 1], [3, 1, None]])
    assert a.mismatches(b) == [(0, 2, 2, 0), (2, 1, 0, 1)]
    assert a.mismatches(a) == []
    with pytest.raises(ParameterError):
        a.mismatches(ConnectivityMatrix.empty(2, 3))


def test_majority_takes_per_pair_median():
    a = matrix([[None, 1], [2, None]])
    b = matrix([[None, 1], [0, None]])
    c = matrix([[None, 3], [2, None]])
    assert ConnectivityMatrix.majority([a, b, c]).values == [[None, 1], [2, None]]
    assert ConnectivityMatrix.majority([a]) == a
    with pytest.raises(ParameterError):
        ConnectivityMatrix.majority([a, b])
    with pytest.raises(ParameterError):
        ConnectivityMatrix.majority([])
