import json
from pathlib import Path

import pytest

from taylorres.enumeration import enumerate_ideals, monomials_of_degree
from taylorres.errors import EnvelopeError
from taylorres.quotients import is_matroidal, is_squarefree_stable, is_stable

from .brute import brute_ideals

GOLDEN = json.loads((Path(__file__).parent / "golden" / "enumeration_counts.json").read_text())


def texts(stream):
    return [str(I) for I in stream]


def test_hand_enumerations():
    assert texts(enumerate_ideals(1, 2, 2)) == ["x1", "x1^2"]
    assert sorted(texts(enumerate_ideals(2, 1, 2))) == ["x1", "x1, x2", "x2"]


def test_monomials_of_degree():
    assert [str(u) for u in monomials_of_degree(2, 2)] == ["x1^2", "x1*x2", "x2^2"]
    assert len(monomials_of_degree(4, 3)) == 20


@pytest.mark.parametrize("key", sorted(GOLDEN))
def test_golden_counts(key):
    family, n, d, g = key.split(":")
    got = sum(1 for _ in enumerate_ideals(int(n), int(d), int(g), family))
    assert got == GOLDEN[key]


@pytest.mark.parametrize("n, d, g", [(2, 2, 3), (3, 2, 4), (2, 3, 4), (3, 3, 3)])
def test_stream_equals_brute_force(n, d, g):
    stream = list(enumerate_ideals(n, d, g))
    assert len(stream) == len(set(stream))
    assert set(stream) == brute_ideals(n, d, g)


@pytest.mark.parametrize("n", [3, 4])
def test_squarefree_stream_equals_brute_force(n):
    stream = list(enumerate_ideals(n, n, 4, "squarefree"))
    assert set(stream) == brute_ideals(n, n, 4, squarefree=True)


def test_deterministic_order():
    assert texts(enumerate_ideals(3, 2, 3)) == texts(enumerate_ideals(3, 2, 3))


@pytest.mark.parametrize("n, d", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_stable_stream_equals_filtered(n, d):
    direct = list(enumerate_ideals(n, d, None, "stable"))
    assert len(direct) == len(set(direct))
    filtered = {I for I in enumerate_ideals(n, d, None) if is_stable(I)}
    assert set(direct) == filtered


def test_filtered_families():
    eq = list(enumerate_ideals(3, 2, 3, "equigenerated"))
    assert all(I.common_degree() is not None for I in eq)
    assert set(eq) == {I for I in enumerate_ideals(3, 2, 3) if I.common_degree() is not None}
    mat = set(enumerate_ideals(4, 4, None, "matroidal"))
    sq = {I for I in enumerate_ideals(4, 4, None, "squarefree")
          if I.common_degree() is not None and is_matroidal(I)}
    assert mat == sq
    sqs = set(enumerate_ideals(4, 4, None, "squarefree_stable"))
    assert sqs == {I for I in enumerate_ideals(4, 4, None, "squarefree") if is_squarefree_stable(I)}


def test_envelope():
    with pytest.raises(EnvelopeError):
        list(enumerate_ideals(5, 2, 2))
    with pytest.raises(EnvelopeError):
        list(enumerate_ideals(6, 2, 2, "squarefree"))
    with pytest.raises(EnvelopeError):
        list(enumerate_ideals(2, 0, 2))
    with pytest.raises(ValueError):
        list(enumerate_ideals(2, 2, 2, "cubic"))
