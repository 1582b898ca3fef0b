import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taylorres.monomial import (AmbientMismatch, Monomial, ParseError,
                                RedundantGeneratorWarning, colon_monomial,
                                contains, degree, divides, format_ideal, gcd,
                                lcm, max_index, minimalize, parse_ideal,
                                revlex_greater)

from .conftest import ideal, ideals, mono, monomials


@pytest.mark.parametrize("text, n, expected", [("x1^2*x2", 3, 3), ("1", 3, 0), ("x3", 3, 1)])
def test_degree(text, n, expected):
    assert degree(mono(text, n)) == expected


@pytest.mark.parametrize("u, v, expected", [
    ("x1", "x1*x2", True),
    ("x1^2", "x1*x2", False),
    ("1", "x1^3*x2*x3^2", True),
])
def test_divides(u, v, expected):
    assert divides(mono(u, 3), mono(v, 3)) is expected


def test_lcm_gcd_examples():
    assert lcm(mono("x1^2*x2", 3), mono("x2^3*x3", 3)) == mono("x1^2*x2^3*x3", 3)
    assert gcd(mono("x1*x2", 3), mono("x2*x3", 3)) == mono("x2", 3)
    u = mono("x1*x3^4", 3)
    assert lcm(u, u) == u


def _brute_colon(u: Monomial, v: Monomial, bound: int = 4) -> Monomial:
    # smallest w (in degree, then any) with u | v*w, scanning all exponent boxes
    from itertools import product
    hits = [Monomial(e) for e in product(range(bound + 1), repeat=u.n)
            if u.divides(v * Monomial(e))]
    minimal = [w for w in hits if not any(x != w and x.divides(w) for x in hits)]
    assert len(minimal) == 1, "monomial colon of a principal ideal is principal"
    return minimal[0]


@pytest.mark.parametrize("u, v, expected", [
    ("x1*x2", "x2*x3", "x1"),
    ("x1^2", "x1*x2", "x1"),
    ("x1^2*x3", "x1^2*x3", "1"),
])
def test_colon_monomial(u, v, expected):
    u, v = mono(u, 3), mono(v, 3)
    assert colon_monomial(u, v) == mono(expected, 3)
    assert _brute_colon(u, v) == mono(expected, 3)


@given(monomials(3, 3), monomials(3, 3))
def test_colon_matches_brute_force(u, v):
    assert colon_monomial(u, v) == _brute_colon(u, v)


@pytest.mark.parametrize("text, expected", [("x1*x3^2", 3), ("x1", 1), ("1", None)])
def test_max_index(text, expected):
    assert max_index(mono(text, 3)) == expected


def test_minimalize_examples():
    assert format_ideal(minimalize([mono(t, 2) for t in ("x1", "x1*x2", "x2")])) == "x1, x2"
    tri = minimalize([mono(t, 3) for t in ("x1*x2", "x2*x3", "x1*x3")])
    assert tri.r == 3
    assert minimalize([mono("x1", 2), mono("x1", 2)]).generators == (mono("x1", 2),)


def test_minimalize_rejects_empty_and_unit():
    with pytest.raises(ValueError):
        minimalize([])
    with pytest.raises(ValueError):
        minimalize([Monomial.unit(2), mono("x1", 2)])


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        divides(mono("x1", 2), mono("x1", 3))
    with pytest.raises(AmbientMismatch):
        minimalize([mono("x1", 2), mono("x1", 3)])


@pytest.mark.parametrize("gens, w, expected", [
    ("x1, x2", "x1*x3", True),
    ("x1^2", "x1", False),
    ("x1*x2", "x1*x2^5", True),
])
def test_contains(gens, w, expected):
    assert contains(ideal(gens, 3), mono(w, 3)) is expected


def test_revlex_definition():
    # last nonzero entry of u - v negative means u > v
    assert revlex_greater(mono("x1^2", 2), mono("x1*x2", 2))
    assert revlex_greater(mono("x1*x3", 3), mono("x2*x3", 3))
    assert not revlex_greater(mono("x2^2", 2), mono("x1*x2", 2))
    assert not revlex_greater(mono("x1", 2), mono("x1", 2))


def test_canonical_order():
    assert str(ideal("x2^2, x1*x2, x1^2", 2)) == "x1^2, x1*x2, x2^2"
    assert str(ideal("x2*x3, x1*x3, x1*x2", 3)) == "x1*x2, x1*x3, x2*x3"
    assert str(ideal("x1^3, x2", 2)) == "x2, x1^3"


@given(monomials(3), monomials(3), monomials(3))
def test_lcm_gcd_lattice_laws(u, v, w):
    assert lcm(u, v) == lcm(v, u) and gcd(u, v) == gcd(v, u)
    assert lcm(lcm(u, v), w) == lcm(u, lcm(v, w))
    assert gcd(gcd(u, v), w) == gcd(u, gcd(v, w))
    assert lcm(u, u) == u and gcd(u, u) == u
    assert divides(u, lcm(u, v)) and divides(gcd(u, v), u)


@given(monomials(3), monomials(3))
def test_colon_times_gcd(u, v):
    assert colon_monomial(u, v) * gcd(u, v) == u


@given(st.lists(monomials(3, allow_unit=False), min_size=1, max_size=6), monomials(3))
def test_minimalize_properties(gens, w):
    I = minimalize(gens)
    assert minimalize(I.generators) == I
    assert contains(I, w) == any(g.divides(w) for g in gens)
    for a in I.generators:
        assert not any(a != b and a.divides(b) for b in I.generators)


# --- text format -------------------------------------------------------------

def test_parse_examples():
    I = parse_ideal("x1^2*x2, x1*x3", 3)
    assert I.r == 2
    with pytest.warns(RedundantGeneratorWarning):
        assert str(parse_ideal("x1, x1*x2", 2)) == "x1"
    with pytest.raises(ParseError, match="out of range"):
        parse_ideal("x4", 3)


def test_parse_whitespace_and_repeated_factors():
    assert parse_ideal(" x1 ^ 2 * x2 ,x3", 3) == parse_ideal("x1^2*x2, x3", 3)
    assert parse_ideal("x1*x1", 1) == parse_ideal("x1^2", 1)


@pytest.mark.parametrize("text, pos", [("x1,,x2", 3), ("x1*y", 3), ("x1 x2", 3), ("", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_ideal(text, 3)
    assert exc.value.position == pos


def test_parse_rejects_unit_generator():
    with pytest.raises(ParseError, match="unit"):
        parse_ideal("x1, 1", 2)


@given(ideals(n=3, max_exp=3))
def test_print_parse_round_trip(I):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert parse_ideal(str(I), I.n) == I
