import warnings

import pytest
from hypothesis import strategies as st

from taylorres.monomial import Monomial, MonomialIdeal, minimalize, parse_ideal, parse_monomial


def ideal(text: str, n: int) -> MonomialIdeal:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return parse_ideal(text, n)


def mono(text: str, n: int) -> Monomial:
    return parse_monomial(text, n)


def monomials(n: int, max_exp: int = 3, allow_unit: bool = True):
    m = st.tuples(*[st.integers(0, max_exp)] * n).map(Monomial)
    return m if allow_unit else m.filter(lambda u: not u.is_unit())


@st.composite
def ideals(draw, n: int = 3, max_exp: int = 2, max_gens: int = 5):
    gens = draw(st.lists(monomials(n, max_exp, allow_unit=False), min_size=1, max_size=max_gens))
    return minimalize(gens)


@pytest.fixture
def triangle():
    # edge ideal of the triangle, canonical order x1*x2, x1*x3, x2*x3
    return ideal("x1*x2, x2*x3, x1*x3", 3)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance
    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.LINES:
            terminalreporter.write_line(line)
