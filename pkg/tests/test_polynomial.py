from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyoideal.geometry import InputError
from polyoideal.monomials import Layout, MonomialOrder
from polyoideal.polynomial import Polynomial, VariableTable

T = VariableTable([(0, 0), (0, 1), (1, 0), (1, 1), (-1, 2)])

monos = st.dictionaries(st.integers(0, len(T) - 1), st.integers(1, 3), max_size=3).map(
    lambda d: tuple(sorted(d.items())))
coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-5, max_value=5, max_denominator=4))
polys = st.dictionaries(monos, coeffs, max_size=5).map(lambda d: Polynomial(T, d))


def test_table_names_and_points():
    assert T.names[-1] == "x_-1_2"
    assert T.var((1, 0)) == 2 and T.var("x_1_0") == 2
    with pytest.raises(InputError):
        VariableTable([(0, 0), "x_0_0"])


def test_zero_coefficients_dropped():
    f = Polynomial(T, {((0, 1),): 0, ((1, 1),): 2})
    assert len(f) == 1


def test_pure_difference():
    f = Polynomial.binomial(T, ((0, 1), (3, 1)), ((1, 1), (2, 1)))
    assert f.is_pure_difference()
    assert f.exponent_difference() == {0: 1, 3: 1, 1: -1, 2: -1}
    assert not (f * 2).is_pure_difference()


def test_text_lists_leading_term_first():
    f = Polynomial.parse(T, "x_0_0*x_1_1 - x_0_1*x_1_0")
    # degrevlex with x_0_0 largest: the term free of x_1_1 leads
    assert f.to_text() == "-x_0_1*x_1_0 + x_0_0*x_1_1"
    assert f.to_text(MonomialOrder("lex")) == "x_0_0*x_1_1 - x_0_1*x_1_0"


def test_parse_negative_coordinates():
    f = Polynomial.parse(T, "x_-1_2^2 - 3/2*x_0_0 + 1")
    assert f.terms == {((4, 2),): 1, ((0, 1),): Fraction(-3, 2), (): 1}


@pytest.mark.parametrize("bad", ["", "x_0_0**x_1_1", "x_9_9", "x_0_0^a"])
def test_parse_errors(bad):
    with pytest.raises(InputError):
        Polynomial.parse(T, bad)


@given(polys)
def test_text_round_trip(f):
    assert Polynomial.parse(T, f.to_text()) == f


@given(polys)
def test_json_round_trip(f):
    assert Polynomial.from_json(T, f.to_json()) == f


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f - f == Polynomial.zero(T)
    assert f * g == g * f


@given(polys, st.sampled_from(["degrevlex", "lex"]))
def test_packed_round_trip(f, kind):
    order = MonomialOrder(kind)
    lay = T.layout(order)
    back = Polynomial.from_packed(T, lay, f.packed(lay))
    assert back == f


@given(st.lists(st.integers(0, 5), min_size=3, max_size=3),
       st.lists(st.integers(0, 5), min_size=3, max_size=3))
def test_layout_divides_and_lcm(a, b):
    lay = Layout(3, MonomialOrder("degrevlex"))
    pa, pb = lay.pack(a), lay.pack(b)
    divides = all(x <= y for x, y in zip(a, b))
    assert (((pb | lay.guard) - pa) & lay.guard == lay.guard) == divides
    assert list(lay.unpack(lay.lcm(pa, pb))) == [max(x, y) for x, y in zip(a, b)]


def test_orders_compare_like_definitions():
    lay = Layout(3, MonomialOrder("degrevlex"))
    # degrevlex: x0*x2 > x1^2 is false (equal degree, last variable decides)
    assert lay.pack([0, 2, 0]) > lay.pack([1, 0, 1])
    lex = Layout(3, MonomialOrder("lex"))
    assert lex.pack([1, 0, 0]) > lex.pack([0, 5, 5])
