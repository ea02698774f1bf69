import random

import pytest

from polyoideal import fixtures
from polyoideal.geometry import InputError, Interval
from polyoideal.ideals import (Ideal, colon, height, ideal_of, inner_minor, intersect,
                               krull_dimension, membership, normal_form, reduced_groebner, saturate,
                               squarefree_initial_witness, vertex_table)
from polyoideal.monomials import MonomialOrder
from polyoideal.polynomial import Polynomial, VariableTable

XY = VariableTable(["x", "y", "z", "w"])


def P(text, table=XY):
    return Polynomial.parse(table, text)


def test_inner_minor_examples():
    T = VariableTable.of_points([(0, 0), (0, 1), (1, 0), (1, 1)])
    f = inner_minor(Interval((0, 0), (1, 1)), T)
    assert f == P("x_0_0*x_1_1 - x_0_1*x_1_0", T)
    D = fixtures.load("D")
    T = vertex_table(D)
    assert inner_minor(Interval((4, 2), (5, 3)), T) == P("x_4_2*x_5_3 - x_4_3*x_5_2", T)
    assert inner_minor(Interval((2, 3), (4, 4)), T) == P("x_2_3*x_4_4 - x_2_4*x_4_3", T)


D_GENERATORS = ["x_4_2*x_5_3 - x_4_3*x_5_2", "x_2_1*x_4_2 - x_2_2*x_4_1",
                "x_1_2*x_2_3 - x_1_3*x_2_2", "x_2_3*x_3_4 - x_2_4*x_3_3",
                "x_3_3*x_4_4 - x_3_4*x_4_3", "x_2_3*x_4_4 - x_2_4*x_4_3"]


def test_ideal_of_d_is_the_six_binomials():
    I = ideal_of(fixtures.load("D"))
    assert len(I.table) == 14
    assert set(I.generators) == {P(t, I.table) for t in D_GENERATORS}


def test_ideal_of_counts():
    assert len(ideal_of(fixtures.load("unit")).generators) == 1
    C4 = fixtures.load("C4")
    assert len(ideal_of(C4).generators) == len(C4.inner_intervals)


def test_gb_of_d_is_pure_difference():
    G = reduced_groebner(ideal_of(fixtures.load("D")))
    assert G and all(g.is_pure_difference() for g in G)


def test_membership():
    D = fixtures.load("D")
    I = ideal_of(D)
    for g in I.generators:
        assert membership(g, I)
    rng = random.Random(3)
    for p in rng.sample(list(D.vertices), 5):
        x = Polynomial.variable(I.table, p)
        assert not membership(x, I) and normal_form(x, I) == x


def test_intersect_basics():
    x, y = P("x"), P("y")
    K = intersect(Ideal(XY, [x]), Ideal(XY, [y]))
    assert K.equals(Ideal(XY, [x * y]))
    I = Ideal(XY, [P("x*y - z*w"), P("x^2 - y")])
    assert intersect(I, I).equals(I)


def test_saturation_and_colon():
    I = Ideal(XY, [P("x*y - z*w")])
    assert saturate(I, ((0, 1), (1, 1), (2, 1), (3, 1))).equals(I)
    J = Ideal(XY, [P("x*y")])
    assert colon(J, ((0, 1),)).equals(Ideal(XY, [P("y")]))


def test_saturation_methods_agree():
    I = ideal_of(fixtures.load("D"))
    u = tuple((i, 1) for i in range(len(I.table)))
    a = saturate(I, u, "bayer")
    b = saturate(I, u, "rabinowitsch")
    assert a.equals(b)
    assert a.contains_ideal(I) and not I.contains_ideal(a)


def test_bayer_needs_homogeneous():
    with pytest.raises(InputError):
        saturate(Ideal(XY, [P("x - 1")]), ((0, 1),), "bayer")


def test_heights():
    assert height(Ideal(XY, [])) == 0 and krull_dimension(Ideal(XY, [])) == 4
    I = ideal_of(fixtures.load("D"))
    assert height(I) == 5 and krull_dimension(I) == 9
    assert height(Ideal(XY, [P("x"), P("y*z")])) == 2


def test_height_matches_bruteforce_independent_sets():
    """Height from the hitting-set search vs. all subsets of variables."""
    from itertools import combinations
    rng = random.Random(5)
    for _ in range(20):
        C = fixtures.random_polyocollection(rng, 3, 4, 2, 0.5)
        I = ideal_of(C)
        if len(I.table) > 12:
            continue
        supports = [{i for i, _ in m} for m in I.leading_monomials()]
        n = len(I.table)
        best = next(k for k in range(n + 1)
                    if any(all(s & set(S) for s in supports) for S in combinations(range(n), k)))
        assert height(I) == best


def test_squarefree_witness():
    assert not squarefree_initial_witness(Ideal(XY, [P("x^2")]))
    assert squarefree_initial_witness(Ideal(XY, [P("x*y - z*w")]))
    assert squarefree_initial_witness(ideal_of(fixtures.load("nonprime16").polyocollection))


def test_order_independence_of_ideal_equality():
    I = ideal_of(fixtures.load("C1"))
    J = I.with_order(MonomialOrder("lex"))
    assert I.equals(J) and J.equals(I)
