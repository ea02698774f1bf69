import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyoideal import fixtures
from polyoideal.decomposition import closed_path_p1, z_ideal
from polyoideal.geometry import InputError
from polyoideal.ideals import ideal_of
from polyoideal.lattice import (bareiss_determinant, build_lattice_model, integer_inverse,
                                integer_kernel, is_prime_ideal_of, lattice_ideal, psi_coefficients,
                                step_junction_choices, toric_ideal_JP)
from polyoideal.polynomial import Polynomial

P1_EXTRA = "x_1_2*x_2_4*x_4_1*x_5_3 - x_1_3*x_2_1*x_4_4*x_5_2"


def _fraction_det(M):
    """Determinant by rational elimination: an oracle independent of Bareiss."""
    A = [[Fraction(x) for x in row] for row in M]
    n, det = len(A), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return det


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_rational_elimination(M):
    assert bareiss_determinant(M) == _fraction_det(M)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=4))
def test_integer_kernel(A):
    K = integer_kernel(A, 5)
    for u in K:
        assert all(sum(a * b for a, b in zip(row, u)) == 0 for row in A)
    # full rank over Q: rank + nullity = 5
    from polyoideal.lattice import rational_rank
    assert rational_rank(A) + len(K) == 5


def test_unit_cell_model():
    model = build_lattice_model(fixtures.load("unit"))
    assert model.free_vertices == ((0, 1), (1, 0), (1, 1))
    assert len(model.matrix) == 4 and abs(model.determinant) == 1
    assert psi_coefficients(model, (0, 0)) == {(0, 1): 1, (1, 0): 1, (1, 1): -1}
    for b in model.free_vertices:
        assert psi_coefficients(model, b) == {b: 1}


def test_inverse_is_integral_and_correct():
    model = build_lattice_model(fixtures.load("D"))
    inv = integer_inverse(model.matrix)
    n = len(inv)
    for i in range(n):
        for j in range(n):
            assert sum(model.matrix[i][k] * inv[k][j] for k in range(n)) == (i == j)


def test_psi_vanishes_on_minors():
    for name in ("D", "C1", "C2", "C4"):
        C = fixtures.load(name)
        model = build_lattice_model(C)
        for I in C.inner_intervals:
            lhs, rhs = {}, {}
            for side, pts in ((lhs, I.diagonal), (rhs, I.antidiagonal)):
                for p in pts:
                    for b, e in psi_coefficients(model, p).items():
                        side[b] = side.get(b, 0) + e
            assert {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}


def test_d_lattice_ideal_is_p1():
    D = fixtures.load("D")
    I = ideal_of(D)
    L = lattice_ideal(D, table=I.table)
    expected = I + type(I)(I.table, [Polynomial.parse(I.table, P1_EXTRA)])
    assert L.equals(expected)
    assert L.equals(lattice_ideal(D, "elimination", table=I.table))
    assert not is_prime_ideal_of(D)


def test_prime_examples():
    assert is_prime_ideal_of(fixtures.load("unit"))
    assert is_prime_ideal_of(fixtures.load("square2").polyocollection)
    unit = fixtures.load("unit")
    assert lattice_ideal(unit).equals(ideal_of(unit))


def test_random_collections_lattice_invariants():
    rng = random.Random(21)
    for _ in range(40):
        C = fixtures.random_polyocollection(rng, 5, 5, 2, 0.6)
        model = build_lattice_model(C)
        assert len(model.members) + len(model.free_vertices) == len(model.vertices)
        I = ideal_of(C)
        L = lattice_ideal(C, table=I.table)
        assert L.contains_ideal(I) and not L.is_unit()
        assert all(len(g) == 2 for g in L.groebner_basis())


def test_toric_jp_nonprime16():
    P = fixtures.load("nonprime16")
    p1 = closed_path_p1(P)
    I = ideal_of(P.polyocollection, p1.table)
    J = toric_ideal_JP(P, table=p1.table)
    assert J.equals(p1)
    assert not I.contains_ideal(J)
    # homogeneous reduced basis: its quadrics span the degree-2 part of J_P
    quad = [g for g in J.groebner_basis() if g.degree() == 2]
    assert type(I)(I.table, quad).equals(I)
    for f in z_ideal(P, p1.table).generators:
        assert J.contains(f)


def test_toric_jp_junction_choices_agree():
    P = fixtures.load("nonprime16")
    p1 = closed_path_p1(P)
    kernels = [toric_ideal_JP(P, m, flip, table=p1.table) for m, flip in step_junction_choices(P)]
    assert len(kernels) >= 2
    assert all(K.equals(kernels[0]) for K in kernels)


def test_toric_jp_lattice_vs_elimination_small():
    P = fixtures.load("nonprime16")
    T = closed_path_p1(P).table
    assert toric_ideal_JP(P, table=T).equals(toric_ideal_JP(P, table=T, method="elimination"))


def test_toric_jp_needs_step_junction():
    with pytest.raises(InputError):
        toric_ideal_JP(fixtures.load("ring8"))


def test_csv_export():
    import csv
    import io
    rows = list(csv.reader(io.StringIO(build_lattice_model(fixtures.load("unit")).to_csv())))
    assert rows[0] == ["vertex", "[(0,0),(1,1)]", "free(0,1)", "free(1,0)", "free(1,1)"]
    assert rows[1] == ["(0,0)", "1", "0", "0", "0"]
    assert len(rows) == 5
