"""Acceptance criteria, one test (and one summary line) per criterion.

The summary printed at the end of the run lists PASS, FAIL, SKIP or
UNATTAINABLE for every criterion.
"""

import random
import time

import pytest

from polyoideal import fixtures
from polyoideal.decomposition import radical_decomposition, verify_main_theorem
from polyoideal.geometry import (Interval, Polyocollection, ViolationList, enumerate_zigzag_walks,
                                 find_L_configurations, find_ladders)
from polyoideal.ideals import Ideal, height, ideal_of, intersect, krull_dimension, variables_ideal
from polyoideal.lattice import build_lattice_model, is_prime_ideal_of, lattice_ideal
from polyoideal.polynomial import Polynomial

SEED = 20240601
P1_EXTRA = "x_1_2*x_2_4*x_4_1*x_5_3 - x_1_3*x_2_1*x_4_4*x_5_2"
P2_VARS = [(4, 3), (4, 2), (3, 3), (2, 3), (2, 2)]


def _line(criterion, text):
    print(f"[criterion {criterion}] {text}")


# ---------------------------------------------------------------------------
# 1: the 14-variable non-prime collection D


def test_criterion_1_golden_D():
    t0 = time.perf_counter()
    D = fixtures.load("D")
    I = ideal_of(D)
    T = I.table
    assert len(T) == 14
    assert not is_prime_ideal_of(D)
    assert height(I) == 5 and krull_dimension(I) == 9
    p1 = I + Ideal(T, [Polynomial.parse(T, P1_EXTRA)])
    p2 = variables_ideal(T, P2_VARS)
    rep = radical_decomposition(D)
    comps = [c.ideal for c in rep.components]
    assert len(comps) == 2
    assert comps[0].equals(p1) and comps[1].equals(p2)
    assert intersect(p1, p2).equals(I)
    assert height(p1) == height(p2) == 5
    assert rep.unmixed and rep.intersection_equals_base
    dt = time.perf_counter() - t0
    assert dt < 10
    _line(1, f"D: non-prime, height 5, dim 9, two components, unmixed ({dt:.2f}s)")


# ---------------------------------------------------------------------------
# 2: the four small collections


def test_criterion_2_collections():
    t0 = time.perf_counter()
    for name in ("C1", "C2", "C4"):
        assert isinstance(fixtures.load(name), Polyocollection)
    C3 = fixtures.load("C3")
    assert isinstance(C3, ViolationList)
    assert C3.pairs()[0] == (Interval((2, 1), (4, 3)), Interval((4, 1), (5, 2)))
    iv = Interval
    C1, C2, C4 = (fixtures.load(n).inner_set for n in ("C1", "C2", "C4"))
    assert iv((1, 1), (2, 3)) in C1 and iv((1, 1), (5, 3)) in C1
    assert iv((1, 3), (7, 5)) in C2 and iv((3, 2), (5, 7)) in C2
    assert iv((3, 3), (5, 5)) not in C2
    assert iv((1, 1), (5, 5)) in C4
    dt = time.perf_counter() - t0
    assert dt < 1
    _line(2, f"C1, C2, C4 valid; C3 rejected with its witness pair ({dt:.3f}s)")


# ---------------------------------------------------------------------------
# 3: the 26-cell closed path with four zig-zag walks


def test_criterion_3_four_walk_closed_path():
    t0 = time.perf_counter()
    P = fixtures.load("walk4")
    walks = enumerate_zigzag_walks(P)
    assert len(walks) == 4 and all(len(W) == 6 for W in walks)
    assert len({W.necklace(P) for W in walks}) == 1
    rep = verify_main_theorem(P)
    assert rep.passed, rep.failures
    for key in ("intersection_equals_I", "heights_equal_cells", "p1_equals_toric_JP",
                "p1_equals_lattice_ideal", "unmixed"):
        assert rep.checks[key], key
    dt = time.perf_counter() - t0
    assert dt < 60
    _line(3, f"4 walks of length 6, one necklace, all theorem checks pass ({dt:.1f}s)")


# ---------------------------------------------------------------------------
# 4: theorem sweep over generated non-prime closed paths


@pytest.mark.xfail(strict=True, reason=(
    "no non-prime closed path has 14 or fewer cells: exhaustive search finds the "
    "smallest at 16 cells, so 20 instances with |P| <= 14 cannot exist"))
def test_criterion_4_sweep_up_to_14_cells():
    found = list(fixtures.generate_closed_paths(SEED, 14, kind="nonprime"))
    _line(4, f"non-prime closed paths with |P| <= 14: {len(found)}")
    assert len(found) >= 20
    for s in found:
        assert verify_main_theorem(s.cells).passed


def test_criterion_4_sweep_substitute_up_to_26_cells():
    t0 = time.perf_counter()
    found = list(fixtures.generate_closed_paths(SEED, 26, kind="nonprime"))
    assert len(found) >= 20
    for s in found:
        rep = verify_main_theorem(s.cells)
        assert rep.passed, (s.sequence, rep.failures)
        assert rep.base_height == len(s.cells)
        assert rep.checks["p1_equals_toric_JP"] and rep.checks["p1_equals_lattice_ideal"]
    dt = time.perf_counter() - t0
    assert dt < 600
    sizes = sorted({len(s.cells) for s in found})
    _line(4, f"substitute sweep: {len(found)} non-prime closed paths, sizes {sizes}, "
             f"all pass ({dt:.1f}s)")


# ---------------------------------------------------------------------------
# 5: randomized property suites


def _random_collections(seed, n, max_vertices=None):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        C = fixtures.random_polyocollection(rng, 6, 5, 2, 0.6)
        if max_vertices is None or len(C.vertices) <= max_vertices:
            out.append(C)
    return out


def test_criterion_5_determinant():
    cases = _random_collections(SEED, 100)
    for C in cases:
        assert abs(build_lattice_model(C).determinant) == 1
    _line(5, f"|det M| = 1 on {len(cases)} random collections")


def test_criterion_5_lattice_contains_I_and_no_monomials():
    cases = _random_collections(SEED + 1, 100)
    for C in cases:
        I = ideal_of(C)
        L = lattice_ideal(C, table=I.table)
        assert L.contains_ideal(I)
        assert not L.is_unit()
        assert all(len(g) == 2 for g in L.groebner_basis())
    _line(5, f"I_C in L_C and L_C monomial-free on {len(cases)} random collections")


def test_criterion_5_pure_difference_closure():
    cases = _random_collections(SEED + 2, 100)
    for C in cases:
        assert all(g.is_pure_difference() for g in ideal_of(C).groebner_basis())
    _line(5, f"reduced bases of I_C are pure differences on {len(cases)} collections")


def test_criterion_5_saturation_equals_elimination():
    cases = _random_collections(SEED + 3, 100, max_vertices=16)
    for C in cases:
        I = ideal_of(C)
        assert lattice_ideal(C, table=I.table).equals(
            lattice_ideal(C, "elimination", table=I.table))
    _line(5, f"saturation = psi-elimination on {len(cases)} collections with |V| <= 16")


def test_criterion_5_zigzag_characterization():
    cases = list(fixtures.generate_closed_paths(SEED, 20, rate=0.05))
    seen = {s.cells for s in cases}
    # non-prime paths are rare; add all of them up to the same size
    cases += [s for s in fixtures.generate_closed_paths(SEED, 20, kind="nonprime")
              if s.cells not in seen]
    assert len(cases) >= 100
    nonprime = 0
    for s in cases:
        P = s.cells
        walks = bool(enumerate_zigzag_walks(P))
        structural = bool(find_L_configurations(P)) or bool(find_ladders(P, 3))
        assert walks == (not structural), s.sequence
        nonprime += walks
    _line(5, f"zig-zag <-> no L/ladder on {len(cases)} closed paths <= 20 cells "
             f"({nonprime} non-prime)")


def test_criterion_5_radical_decomposition():
    rng = random.Random(SEED + 4)
    cases = []
    while len(cases) < 100:
        if len(cases) < 70:
            C = fixtures.random_polyocollection(rng, 6, 5, 2, 0.6)
        else:
            C = fixtures.random_polyocollection(rng, 1, 6, 1, 1.0,
                                                seed_members=fixtures.intervals("D"))
        if len(C.vertices) <= 16:
            cases.append(C)
    witnessed = nonprime = 0
    for C in cases:
        rep = radical_decomposition(C)
        assert rep.checks["intersection_contains_base"]
        if rep.checks["squarefree_initial"]:
            witnessed += 1
            assert rep.intersection_equals_base
        nonprime += len(rep.components) > 1
    _line(5, f"radical = intersection of J_X on {len(cases)} collections "
             f"({witnessed} with squarefree witness, {nonprime} non-prime)")


# ---------------------------------------------------------------------------
# 6: optional dimension values


@pytest.mark.skip(reason="the two collections with dimensions 10 and 11 are not transcribed; "
                         "optional by definition")
def test_criterion_6_optional_dimensions():
    pass
