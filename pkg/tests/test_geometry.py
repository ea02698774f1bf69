import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyoideal import fixtures
from polyoideal.geometry import (CellComplex, InputError, Interval, Polyocollection, ViolationList,
                                 closed_path, connected_components, edge_intervals,
                                 enumerate_zigzag_walks, find_L_configurations, find_ladders,
                                 is_simple, junctions, m_set, necklace, r_set, tiling_witness,
                                 validate_polyocollection)


def iv(a, b):
    return Interval(a, b)


# -- intervals and validation ------------------------------------------------

def test_interval_corners():
    I = iv((1, 2), (4, 3))
    assert I.ul == (1, 3) and I.lr == (4, 2)
    assert I.vertices == {(1, 2), (4, 3), (1, 3), (4, 2)}
    assert len(I.edges) == 4


@pytest.mark.parametrize("a,b", [((0, 0), (0, 1)), ((0, 0), (1, 0)), ((1, 1), (0, 0))])
def test_improper_interval_rejected(a, b):
    with pytest.raises(InputError):
        Interval(a, b)


def test_c1_c2_c4_valid():
    for name in ("C1", "C2", "C4"):
        assert isinstance(fixtures.load(name), Polyocollection), name


def test_c3_invalid_with_witness():
    res = fixtures.load("C3")
    assert isinstance(res, ViolationList)
    assert (iv((2, 1), (4, 3)), iv((4, 1), (5, 2))) in res.pairs()
    assert res.pairs()[0] == (iv((2, 1), (4, 3)), iv((4, 1), (5, 2)))


def test_singleton_and_empty_valid():
    assert isinstance(validate_polyocollection([iv((0, 0), (1, 1))]), Polyocollection)
    empty = validate_polyocollection([])
    assert isinstance(empty, Polyocollection) and empty.inner_intervals == ()


def test_containment_rejected():
    res = validate_polyocollection([iv((0, 0), (2, 2)), iv((0, 0), (1, 1))])
    assert isinstance(res, ViolationList) and res.violations[0].clause == "containment"


def test_duplicates_are_input_errors():
    with pytest.raises(InputError):
        validate_polyocollection([iv((0, 0), (1, 1)), iv((0, 0), (1, 1))])


# -- inner intervals -----------------------------------------------------------

def test_inner_intervals_c1():
    inner = fixtures.load("C1").inner_set
    assert iv((1, 1), (2, 3)) in inner
    assert iv((1, 1), (5, 3)) in inner


def test_inner_intervals_c2():
    inner = fixtures.load("C2").inner_set
    assert iv((1, 3), (7, 5)) in inner
    assert iv((3, 2), (5, 7)) in inner
    assert iv((3, 3), (5, 5)) not in inner


def test_inner_intervals_c4():
    assert iv((1, 1), (5, 5)) in fixtures.load("C4").inner_set


def test_inner_intervals_d():
    D = fixtures.load("D")
    assert set(D.inner_intervals) == set(D.members) | {iv((2, 3), (4, 4))}


def test_members_are_inner():
    for name in ("C1", "C2", "C4", "D"):
        C = fixtures.load(name)
        assert set(C.members) <= C.inner_set


def _cells_of(I):
    return {(x, y) for x in range(I.ll[0], I.ur[0]) for y in range(I.ll[1], I.ur[1])}


def test_inner_intervals_bruteforce_oracle():
    """Every candidate box is inner iff a tiling by members exists."""
    rng = random.Random(11)
    for _ in range(25):
        C = fixtures.random_polyocollection(rng, 5, 4, 2, 0.6)
        pts = C.vertices
        xs = sorted({p[0] for p in pts})
        ys = sorted({p[1] for p in pts})
        for x0 in xs:
            for x1 in xs:
                for y0 in ys:
                    for y1 in ys:
                        if x0 >= x1 or y0 >= y1:
                            continue
                        I = iv((x0, y0), (x1, y1))
                        inside = [m for m in C.members if I.contains(m)]
                        covered = set()
                        for m in inside:
                            covered |= _cells_of(m)
                        expected = covered == _cells_of(I)
                        assert (I in C.inner_set) == expected, (C, I)


def test_tiling_witness_c4():
    C4 = fixtures.load("C4")
    w = tiling_witness(C4, iv((1, 1), (5, 5)))
    assert set(w) == {iv((1, 1), (3, 3)), iv((1, 3), (3, 5)), iv((3, 1), (5, 3)), iv((3, 3), (5, 5))}


def test_tiling_witness_d_and_members():
    D = fixtures.load("D")
    assert set(tiling_witness(D, iv((2, 3), (4, 4)))) == {iv((2, 3), (3, 4)), iv((3, 3), (4, 4))}
    for m in D.members:
        assert tiling_witness(D, m) == [m]


def test_tiling_witness_rejects_non_inner():
    with pytest.raises(InputError):
        tiling_witness(fixtures.load("C2"), iv((3, 3), (5, 5)))


# -- components and cells -------------------------------------------------------

def test_connected_components():
    assert connected_components(validate_polyocollection([])) == []
    assert len(connected_components(fixtures.load("two-points-apart"))) == 2
    assert len(connected_components(fixtures.load("C1"))) == 1


def test_is_simple():
    assert is_simple(fixtures.load("square2")).simple
    r = is_simple(fixtures.load("ring8"))
    assert not r.simple and r.holes == (frozenset({(2, 2)}),)


def test_cells_validate_trivially():
    P = fixtures.load("ring8")
    assert isinstance(validate_polyocollection(P.polyocollection.members), Polyocollection)


def test_closed_path_examples():
    chk = closed_path(fixtures.load("ring8"))
    assert chk.ok and len(chk.sequence) == 8
    assert closed_path(fixtures.load("square2")).condition == "size"
    assert not closed_path(fixtures.load("row6")).ok


def test_closed_path_sequence_properties():
    for s in fixtures.generate_closed_paths(4, 14):
        seq = s.cells._closed_path.sequence
        n = len(seq)
        assert n > 5 and len(set(seq)) == n
        for i in range(n):
            a, b = seq[i], seq[(i + 1) % n]
            assert abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def test_l_configurations_and_ladders():
    assert find_L_configurations(fixtures.load("ring8"))
    row = fixtures.load("row5")
    assert not find_L_configurations(row) and not find_ladders(row)
    ladders = find_ladders(fixtures.load("staircase4"), 3)
    assert any(len(lad) - 1 >= 3 for lad in ladders)


def test_edge_intervals():
    h, v = edge_intervals(CellComplex([(0, 0)]))
    assert len(h) == 2 and len(v) == 2 and all(len(e) == 2 for e in h + v)
    h, v = edge_intervals(CellComplex([(0, 0), (1, 0), (2, 0)]))
    assert sorted(len(e) for e in h) == [4, 4]
    h, v = edge_intervals(fixtures.load("ring8"))
    assert (len(h), len(v)) == (4, 4)
    assert (set(h), set(v)) == _merge_oracle(fixtures.load("ring8"))


def _merge_oracle(P):
    """Maximal runs of unit cell edges, merged line by line."""
    hor, ver = set(), set()
    for x, y in P.cells:
        hor |= {(x, y), (x, y + 1)}  # unit edge from (x, y) to (x + 1, y)
        ver |= {(x, y), (x + 1, y)}  # unit edge from (x, y) to (x, y + 1)
    out_h, out_v = set(), set()
    for x, y in hor:
        if (x - 1, y) not in hor:
            k = x
            while (k, y) in hor:
                k += 1
            out_h.add(tuple((t, y) for t in range(x, k + 1)))
    for x, y in ver:
        if (x, y - 1) not in ver:
            k = y
            while (x, k) in ver:
                k += 1
            out_v.add(tuple((x, t) for t in range(y, k + 1)))
    return out_h, out_v


def test_edge_intervals_match_merge_oracle():
    for name in ("walk4", "nonprime16", "staircase4", "square2"):
        P = fixtures.load(name)
        h, v = edge_intervals(P)
        assert (set(h), set(v)) == _merge_oracle(P)


# -- zig-zag walks ------------------------------------------------------------

def test_walk4_walks():
    P = fixtures.load("walk4")
    walks = enumerate_zigzag_walks(P)
    assert len(walks) == 4 and all(len(W) == 6 for W in walks)
    assert len({W.necklace(P) for W in walks}) == 1
    assert necklace(P) == walks[0].necklace(P)


def test_walk_enumerators_agree_small_paths():
    for s in fixtures.generate_closed_paths(0, 18):
        fast = enumerate_zigzag_walks(s.cells, method="closed-path")
        slow = enumerate_zigzag_walks(s.cells, cap_vertices=None, method="bruteforce")
        assert fast == slow


def test_walk_enumerators_agree_walk4():
    P = fixtures.load("walk4")
    slow = enumerate_zigzag_walks(P, cap_vertices=None, method="bruteforce")
    assert slow == enumerate_zigzag_walks(P)


def test_no_walks_on_ring_and_simple_shapes():
    assert enumerate_zigzag_walks(fixtures.load("ring8")) == []
    for name in ("square2", "row6", "staircase4"):
        assert enumerate_zigzag_walks(fixtures.load(name)) == []


def test_walk_conditions():
    P = fixtures.load("nonprime16")
    inner = P.polyocollection.inner_set
    for W in enumerate_zigzag_walks(P):
        n = len(W)
        for i in range(n):
            a, b = W.intervals[i], W.intervals[(i + 1) % n]
            assert a.intersection_box(b) == (W.v[(i + 1) % n],) * 2
        for J in inner:
            assert sum(J.contains_point(z) for z in set(W.z)) <= 1


def test_necklace_m_r_count():
    P = fixtures.load("nonprime16")
    assert len(necklace(P)) + len(m_set(P)) + len(r_set(P)) == len(P)


def test_m_is_outer_corner_of_step_middle():
    P = fixtures.load("walk4")
    for j in junctions(P):
        if j.kind == "step":
            m = j.outer_corner()
            x = j.middle
            assert m in {(x[0] + dx, x[1] + dy) for dx in (0, 1) for dy in (0, 1)}
            assert m != j.inner_corner()


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_walk_count_translation_invariant(dx, dy):
    P = fixtures.load("nonprime16")
    assert len(enumerate_zigzag_walks(P.translate(dx, dy))) == len(enumerate_zigzag_walks(P))


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=10, unique=True))
def test_cell_sets_are_polyocollections(cells):
    P = CellComplex(cells)
    assert isinstance(validate_polyocollection(P.polyocollection.members), Polyocollection)
    assert set(P.polyocollection.members) <= P.polyocollection.inner_set
