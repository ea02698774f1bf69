"""Admissible sets, the primes J_X, and decompositions of closed paths.

For a polyocollection the minimal primes of the inner 2-minor ideal are
among the ideals ``J_X = (x_a : a in X) + L(C^(X))`` over admissible
vertex sets ``X``. For a closed path with a zig-zag walk there are
exactly two, ``p1 = I_P + Z_P`` and ``p2``, and ``I_P = p1 ∩ p2``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .geometry import (CapExceeded, CellComplex, InputError, Interval, Point, Polyocollection,
                       ZigZagWalk, enumerate_zigzag_walks, m_set, necklace, r_set,
                       validate_polyocollection)
from .ideals import (Ideal, height, ideal_of, inner_minor, intersect,
                     squarefree_initial_witness, variables_ideal, vertex_table)
from .lattice import lattice_ideal, rational_rank, step_junction_choices, toric_ideal_JP
from .polynomial import Polynomial, VariableTable

DEFAULT_CAP = 24


# ---------------------------------------------------------------------------
# admissible sets


def _edge_pairs(I: Interval) -> tuple[tuple[Point, Point], ...]:
    return tuple((e[0], e[1]) for e in I.edges)


def is_admissible(C: Polyocollection, X: Iterable[Point]) -> tuple[bool, Interval | None]:
    """Whether ``X`` meets every inner interval in nothing or in an edge.

    Returns ``(verdict, witness)``; the witness is a violating inner
    interval or None.
    """
    X = {tuple(p) for p in X}
    verts = set(C.vertices)
    if not X <= verts:
        raise InputError(f"not vertices of the collection: {sorted(X - verts)}")
    for I in C.inner_intervals:
        hit = X & I.vertices
        if hit and not any(p in X and q in X for p, q in _edge_pairs(I)):
            return False, I
    return True, None


def enumerate_admissible_sets(C: Polyocollection, cap: int | None = DEFAULT_CAP) -> list[frozenset[Point]]:
    """All admissible sets of ``C`` in a deterministic order.

    Depth-first over the vertices; after each decision every inner
    interval touching the vertex is checked for an edge that can still be
    completed inside ``X``. Refuses above ``cap`` vertices.
    """
    verts = list(C.vertices)
    if cap is not None and len(verts) > cap:
        raise CapExceeded(f"|V| = {len(verts)} exceeds the cap {cap}")
    inner = sorted(C.inner_intervals, key=lambda I: (I.width * I.height, I))
    touching: dict[Point, list[int]] = {p: [] for p in verts}
    edges = [_edge_pairs(I) for I in inner]
    corners = [I.corners for I in inner]
    for k, I in enumerate(inner):
        for p in I.corners:
            touching[p].append(k)
    state: dict[Point, int] = {}  # 1 in X, 0 out
    out: list[frozenset[Point]] = []

    def feasible(k: int) -> bool:
        if not any(state.get(p) == 1 for p in corners[k]):
            return True
        return any(state.get(p, 1) == 1 and state.get(q, 1) == 1 for p, q in edges[k])

    def go(i: int):
        if i == len(verts):
            out.append(frozenset(p for p, s in state.items() if s))
            return
        p = verts[i]
        for s in (0, 1):
            state[p] = s
            if all(feasible(k) for k in touching[p]):
                go(i + 1)
            del state[p]

    go(0)
    out.sort(key=lambda X: (len(X), sorted(X)))
    return out


def derived_polyocollection(C: Polyocollection, X: Iterable[Point]) -> Polyocollection:
    """``C^(X)``: minimal inner intervals of ``C`` avoiding ``X``."""
    X = {tuple(p) for p in X}
    ok, wit = is_admissible(C, X)
    if not ok:
        raise InputError(f"not admissible: inner interval {wit} meets X without an edge")
    G = [I for I in C.inner_intervals if not (I.vertices & X)]
    Gs = set(G)
    minimal = [I for I in G if not any(J != I and I.contains(J) for J in G)]
    D = validate_polyocollection(minimal)
    if not isinstance(D, Polyocollection):
        raise AssertionError(f"derived collection violates the axioms: {D}")
    if set(D.inner_intervals) != Gs:
        raise AssertionError("inner intervals of the derived collection differ from G^(X)")
    return D


def j_ideal(C: Polyocollection, X: Iterable[Point], table: VariableTable | None = None) -> Ideal:
    """``J_X = (x_a : a in X) + L(C^(X))`` in the ring of ``C``."""
    X = sorted({tuple(p) for p in X})
    if table is None:
        table = vertex_table(C)
    D = derived_polyocollection(C, X)
    gens = [Polynomial.variable(table, p) for p in X]
    if D.members:
        gens += list(lattice_ideal(D, table=table).groebner_basis())
    return Ideal(table, gens)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Component:
    name: str
    provenance: str
    ideal: Ideal
    height: int
    admissible: tuple[Point, ...] | None = None

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "provenance": self.provenance,
            "height": self.height,
            "generators": [g.to_text() for g in self.ideal.groebner_basis()],
        }
        if self.admissible is not None:
            out["admissible_set"] = [list(p) for p in self.admissible]
        return out


@dataclass
class DecompositionReport:
    """Components, heights and verdicts of one decomposition run."""

    kind: str
    base: Ideal
    components: list[Component] = field(default_factory=list)
    base_height: int | None = None
    intersection_equals_base: bool | None = None
    unmixed: bool | None = None
    checks: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    timing: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "variables": len(self.base.table),
            "base_generators": len(self.base.generators),
            "base_height": self.base_height,
            "components": [c.to_json() for c in self.components],
            "intersection_equals_base": self.intersection_equals_base,
            "unmixed": self.unmixed,
            "checks": self.checks,
            "failures": list(self.failures),
            "passed": self.passed,
            "notes": list(self.notes),
        }
        if timing:
            out["timing"] = {k: round(v, 3) for k, v in self.timing.items()}
        return out

    def to_text(self) -> str:
        lines = [f"{self.kind}: {len(self.base.table)} variables, base height {self.base_height}"]
        lines.append(f"{'component':<12}{'provenance':<14}{'height':>7}{'gens':>7}")
        for c in self.components:
            lines.append(f"{c.name:<12}{c.provenance:<14}{c.height:>7}{len(c.ideal.groebner_basis()):>7}")
        if self.intersection_equals_base is not None:
            verdict = "equals I" if self.intersection_equals_base else "strictly contains I"
            lines.append(f"intersection: {verdict}")
        if self.unmixed is not None:
            lines.append(f"unmixed: {'yes' if self.unmixed else 'no'}")
        for k, v in self.checks.items():
            lines.append(f"check {k}: {'pass' if v else 'FAIL'}")
        for f in self.failures:
            lines.append(f"failure: {f}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines)


def _intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J)
    return acc


def _contained_mod_vars(f: Polynomial, Y: set[int], L: Ideal | None) -> bool:
    # membership in (x_a : a in Y) + L with L free of the Y variables
    rest = {m: c for m, c in f.terms.items() if not any(i in Y for i, _ in m)}
    if not rest:
        return True
    g = Polynomial(f.table, rest)
    if L is None:
        return False
    return L.contains(g)


def radical_decomposition(C: Polyocollection, cap: int | None = DEFAULT_CAP) -> DecompositionReport:
    """Minimal primes of ``I_C`` among the ``J_X`` and their intersection.

    The intersection of all ``J_X`` is the radical of ``I_C``; the report
    says whether it equals ``I_C`` itself.
    """
    t0 = time.perf_counter()
    I = ideal_of(C)
    table = I.table
    rep = DecompositionReport("radical-decomposition", I)
    if not C.members:
        rep.base_height = 0
        rep.intersection_equals_base = True
        rep.unmixed = True
        return rep
    sets = enumerate_admissible_sets(C, cap)
    rep.timing["admissible"] = time.perf_counter() - t0
    # C^(X) depends only on the inner intervals avoiding X
    lat_cache: dict[frozenset[Interval], Ideal | None] = {}
    inner = C.inner_intervals

    def L_of(X) -> Ideal | None:
        key = frozenset(I for I in inner if not I.vertices & X)
        if key not in lat_cache:
            D = derived_polyocollection(C, X)
            lat_cache[key] = lattice_ideal(D, table=table) if D.members else None
        return lat_cache[key]

    # J_X ⊆ J_Y needs X ⊆ Y; the variables of J_X are exactly X.
    minimal: list[frozenset[Point]] = []
    for Y in sets:
        Yi = {table.var(p) for p in Y}
        LY = None
        dominated = False
        for X in minimal:
            if not X < Y:
                continue
            LX = L_of(X)
            if LY is None:
                LY = L_of(Y)
            gens = LX.groebner_basis() if LX is not None else ()
            if all(_contained_mod_vars(f, Yi, LY) for f in gens):
                dominated = True
                break
        if not dominated:
            minimal.append(Y)
    rep.timing["minimal"] = time.perf_counter() - t0
    comps = []
    for k, X in enumerate(minimal):
        J = j_ideal(C, X, table)
        name = "J_empty" if not X else f"J_{k}"
        comps.append(Component(name, "J_X", J, height(J), tuple(sorted(X))))
    rep.components = comps
    rep.base_height = height(I) if not I.is_unit() else None
    K = _intersect_all([c.ideal for c in comps])
    rep.intersection_equals_base = K.equals(I)
    hs = {c.height for c in comps}
    rep.unmixed = len(hs) == 1 if rep.intersection_equals_base else None
    rep.checks["components_contain_base"] = all(c.ideal.contains_ideal(I) for c in comps)
    rep.checks["intersection_contains_base"] = K.contains_ideal(I)
    rep.checks["squarefree_initial"] = squarefree_initial_witness(I)
    if not rep.intersection_equals_base:
        rep.notes.append("the intersection is the radical of I, which strictly contains I")
    for k, v in rep.checks.items():
        if not v and k != "squarefree_initial":
            rep.failures.append(k)
    rep.timing["total"] = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# closed paths


def zigzag_binomial(W: ZigZagWalk, table: VariableTable) -> Polynomial:
    """``f_W = ∏ x_{z_i} - ∏ x_{u_i}``."""
    zs = tuple(sorted((table.var(p), 1) for p in W.z))
    us = tuple(sorted((table.var(p), 1) for p in W.u))
    return Polynomial.binomial(table, zs, us)


def z_ideal(P: CellComplex, table: VariableTable | None = None,
            walks: Sequence[ZigZagWalk] | None = None) -> Ideal:
    if table is None:
        table = vertex_table(P.polyocollection)
    if walks is None:
        walks = enumerate_zigzag_walks(P)
    return Ideal(table, [zigzag_binomial(W, table) for W in walks])


def _nonprime_walks(P: CellComplex) -> list[ZigZagWalk]:
    chk = P._closed_path
    if not chk.ok:
        raise InputError(f"not a closed path: {chk.reason}")
    walks = enumerate_zigzag_walks(P)
    if not walks:
        raise InputError("closed path has no zig-zag walk (its ideal is prime)")
    return walks


def closed_path_p1(P: CellComplex, table: VariableTable | None = None) -> Ideal:
    """``p1 = I_P + Z_P``."""
    walks = _nonprime_walks(P)
    I = ideal_of(P.polyocollection, table)
    return I + z_ideal(P, I.table, walks)


def closed_path_p2(P: CellComplex, table: VariableTable | None = None) -> Ideal:
    """Necklace and M(P) variables plus the switchback 2-minors."""
    _nonprime_walks(P)
    if table is None:
        table = vertex_table(P.polyocollection)
    pts = sorted(necklace(P) | m_set(P))
    gens = [Polynomial.variable(table, p) for p in pts]
    gens += [inner_minor(r, table) for r in r_set(P)]
    return Ideal(table, gens)


def p2_structurally_prime(P: CellComplex) -> bool:
    """Variables plus 2-minors on pairwise disjoint, untouched variable sets."""
    used = set(necklace(P) | m_set(P))
    for r in r_set(P):
        vs = set(r.vertices)
        if vs & used:
            return False
        used |= vs
    return True


def binomial_height_bound(J: Ideal) -> int:
    """Rank of the exponent-difference vectors of the generators."""
    n = len(J.table)
    vecs = []
    for f in J.generators:
        if not f.is_pure_difference():
            raise InputError(f"not a pure-difference binomial: {f}")
        e = f.exponent_difference()
        v = [0] * n
        for i, x in e.items():
            v[i] = x
        vecs.append(v)
    return rational_rank(vecs)


def verify_main_theorem(P: CellComplex, toric: bool = True, junction: str = "min") -> DecompositionReport:
    """Check ``I_P = p1 ∩ p2`` with equal heights ``|P|`` on one closed path.

    Parameters
    ----------
    P : CellComplex
        A closed path with a zig-zag walk.
    toric : bool
        Also compare p1 with the toric kernel ``J_P``.
    junction : {"min", "all"}
        Step junction(s) used for ``J_P``; "all" compares every labelling.
    """
    t0 = time.perf_counter()
    walks = _nonprime_walks(P)
    I = ideal_of(P.polyocollection)
    T = I.table
    rep = DecompositionReport("closed-path", I)
    p1 = I + z_ideal(P, T, walks)
    p2 = closed_path_p2(P, T)
    n = len(P)
    rep.notes.append(f"{len(walks)} zig-zag walks, |P| = {n}")

    L = lattice_ideal(P.polyocollection, table=T)
    rep.timing["lattice"] = time.perf_counter() - t0
    rep.checks["p1_equals_lattice_ideal"] = p1.equals(L)
    rep.checks["p2_structurally_prime"] = p2_structurally_prime(P)
    if toric:
        choices = step_junction_choices(P)
        if junction == "min":
            choices = [c for c in choices if c == choices[0]]
        elif junction != "all":
            raise InputError(f"unknown junction choice {junction!r}")
        ok = True
        for m, flip in choices:
            J = toric_ideal_JP(P, m, flip, table=T)
            ok = ok and J.equals(p1)
        rep.checks["p1_equals_toric_JP"] = ok
        rep.timing["toric"] = time.perf_counter() - t0
    K = intersect(p1, p2)
    rep.intersection_equals_base = K.equals(I)
    rep.checks["intersection_equals_I"] = rep.intersection_equals_base
    rep.timing["intersection"] = time.perf_counter() - t0
    h1, h2, hI = height(p1), height(p2), height(I)
    rep.base_height = hI
    rep.checks["heights_equal_cells"] = h1 == h2 == hI == n
    rep.checks["incomparable"] = not p1.contains_ideal(p2) and not p2.contains_ideal(p1)
    rep.unmixed = bool(rep.intersection_equals_base and h1 == h2 and rep.checks["incomparable"])
    rep.checks["unmixed"] = rep.unmixed
    rep.checks["binomial_rank_equals_cells"] = binomial_height_bound(p1) == n
    rep.components = [Component("p1", "I_P + Z_P", p1, h1), Component("p2", "N + M + R", p2, h2)]
    sq = squarefree_initial_witness(I)
    rep.notes.append("squarefree initial ideal: " + ("yes (I_P is radical)" if sq else "inconclusive"))
    for k, v in rep.checks.items():
        if not v:
            rep.failures.append(k)
    rep.timing["total"] = time.perf_counter() - t0
    return rep
