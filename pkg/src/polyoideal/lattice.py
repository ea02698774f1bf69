"""The lattice of a polyocollection, its lattice ideal, and toric kernels.

For a polyocollection ``C`` the vectors ``v_I = v_a + v_b - v_c - v_d``
(one per member) together with the unit vectors of the free vertices
form a unimodular basis of ``Z^V(C)``. Expressing every ``v_a`` in that
basis gives the monomial map ``ψ`` whose kernel is the lattice ideal.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .geometry import (CellComplex, InputError, Interval, Point, Polyocollection,
                       _edge_interval_index, junctions, step_junction_labels)
from .ideals import Ideal, eliminate, ideal_of, saturate, vertex_table
from .monomials import MonomialOrder
from .polynomial import DEFAULT_ORDER, Polynomial, VariableTable


class LatticeError(RuntimeError):
    """The generator matrix is not unimodular (an inconsistent input)."""


def bareiss_determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i = A[i]
            row_k = A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def integer_inverse(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix by exact Gauss-Jordan."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise LatticeError("singular matrix")
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        if piv != 1:
            A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                rc = A[c]
                A[r] = [x - f * y for x, y in zip(A[r], rc)]
    out = []
    for row in A:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise LatticeError("inverse is not integral")
        out.append([int(v) for v in vals])
    return out


def rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of a list of integer vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors if any(v)]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for c in range(ncols):
        p = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        piv = rows[rank][c]
        for r in range(rank + 1, len(rows)):
            if rows[r][c] != 0:
                f = rows[r][c] / piv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def integer_kernel(A: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """A basis of ``{u in Z^ncols : A u = 0}``.

    Row-style Hermite reduction of ``[A^T | I]``; rows whose left block
    vanishes span the kernel.
    """
    m = len(A)
    rows = [[A[i][j] for i in range(m)] + [int(j == k) for k in range(ncols)] for j in range(ncols)]
    r = 0
    for c in range(m):
        while True:
            nz = [i for i in range(r, ncols) if rows[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[p] = rows[p], rows[r]
            piv = rows[r][c]
            done = True
            for i in range(r + 1, ncols):
                if rows[i][c]:
                    q = rows[i][c] // piv
                    if q:
                        rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                r += 1
                break
        if r == ncols:
            break
    return [row[m:] for row in rows[r:]]


def toric_from_matrix(table: VariableTable, A: Sequence[Sequence[int]],
                      extra: Sequence[Polynomial] = ()) -> Ideal:
    """Toric ideal of the columns of ``A`` (one column per variable).

    Saturates the ideal of a kernel lattice basis, plus ``extra``
    generators already known to lie in the toric ideal, by the product of
    all variables. Requires every kernel vector to have coordinate sum 0.
    """
    n = len(table)
    gens = list(extra)
    for u in integer_kernel(A, n):
        plus = tuple((i, e) for i, e in enumerate(u) if e > 0)
        minus = tuple((i, -e) for i, e in enumerate(u) if e < 0)
        gens.append(Polynomial.binomial(table, plus, minus))
    return saturate(Ideal(table, gens), tuple((i, 1) for i in range(n)))


@dataclass(frozen=True)
class LatticeModel:
    """Generator matrix of the lattice and the free-vertex set.

    Rows are indexed by ``vertices``; the first ``len(members)`` columns
    are the ``v_I``, the remaining ones the unit vectors of
    ``free_vertices``.
    """

    vertices: tuple[Point, ...]
    members: tuple[Interval, ...]
    free_vertices: tuple[Point, ...]
    matrix: tuple[tuple[int, ...], ...]
    determinant: int

    @property
    def column_labels(self) -> list[str]:
        return [str(I) for I in self.members] + [f"free({p[0]},{p[1]})" for p in self.free_vertices]

    @cached_property
    def inverse(self) -> list[list[int]]:
        return integer_inverse(self.matrix)

    def coordinates(self, a: Point) -> list[int]:
        """Coordinates of the unit vector ``v_a`` in the column basis."""
        try:
            i = self.vertices.index(tuple(a))
        except ValueError:
            raise InputError(f"{a} is not a vertex") from None
        inv = self.inverse
        return [inv[r][i] for r in range(len(inv))]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["vertex"] + self.column_labels)
        for p, row in zip(self.vertices, self.matrix):
            w.writerow([f"({p[0]},{p[1]})"] + list(row))
        return buf.getvalue()


def build_lattice_model(C: Polyocollection) -> LatticeModel:
    """The generator matrix of the lattice of ``C``; fails unless ``|det| = 1``."""
    members = tuple(C.members)
    if not members:
        raise InputError("empty polyocollection")
    verts = tuple(C.vertices)
    pos = {p: i for i, p in enumerate(verts)}
    lls = {I.ll for I in members}
    free = tuple(p for p in verts if p not in lls)
    n = len(verts)
    if len(members) + len(free) != n:
        raise LatticeError(f"{len(members)} members + {len(free)} free vertices != {n} vertices")
    cols = []
    for I in members:
        col = [0] * n
        for p in I.diagonal:
            col[pos[p]] += 1
        for p in I.antidiagonal:
            col[pos[p]] -= 1
        cols.append(col)
    for p in free:
        col = [0] * n
        col[pos[p]] = 1
        cols.append(col)
    matrix = tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))
    det = bareiss_determinant(matrix)
    if abs(det) != 1:
        raise LatticeError(f"generator matrix has determinant {det}")
    return LatticeModel(verts, members, free, matrix, det)


def psi_coefficients(model: LatticeModel, a: Point) -> dict[Point, int]:
    """Exponents ``μ_b`` (``b`` free) with ``ψ(x_a) = ∏ y_b^{μ_b}``."""
    coords = model.coordinates(a)
    k = len(model.members)
    return {b: coords[k + j] for j, b in enumerate(model.free_vertices) if coords[k + j]}


def lattice_ideal(C: Polyocollection, method: str = "saturation",
                  table: VariableTable | None = None) -> Ideal:
    """The lattice ideal of ``C``.

    ``method="saturation"`` computes ``I_C : (∏ x)^∞``; ``"elimination"``
    computes the kernel of ``ψ`` directly.
    """
    if table is None:
        table = vertex_table(C)
    if not C.members:
        return Ideal(table, [])
    if method == "saturation":
        I = ideal_of(C, table)
        u = tuple((table.var(p), 1) for p in C.vertices)
        return saturate(I, u)
    if method == "elimination":
        return _psi_kernel(C, table)
    raise ValueError(f"unknown method {method!r}")


def _psi_kernel(C: Polyocollection, table: VariableTable) -> Ideal:
    model = build_lattice_model(C)
    aux = [f"y_{b[0]}_{b[1]}".replace("-", "m") for b in model.free_vertices] + ["s"]
    ext = table.extend(aux)
    n = len(table)
    ypos = {b: n + j for j, b in enumerate(model.free_vertices)}
    gens = []
    for a in model.vertices:
        mu = psi_coefficients(model, a)
        plus = tuple(sorted((ypos[b], e) for b, e in mu.items() if e > 0))
        minus = tuple(sorted([(ypos[b], -e) for b, e in mu.items() if e < 0] + [(table.var(a), 1)]))
        gens.append(Polynomial.binomial(ext, minus, plus))
    prod_y = tuple(sorted([(p, 1) for p in ypos.values()] + [(len(ext) - 1, 1)]))
    gens.append(Polynomial.binomial(ext, prod_y, ()))
    return eliminate(table, gens, aux)


def is_prime_ideal_of(C: Polyocollection) -> bool:
    """True iff the inner 2-minor ideal equals the lattice ideal."""
    I = ideal_of(C)
    L = lattice_ideal(C, table=I.table)
    return I.equals(L)


# ---------------------------------------------------------------------------
# toric kernel of a closed path


@dataclass(frozen=True)
class ToricModel:
    """Images ``v_i h_j w^k`` of the vertices of a closed path."""

    horizontal: tuple[tuple[Point, ...], ...]
    vertical: tuple[tuple[Point, ...], ...]
    weighted: frozenset[Point]  # the five vertices carrying w
    junction_m: Point
    flip: bool

    def image(self, r: Point, hidx: dict, vidx: dict) -> tuple[int, int, int]:
        return vidx[r], hidx[r], int(r in self.weighted)


def step_junction_choices(P: CellComplex) -> list[tuple[Point, bool]]:
    """All ``(m, flip)`` labellings available for the toric map."""
    out = []
    for j in junctions(P):
        if j.kind == "step":
            m = j.outer_corner()
            out.append((m, False))
            out.append((m, True))
    return sorted(out)


def toric_model(P: CellComplex, junction: Point | None = None, flip: bool = False) -> ToricModel:
    from .geometry import edge_intervals

    steps = [j for j in junctions(P) if j.kind == "step"]
    if not steps:
        raise InputError("no step junction: the toric map needs the three-cell turning pattern")
    steps.sort(key=lambda j: j.outer_corner())
    if junction is None:
        chosen = steps[0]
    else:
        chosen = next((j for j in steps if j.outer_corner() == tuple(junction)), None)
        if chosen is None:
            raise InputError(f"no step junction with m = {junction}")
    lab = step_junction_labels(chosen, flip)
    hs, vs = edge_intervals(P)
    weighted = frozenset(lab[k] for k in ("a", "b", "c", "d", "e"))
    return ToricModel(tuple(hs), tuple(vs), weighted, chosen.outer_corner(), flip)


def toric_ideal_JP(P: CellComplex, junction: Point | None = None, flip: bool = False,
                   table: VariableTable | None = None, method: str = "lattice") -> Ideal:
    """Kernel of ``x_r ↦ v_i h_j w^k`` for a closed path ``P``.

    The step junction defaults to the one with the smallest ``m`` vertex.
    ``method="lattice"`` saturates a kernel lattice basis (plus the inner
    2-minors, which lie in the kernel); ``"elimination"`` eliminates the
    target variables from the graph ideal.
    """
    tm = toric_model(P, junction, flip)
    if table is None:
        table = vertex_table(P.polyocollection)
    hidx, vidx = _edge_interval_index(P)
    nh, nv = len(tm.horizontal), len(tm.vertical)
    for r in P.vertices:
        if r not in hidx or r not in vidx:
            raise InputError(f"vertex {r} is not on a horizontal and a vertical edge interval")
    if method == "lattice":
        A = [[0] * len(table) for _ in range(nh + nv + 1)]
        for r in P.vertices:
            vi, hj, k = tm.image(r, hidx, vidx)
            c = table.var(r)
            A[hj][c] = 1
            A[nh + vi][c] = 1
            A[nh + nv][c] = k
        minors = ideal_of(P.polyocollection, table).generators
        return toric_from_matrix(table, A, minors)
    if method != "elimination":
        raise ValueError(f"unknown method {method!r}")
    aux = [f"h{j}" for j in range(nh)] + [f"v{i}" for i in range(nv)] + ["w"]
    ext = table.extend(aux)
    n = len(table)
    gens = []
    for r in P.vertices:
        vi, hj, k = tm.image(r, hidx, vidx)
        img = [(n + hj, 1), (n + nh + vi, 1)]
        if k:
            img.append((n + nh + nv, 1))
        gens.append(Polynomial.binomial(ext, ((table.var(r), 1),), tuple(sorted(img))))
    return eliminate(table, gens, aux)
