"""Ideals, reduced Groebner bases and the operations built on them.

Ideals whose generators are all pure differences ``x^a - x^b`` or
monomials go through the coefficient-free binomial engine; anything
else uses the general engine over the rationals (or modulo 32003 as a
fast pre-check).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import groebner as gb
from .geometry import InputError, Interval, Polyocollection
from .monomials import MonomialOrder
from .polynomial import (DEFAULT_ORDER, Monomial, Polynomial, VariableTable,
                         mono_div)

PRIME = 32003


def _is_binomial_input(gens: Sequence[Polynomial]) -> bool:
    for f in gens:
        if len(f.terms) == 1:
            if next(iter(f.terms.values())) != 1:
                return False
        elif not f.is_pure_difference():
            return False
    return True


class Ideal:
    """An ideal of ``K[table]`` with a lazily computed reduced basis.

    Parameters
    ----------
    table : VariableTable
    generators : iterable of Polynomial
        Zero generators are dropped.
    order : MonomialOrder, optional
        Order used for the cached basis, degrevlex by default.
    modulus : int
        0 for the rationals, otherwise a prime (pre-check only).
    """

    def __init__(self, table: VariableTable, generators: Iterable[Polynomial] = (),
                 order: MonomialOrder = DEFAULT_ORDER, modulus: int = 0):
        self.table = table
        gens = []
        for f in generators:
            if f.table is not table and f.table != table:
                raise ValueError("generator over a different variable table")
            if f:
                gens.append(f)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self.order = order
        self.modulus = modulus
        self._gb: tuple[Polynomial, ...] | None = None
        self._packed = None

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {len(self.table)} variables)"

    @property
    def layout(self):
        return self.table.layout(self.order)

    def with_order(self, order: MonomialOrder) -> "Ideal":
        if order == self.order:
            return self
        return Ideal(self.table, self.generators, order, self.modulus)

    def is_zero(self) -> bool:
        return not self.generators

    # -- Groebner basis -------------------------------------------------------

    def _compute(self):
        if self._packed is not None:
            return
        lay = self.layout
        gens = self.generators
        if not gens:
            self._packed = ("binomial", [])
            self._gb = ()
            return
        if _is_binomial_input(gens):
            pairs = []
            for f in gens:
                items = f.packed(lay)
                if len(items) == 1:
                    pairs.append((items[0][0], gb.NONE))
                else:
                    pairs.append((items[0][0], items[1][0]))
            basis = gb.binomial_groebner(pairs, lay)
            self._packed = ("binomial", basis)
            out = []
            for a, b in basis:
                t = [(a, 1)] if b == gb.NONE else [(a, 1), (b, -1)]
                out.append(Polynomial.from_packed(self.table, lay, t))
        else:
            polys = [f.packed(lay) for f in gens]
            if self.modulus:
                polys = [[(m, _modp(c, self.modulus)) for m, c in p] for p in polys]
            basis = gb.groebner(polys, lay, self.modulus)
            self._packed = ("general", basis)
            out = [Polynomial.from_packed(self.table, lay, p) for p in basis]
        self._gb = tuple(out)

    def groebner_basis(self) -> tuple[Polynomial, ...]:
        """Reduced Groebner basis, monic, sorted by decreasing lead."""
        self._compute()
        return self._gb

    def is_unit(self) -> bool:
        g = self.groebner_basis()
        return len(g) == 1 and g[0].terms.keys() == {()}

    def leading_monomials(self) -> list[Monomial]:
        self._compute()
        lay = self.layout
        kind, basis = self._packed
        if kind == "binomial":
            return [lay.unpack_sparse(a) for a, _ in basis]
        return [lay.unpack_sparse(p[0][0]) for p in basis]

    def normal_form(self, f: Polynomial) -> Polynomial:
        self._compute()
        lay = self.layout
        kind, basis = self._packed
        if not f:
            return f
        if kind == "binomial":
            if not basis:
                return f
            terms = f.packed(lay)
            if self.modulus:
                terms = [(m, _modp(c, self.modulus)) for m, c in terms]
            acc: dict[int, object] = {}
            for m, c in terms:
                r = gb.binomial_nf(m, basis, lay)
                if r >= 0:
                    acc[r] = acc.get(r, 0) + c
            out = [(m, c) for m, c in acc.items()]
            if self.modulus:
                out = [(m, c % self.modulus) for m, c in out]
            return Polynomial.from_packed(self.table, lay, out)
        terms = f.packed(lay)
        if self.modulus:
            terms = [(m, _modp(c, self.modulus)) for m, c in terms]
        r = gb.poly_normal_form(terms, basis, lay, self.modulus)
        return Polynomial.from_packed(self.table, lay, r)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(f) for f in other.generators)

    def equals(self, other: "Ideal") -> bool:
        """Equality via reduced bases in this ideal's order."""
        if self.table != other.table:
            raise ValueError("ideals over different variable tables")
        return set(self.groebner_basis()) == set(other.with_order(self.order).groebner_basis())

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # mutable cache, equality is mathematical

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.table, self.generators + other.generators, self.order, self.modulus)

    def minimal_generators_text(self) -> list[str]:
        return [f.to_text(self.order) for f in self.groebner_basis()]


def _modp(c, p):
    if isinstance(c, Fraction):
        return c.numerator * pow(c.denominator, -1, p) % p
    return c % p


# ---------------------------------------------------------------------------
# construction


def inner_minor(I: Interval, table: VariableTable) -> Polynomial:
    """``x_a x_b - x_c x_d`` for the diagonal ``a, b`` and anti-diagonal ``c, d``."""
    a, b = I.ll, I.ur
    c, d = I.ul, I.lr
    ia, ib, ic, id_ = (table.var(p) for p in (a, b, c, d))
    return Polynomial.binomial(table, tuple(sorted(((ia, 1), (ib, 1)))),
                               tuple(sorted(((ic, 1), (id_, 1)))))


def vertex_table(C) -> VariableTable:
    return VariableTable.of_points(C.vertices)


def ideal_of(C: Polyocollection, table: VariableTable | None = None,
             order: MonomialOrder = DEFAULT_ORDER) -> Ideal:
    """The ideal generated by the inner 2-minors of ``C``."""
    if table is None:
        table = vertex_table(C)
    gens = [inner_minor(I, table) for I in sorted(C.inner_intervals)]
    return Ideal(table, gens, order)


def variables_ideal(table: VariableTable, points, order=DEFAULT_ORDER) -> Ideal:
    return Ideal(table, [Polynomial.variable(table, p) for p in points], order)


def reduced_groebner(I: Ideal) -> tuple[Polynomial, ...]:
    return I.groebner_basis()


def normal_form(f: Polynomial, I: Ideal) -> Polynomial:
    return I.normal_form(f)


def membership(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


# ---------------------------------------------------------------------------
# elimination


def eliminate(table: VariableTable, gens: Sequence[Polynomial], aux: Sequence[str],
              order: MonomialOrder = DEFAULT_ORDER) -> Ideal:
    """Intersect ``(gens)`` over ``table + aux`` with ``K[table]``.

    ``gens`` live on ``table.extend(aux)``. The result lives on ``table``.
    """
    n = len(table)
    ext = gens[0].table if gens else table.extend(aux)
    k = len(ext) - n
    order_ext = MonomialOrder("block", blocks=(tuple(range(n, n + k)), tuple(range(n))))
    big = Ideal(ext, gens, order_ext)
    keep = []
    for g in big.groebner_basis():
        if all(i < n for i in g.support()):
            keep.append(Polynomial(table, g.terms))
    return Ideal(table, keep, order)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t·I + (1 - t)·J``."""
    table = I.table
    if J.table != table:
        raise ValueError("ideals over different variable tables")
    if I.is_zero() or J.is_zero():
        return Ideal(table, [], I.order)
    if I.is_unit():
        return Ideal(table, J.groebner_basis(), I.order)
    if J.is_unit():
        return Ideal(table, I.groebner_basis(), I.order)
    ext = table.extend([_fresh(table, "t")])
    n = len(table)
    t = Polynomial(ext, {((n, 1),): 1})
    one = Polynomial.constant(ext, 1)
    gens = [t * Polynomial(ext, f.terms) for f in I.groebner_basis()]
    gens += [(one - t) * Polynomial(ext, g.terms) for g in J.groebner_basis()]
    return eliminate(table, gens, [], I.order)


def _fresh(table: VariableTable, base: str) -> str:
    name = base
    k = 0
    while name in table.index:
        k += 1
        name = f"{base}{k}"
    return name


def _as_monomial(u, table) -> Monomial:
    if isinstance(u, Polynomial):
        if not u.is_monomial():
            raise InputError("saturation needs a monomial")
        return next(iter(u.terms))
    return tuple(sorted(u))


def saturate(I: Ideal, u, method: str = "auto") -> Ideal:
    """``I : u^∞`` for a monomial ``u``.

    ``method`` is ``"bayer"`` (one variable at a time with that variable
    last in degrevlex; needs homogeneous generators), ``"rabinowitsch"``
    (eliminate ``y`` from ``I + (y·u - 1)``) or ``"auto"``.
    """
    m = _as_monomial(u, I.table)
    if not m:
        return I
    if I.is_zero():
        return I
    homog = all(f.is_homogeneous() for f in I.generators)
    if method == "auto":
        method = "bayer" if homog else "rabinowitsch"
    if method == "bayer":
        if not homog:
            raise InputError("per-variable saturation needs homogeneous generators")
        return _saturate_bayer(I, [i for i, _ in m])
    if method == "rabinowitsch":
        return _saturate_rabinowitsch(I, m)
    raise ValueError(f"unknown saturation method {method!r}")


def _saturate_bayer(I: Ideal, variables: Sequence[int]) -> Ideal:
    table = I.table
    n = len(table)
    gens = list(I.generators)
    for k in variables:
        seq = tuple(i for i in range(n) if i != k) + (k,)
        order = MonomialOrder("degrevlex", sequence=seq)
        basis = Ideal(table, gens, order, I.modulus).groebner_basis()
        gens = []
        for g in basis:
            low = min((dict(m).get(k, 0) for m in g.terms), default=0)
            gens.append(g.divide_monomial(((k, low),)) if low else g)
    return Ideal(table, gens, I.order, I.modulus)


def _saturate_rabinowitsch(I: Ideal, m: Monomial) -> Ideal:
    table = I.table
    ext = table.extend([_fresh(table, "y")])
    n = len(table)
    gens = [Polynomial(ext, f.terms) for f in I.generators]
    gens.append(Polynomial(ext, {tuple(sorted(m + ((n, 1),))): 1, (): -1}))
    return eliminate(table, gens, [], I.order)


def colon(I: Ideal, u) -> Ideal:
    """``I : u`` for a monomial ``u``, from ``I ∩ (u)`` divided by ``u``."""
    m = _as_monomial(u, I.table)
    if not m:
        return I
    U = Ideal(I.table, [Polynomial(I.table, {m: 1})], I.order)
    K = intersect(I, U)
    return Ideal(I.table, [g.divide_monomial(m) for g in K.groebner_basis()], I.order)


# ---------------------------------------------------------------------------
# dimension


def _min_hitting_set(sets: list[frozenset[int]]) -> int:
    """Size of a smallest set meeting every set in ``sets``."""
    sets = _minimal_sets(sets)
    best = [sum(1 for _ in sets) if sets else 0]
    # greedy upper bound
    chosen: set[int] = set()
    for s in sorted(sets, key=len):
        if not (s & chosen):
            chosen.add(min(s))
    best[0] = len(chosen)

    def lower(rem):
        # disjoint sets need distinct elements
        used: set[int] = set()
        cnt = 0
        for s in sorted(rem, key=len):
            if not (s & used):
                used |= s
                cnt += 1
        return cnt

    def go(rem, depth):
        if not rem:
            best[0] = min(best[0], depth)
            return
        if depth + lower(rem) >= best[0]:
            return
        s = min(rem, key=len)
        excluded: set[int] = set()
        for v in sorted(s):
            nxt = []
            ok = True
            for r in rem:
                if v in r:
                    continue
                r2 = r - excluded if excluded & r else r
                if not r2:
                    ok = False
                    break
                nxt.append(r2)
            if ok:
                go(nxt, depth + 1)
            excluded.add(v)

    go(sets, 0)
    return best[0]


def _minimal_sets(sets):
    uniq = sorted(set(sets), key=len)
    out = []
    for s in uniq:
        if not any(o <= s for o in out):
            out.append(s)
    return out


def height(I: Ideal) -> int:
    """Codimension of ``I`` from the supports of its leading monomials."""
    if I.is_unit():
        raise InputError("the unit ideal has no height")
    sets = [frozenset(i for i, _ in m) for m in I.leading_monomials()]
    return _min_hitting_set(sets)


def krull_dimension(I: Ideal) -> int:
    """Krull dimension of ``S/I``."""
    return len(I.table) - height(I)


def squarefree_initial_witness(I: Ideal, order: MonomialOrder | None = None) -> bool:
    """True iff every leading monomial of the reduced basis is squarefree.

    True certifies radicality; False is inconclusive.
    """
    J = I if order is None else I.with_order(order)
    return all(e == 1 for m in J.leading_monomials() for _, e in m)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return I.with_order(DEFAULT_ORDER).equals(J.with_order(DEFAULT_ORDER))
