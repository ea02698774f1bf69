"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are tuples of ``(variable_index, exponent)`` pairs sorted by
index, with no zero exponents; ``()`` is the monomial 1. Coefficients are
ints or :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .geometry import InputError, Point
from .monomials import Layout, MonomialOrder

Entry = Union[Point, str]
Monomial = tuple  # tuple[tuple[int, int], ...]

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_\-]*$")
_POINT_RE = re.compile(r"^x_(-?\d+)_(-?\d+)$")


def entry_name(e: Entry) -> str:
    if isinstance(e, str):
        return e
    return f"x_{e[0]}_{e[1]}"


class VariableTable:
    """Ordered variables: lattice points (vertex variables) or named auxiliaries.

    Parameters
    ----------
    entries : sequence of Point or str
        Points are written ``x_i_j``; strings are used verbatim and must
        not collide with a point name.
    """

    def __init__(self, entries: Iterable[Entry]):
        ents = []
        for e in entries:
            if isinstance(e, str):
                if not _NAME_RE.match(e):
                    raise InputError(f"bad variable name {e!r}")
                m = _POINT_RE.match(e)
                if m:
                    e = (int(m.group(1)), int(m.group(2)))
            else:
                e = (int(e[0]), int(e[1]))
            ents.append(e)
        self.entries: tuple[Entry, ...] = tuple(ents)
        self.names = tuple(entry_name(e) for e in self.entries)
        self.index = {}
        for i, nm in enumerate(self.names):
            if nm in self.index:
                raise InputError(f"duplicate variable {nm}")
            self.index[nm] = i
        self._layouts: dict[MonomialOrder, Layout] = {}

    @classmethod
    def of_points(cls, points: Iterable[Point]) -> "VariableTable":
        """Vertex variables ordered lexicographically by ``(x, y)``."""
        return cls(sorted(set(points)))

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, VariableTable) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"VariableTable({list(self.names)})"

    def var(self, e: Entry) -> int:
        """Index of a variable given as a point or a name."""
        nm = entry_name(tuple(e) if not isinstance(e, str) else e)
        try:
            return self.index[nm]
        except KeyError:
            raise InputError(f"unknown variable {nm}") from None

    def __contains__(self, e) -> bool:
        nm = entry_name(tuple(e) if not isinstance(e, str) else e)
        return nm in self.index

    def extend(self, extra: Sequence[Entry]) -> "VariableTable":
        return VariableTable(self.entries + tuple(extra))

    def points(self) -> list[Point]:
        return [e for e in self.entries if not isinstance(e, str)]

    def layout(self, order: MonomialOrder) -> Layout:
        lay = self._layouts.get(order)
        if lay is None:
            lay = Layout(len(self.entries), order)
            self._layouts[order] = lay
        return lay


DEFAULT_ORDER = MonomialOrder("degrevlex")


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(a: Monomial) -> int:
    return sum(e for _, e in a)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    db = dict(b)
    return all(db.get(i, 0) >= e for i, e in a)


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    d = dict(b)
    for i, e in a:
        r = d.get(i, 0) - e
        if r < 0:
            raise ValueError("monomial does not divide")
        if r:
            d[i] = r
        else:
            del d[i]
    return tuple(sorted(d.items()))


class Polynomial:
    """Immutable sparse polynomial over a :class:`VariableTable`."""

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping[Monomial, object] = ()):
        self.table = table
        t = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            c = _clean(c)
            if c:
                t[m] = _clean(t.get(m, 0) + c) if m in t else c
        self.terms = {m: c for m, c in t.items() if c}
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, table):
        return cls(table, {})

    @classmethod
    def constant(cls, table, c):
        return cls(table, {(): c})

    @classmethod
    def variable(cls, table, e: Entry):
        return cls(table, {((table.var(e), 1),): 1})

    @classmethod
    def monomial(cls, table, exps: Mapping[int, int] | Monomial, coeff=1):
        items = exps.items() if isinstance(exps, Mapping) else exps
        m = tuple(sorted((i, e) for i, e in items if e))
        return cls(table, {m: coeff})

    @classmethod
    def binomial(cls, table, a: Monomial, b: Monomial):
        """``x^a - x^b``."""
        return cls(table, [(a, 1), (b, -1)])

    @classmethod
    def from_packed(cls, table, layout: Layout, terms):
        return cls(table, {layout.unpack_sparse(m): c for m, c in terms})

    # -- basic structure ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def support(self) -> set[int]:
        return {i for m in self.terms for i, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_pure_difference(self) -> bool:
        """Two terms with coefficients +1 and -1."""
        if len(self.terms) != 2:
            return False
        return sorted(self.terms.values()) == [-1, 1]

    def exponent_difference(self) -> dict[int, int]:
        """``e`` with ``f = ±(x^{e+} - x^{e-})`` for a pure difference."""
        if not self.is_pure_difference():
            raise InputError("not a pure-difference binomial")
        pos = next(m for m, c in self.terms.items() if c == 1)
        neg = next(m for m, c in self.terms.items() if c == -1)
        d = dict(pos)
        for i, e in neg:
            d[i] = d.get(i, 0) - e
        return {i: e for i, e in d.items() if e}

    # -- arithmetic ---------------------------------------------------------------

    def _check(self, other):
        if other.table is not self.table and other.table != self.table:
            raise ValueError("polynomials over different variable tables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.table, other)
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Polynomial(self.table, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(self.table, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                t[m] = t.get(m, 0) + c1 * c2
        return Polynomial(self.table, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(self.table, 1)
        for _ in range(k):
            out = out * self
        return out

    def divide_monomial(self, a: Monomial) -> "Polynomial":
        return Polynomial(self.table, {mono_div(m, a): c for m, c in self.terms.items()})

    def rename(self, table: VariableTable, mapping: Sequence[int]) -> "Polynomial":
        """Move to ``table``; variable ``i`` becomes ``mapping[i]``."""
        t = {}
        for m, c in self.terms.items():
            mm = tuple(sorted((mapping[i], e) for i, e in m))
            t[mm] = c
        return Polynomial(table, t)

    def substitute_into(self, table: VariableTable) -> "Polynomial":
        """Re-express over ``table`` matching variables by name."""
        mapping = [table.var(e) for e in self.table.entries]
        return self.rename(table, mapping)

    # -- ordering -----------------------------------------------------------------

    def packed(self, layout: Layout):
        """Term list ``(packed, coeff)`` sorted decreasingly."""
        out = [(layout.pack_sparse(m), c) for m, c in self.terms.items()]
        out.sort(key=lambda t: t[0], reverse=True)
        return out

    def sorted_terms(self, order: MonomialOrder = DEFAULT_ORDER):
        lay = self.table.layout(order)
        return sorted(self.terms.items(), key=lambda t: lay.pack_sparse(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = DEFAULT_ORDER) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        lay = self.table.layout(order)
        return max(self.terms, key=lay.pack_sparse)

    def monic(self, order: MonomialOrder = DEFAULT_ORDER) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[self.leading_monomial(order)]
        if lc == 1:
            return self
        return Polynomial(self.table, {m: Fraction(c) / lc for m, c in self.terms.items()})

    # -- serialization ------------------------------------------------------------

    def to_text(self, order: MonomialOrder = DEFAULT_ORDER) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms(order)):
            neg = c < 0
            a = -c if neg else c
            factors = []
            for i, e in m:
                nm = self.table.names[i]
                factors.append(nm if e == 1 else f"{nm}^{e}")
            body = "*".join(factors)
            if not body:
                body = str(a)
            elif a != 1:
                body = f"{a}*{body}"
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def to_json(self, order: MonomialOrder = DEFAULT_ORDER) -> list:
        out = []
        for m, c in self.sorted_terms(order):
            cc = c if isinstance(c, int) else str(c)
            out.append([cc, [[i, e] for i, e in m]])
        return out

    @classmethod
    def from_json(cls, table: VariableTable, data) -> "Polynomial":
        try:
            t = {}
            for coeff, mono in data:
                c = Fraction(coeff) if isinstance(coeff, str) else coeff
                if not isinstance(c, (int, Fraction)) or isinstance(c, bool):
                    raise InputError(f"bad coefficient {coeff!r}")
                m = {}
                for i, e in mono:
                    if not (0 <= i < len(table)) or e < 0:
                        raise InputError(f"bad factor {[i, e]!r}")
                    if e:
                        m[i] = m.get(i, 0) + e
                mm = tuple(sorted(m.items()))
                t[mm] = t.get(mm, 0) + c
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"malformed polynomial JSON: {exc}") from None
        return cls(table, t)

    @classmethod
    def parse(cls, table: VariableTable, text: str) -> "Polynomial":
        """Parse text such as ``x_2_1*x_4_2 - 3/2*x_1_1^2 + 1``."""
        s = text.replace(" ", "")
        if not s:
            raise InputError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        t = {}
        for sign, body in re.findall(r"([+-])([^+-]*)", _protect(s)):
            body = _unprotect(body)
            if not body:
                raise InputError(f"malformed term in {text!r}")
            c = Fraction(1)
            m = {}
            for f in body.split("*"):
                if not f:
                    raise InputError(f"malformed term in {text!r}")
                if re.fullmatch(r"\d+(/\d+)?", f):
                    c *= Fraction(f)
                    continue
                base, _, ex = f.partition("^")
                if ex and not ex.isdigit():
                    raise InputError(f"bad exponent in {f!r}")
                e = int(ex) if ex else 1
                i = table.var(base)
                if e:
                    m[i] = m.get(i, 0) + e
            if sign == "-":
                c = -c
            mm = tuple(sorted(m.items()))
            t[mm] = t.get(mm, 0) + c
        return cls(table, t)


# Variable names may contain "-" (negative coordinates); hide those minus
# signs from the term splitter.
_PROTECT = "\x00"


def _protect(s: str) -> str:
    return re.sub(r"_-", "_" + _PROTECT, s)


def _unprotect(s: str) -> str:
    return s.replace(_PROTECT, "-")
