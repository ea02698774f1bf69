"""Monomial orders and the packed-integer monomial layout.

A monomial is packed into one Python int made of 16-bit fields. From
the most significant end: one field per row of the order matrix, one
field per variable exponent, and a trailing total-degree field. All
order rows are nonnegative, so

* the monomial 1 packs to 0 and multiplication is integer addition,
* comparing monomials in the order is comparing the integers,
* divisibility is a single borrow test against the guard bits.

Each field keeps its top bit as a guard, so values stay below 2**15.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

FIELD = 16
VALUE_MASK = (1 << (FIELD - 1)) - 1
MAX_EXPONENT = VALUE_MASK


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on variable indices ``0..n-1``.

    Parameters
    ----------
    kind : {"degrevlex", "lex", "block"}
    sequence : tuple of int, optional
        Variables from largest to smallest for degrevlex and lex.
        Defaults to ``0, 1, ..., n-1``.
    blocks : tuple of tuple of int, optional
        For ``block``: variable groups, most significant first, each
        ordered by degrevlex internally.
    """

    kind: str = "degrevlex"
    sequence: tuple[int, ...] | None = None
    blocks: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and not self.blocks:
            raise ValueError("block order needs blocks")

    @classmethod
    def elimination(cls, eliminate: Sequence[int], keep: Sequence[int]) -> "MonomialOrder":
        """Block order with ``eliminate`` in the leading block."""
        return cls("block", blocks=(tuple(eliminate), tuple(keep)))

    def rows(self, n: int) -> list[list[int]]:
        """Nonnegative weight rows realizing the order on ``n`` variables."""
        if self.kind == "block":
            seen = [i for b in self.blocks for i in b]
            if sorted(seen) != list(range(n)):
                raise ValueError("blocks must partition the variables")
            out = []
            for b in self.blocks:
                out.extend(_degrevlex_rows(list(b), n))
            return out
        seq = list(self.sequence) if self.sequence is not None else list(range(n))
        if sorted(seq) != list(range(n)):
            raise ValueError("sequence must be a permutation of the variables")
        if self.kind == "lex":
            rows = []
            for i in seq:
                r = [0] * n
                r[i] = 1
                rows.append(r)
            return rows
        return _degrevlex_rows(seq, n)

    def describe(self) -> str:
        if self.kind == "block":
            return "block(" + "|".join(",".join(map(str, b)) for b in self.blocks) + ")"
        return self.kind


def _degrevlex_rows(seq: list[int], n: int) -> list[list[int]]:
    # total degree, then prefix sums dropping the smallest variable first
    rows = []
    for cut in range(len(seq), 0, -1):
        r = [0] * n
        for i in seq[:cut]:
            r[i] = 1
        rows.append(r)
    return rows


class Layout:
    """Packing of exponent vectors for a fixed order and variable count."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        rows = order.rows(nvars)
        self.nrows = len(rows)
        nf = 1 + nvars + self.nrows
        self.nfields = nf
        guard = 0
        for f in range(nf):
            guard |= 1 << (FIELD * f + FIELD - 1)
        self.guard = guard
        expmask = 0
        for i in range(nvars):
            expmask |= VALUE_MASK << (FIELD * (1 + i))
        self.expmask = expmask
        self.degmask = VALUE_MASK
        var = []
        for i in range(nvars):
            m = 1 | (1 << (FIELD * (1 + i)))
            for r, row in enumerate(rows):
                if row[i]:
                    # row r is the key field at index nf - 1 - r
                    m += row[i] << (FIELD * (nf - 1 - r))
            var.append(m)
        self.var = var
        self._ones = sum(VALUE_MASK << (FIELD * f) for f in range(nf))

    # -- conversion ---------------------------------------------------------

    def pack(self, exps: Sequence[int]) -> int:
        m = 0
        var = self.var
        for i, e in enumerate(exps):
            if e:
                if e < 0 or e > MAX_EXPONENT:
                    raise OverflowError(f"exponent {e} out of range")
                m += e * var[i]
        return m

    def pack_sparse(self, items) -> int:
        """Pack from ``((var, exp), ...)`` pairs."""
        m = 0
        var = self.var
        for i, e in items:
            if e < 0 or e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} out of range")
            m += e * var[i]
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> (FIELD * (1 + i))) & VALUE_MASK for i in range(self.nvars))

    def unpack_sparse(self, m: int) -> tuple[tuple[int, int], ...]:
        out = []
        q = (m & self.expmask)
        while q:
            low = q & -q
            f = (low.bit_length() - 1) // FIELD
            val = (q >> (FIELD * f)) & VALUE_MASK
            out.append((f - 1, val))
            q ^= val << (FIELD * f)
        return tuple(out)

    # -- arithmetic -----------------------------------------------------------

    def degree(self, m: int) -> int:
        return m & VALUE_MASK

    def exponent(self, m: int, i: int) -> int:
        return (m >> (FIELD * (1 + i))) & VALUE_MASK

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        """Least common multiple of two packed monomials."""
        g = self.guard
        diff = (b | g) - a
        fill = ((diff & g) >> (FIELD - 1)) * VALUE_MASK
        q = diff & fill & self.expmask
        out = a
        var = self.var
        while q:
            low = q & -q
            f = (low.bit_length() - 1) // FIELD
            val = (q >> (FIELD * f)) & VALUE_MASK
            out += val * var[f - 1]
            q ^= val << (FIELD * f)
        return out

    def support_mask(self, m: int) -> int:
        """Guard bits marking the variables occurring in ``m``."""
        e = m & self.expmask
        return (e + (self._ones & self.expmask)) & self.guard

    def coprime(self, a: int, b: int) -> bool:
        return self.support_mask(a) & self.support_mask(b) == 0

    def max_power(self, m: int, i: int) -> int:
        return (m >> (FIELD * (1 + i))) & VALUE_MASK
