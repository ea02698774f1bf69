"""Buchberger's algorithm with Gebauer-Moeller pair pruning.

Two engines share the pair bookkeeping:

* :func:`binomial_groebner` for ideals generated by pure differences
  ``x^a - x^b`` and monomials. The normal form of a monomial is again a
  monomial (or zero), so no coefficients are stored at all.
* :func:`groebner` for general polynomials with rational or prime-field
  coefficients.

Polynomials enter and leave as lists of ``(packed_monomial, coeff)``
sorted decreasingly in the layout's order.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from . import kernel
from .monomials import Layout

NONE = -1  # tail marker for monomial elements of the binomial engine


class _PairEngine:
    """Element store plus the Gebauer-Moeller critical pair queue."""

    def __init__(self, layout: Layout):
        self.L = layout
        self.leads: list[int] = []
        self.sugar: list[int] = []
        self.alive: list[bool] = []
        self.pairs: list[tuple[int, int, int, int]] = []
        self.red: list[int] = []  # indices of alive elements, reduction order
        self.tab = kernel.LeadTable(layout.guard, layout.expmask, layout.var)

    def _register(self, lead: int, sugar: int) -> int:
        h = len(self.leads)
        self.leads.append(lead)
        self.sugar.append(sugar)
        self.alive.append(True)
        return h

    def _tail(self, k: int) -> int:
        return NONE

    def _rebuild_reducers(self):
        self.red = [k for k, a in enumerate(self.alive) if a]
        self.tab.reset([self.leads[k] for k in self.red], [self._tail(k) for k in self.red])

    def _update(self, h: int):
        guard = self.L.guard
        leads = self.leads
        lh = leads[h]
        degh = lh & 0x7FFF
        sug_h = self.sugar[h]
        red = self.red
        new_pairs = []
        for lc, pos in self.tab.new_pairs(lh, -1):
            g = red[pos]
            dl = lc & 0x7FFF
            s = max(sug_h + dl - degh, self.sugar[g] + dl - (leads[g] & 0x7FFF))
            new_pairs.append((s, lc, g, h))
        # criterion B on the old pairs
        if self.pairs:
            kept = []
            changed = False
            lcm = self.tab.lcm
            for p in self.pairs:
                lc = p[1]
                if ((lc | guard) - lh) & guard == guard:
                    if lcm(leads[p[2]], lh) != lc and lcm(leads[p[3]], lh) != lc:
                        changed = True
                        continue
                kept.append(p)
            if changed:
                self.pairs = kept
                heapq.heapify(self.pairs)
        for p in new_pairs:
            heapq.heappush(self.pairs, p)
        # elements whose lead is a multiple of lh leave the basis
        dropped = False
        for g in red:
            if ((leads[g] | guard) - lh) & guard == guard:
                self.alive[g] = False
                dropped = True
        if dropped:
            self._rebuild_reducers()
        else:
            red.append(h)
            self.tab.append(lh, self._tail(h))


# ---------------------------------------------------------------------------
# binomial engine


class _BinomialEngine(_PairEngine):
    def __init__(self, layout: Layout):
        super().__init__(layout)
        self.tails: list[int] = []
        self.unit = False

    def _tail(self, k: int) -> int:
        return self.tails[k]

    def nf(self, m: int) -> int:
        if m < 0:
            return NONE
        return self.tab.bin_nf(m)

    def add(self, a: int, b: int, sugar: int):
        """Add ``a - b`` (``b = NONE`` for a monomial) after reduction."""
        a = self.nf(a)
        b = self.nf(b)
        if a == b:
            return
        if a < b:
            a, b = b, a
        if a == 0:
            self.unit = True
        h = self._register(a, sugar)
        self.tails.append(b)
        self._update(h)

    def run(self):
        while self.pairs and not self.unit:
            _s, lc, i, j = heapq.heappop(self.pairs)
            ti, tj = self.tails[i], self.tails[j]
            a = NONE if ti == NONE else lc - self.leads[i] + ti
            b = NONE if tj == NONE else lc - self.leads[j] + tj
            if a == NONE and b == NONE:
                continue
            if a == NONE:
                a, b = b, NONE
            self.add(a, b, _s)

    def reduced_basis(self) -> list[tuple[int, int]]:
        if self.unit:
            return [(0, NONE)]
        out = []
        for k in self.red:
            t = self.tails[k]
            if t != NONE:
                # the element itself cannot reduce its own tail
                t = self.tab.bin_nf(t)
            out.append((self.leads[k], t))
        out.sort(reverse=True)
        return out


def _homogeneous_sugar(L: Layout, a: int, b: int) -> int:
    da = a & 0x7FFF
    db = b & 0x7FFF if b != NONE else 0
    return max(da, db)


def binomial_groebner(gens, layout: Layout) -> list[tuple[int, int]]:
    """Reduced Groebner basis of an ideal of unital binomials.

    Parameters
    ----------
    gens : iterable of (int, int)
        Pairs ``(a, b)`` standing for ``x^a - x^b``; ``b = -1`` encodes
        the monomial ``x^a``. Orientation does not matter.
    layout : Layout

    Returns
    -------
    list of (int, int)
        ``(lead, tail)`` pairs sorted by decreasing lead, ``tail = -1``
        for monomials. ``[(0, -1)]`` is the unit ideal.
    """
    eng = _BinomialEngine(layout)
    items = []
    for a, b in gens:
        if b != NONE and a == b:
            continue
        if b != NONE and a < b:
            a, b = b, a
        items.append((a, b))
    items.sort()
    for a, b in items:
        eng.add(a, b, _homogeneous_sugar(layout, a, b))
        if eng.unit:
            return [(0, NONE)]
    eng.run()
    return eng.reduced_basis()


def lead_table(layout: Layout, leads=(), tails=None):
    tab = kernel.LeadTable(layout.guard, layout.expmask, layout.var)
    tab.reset(list(leads), None if tails is None else list(tails))
    return tab


def binomial_nf(m: int, basis: list[tuple[int, int]], layout: Layout) -> int:
    """Normal form of a monomial with respect to a binomial basis."""
    return lead_table(layout, [g[0] for g in basis], [g[1] for g in basis]).bin_nf(m)


# ---------------------------------------------------------------------------
# general engine


def _monic(terms, modulus):
    lc = terms[0][1]
    if lc == 1:
        return terms
    if modulus:
        inv = pow(lc, -1, modulus)
        return [(m, c * inv % modulus) for m, c in terms]
    out = []
    for m, c in terms:
        q = Fraction(c) / lc
        out.append((m, q.numerator if q.denominator == 1 else q))
    return out


def _normalize_coeffs(terms, modulus):
    if modulus:
        return [(m, c % modulus) for m, c in terms if c % modulus]
    out = []
    for m, c in terms:
        if isinstance(c, Fraction) and c.denominator == 1:
            c = c.numerator
        if c:
            out.append((m, c))
    return out


class _GeneralEngine(_PairEngine):
    def __init__(self, layout: Layout, modulus: int):
        super().__init__(layout)
        self.modulus = modulus
        self.polys: list[list] = []
        self.red_polys: list[list] = []
        self.unit = False

    def _rebuild_reducers(self):
        super()._rebuild_reducers()
        self.red_polys = [self.polys[k] for k in self.red]

    def nf(self, terms):
        return kernel.poly_nf(terms, self.tab, self.red_polys, self.modulus)

    def add(self, terms, sugar: int):
        r = self.nf(terms)
        if not r:
            return
        r = _monic(r, self.modulus)
        if r[0][0] == 0:
            self.unit = True
        h = self._register(r[0][0], sugar)
        self.polys.append(r)
        self._update(h)
        if len(self.red_polys) != len(self.red):
            # _update appended h without a rebuild
            self.red_polys.append(r)

    def spoly(self, i: int, j: int, lc: int):
        f, g = self.polys[i], self.polys[j]
        si = lc - f[0][0]
        sj = lc - g[0][0]
        terms = [(m + si, c) for m, c in f[1:]]
        terms.extend((m + sj, -c) for m, c in g[1:])
        return terms

    def run(self):
        while self.pairs and not self.unit:
            s, lc, i, j = heapq.heappop(self.pairs)
            terms = self.spoly(i, j, lc)
            if terms:
                self.add(terms, s)

    def reduced_basis(self):
        if self.unit:
            return [[(0, 1)]]
        idx = list(self.red)
        out = []
        leads = [self.leads[k] for k in idx]
        polys = [self.polys[k] for k in idx]
        for p in range(len(idx)):
            f = polys[p]
            # leads are pairwise non-dividing, so f itself never reduces its tail
            tail = kernel.poly_nf(f[1:], self.tab, self.red_polys, self.modulus)
            r = [f[0]] + sorted(tail, reverse=True)
            out.append(_normalize_coeffs(r, self.modulus))
        out.sort(key=lambda t: t[0][0], reverse=True)
        return out


def _max_degree(terms) -> int:
    return max(m & 0x7FFF for m, _ in terms)


def groebner(polys, layout: Layout, modulus: int = 0):
    """Reduced Groebner basis of polynomials given as term lists.

    Parameters
    ----------
    polys : iterable of list of (int, coeff)
    layout : Layout
    modulus : int
        0 for rational coefficients, otherwise a prime.

    Returns
    -------
    list of list of (int, coeff)
        Monic reduced basis, terms sorted decreasingly, elements sorted by
        decreasing lead. ``[[(0, 1)]]`` is the unit ideal.
    """
    eng = _GeneralEngine(layout, modulus)
    items = []
    for f in polys:
        f = _normalize_coeffs(f, modulus)
        if f:
            f.sort(key=lambda t: t[0], reverse=True)
            items.append(f)
    items.sort(key=lambda f: f[0][0])
    for f in items:
        eng.add(f, _max_degree(f))
        if eng.unit:
            return [[(0, 1)]]
    eng.run()
    return eng.reduced_basis()


def poly_normal_form(terms, basis, layout: Layout, modulus: int = 0):
    """Full normal form of ``terms`` modulo a (monic) basis."""
    tab = lead_table(layout, [g[0][0] for g in basis])
    r = kernel.poly_nf(terms, tab, basis, modulus)
    r.sort(key=lambda t: t[0], reverse=True)
    return _normalize_coeffs(r, modulus)
