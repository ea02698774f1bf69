"""Reduction kernels on packed monomials (pure-Python implementation).

The compiled module ``_ckernel`` exports the same names with the same
semantics; :mod:`polyoideal.kernel` picks one at import time.

A :class:`LeadTable` holds the current reducers of a Groebner basis
computation: their leading monomials and, for the binomial engine, their
tails (``-1`` marks a monomial reducer).
"""

from heapq import heapify, heappop, heappush

NAME = "python"

FIELD = 16
VMASK = 0x7FFF


class LeadTable:
    """Reducer leads (and binomial tails) for one layout.

    Parameters
    ----------
    guard : int
        Guard mask of the layout.
    expmask : int
        Mask of the exponent fields.
    var : list of int
        Packed variables ``x_0 .. x_{n-1}``.
    """

    def __init__(self, guard, expmask, var):
        self.guard = guard
        self.expmask = expmask
        self.var = list(var)
        self.leads = []
        self.tails = []
        self._ones = 0
        for i in range(len(var)):
            self._ones |= VMASK << (FIELD * (1 + i))

    def __len__(self):
        return len(self.leads)

    def reset(self, leads, tails=None):
        self.leads = list(leads)
        self.tails = list(tails) if tails is not None else [-1] * len(self.leads)

    def append(self, lead, tail=-1):
        self.leads.append(lead)
        self.tails.append(tail)

    def find(self, m):
        """Position of the first lead dividing ``m``, or -1."""
        guard = self.guard
        mg = m | guard
        for i, g in enumerate(self.leads):
            if (mg - g) & guard == guard:
                return i
        return -1

    def bin_nf(self, m):
        """Normal form of the monomial ``m`` modulo the binomial reducers.

        Returns the reduced monomial, or -1 when it reduces to zero.
        """
        guard = self.guard
        leads = self.leads
        tails = self.tails
        n = len(leads)
        i = 0
        while i < n:
            g = leads[i]
            if ((m | guard) - g) & guard == guard:
                t = tails[i]
                if t < 0:
                    return -1
                m = m - g + t
                i = 0
            else:
                i += 1
        return m

    def lcm(self, a, b):
        guard = self.guard
        diff = (b | guard) - a
        fill = ((diff & guard) >> (FIELD - 1)) * VMASK
        q = diff & fill & self.expmask
        out = a
        var = self.var
        while q:
            low = q & -q
            f = (low.bit_length() - 1) // FIELD
            val = (q >> (FIELD * f)) & VMASK
            out += val * var[f - 1]
            q ^= val << (FIELD * f)
        return out

    def new_pairs(self, lh, skip):
        """Critical pairs of a new lead ``lh`` surviving the Gebauer-Moeller
        criteria M, F and the product criterion.

        Returns a list of ``(lcm, position)``; ``skip`` is a position to
        ignore (the new element itself) or -1.
        """
        guard = self.guard
        ones = self._ones
        sh = ((lh & self.expmask) + ones) & guard
        cand = []
        for pos, lg in enumerate(self.leads):
            if pos == skip:
                continue
            lc = self.lcm(lh, lg)
            sg = ((lg & self.expmask) + ones) & guard
            cand.append((lc & VMASK, lc, pos, (sh & sg) == 0))
        cand.sort(key=lambda c: c[0])
        minimal = []  # [lcm, pos, coprime]
        for _d, lc, pos, cop in cand:
            lcg = lc | guard
            keep = True
            for q in minimal:
                if (lcg - q[0]) & guard == guard:
                    if q[0] == lc:
                        q[2] = q[2] or cop
                    keep = False
                    break
            if keep:
                minimal.append([lc, pos, cop])
        return [(q[0], q[1]) for q in minimal if not q[2]]


def poly_nf(terms, table, polys, modulus):
    """Full normal form of a polynomial.

    Parameters
    ----------
    terms : list of (int, coeff)
        Packed monomials with nonzero coefficients, any order.
    table : LeadTable
        Leads of the reducers.
    polys : list
        ``polys[i]`` is a monic term list sorted decreasingly whose first
        monomial is ``table.leads[i]``.
    modulus : int
        Characteristic for prime-field arithmetic, or 0 for rationals.

    Returns
    -------
    list of (int, coeff)
        Irreducible remainder sorted decreasingly.
    """
    acc = {}
    for m, c in terms:
        acc[m] = acc.get(m, 0) + c
    heap = [-m for m in acc]
    heapify(heap)
    out = []
    find = table.find
    leads = table.leads
    while heap:
        m = -heappop(heap)
        c = acc.pop(m, 0)
        if modulus:
            c %= modulus
        if not c:
            continue
        i = find(m)
        if i < 0:
            out.append((m, c))
            continue
        shift = m - leads[i]
        g = polys[i]
        for k in range(1, len(g)):
            gm, gc = g[k]
            mm = gm + shift
            v = acc.get(mm)
            if v is None:
                acc[mm] = -c * gc
                heappush(heap, -mm)
            else:
                v -= c * gc
                if modulus:
                    v %= modulus
                if v:
                    acc[mm] = v
                else:
                    del acc[mm]
    return out
