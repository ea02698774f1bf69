# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Reduction kernels on packed monomials (compiled implementation).

Same interface as ``_pykernel``. Monomials cross the boundary as Python
ints and are stored internally as little-endian arrays of 64-bit words,
four 16-bit fields per word. Because every field carries its own guard
bit, the borrow tricks used for divisibility never cross a word boundary,
so each word is tested independently.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Realloc, PyMem_Free
from libc.string cimport memcpy, memset, memcmp
from libc.stdint cimport uint64_t
from heapq import heapify, heappop, heappush

NAME = "cython"

cdef uint64_t GUARDW = 0x8000800080008000ULL
cdef uint64_t VMASK = 0x7FFF


cdef inline bint w_divides(const uint64_t* a, const uint64_t* b, int nw) nogil:
    cdef int w
    for w in range(nw):
        if (((b[w] | GUARDW) - a[w]) & GUARDW) != GUARDW:
            return False
    return True


cdef class LeadTable:
    """Reducer leads (and binomial tails) for one layout."""

    cdef int nw
    cdef int nbytes
    cdef int nvars
    cdef int count
    cdef int cap
    cdef uint64_t* lw
    cdef uint64_t* tails
    cdef char* hastail
    cdef uint64_t* var
    cdef uint64_t* expmask
    cdef uint64_t* ones
    cdef uint64_t* buf
    cdef uint64_t* buf2
    cdef readonly object guard
    cdef public list pyleads

    def __cinit__(self, guard, expmask, var):
        nbits = max(int(guard).bit_length(), 16)
        self.nw = (nbits + 63) // 64
        self.nbytes = self.nw * 8
        self.nvars = len(var)
        self.count = 0
        self.cap = 0
        self.lw = NULL
        self.tails = NULL
        self.hastail = NULL
        self.var = <uint64_t*> PyMem_Malloc(max(1, self.nvars) * self.nbytes)
        self.expmask = <uint64_t*> PyMem_Malloc(self.nbytes)
        self.ones = <uint64_t*> PyMem_Malloc(self.nbytes)
        self.buf = <uint64_t*> PyMem_Malloc(self.nbytes)
        self.buf2 = <uint64_t*> PyMem_Malloc(self.nbytes)
        if not (self.var and self.expmask and self.ones and self.buf and self.buf2):
            raise MemoryError()
        self.guard = guard
        self.pyleads = []
        cdef int i
        for i in range(self.nvars):
            self._load(var[i], self.var + i * self.nw)
        self._load(expmask, self.expmask)
        # 0x7FFF in every exponent field: adding it flags nonzero exponents
        self._load(expmask, self.ones)

    def __dealloc__(self):
        PyMem_Free(self.lw)
        PyMem_Free(self.tails)
        PyMem_Free(self.hastail)
        PyMem_Free(self.var)
        PyMem_Free(self.expmask)
        PyMem_Free(self.ones)
        PyMem_Free(self.buf)
        PyMem_Free(self.buf2)

    cdef int _load(self, object m, uint64_t* dst) except -1:
        if self.nw == 1:
            dst[0] = <uint64_t> m
            return 0
        cdef bytes b = (<object>m).to_bytes(self.nbytes, "little")
        memcpy(dst, <char*> b, self.nbytes)
        return 0

    cdef object _store(self, const uint64_t* src):
        if self.nw == 1:
            return src[0]
        return int.from_bytes((<char*> src)[:self.nbytes], "little")

    cdef int _grow(self, int need) except -1:
        cdef int cap = self.cap
        if need <= cap:
            return 0
        cap = max(need, 2 * cap, 16)
        cdef void* p = PyMem_Realloc(self.lw, cap * self.nbytes)
        if p == NULL:
            raise MemoryError()
        self.lw = <uint64_t*> p
        p = PyMem_Realloc(self.tails, cap * self.nbytes)
        if p == NULL:
            raise MemoryError()
        self.tails = <uint64_t*> p
        p = PyMem_Realloc(self.hastail, cap)
        if p == NULL:
            raise MemoryError()
        self.hastail = <char*> p
        self.cap = cap
        return 0

    def __len__(self):
        return self.count

    @property
    def leads(self):
        return list(self.pyleads)

    def reset(self, leads, tails=None):
        self.count = 0
        self.pyleads = []
        cdef Py_ssize_t k
        n = len(leads)
        self._grow(n)
        for k in range(n):
            self.append(leads[k], -1 if tails is None else tails[k])

    def append(self, lead, tail=-1):
        self._grow(self.count + 1)
        cdef int k = self.count
        self._load(lead, self.lw + k * self.nw)
        if tail is None or tail < 0:
            self.hastail[k] = 0
            memset(self.tails + k * self.nw, 0, self.nbytes)
        else:
            self.hastail[k] = 1
            self._load(tail, self.tails + k * self.nw)
        self.pyleads.append(lead)
        self.count = k + 1

    cdef int _find(self, const uint64_t* m) nogil:
        cdef int i
        cdef int nw = self.nw
        for i in range(self.count):
            if w_divides(self.lw + i * nw, m, nw):
                return i
        return -1

    def find(self, m):
        """Position of the first lead dividing ``m``, or -1."""
        self._load(m, self.buf)
        return self._find(self.buf)

    def bin_nf(self, m):
        """Normal form of a monomial modulo the binomial reducers (-1 for zero)."""
        self._load(m, self.buf)
        cdef uint64_t* x = self.buf
        cdef int nw = self.nw
        cdef int i = 0, w
        cdef uint64_t* g
        cdef uint64_t* t
        with nogil:
            while i < self.count:
                g = self.lw + i * nw
                if w_divides(g, x, nw):
                    if not self.hastail[i]:
                        i = -1
                        break
                    t = self.tails + i * nw
                    for w in range(nw):
                        x[w] = x[w] - g[w] + t[w]
                    i = 0
                else:
                    i += 1
        if i == -1:
            return -1
        return self._store(x)

    cdef void _lcm(self, const uint64_t* a, const uint64_t* b, uint64_t* out) nogil:
        cdef int nw = self.nw
        cdef int w, f, v
        cdef uint64_t d, fill, q, val
        cdef uint64_t* vp
        memcpy(out, a, self.nbytes)
        for w in range(nw):
            d = (b[w] | GUARDW) - a[w]
            fill = ((d & GUARDW) >> 15) * VMASK
            q = d & fill & self.expmask[w]
            if q:
                for f in range(4):
                    val = (q >> (16 * f)) & VMASK
                    if val:
                        v = w * 4 + f - 1
                        vp = self.var + v * nw
                        for_add(out, vp, val, nw)

    def lcm(self, a, b):
        self._load(a, self.buf)
        self._load(b, self.buf2)
        cdef uint64_t* out = <uint64_t*> PyMem_Malloc(self.nbytes)
        if out == NULL:
            raise MemoryError()
        try:
            self._lcm(self.buf, self.buf2, out)
            return self._store(out)
        finally:
            PyMem_Free(out)

    cdef bint _coprime(self, const uint64_t* a, const uint64_t* b) nogil:
        cdef int w
        cdef uint64_t sa, sb
        for w in range(self.nw):
            sa = ((a[w] & self.expmask[w]) + self.ones[w]) & GUARDW
            sb = ((b[w] & self.expmask[w]) + self.ones[w]) & GUARDW
            if sa & sb:
                return False
        return True

    def new_pairs(self, lh, int skip):
        """Critical pairs of a new lead surviving criteria M, F and the
        product criterion, as a list of ``(lcm, position)``."""
        cdef int nw = self.nw
        cdef int n = self.count
        cdef int i, j, k, nmin = 0
        cdef uint64_t* lcms = <uint64_t*> PyMem_Malloc(max(1, n) * self.nbytes)
        cdef int* order = <int*> PyMem_Malloc(max(1, n) * sizeof(int))
        cdef int* minimal = <int*> PyMem_Malloc(max(1, n) * sizeof(int))
        cdef char* cop = <char*> PyMem_Malloc(max(1, n))
        cdef char* mincop = <char*> PyMem_Malloc(max(1, n))
        if not (lcms and order and minimal and cop and mincop):
            PyMem_Free(lcms); PyMem_Free(order); PyMem_Free(minimal)
            PyMem_Free(cop); PyMem_Free(mincop)
            raise MemoryError()
        self._load(lh, self.buf)
        cdef uint64_t* h = self.buf
        cdef int m = 0
        cdef bint keep
        cdef uint64_t* lc
        cdef uint64_t* q
        out = []
        try:
            with nogil:
                for i in range(n):
                    if i == skip:
                        continue
                    self._lcm(h, self.lw + i * nw, lcms + i * nw)
                    cop[i] = self._coprime(h, self.lw + i * nw)
                    order[m] = i
                    m += 1
                # insertion sort by lcm degree (field 0)
                for i in range(1, m):
                    k = order[i]
                    j = i - 1
                    while j >= 0 and (lcms[order[j] * nw] & VMASK) > (lcms[k * nw] & VMASK):
                        order[j + 1] = order[j]
                        j -= 1
                    order[j + 1] = k
                for i in range(m):
                    k = order[i]
                    lc = lcms + k * nw
                    keep = True
                    for j in range(nmin):
                        q = lcms + minimal[j] * nw
                        if w_divides(q, lc, nw):
                            if memcmp(q, lc, self.nbytes) == 0 and cop[k]:
                                mincop[j] = 1
                            keep = False
                            break
                    if keep:
                        minimal[nmin] = k
                        mincop[nmin] = cop[k]
                        nmin += 1
            for j in range(nmin):
                if not mincop[j]:
                    out.append((self._store(lcms + minimal[j] * nw), minimal[j]))
        finally:
            PyMem_Free(lcms); PyMem_Free(order); PyMem_Free(minimal)
            PyMem_Free(cop); PyMem_Free(mincop)
        return out


cdef inline void for_add(uint64_t* out, const uint64_t* vp, uint64_t val, int nw) nogil:
    cdef int w
    for w in range(nw):
        out[w] += val * vp[w]


def poly_nf(terms, LeadTable table, list polys, modulus):
    """Full normal form of a polynomial; see the pure-Python kernel."""
    acc = {}
    for m, c in terms:
        acc[m] = acc.get(m, 0) + c
    heap = [-m for m in acc]
    heapify(heap)
    out = []
    cdef list leads = table.pyleads
    cdef Py_ssize_t i, k
    cdef list g
    while heap:
        m = -heappop(heap)
        c = acc.pop(m, 0)
        if modulus:
            c %= modulus
        if not c:
            continue
        table._load(m, table.buf)
        i = table._find(table.buf)
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
