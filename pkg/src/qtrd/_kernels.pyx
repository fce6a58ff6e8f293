# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels (graphs of at most 64 vertices).

Mirrors ``_kernels_py`` function for function: same traversal order, same
floating-point bound arithmetic, hence identical results and node counts.
"""

import time

from libc.math cimport ceil
from libc.string cimport memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    CHECK_MASK = 4095

ROMAN, QUASI_TOTAL, TOTAL_ROMAN = 0, 1, 2
DOMINATING, TOTAL_DOMINATING, PACKING, EFFICIENT = 0, 1, 2, 3
RULE_BOUND, RULE_SUPPORT, RULE_COVER, RULE_COMPLETE = 1, 2, 4, 8
ALL_RULES = 15
MAX_BITS = MAXN

cdef inline int popc(u64 x) nogil:
    return __builtin_popcountll(x)

cdef inline int low(u64 x) nogil:
    return __builtin_ctzll(x)

cdef inline u64 full_mask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef void load(object adj, int n, u64* a, u64* closed):
    cdef int v
    for v in range(n):
        a[v] = <u64>adj[v]
        closed[v] = a[v] | ((<u64>1) << v)


cdef inline u64 union_of(const u64* masks, u64 sel) nogil:
    cdef u64 out = 0
    while sel:
        out |= masks[low(sel)]
        sel &= sel - 1
    return out


cdef bint labeling_ok(const u64* a, int n, int kind, u64 ones, u64 twos) nogil:
    cdef u64 pos = ones | twos
    cdef u64 zeros = full_mask(n) & ~pos
    cdef u64 sel
    if zeros & ~union_of(a, twos):
        return False
    if kind == 1:
        sel = twos
    elif kind == 2:
        sel = pos
    else:
        return True
    while sel:
        if not (a[low(sel)] & pos):
            return False
        sel &= sel - 1
    return True


def labeling_valid(adj, int n, int kind, ones, twos):
    cdef u64 a[MAXN]
    cdef u64 c[MAXN]
    load(adj, n, a, c)
    return labeling_ok(a, n, kind, <u64>ones, <u64>twos)


def brute_labeling(adj, int n, int kind):
    cdef u64 a[MAXN]
    cdef u64 c[MAXN]
    cdef int digits[MAXN]
    cdef u64 ones = 0, twos = 0, best_ones = 0, best_twos = 0, bit
    cdef long long best = -1, w = 0, visited = 0
    cdef int i, d
    load(adj, n, a, c)
    memset(digits, 0, sizeof(digits))
    with nogil:
        while True:
            visited += 1
            if (best < 0 or w < best) and labeling_ok(a, n, kind, ones, twos):
                best = w
                best_ones = ones
                best_twos = twos
            i = n - 1
            while i >= 0:
                bit = (<u64>1) << i
                d = digits[i]
                if d == 0:
                    digits[i] = 1
                    ones |= bit
                    w += 1
                    break
                if d == 1:
                    digits[i] = 2
                    ones ^= bit
                    twos |= bit
                    w += 1
                    break
                digits[i] = 0
                twos ^= bit
                w -= 2
                i -= 1
            if i < 0:
                break
    return best, best_ones, best_twos, visited


cdef inline bint lex_less(u64 x, u64 y) nogil:
    cdef u64 d = x ^ y
    return (x & d & (~d + 1)) != 0


def brute_subset(adj, int n, int kind):
    cdef u64 a[MAXN]
    cdef u64 c[MAXN]
    cdef u64 full = full_mask(n), mask, u, sel, best_mask = 0, top
    cdef long long best = -1, size
    cdef bint ok, better
    load(adj, n, a, c)
    top = (<u64>1) << n
    with nogil:
        mask = 0
        while mask < top:
            size = popc(mask)
            if kind == 0:
                ok = union_of(c, mask) == full
            elif kind == 1:
                ok = union_of(a, mask) == full
            else:
                u = 0
                ok = True
                sel = mask
                while sel:
                    if u & c[low(sel)]:
                        ok = False
                        break
                    u |= c[low(sel)]
                    sel &= sel - 1
                if ok and kind == 3:
                    ok = u == full
            if ok:
                if best < 0:
                    better = True
                elif kind == 2:
                    better = size > best or (size == best and lex_less(mask, best_mask))
                else:
                    better = size < best or (size == best and lex_less(mask, best_mask))
                if better:
                    best = size
                    best_mask = mask
            mask += 1
    return best, best_mask, <long long>top


cdef class _LabelSearch:
    cdef int n, kind, rules
    cdef u64 full
    cdef u64 a[MAXN]
    cdef u64 closed[MAXN]
    cdef int cap[MAXN]
    cdef int order[MAXN]
    cdef long long best_w, nodes
    cdef u64 best_ones, best_twos
    cdef double deadline
    cdef bint timed_out

    cdef bint supported(self, u64 A1, u64 A2):
        cdef u64 pos = A1 | A2, sel
        if self.kind == 1:
            sel = A2
        elif self.kind == 2:
            sel = pos
        else:
            return True
        while sel:
            if not (self.a[low(sel)] & pos):
                return False
            sel &= sel - 1
        return True

    cdef long long lower_bound(self, u64 A0, u64 Un, u64 cov):
        cdef u64 need = (Un | A0) & ~cov, sel, cands
        cdef int cover[MAXN]
        cdef int u, x, c
        cdef double total = 0.0, share, inf = 1e300
        for x in range(self.n):
            cover[x] = -1
        sel = need
        while sel:
            u = low(sel)
            sel &= sel - 1
            if (Un >> u) & 1:
                share = 1.0
                cands = self.closed[u] & Un
            else:
                share = inf
                cands = self.a[u] & Un
            while cands:
                x = low(cands)
                cands &= cands - 1
                c = cover[x]
                if c < 0:
                    c = popc(self.closed[x] & need)
                    if self.cap[x] < c:
                        c = self.cap[x]
                    cover[x] = c
                if c > 0 and 2.0 / c < share:
                    share = 2.0 / c
            if share == inf:
                return -1
            total += share
        return <long long>ceil(total - 1e-9)

    cdef void rec(self, int i, long long w, u64 A0, u64 A1, u64 A2, u64 Un, u64 cov):
        cdef int v, z, y
        cdef u64 bit, Un2, a, sel
        cdef long long lb
        cdef bint ok
        if self.timed_out:
            return
        self.nodes += 1
        if self.deadline > 0 and (self.nodes & CHECK_MASK) == 0:
            if time.monotonic() > self.deadline:
                self.timed_out = True
                return
        if w >= self.best_w:
            return
        if (self.rules & 8) and not ((Un | A0) & ~cov) and self.supported(A1, A2):
            self.best_w = w
            self.best_ones = A1
            self.best_twos = A2
            return
        if self.rules & 1:
            lb = self.lower_bound(A0, Un, cov)
            if lb < 0 or w + lb >= self.best_w:
                return
        if i == self.n:
            if labeling_ok(self.a, self.n, self.kind, A1, A2):
                self.best_w = w
                self.best_ones = A1
                self.best_twos = A2
            return
        v = self.order[i]
        bit = (<u64>1) << v
        Un2 = Un & ~bit
        a = self.a[v]
        # label 2
        if w + 2 < self.best_w:
            if not ((self.rules & 2) and self.kind != 0 and not (a & (A1 | A2 | Un2))):
                self.rec(i + 1, w + 2, A0, A1, A2 | bit, Un2, cov | self.closed[v])
        # label 0
        ok = True
        if self.rules & 4:
            if not ((cov >> v) & 1) and not (a & (A2 | Un2)):
                ok = False
            else:
                sel = a & A0 & ~cov
                while sel:
                    z = low(sel)
                    sel &= sel - 1
                    if not (self.a[z] & (A2 | Un2)):
                        ok = False
                        break
        if ok and (self.rules & 2) and self.kind != 0:
            if self.kind == 1:
                sel = a & A2
            else:
                sel = a & (A1 | A2)
            while sel:
                y = low(sel)
                sel &= sel - 1
                if not (self.a[y] & (A1 | A2 | Un2)):
                    ok = False
                    break
        if ok:
            self.rec(i + 1, w, A0 | bit, A1, A2, Un2, cov)
        # label 1
        if w + 1 < self.best_w:
            ok = True
            if self.rules & 4:
                sel = a & A0 & ~cov
                while sel:
                    z = low(sel)
                    sel &= sel - 1
                    if not (self.a[z] & (A2 | Un2)):
                        ok = False
                        break
            if ok and (self.rules & 2) and self.kind == 2 and not (a & (A1 | A2 | Un2)):
                ok = False
            if ok:
                self.rec(i + 1, w + 1, A0, A1 | bit, A2, Un2, cov)


def bnb_labeling(adj, int n, int kind, order, int rules, long long ub_w, ub_ones, ub_twos, double deadline):
    cdef _LabelSearch s = _LabelSearch()
    cdef int v, d
    s.n = n
    s.kind = kind
    s.rules = rules
    s.full = full_mask(n)
    load(adj, n, s.a, s.closed)
    for v in range(n):
        d = popc(s.a[v])
        s.cap[v] = d + 1 if kind == 0 else d
        s.order[v] = order[v]
    s.best_w = ub_w
    s.best_ones = <u64>ub_ones
    s.best_twos = <u64>ub_twos
    s.nodes = 0
    s.deadline = deadline
    s.timed_out = False
    s.rec(0, 0, 0, 0, 0, s.full, 0)
    return s.best_w, s.best_ones, s.best_twos, s.nodes, not s.timed_out


cdef class _CoverSearch:
    cdef int n, rules
    cdef u64 full
    cdef u64 sets[MAXN]
    cdef u64 cand[MAXN]
    cdef int order[MAXN]
    cdef long long best, nodes
    cdef u64 best_mask
    cdef double deadline
    cdef bint timed_out

    cdef void rec(self, int i, long long w, u64 chosen, u64 Un, u64 dom):
        cdef u64 need, sel, cands, bit, Un2
        cdef int cover[MAXN]
        cdef int u, x, c, best_c, v
        cdef double total
        if self.timed_out:
            return
        self.nodes += 1
        if self.deadline > 0 and (self.nodes & CHECK_MASK) == 0:
            if time.monotonic() > self.deadline:
                self.timed_out = True
                return
        if w >= self.best:
            return
        need = self.full & ~dom
        if not need:
            self.best = w
            self.best_mask = chosen
            return
        if self.rules & 1:
            for x in range(self.n):
                cover[x] = -1
            total = 0.0
            sel = need
            while sel:
                u = low(sel)
                sel &= sel - 1
                best_c = 0
                cands = self.cand[u] & Un
                while cands:
                    x = low(cands)
                    cands &= cands - 1
                    c = cover[x]
                    if c < 0:
                        c = popc(self.sets[x] & need)
                        cover[x] = c
                    if c > best_c:
                        best_c = c
                if best_c == 0:
                    return
                total += 1.0 / best_c
            if w + <long long>ceil(total - 1e-9) >= self.best:
                return
        if i == self.n:
            return
        v = self.order[i]
        bit = (<u64>1) << v
        Un2 = Un & ~bit
        if w + 1 < self.best:
            self.rec(i + 1, w + 1, chosen | bit, Un2, dom | self.sets[v])
        if self.rules & 4:
            sel = self.sets[v] & need
            while sel:
                u = low(sel)
                sel &= sel - 1
                if not (self.cand[u] & Un2):
                    return
        self.rec(i + 1, w, chosen, Un2, dom)


def bnb_cover(sets, int n, order, int rules, long long ub, ub_mask, double deadline):
    cdef _CoverSearch s = _CoverSearch()
    cdef int x
    cdef u64 sel
    s.n = n
    s.rules = rules
    s.full = full_mask(n)
    for x in range(n):
        s.sets[x] = <u64>sets[x]
        s.cand[x] = 0
        s.order[x] = order[x]
    for x in range(n):
        sel = s.sets[x]
        while sel:
            s.cand[low(sel)] |= (<u64>1) << x
            sel &= sel - 1
    s.best = ub
    s.best_mask = <u64>ub_mask
    s.nodes = 0
    s.deadline = deadline
    s.timed_out = False
    s.rec(0, 0, 0, s.full, 0)
    return s.best, s.best_mask, s.nodes, not s.timed_out


cdef class _PackingSearch:
    cdef int n
    cdef u64 closed[MAXN]
    cdef u64 square[MAXN]
    cdef int deg[MAXN]
    cdef int order[MAXN]
    cdef long long best, nodes
    cdef u64 best_mask
    cdef double deadline
    cdef bint timed_out

    cdef void rec(self, int i, long long size, u64 chosen, u64 avail, u64 free):
        cdef long long k, k2
        cdef int mindeg, v
        cdef u64 sel, bit
        if self.timed_out:
            return
        self.nodes += 1
        if self.deadline > 0 and (self.nodes & CHECK_MASK) == 0:
            if time.monotonic() > self.deadline:
                self.timed_out = True
                return
        if not avail:
            if size > self.best:
                self.best = size
                self.best_mask = chosen
            return
        k = popc(avail)
        mindeg = 1 << 30
        sel = avail
        while sel:
            v = low(sel)
            sel &= sel - 1
            if self.deg[v] < mindeg:
                mindeg = self.deg[v]
        k2 = popc(free) // (mindeg + 1)
        if k2 < k:
            k = k2
        if size + k <= self.best:
            return
        while not ((avail >> self.order[i]) & 1):
            i += 1
        v = self.order[i]
        bit = (<u64>1) << v
        self.rec(i + 1, size + 1, chosen | bit, avail & ~self.square[v], free & ~self.closed[v])
        self.rec(i + 1, size, chosen, avail & ~bit, free)


def bnb_packing(adj, int n, order, double deadline):
    cdef _PackingSearch s = _PackingSearch()
    cdef u64 a[MAXN]
    cdef int v
    load(adj, n, a, s.closed)
    for v in range(n):
        s.square[v] = union_of(s.closed, s.closed[v])
        s.deg[v] = popc(a[v])
        s.order[v] = order[v]
    s.best = 0
    s.best_mask = 0
    s.nodes = 0
    s.deadline = deadline
    s.timed_out = False
    s.rec(0, 0, 0, full_mask(n), full_mask(n))
    return s.best, s.best_mask, s.nodes, not s.timed_out


cdef class _ExactCover:
    cdef u64 full
    cdef u64 closed[MAXN]
    cdef long long nodes

    cdef long long rec(self, u64 covered, u64 chosen):
        cdef u64 rest, sel
        cdef int u, x
        cdef long long r
        self.nodes += 1
        if covered == self.full:
            return <long long>chosen
        rest = self.full & ~covered
        u = low(rest)
        sel = self.closed[u]
        while sel:
            x = low(sel)
            sel &= sel - 1
            if not (self.closed[x] & covered):
                r = self.rec(covered | self.closed[x], chosen | ((<u64>1) << x))
                if r != -1:
                    return r
        return -1


def efficient_search(adj, int n):
    # masks are returned through a signed value; n < 64 keeps them non-negative
    cdef _ExactCover s = _ExactCover()
    cdef u64 a[MAXN]
    if n >= 64:
        raise ValueError("efficient_search kernel supports n < 64")
    load(adj, n, a, s.closed)
    s.full = full_mask(n)
    s.nodes = 0
    r = s.rec(0, 0)
    return r, s.nodes
