"""Pure-Python search kernels.

Graphs arrive as lists of open-neighborhood bitmasks. Every function here has
a compiled twin in ``_kernels.pyx`` with the same signature and the same
traversal order, so both return identical values, certificates and node
counts.
"""

from __future__ import annotations

import math
import time

# labeling kinds
ROMAN, QUASI_TOTAL, TOTAL_ROMAN = 0, 1, 2
# subset kinds for brute_subset
DOMINATING, TOTAL_DOMINATING, PACKING, EFFICIENT = 0, 1, 2, 3

# rule flags for the branch-and-bound searches
RULE_BOUND = 1  # (a) weight lower bound
RULE_SUPPORT = 2  # (b) a 2 (any positive, for TRDF) needs a positive neighbor
RULE_COVER = 4  # (c) a 0 needs a possible 2 neighbor
RULE_COMPLETE = 8  # stop once labelling every open vertex 0 is valid
ALL_RULES = RULE_BOUND | RULE_SUPPORT | RULE_COVER | RULE_COMPLETE

CHECK_EVERY = 4096
MAX_BITS = None  # arbitrary precision


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _closed(adj, n):
    return [adj[v] | (1 << v) for v in range(n)]


def _union(masks, sel):
    out = 0
    for v in bits(sel):
        out |= masks[v]
    return out


def labeling_valid(adj, n, kind, ones, twos):
    full = (1 << n) - 1
    pos = ones | twos
    zeros = full & ~pos
    if zeros & ~_union(adj, twos):
        return False
    if kind == QUASI_TOTAL:
        return all(adj[v] & pos for v in bits(twos))
    if kind == TOTAL_ROMAN:
        return all(adj[v] & pos for v in bits(pos))
    return True


# -- exhaustive oracles ------------------------------------------------------


def brute_labeling(adj, n, kind):
    """Minimum-weight labeling of the given kind by enumerating all 3**n labelings.

    Labelings are visited in increasing digit-string order (vertex 0 most
    significant), so the first minimum met is the lexicographically least.
    Returns ``(weight, ones_mask, twos_mask, visited)``; weight is -1 if no
    labeling qualifies.
    """
    best = -1
    best_ones = best_twos = 0
    digits = [0] * n
    ones = twos = 0
    w = 0
    visited = 0
    while True:
        visited += 1
        if (best < 0 or w < best) and labeling_valid(adj, n, kind, ones, twos):
            best, best_ones, best_twos = w, ones, twos
        # odometer step, vertex n-1 is the least significant digit
        i = n - 1
        while i >= 0:
            bit = 1 << i
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


def _lex_less(a, b):
    """Sorted-tuple order between two equal-size vertex sets given as masks."""
    d = a ^ b
    return bool(a & d & -d)


def brute_subset(adj, n, kind):
    """Optimal vertex subset by enumerating all 2**n subsets.

    Minimum for (total) dominating sets, maximum for packings; for
    ``EFFICIENT`` any set whose closed neighborhoods partition V. Ties go to
    the lexicographically least sorted id tuple. Returns
    ``(value, mask, visited)``, value -1 if nothing qualifies.
    """
    full = (1 << n) - 1
    closed = _closed(adj, n)
    best = -1
    best_mask = 0
    for mask in range(1 << n):
        size = popcount(mask)
        if kind == DOMINATING:
            ok = _union(closed, mask) == full
        elif kind == TOTAL_DOMINATING:
            ok = _union(adj, mask) == full
        else:
            u = 0
            disjoint = True
            for v in bits(mask):
                if u & closed[v]:
                    disjoint = False
                    break
                u |= closed[v]
            ok = disjoint and (kind == PACKING or u == full)
        if not ok:
            continue
        if best < 0:
            better = True
        elif kind == PACKING:
            better = size > best or (size == best and _lex_less(mask, best_mask))
        else:
            better = size < best or (size == best and _lex_less(mask, best_mask))
        if better:
            best, best_mask = size, mask
    return best, best_mask, 1 << n


# -- branch and bound --------------------------------------------------------


class _Timeout(Exception):
    pass


def bnb_labeling(adj, n, kind, order, rules, ub_w, ub_ones, ub_twos, deadline):
    """Minimum-weight labeling of the given kind by branch and bound.

    ``order`` is the static branching order; each vertex tries labels 2, 0, 1.
    ``(ub_w, ub_ones, ub_twos)`` is a valid starting labeling. ``deadline`` is
    a ``time.monotonic()`` value or 0 for none. Returns
    ``(weight, ones, twos, nodes, complete)``.
    """
    full = (1 << n) - 1
    closed = _closed(adj, n)
    deg = [popcount(a) for a in adj]
    cap = [d + 1 if kind == ROMAN else d for d in deg]
    state = [ub_w, ub_ones, ub_twos, 0]  # best weight, ones, twos, nodes

    def supported(A1, A2):
        pos = A1 | A2
        sel = A2 if kind == QUASI_TOTAL else pos if kind == TOTAL_ROMAN else 0
        for v in bits(sel):
            if not adj[v] & pos:
                return False
        return True

    def lower_bound(A0, Un, cov):
        # Each vertex still needing cover pays 1 by itself, or a share 2/c of
        # a future 2 at x covering c such vertices (c <= deg(x) when the 2
        # needs a positive neighbor).
        need = (Un | A0) & ~cov
        total = 0.0
        cover = {}
        for u in bits(need):
            if Un >> u & 1:
                share = 1.0
                cands = closed[u] & Un
            else:
                share = math.inf
                cands = adj[u] & Un
            for x in bits(cands):
                c = cover.get(x)
                if c is None:
                    c = min(popcount(closed[x] & need), cap[x])
                    cover[x] = c
                if c > 0 and 2.0 / c < share:
                    share = 2.0 / c
            if share == math.inf:
                return None
            total += share
        return math.ceil(total - 1e-9)

    def rec(i, w, A0, A1, A2, Un, cov):
        state[3] += 1
        if deadline and state[3] % CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Timeout
        if w >= state[0]:
            return
        if rules & RULE_COMPLETE and not (Un | A0) & ~cov and supported(A1, A2):
            state[0], state[1], state[2] = w, A1, A2
            return
        if rules & RULE_BOUND:
            lb = lower_bound(A0, Un, cov)
            if lb is None or w + lb >= state[0]:
                return
        if i == n:
            if labeling_valid(adj, n, kind, A1, A2):
                state[0], state[1], state[2] = w, A1, A2
            return
        v = order[i]
        bit = 1 << v
        Un2 = Un & ~bit
        a = adj[v]
        # label 2
        if w + 2 < state[0]:
            if not (rules & RULE_SUPPORT and kind != ROMAN and not a & (A1 | A2 | Un2)):
                rec(i + 1, w + 2, A0, A1, A2 | bit, Un2, cov | closed[v])
        # label 0
        ok = True
        if rules & RULE_COVER:
            if not cov >> v & 1 and not a & (A2 | Un2):
                ok = False
            else:
                for z in bits(a & A0 & ~cov):
                    if not adj[z] & (A2 | Un2):
                        ok = False
                        break
        if ok and rules & RULE_SUPPORT and kind != ROMAN:
            sel = a & A2 if kind == QUASI_TOTAL else a & (A1 | A2)
            for y in bits(sel):
                if not adj[y] & (A1 | A2 | Un2):
                    ok = False
                    break
        if ok:
            rec(i + 1, w, A0 | bit, A1, A2, Un2, cov)
        # label 1
        if w + 1 < state[0]:
            ok = True
            if rules & RULE_COVER:
                for z in bits(a & A0 & ~cov):
                    if not adj[z] & (A2 | Un2):
                        ok = False
                        break
            if ok and rules & RULE_SUPPORT and kind == TOTAL_ROMAN and not a & (A1 | A2 | Un2):
                ok = False
            if ok:
                rec(i + 1, w + 1, A0, A1 | bit, A2, Un2, cov)

    complete = True
    try:
        rec(0, 0, 0, 0, 0, full, 0)
    except _Timeout:
        complete = False
    return state[0], state[1], state[2], state[3], complete


def bnb_cover(sets, n, order, rules, ub, ub_mask, deadline):
    """Minimum number of ``sets[x]`` covering all vertices (include-first branching).

    With closed neighborhoods this is the domination number, with open ones
    the total domination number. Returns ``(size, mask, nodes, complete)``.
    """
    full = (1 << n) - 1
    cand = [0] * n
    for x in range(n):
        for u in bits(sets[x]):
            cand[u] |= 1 << x
    state = [ub, ub_mask, 0]

    def rec(i, w, chosen, Un, dom):
        state[2] += 1
        if deadline and state[2] % CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Timeout
        if w >= state[0]:
            return
        need = full & ~dom
        if not need:
            state[0], state[1] = w, chosen
            return
        if rules & RULE_BOUND:
            total = 0.0
            cover = {}
            for u in bits(need):
                best_c = 0
                for x in bits(cand[u] & Un):
                    c = cover.get(x)
                    if c is None:
                        c = popcount(sets[x] & need)
                        cover[x] = c
                    if c > best_c:
                        best_c = c
                if best_c == 0:
                    return
                total += 1.0 / best_c
            if w + math.ceil(total - 1e-9) >= state[0]:
                return
        if i == n:
            return
        v = order[i]
        bit = 1 << v
        Un2 = Un & ~bit
        if w + 1 < state[0]:
            rec(i + 1, w + 1, chosen | bit, Un2, dom | sets[v])
        if rules & RULE_COVER:
            for u in bits(sets[v] & need):
                if not cand[u] & Un2:
                    return
        rec(i + 1, w, chosen, Un2, dom)

    complete = True
    try:
        rec(0, 0, 0, full, 0)
    except _Timeout:
        complete = False
    return state[0], state[1], state[2], complete


def bnb_packing(adj, n, order, deadline):
    """Maximum packing (vertices pairwise at distance >= 3).

    Returns ``(size, mask, nodes, complete)``.
    """
    full = (1 << n) - 1
    closed = _closed(adj, n)
    square = [_union(closed, closed[v]) for v in range(n)]
    deg = [popcount(a) for a in adj]
    state = [0, 0, 0]

    def rec(i, size, chosen, avail, free):
        state[2] += 1
        if deadline and state[2] % CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Timeout
        if not avail:
            if size > state[0]:
                state[0], state[1] = size, chosen
            return
        # new packing vertices have pairwise disjoint closed neighborhoods inside free
        k = popcount(avail)
        mindeg = min(deg[x] for x in bits(avail))
        k = min(k, popcount(free) // (mindeg + 1))
        if size + k <= state[0]:
            return
        while not avail >> order[i] & 1:
            i += 1
        v = order[i]
        bit = 1 << v
        rec(i + 1, size + 1, chosen | bit, avail & ~square[v], free & ~closed[v])
        rec(i + 1, size, chosen, avail & ~bit, free)

    complete = True
    try:
        rec(0, 0, 0, full, full)
    except _Timeout:
        complete = False
    return state[0], state[1], state[2], complete


def efficient_search(adj, n):
    """A set whose closed neighborhoods partition V, or -1; returns ``(mask, nodes)``.

    Exact-cover search: the lowest uncovered vertex is covered by each
    admissible candidate in increasing id order.
    """
    full = (1 << n) - 1
    closed = _closed(adj, n)
    nodes = [0]

    def rec(covered, chosen):
        nodes[0] += 1
        if covered == full:
            return chosen
        rest = full & ~covered
        u = (rest & -rest).bit_length() - 1
        for x in bits(closed[u]):
            if not closed[x] & covered:
                r = rec(covered | closed[x], chosen | (1 << x))
                if r >= 0:
                    return r
        return -1

    return rec(0, 0), nodes[0]
