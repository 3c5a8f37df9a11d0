# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: preorder enumeration, classification, canonical forms.

Mirrors ``_pykernels`` exactly (same functions, same outputs, same
enumeration order); see that module for the contract.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil

DEF MAXN = 8

MAX_ENUM_POINTS = 7


cdef inline void _raise_bad_n(int n):
    raise ValueError(f"kernel supports 1..7 points, got {n}")


def first_row_candidates(int n):
    """Ascending list of legal first rows: every mask containing point 0."""
    if n < 1 or n > 7:
        _raise_bad_n(n)
    cdef unsigned int s
    return [1 | (s << 1) for s in range(1 << (n - 1))]


cdef inline bint _row_ok(unsigned int* rows, unsigned int m, unsigned int below):
    cdef unsigned int mm = m & below
    cdef int j
    while mm:
        j = __builtin_ctz(mm)
        if rows[j] & ~m:
            return False
        mm &= mm - 1
    return True


cdef inline unsigned int _allowed_mask(unsigned int* rows, int k, unsigned int full):
    cdef unsigned int allowed = full
    cdef int j
    for j in range(k):
        if rows[j] >> k & 1:
            allowed &= rows[j]
    return allowed


cdef void _collect_rec(int n, int k, unsigned int* rows, unsigned int full,
                       list out):
    cdef unsigned int allowed, base, vary, s, m, below
    cdef int i
    if k == n:
        out.append(tuple([rows[i] for i in range(n)]))
        return
    allowed = _allowed_mask(rows, k, full)
    base = 1u << k
    vary = allowed & ~base
    below = base - 1
    s = 0
    while True:
        m = base | s
        if _row_ok(rows, m, below):
            rows[k] = m
            _collect_rec(n, k + 1, rows, full, out)
        if s == vary:
            return
        s = (s - vary) & vary


def preorder_rows(int n, first_row=None):
    """All reflexive-transitive row tuples on n points, ascending.

    With ``first_row`` set, only the subtree with that fixed row 0.
    """
    if n < 1 or n > 7:
        _raise_bad_n(n)
    cdef unsigned int rows[MAXN]
    cdef unsigned int full = (1u << n) - 1
    cdef unsigned int fr
    cdef list out = []
    cdef int start = 0
    if first_row is not None:
        fr = first_row
        if not (fr & 1) or fr > full:
            raise ValueError(f"illegal first row {fr:#x}")
        rows[0] = fr
        start = 1
    _collect_rec(n, start, rows, full, out)
    return out


cdef void _canon_leaf(int n, unsigned int* rows, int* perm,
                      unsigned char* best, int* have_best):
    cdef unsigned char enc[MAXN]
    cdef int i, j, b
    cdef unsigned int row
    for i in range(n):
        row = rows[perm[i]]
        b = 0
        for j in range(n):
            b |= ((row >> perm[j]) & 1) << j
        enc[i] = <unsigned char>b
    if not have_best[0]:
        for i in range(n):
            best[i] = enc[i]
        have_best[0] = 1
        return
    for i in range(n):
        if enc[i] < best[i]:
            for j in range(n):
                best[j] = enc[j]
            return
        elif enc[i] > best[i]:
            return


cdef void _canon_rec(int n, int pos, unsigned int* rows, int* sorted_pts,
                     int* block_start, int* block_end, unsigned char* used,
                     int* perm, unsigned char* best, int* have_best):
    cdef int idx
    if pos == n:
        _canon_leaf(n, rows, perm, best, have_best)
        return
    for idx in range(block_start[pos], block_end[pos]):
        if not used[idx]:
            used[idx] = 1
            perm[pos] = sorted_pts[idx]
            _canon_rec(n, pos + 1, rows, sorted_pts, block_start, block_end,
                       used, perm, best, have_best)
            used[idx] = 0


cdef bytes _canonical(int n, unsigned int* rows):
    # invariant key per point: (row popcount, column popcount); points are
    # grouped by key with groups in ascending key order, and minimization
    # runs over the group-respecting permutations only
    cdef int rowpc[MAXN]
    cdef int colpc[MAXN]
    cdef int sorted_pts[MAXN]
    cdef int block_start[MAXN]
    cdef int block_end[MAXN]
    cdef int perm[MAXN]
    cdef unsigned char used[MAXN]
    cdef unsigned char best[MAXN]
    cdef int have_best = 0
    cdef int a, x, i, j, tmp, bstart

    for a in range(n):
        rowpc[a] = __builtin_popcount(rows[a])
        colpc[a] = 0
    for a in range(n):
        for x in range(n):
            colpc[x] += (rows[a] >> x) & 1
    for a in range(n):
        sorted_pts[a] = a
        used[a] = 0
    # insertion sort by (rowpc, colpc); ties keep point order (grouping only)
    for i in range(1, n):
        tmp = sorted_pts[i]
        j = i - 1
        while j >= 0 and (rowpc[sorted_pts[j]] > rowpc[tmp] or
                          (rowpc[sorted_pts[j]] == rowpc[tmp] and
                           colpc[sorted_pts[j]] > colpc[tmp])):
            sorted_pts[j + 1] = sorted_pts[j]
            j -= 1
        sorted_pts[j + 1] = tmp

    bstart = 0
    for i in range(n):
        if (i + 1 == n or rowpc[sorted_pts[i + 1]] != rowpc[sorted_pts[bstart]]
                or colpc[sorted_pts[i + 1]] != colpc[sorted_pts[bstart]]):
            for j in range(bstart, i + 1):
                block_start[j] = bstart
                block_end[j] = i + 1
            bstart = i + 1

    _canon_rec(n, 0, rows, sorted_pts, block_start, block_end, used, perm,
               best, &have_best)
    return PyBytes_FromStringAndSize(<char*>best, n)


def canonical_rows(int n, rows):
    """Lexicographically minimal byte serialization over relabelings."""
    if n < 1 or n > 7:
        _raise_bad_n(n)
    cdef unsigned int crows[MAXN]
    cdef int i
    for i in range(n):
        crows[i] = rows[i]
    return _canonical(n, crows)


cdef void _classify_rec(int n, int k, unsigned int* rows, unsigned int full,
                        long* hist, long* t0_count, dict class_map,
                        bint want_classes, bint t0_only):
    cdef unsigned int allowed, base, vary, s, m, below
    cdef int a, x, c, h, best_c
    cdef bint t0
    cdef bytes enc
    if k == n:
        best_c = 0
        for x in range(n):
            c = 0
            for a in range(n):
                c += (rows[a] >> x) & 1
            if c > best_c:
                best_c = c
        h = 1 + best_c
        t0 = True
        for a in range(n):
            for x in range(a + 1, n):
                if rows[a] == rows[x]:
                    t0 = False
                    break
            if not t0:
                break
        if t0:
            t0_count[0] += 1
        if t0_only and not t0:
            return
        hist[h] += 1
        if want_classes:
            enc = _canonical(n, rows)
            if enc not in class_map:
                class_map[enc] = (h, tuple([rows[a] for a in range(n)]))
        return

    allowed = _allowed_mask(rows, k, full)
    base = 1u << k
    vary = allowed & ~base
    below = base - 1
    s = 0
    while True:
        m = base | s
        if _row_ok(rows, m, below):
            rows[k] = m
            _classify_rec(n, k + 1, rows, full, hist, t0_count, class_map,
                          want_classes, t0_only)
        if s == vary:
            return
        s = (s - vary) & vary


def classify(int n, first_rows=None, bint want_classes=True,
             bint t0_only=False):
    """Walk the enumeration tree and aggregate per-topology statistics.

    Same result contract as ``_pykernels.classify``.
    """
    if n < 1 or n > 7:
        _raise_bad_n(n)
    cdef unsigned int rows[MAXN]
    cdef unsigned int full = (1u << n) - 1
    cdef long hist[MAXN + 2]
    cdef long t0_count = 0
    cdef dict class_map = {}
    cdef int h
    cdef unsigned int fr

    for h in range(MAXN + 2):
        hist[h] = 0

    if first_rows is None:
        first_rows = first_row_candidates(n)
    for fr in first_rows:
        rows[0] = fr
        _classify_rec(n, 1, rows, full, hist, &t0_count, class_map,
                      want_classes, t0_only)

    hist_dict = {h: hist[h] for h in range(MAXN + 2) if hist[h]}
    return hist_dict, t0_count, class_map
