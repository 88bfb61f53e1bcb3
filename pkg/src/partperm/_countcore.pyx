# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-point counter; semantics identical to _counting_py.

Counts integer points in a box satisfying a_i . x <= b_i for all rows i,
by coordinate DFS with exact per-row bound propagation and a bulk count at
the innermost level.  All arithmetic is C long long; the magnitudes that
arise from dilated partial-permutohedron facet systems are far below the
64-bit range.
"""

from libc.stdlib cimport calloc, free


cdef struct Workspace:
    long long *a          # nrows * m coefficient matrix, row-major
    long long *b          # nrows
    long long *minrest    # nrows * (m+1)
    long long *partial    # nrows
    int *active           # concatenated active-row lists per depth
    int *active_off       # m+1 offsets into active
    long long *lows
    long long *highs
    int nrows
    int m


cdef long long _dfs(Workspace *w, int d) noexcept:
    cdef long long lb = w.lows[d]
    cdef long long ub = w.highs[d]
    cdef int idx, i
    cdef long long c, s, q, total, x
    cdef int start = w.active_off[d]
    cdef int stop = w.active_off[d + 1]
    for idx in range(start, stop):
        i = w.active[idx]
        c = w.a[i * w.m + d]
        s = w.b[i] - w.partial[i] - w.minrest[i * (w.m + 1) + d + 1]
        if c > 0:
            # floor division toward -inf (cdivision truncates toward zero)
            q = s / c
            if s % c != 0 and (s < 0) != (c < 0):
                q -= 1
            if q < ub:
                ub = q
        elif c < 0:
            q = s / (-c)
            if s % (-c) != 0 and s < 0:
                q -= 1
            q = -q
            if q > lb:
                lb = q
        elif s < 0:
            return 0
    if lb > ub:
        return 0
    if d == w.m - 1:
        return ub - lb + 1
    total = 0
    for idx in range(start, stop):
        i = w.active[idx]
        c = w.a[i * w.m + d]
        if c != 0:
            w.partial[i] += c * lb
    x = lb
    while True:
        total += _dfs(w, d + 1)
        if x == ub:
            break
        x += 1
        for idx in range(start, stop):
            i = w.active[idx]
            c = w.a[i * w.m + d]
            if c != 0:
                w.partial[i] += c
    for idx in range(start, stop):
        i = w.active[idx]
        c = w.a[i * w.m + d]
        if c != 0:
            w.partial[i] -= c * ub
    return total


def count_lattice_points(rows_a, rows_b, lows, highs):
    """Count integer points in the box [lows, highs] with rows_a . x <= rows_b."""
    cdef int m = len(lows)
    if len(highs) != m:
        raise ValueError("lows/highs length mismatch")
    cdef int j
    for j in range(m):
        if lows[j] > highs[j]:
            return 0
    filt_a = []
    filt_b = []
    for a, b in zip(rows_a, rows_b):
        a = list(a)
        if len(a) != m:
            raise ValueError("row length mismatch")
        if all(c == 0 for c in a):
            if b < 0:
                return 0
            continue
        filt_a.append(a)
        filt_b.append(int(b))
    if m == 0:
        return 1
    cdef int nrows = len(filt_a)
    cdef Workspace w
    w.m = m
    w.nrows = nrows
    w.a = <long long *> calloc(max(nrows * m, 1), sizeof(long long))
    w.b = <long long *> calloc(max(nrows, 1), sizeof(long long))
    w.minrest = <long long *> calloc(max(nrows * (m + 1), 1), sizeof(long long))
    w.partial = <long long *> calloc(max(nrows, 1), sizeof(long long))
    w.active = <int *> calloc(max(nrows * m, 1), sizeof(int))
    w.active_off = <int *> calloc(m + 1, sizeof(int))
    w.lows = <long long *> calloc(m, sizeof(long long))
    w.highs = <long long *> calloc(m, sizeof(long long))
    if (w.a == NULL or w.b == NULL or w.minrest == NULL or w.partial == NULL
            or w.active == NULL or w.active_off == NULL or w.lows == NULL
            or w.highs == NULL):
        _free_ws(&w)
        raise MemoryError()
    cdef int i, d
    cdef long long c, contrib, lo, hi
    try:
        for j in range(m):
            w.lows[j] = lows[j]
            w.highs[j] = highs[j]
        for i in range(nrows):
            w.b[i] = filt_b[i]
            row = filt_a[i]
            for j in range(m):
                w.a[i * m + j] = row[j]
        for i in range(nrows):
            w.minrest[i * (m + 1) + m] = 0
            for d in range(m - 1, -1, -1):
                c = w.a[i * m + d]
                lo = c * w.lows[d]
                hi = c * w.highs[d]
                contrib = lo if lo < hi else hi
                w.minrest[i * (m + 1) + d] = w.minrest[i * (m + 1) + d + 1] + contrib
        # lastnz per row, then active lists grouped by depth.
        lastnz = [0] * nrows
        for i in range(nrows):
            for d in range(m - 1, -1, -1):
                if w.a[i * m + d] != 0:
                    lastnz[i] = d
                    break
        pos = 0
        for d in range(m):
            w.active_off[d] = pos
            for i in range(nrows):
                if lastnz[i] >= d:
                    w.active[pos] = i
                    pos += 1
        w.active_off[m] = pos
        for i in range(nrows):
            if w.minrest[i * (m + 1)] > w.b[i]:
                return 0
            w.partial[i] = 0
        return _dfs(&w, 0)
    finally:
        _free_ws(&w)


cdef void _free_ws(Workspace *w) noexcept:
    if w.a != NULL: free(w.a)
    if w.b != NULL: free(w.b)
    if w.minrest != NULL: free(w.minrest)
    if w.partial != NULL: free(w.partial)
    if w.active != NULL: free(w.active)
    if w.active_off != NULL: free(w.active_off)
    if w.lows != NULL: free(w.lows)
    if w.highs != NULL: free(w.highs)
