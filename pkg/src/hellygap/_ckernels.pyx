# distutils: language = c++
"""Compiled inner loops.

Every function here has a pure-Python twin with the same name and the same
return contract in ``_pykernels``. All distance inputs are C-contiguous
``int32`` arrays.
"""
import numpy as np

from libcpp.vector cimport vector


def apsp(const int[::1] indptr, const int[::1] indices, int n):
    """All-pairs hop distances by one BFS per source (-1 = unreachable)."""
    dist = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] d = dist
    cdef int[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef int s, head, tail, u, k, w
    for s in range(n):
        d[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if d[s, w] < 0:
                    d[s, w] = d[s, u] + 1
                    queue[tail] = w
                    tail += 1
    return dist


# ---------------------------------------------------------------------------
# extremal functions

cdef int _extend(int i, int n, const int[:, ::1] d,
                 int[::1] f, int[:, ::1] lb, int[:, ::1] ub, char[:, ::1] tight,
                 vector[int]* out, long guard, long* count) noexcept:
    cdef int lo, hi, v, y, x, cand, top, ok, need
    if i == n:
        if count[0] >= guard:
            return -1
        for x in range(n):
            out.push_back(f[x])
        count[0] += 1
        return 0

    lo = lb[i, i]
    hi = lo
    for y in range(i + 1, n):
        cand = d[i, y] - lb[i, y]
        if cand > hi:
            hi = cand
    if hi > ub[i, i]:
        hi = ub[i, i]

    for v in range(lo, hi + 1):
        f[i] = v
        ok = 1
        # extremal functions are 1-Lipschitz: |f(y) - v| <= d(i, y)
        for y in range(i + 1, n):
            cand = d[i, y] - v
            if cand < 0:
                cand = -cand
            if cand < lb[i, y]:
                cand = lb[i, y]
            top = v + d[i, y]
            if top > ub[i, y]:
                top = ub[i, y]
            if cand > top:
                ok = 0
                break
            lb[i + 1, y] = cand
            ub[i + 1, y] = top
        if not ok:
            continue
        # tightness among assigned coordinates 0..i
        for x in range(i):
            tight[i + 1, x] = tight[i, x] or (f[x] + v == d[x, i])
        tight[i + 1, i] = 0
        if v == 0:
            tight[i + 1, i] = 1
        else:
            for x in range(i):
                if f[x] + v == d[x, i]:
                    tight[i + 1, i] = 1
                    break
        # every untight coordinate needs a future partner that can still meet it
        for x in range(i + 1):
            if tight[i + 1, x]:
                continue
            need = 0
            for y in range(i + 1, n):
                if lb[i + 1, y] == d[x, y] - f[x]:
                    need = 1
                    break
            if not need:
                ok = 0
                break
        if not ok:
            continue
        if _extend(i + 1, n, d, f, lb, ub, tight, out, guard, count) < 0:
            return -1
    return 0


def enumerate_extremal(const int[:, ::1] d, long guard):
    """All extremal functions in lexicographic order.

    Returns ``(functions, exceeded)``; on overflow ``functions`` holds the
    first ``guard`` functions found and ``exceeded`` is True.
    """
    cdef int n = d.shape[0]
    cdef int[::1] f = np.zeros(n, dtype=np.int32)
    cdef int[:, ::1] lb = np.zeros((n + 1, n), dtype=np.int32)
    ub_arr = np.zeros((n + 1, n), dtype=np.int32)
    if n > 0:
        ub_arr[0] = np.asarray(d).max(axis=1)
    cdef int[:, ::1] ub = ub_arr
    cdef char[:, ::1] tight = np.zeros((n + 1, n), dtype=np.int8)
    cdef vector[int] out
    cdef long count = 0
    cdef int status = 0
    if n > 0:
        status = _extend(0, n, d, f, lb, ub, tight, &out, guard, &count)
    res = np.array(out, dtype=np.int32) if count else np.zeros(0, np.int32)
    return res.reshape(count, n), status < 0


def chebyshev_edges(const int[:, ::1] F):
    """Index pairs (a < b) of rows at Chebyshev distance exactly 1."""
    cdef Py_ssize_t N = F.shape[0], n = F.shape[1]
    cdef Py_ssize_t a, b, x
    cdef int diff, m
    cdef vector[int] out
    for a in range(N):
        for b in range(a + 1, N):
            m = 0
            for x in range(n):
                diff = F[a, x] - F[b, x]
                if diff < 0:
                    diff = -diff
                if diff > m:
                    m = diff
                    if m > 1:
                        break
            if m == 1:
                out.push_back(<int>a)
                out.push_back(<int>b)
    res = np.array(out, dtype=np.int32) if out.size() else np.zeros(0, np.int32)
    return res.reshape(-1, 2)


def chebyshev_matrix(const int[:, ::1] F):
    """Full matrix of Chebyshev distances between rows."""
    cdef Py_ssize_t N = F.shape[0], n = F.shape[1]
    out = np.zeros((N, N), dtype=np.int32)
    cdef int[:, ::1] o = out
    cdef Py_ssize_t a, b, x
    cdef int diff, m
    for a in range(N):
        for b in range(a + 1, N):
            m = 0
            for x in range(n):
                diff = F[a, x] - F[b, x]
                if diff < 0:
                    diff = -diff
                if diff > m:
                    m = diff
            o[a, b] = m
            o[b, a] = m
    return out


# ---------------------------------------------------------------------------
# brute-force Helly-gap oracle

cdef void _oracle(int i, int n, const int[:, ::1] d, int maxr, int[::1] r,
                  int* best, int[::1] best_r, long* leaves) noexcept:
    cdef int v, j, w, u, rowmax, alpha_r, ok
    if i == n:
        leaves[0] += 1
        alpha_r = 1 << 30
        for w in range(n):
            rowmax = 0
            for u in range(n):
                if d[w, u] - r[u] > rowmax:
                    rowmax = d[w, u] - r[u]
            if rowmax < alpha_r:
                alpha_r = rowmax
                if alpha_r <= best[0]:
                    return
        best[0] = alpha_r
        for j in range(n):
            best_r[j] = r[j]
        return
    for v in range(maxr + 1):
        ok = 1
        for j in range(i):
            if r[j] + v < d[i, j]:
                ok = 0
                break
        if ok:
            r[i] = v
            _oracle(i + 1, n, d, maxr, r, best, best_r, leaves)


def oracle_gap(const int[:, ::1] d, int maxr):
    """Largest inflation needed by any pairwise-intersecting radius vector.

    Radii range over ``[0, maxr]``. Returns ``(alpha, witness, leaves)``;
    ``witness`` is the lexicographically first radius vector attaining
    ``alpha`` (None when alpha == 0).
    """
    cdef int n = d.shape[0]
    cdef int[::1] r = np.zeros(n, dtype=np.int32)
    best_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] best_r = best_arr
    cdef int best = 0
    cdef long leaves = 0
    if n > 0:
        _oracle(0, n, d, maxr, r, &best, best_r, &leaves)
    return best, (best_arr if best > 0 else None), leaves


# ---------------------------------------------------------------------------
# four-point and interval scans

def two_delta(const int[:, ::1] d):
    """Exact 2*delta by exhaustion over 4-subsets."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t a, b, c, e
    cdef int s1, s2, s3, t, best = 0
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for e in range(c + 1, n):
                    s1 = d[a, b] + d[c, e]
                    s2 = d[a, c] + d[b, e]
                    s3 = d[a, e] + d[b, c]
                    if s1 < s2:
                        t = s1; s1 = s2; s2 = t
                    if s2 < s3:
                        t = s2; s2 = s3; s3 = t
                    if s1 < s2:
                        t = s1; s1 = s2; s2 = t
                    if s1 - s2 > best:
                        best = s1 - s2
    return best


def interval_thinness(const int[:, ::1] d):
    """Max distance between two vertices in the same interval slice."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t x, y, u, v
    cdef int dxy, best = 0
    for x in range(n):
        for y in range(x + 1, n):
            dxy = d[x, y]
            for u in range(n):
                if d[x, u] + d[u, y] != dxy:
                    continue
                for v in range(u + 1, n):
                    if d[x, v] == d[x, u] and d[x, v] + d[v, y] == dxy:
                        if d[u, v] > best:
                            best = d[u, v]
    return best


def alpha_i(const int[:, ::1] d):
    """Smallest i making d an alpha_i-metric (y and z adjacent)."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t x, y, z, v
    cdef int best = 0, val
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if d[z, y] != 1 or d[x, z] + d[z, y] != d[x, y]:
                    continue
                for v in range(n):
                    if d[z, y] + d[y, v] != d[z, v]:
                        continue
                    val = d[x, y] + d[y, v] - d[x, v]
                    if val > best:
                        best = val
    return best


def max_subset_gap(const int[:, ::1] d):
    """max over non-empty M of floor((2 rad(M) - diam(M)) / 2), with argmax mask."""
    cdef int n = d.shape[0]
    cdef long mask, full = (1 << n)
    cdef int v, u, e, rad, diam, val, best = -(1 << 30)
    cdef long best_mask = 0
    cdef int[::1] ecc = np.zeros(max(n, 1), dtype=np.int32)
    for mask in range(1, full):
        rad = 1 << 30
        diam = 0
        for v in range(n):
            e = 0
            for u in range(n):
                if (mask >> u) & 1 and d[v, u] > e:
                    e = d[v, u]
            ecc[v] = e
            if e < rad:
                rad = e
            if (mask >> v) & 1 and e > diam:
                diam = e
        val = 2 * rad - diam
        # floor division for possibly negative values
        if val >= 0:
            val = val // 2
        else:
            val = -((-val + 1) // 2)
        if val > best:
            best = val
            best_mask = mask
    return best, best_mask


def peripheral(const int[:, ::1] d):
    """Flags x for which some y has no z != x with x strictly inside I(y, z)."""
    cdef Py_ssize_t N = d.shape[0]
    out = np.zeros(N, dtype=np.bool_)
    cdef char[::1] o = out.view(np.int8)
    cdef Py_ssize_t x, y, z
    cdef int found
    for x in range(N):
        for y in range(N):
            if y == x:
                continue
            found = 0
            for z in range(N):
                if z != x and d[y, x] + d[x, z] == d[y, z]:
                    found = 1
                    break
            if not found:
                o[x] = 1
                break
    return out


def path_extension_failure(const int[:, ::1] d, int n_real):
    """First hull pair (x, y) not lying on a shortest path between real vertices.

    Real vertices are indices ``0..n_real-1``. Returns ``(-1, -1)`` when every
    pair extends.
    """
    cdef Py_ssize_t N = d.shape[0]
    cdef Py_ssize_t x, y, a, b
    cdef int ok
    for x in range(N):
        for y in range(x, N):
            ok = 0
            for a in range(n_real):
                for b in range(n_real):
                    if d[a, x] + d[x, y] + d[y, b] == d[a, b]:
                        ok = 1
                        break
                if ok:
                    break
            if not ok:
                return (int(x), int(y))
    return (-1, -1)
