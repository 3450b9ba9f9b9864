"""Pure-Python/numpy versions of the compiled kernels in ``_ckernels.pyx``.

Same names, same arguments, same return values. Used when the extension is
not built, or when ``HELLYGAP_PURE_PYTHON=1`` is set.
"""
from collections import deque

import numpy as np


def apsp(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        dist[s, s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[s, u] + 1
            for w in indices[indptr[u] : indptr[u + 1]]:
                if dist[s, w] < 0:
                    dist[s, w] = du
                    queue.append(w)
    return dist


def enumerate_extremal(d, guard):
    n = d.shape[0]
    if n == 0:
        return np.zeros((0, 0), np.int32), False
    dl = d.tolist()
    f = [0] * n
    out = []

    class _Overflow(Exception):
        pass

    def extend(i, lb, ub, tight):
        if i == n:
            if len(out) >= guard:
                raise _Overflow
            out.append(list(f))
            return
        lo = lb[i]
        hi = lo
        for y in range(i + 1, n):
            hi = max(hi, dl[i][y] - lb[y])
        hi = min(hi, ub[i])
        row_i = dl[i]
        for v in range(lo, hi + 1):
            f[i] = v
            nlb, nub = list(lb), list(ub)
            ok = True
            # extremal functions are 1-Lipschitz: |f(y) - v| <= d(i, y)
            for y in range(i + 1, n):
                c = max(lb[y], abs(row_i[y] - v))
                t = min(ub[y], v + row_i[y])
                if c > t:
                    ok = False
                    break
                nlb[y], nub[y] = c, t
            if not ok:
                continue
            ntight = [tight[x] or f[x] + v == row_i[x] for x in range(i)]
            ntight.append(v == 0 or any(f[x] + v == row_i[x] for x in range(i)))
            for x in range(i + 1):
                if ntight[x]:
                    continue
                dx, fx = dl[x], f[x]
                if not any(nlb[y] == dx[y] - fx for y in range(i + 1, n)):
                    ok = False
                    break
            if ok:
                extend(i + 1, nlb, nub, ntight)

    exceeded = False
    try:
        extend(0, [0] * n, [max(row) for row in dl], [])
    except _Overflow:
        exceeded = True
    res = np.array(out, dtype=np.int32).reshape(len(out), n)
    return res, exceeded


def chebyshev_edges(F):
    F = np.asarray(F)
    pairs = []
    for a in range(F.shape[0] - 1):
        cheb = np.abs(F[a + 1 :] - F[a]).max(axis=1) if F.shape[1] else np.zeros(0)
        for b in np.nonzero(cheb == 1)[0]:
            pairs.append((a, a + 1 + int(b)))
    return np.array(pairs, dtype=np.int32).reshape(-1, 2)


def chebyshev_matrix(F):
    F = np.asarray(F, dtype=np.int32)
    if F.shape[1] == 0:
        return np.zeros((F.shape[0], F.shape[0]), np.int32)
    return np.abs(F[:, None, :] - F[None, :, :]).max(axis=2).astype(np.int32)


def oracle_gap(d, maxr):
    n = d.shape[0]
    dl = d.tolist()
    r = [0] * n
    best = [0, None]
    leaves = [0]

    def rec(i):
        if i == n:
            leaves[0] += 1
            alpha_r = min(max(0, max(row[u] - r[u] for u in range(n))) for row in dl)
            if alpha_r > best[0]:
                best[0] = alpha_r
                best[1] = list(r)
            return
        for v in range(maxr + 1):
            if all(r[j] + v >= dl[i][j] for j in range(i)):
                r[i] = v
                rec(i + 1)

    if n:
        rec(0)
    witness = np.array(best[1], dtype=np.int32) if best[0] > 0 else None
    return best[0], witness, leaves[0]


def two_delta(d):
    n = d.shape[0]
    if n < 4:
        return 0
    d = d.astype(np.int64)
    best = 0
    # fix a < b, vectorize over b < c < e
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            rest = slice(b + 1, n)
            s1 = d[a, b] + d[rest, rest]
            s2 = d[a, rest][:, None] + d[b, rest][None, :]
            s3 = d[b, rest][:, None] + d[a, rest][None, :]
            top = np.maximum(np.maximum(s1, s2), s3)
            mid = s1 + s2 + s3 - top - np.minimum(np.minimum(s1, s2), s3)
            gap = np.triu(top - mid, 1)
            best = max(best, int(gap.max()))
    return best


def interval_thinness(d):
    n = d.shape[0]
    best = 0
    for x in range(n):
        for y in range(x + 1, n):
            on = np.nonzero(d[x] + d[:, y] == d[x, y])[0]
            layer = d[x, on]
            same = layer[:, None] == layer[None, :]
            sub = d[np.ix_(on, on)]
            best = max(best, int(sub[same].max()))
    return best


def alpha_i(d):
    n = d.shape[0]
    best = 0
    for x in range(n):
        for y in range(n):
            zs = np.nonzero((d[x] + d[:, y] == d[x, y]) & (d[:, y] == 1))[0]
            for z in zs:
                vs = d[z, y] + d[y] == d[z]
                if vs.any():
                    val = int((d[x, y] + d[y, vs] - d[x, vs]).max())
                    best = max(best, val)
    return best


def max_subset_gap(d):
    n = d.shape[0]
    best, best_mask = None, 0
    for mask in range(1, 1 << n):
        members = [u for u in range(n) if mask >> u & 1]
        ecc = d[:, members].max(axis=1)
        rad = int(ecc.min())
        diam = int(ecc[members].max())
        val = (2 * rad - diam) // 2
        if best is None or val > best:
            best, best_mask = val, mask
    return best, best_mask


def peripheral(d):
    N = d.shape[0]
    out = np.zeros(N, dtype=bool)
    for x in range(N):
        # inside[y, z]: x lies on a shortest (y, z)-path
        inside = d[:, x][:, None] + d[x][None, :] == d
        inside[:, x] = False
        ok = ~inside.any(axis=1)
        ok[x] = False
        out[x] = bool(ok.any())
    return out


def path_extension_failure(d, n_real):
    N = d.shape[0]
    real = d[:n_real, :n_real]
    for x in range(N):
        for y in range(x, N):
            lhs = d[:n_real, x][:, None] + d[x, y] + d[y, :n_real][None, :]
            if not (lhs == real).any():
                return (x, y)
    return (-1, -1)
