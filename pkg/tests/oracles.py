"""Slow reference implementations written straight from the definitions.

Nothing here imports the package's kernels; disks, intervals and slices are
plain Python sets. Only for tiny graphs.
"""
from collections import deque
from itertools import combinations, product


def bfs_dist(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    dist = []
    for s in range(n):
        row = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if w not in row:
                    row[w] = row[u] + 1
                    q.append(w)
        dist.append([row[v] for v in range(n)])
    return dist


def disk(dist, v, r):
    return {u for u in range(len(dist)) if dist[v][u] <= r}


def extremal_functions(dist):
    """Every f with f(x)+f(y) >= d(x,y) and, for each x, some y meeting it with equality."""
    n = len(dist)
    ecc = [max(row) for row in dist]
    out = []
    for f in product(*(range(e + 1) for e in ecc)):
        if any(f[x] + f[y] < dist[x][y] for x in range(n) for y in range(n)):
            continue
        if all(any(f[x] + f[y] == dist[x][y] for y in range(n)) for x in range(n)):
            out.append(f)
    return sorted(out)


def helly_gap(dist):
    """Smallest a such that every pairwise-intersecting disk family, inflated by a, shares a vertex."""
    n = len(dist)
    diam = max(max(row) for row in dist)
    worst = 0
    for radii in product(range(diam + 1), repeat=n):
        disks = [disk(dist, v, radii[v]) for v in range(n)]
        if any(not (disks[a] & disks[b]) for a, b in combinations(range(n), 2)):
            continue
        a = 0
        while not set.intersection(*(disk(dist, v, radii[v] + a) for v in range(n))):
            a += 1
        worst = max(worst, a)
    return worst


def two_delta(dist):
    n = len(dist)
    best = 0
    for x, y, u, v in combinations(range(n), 4):
        s = sorted([dist[x][y] + dist[u][v], dist[x][u] + dist[y][v], dist[x][v] + dist[y][u]])
        best = max(best, s[2] - s[1])
    return best


def interval(dist, x, y):
    return {z for z in range(len(dist)) if dist[x][z] + dist[z][y] == dist[x][y]}


def thinness(dist):
    n = len(dist)
    best = 0
    for x in range(n):
        for y in range(n):
            for k in range(dist[x][y] + 1):
                sl = [z for z in interval(dist, x, y) if dist[x][z] == k]
                for a, b in combinations(sl, 2):
                    best = max(best, dist[a][b])
    return best


def alpha_i(dist):
    """Smallest i with d(x,v) >= d(x,y) + d(y,v) - i whenever z in I(x,y), y in I(z,v), y~z."""
    n = len(dist)
    best = 0
    for x, y, z, v in product(range(n), repeat=4):
        if dist[y][z] != 1:
            continue
        if z in interval(dist, x, y) and y in interval(dist, z, v):
            best = max(best, dist[x][y] + dist[y][v] - dist[x][v])
    return best


def ecc(dist, m):
    return [max(dist[v][u] for u in m) for v in range(len(dist))]


def subset_gap_bound(dist):
    n = len(dist)
    best = 0
    for k in range(1, n + 1):
        for m in combinations(range(n), k):
            e = ecc(dist, m)
            rad = min(e)
            diam = max(dist[a][b] for a in m for b in m)
            best = max(best, (2 * rad - diam) // 2)
    return best


def longest_induced_cycle(n, edges):
    """Largest vertex subset inducing a connected 2-regular graph (0 if none)."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = 0
    for k in range(3, n + 1):
        for sub in combinations(range(n), k):
            s = set(sub)
            if any(len(adj[v] & s) != 2 for v in sub):
                continue
            seen, stack = {sub[0]}, [sub[0]]
            while stack:
                for w in adj[stack.pop()] & s:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == k:
                best = k
    return best
