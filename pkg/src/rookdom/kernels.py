"""Hot loops of the exact solvers.

Compiled with numba when available (see ``_jit``); the same source runs as
plain Python over numpy arrays when the JIT is switched off.
"""

from __future__ import annotations

import numpy as np

from ._jit import jit


@jit
def realize_margins(r, c, out):
    """Fill ``out`` (n x m, zeroed) with a 0/1 matrix with row sums ``r`` and
    column sums ``c`` whose ones sit only where r[i] + c[j] >= 4.

    Bipartite unit-capacity flow by multi-source BFS augmentation. Returns
    True when every unit of the margins is routed.
    """
    n = r.shape[0]
    m = c.shape[0]
    total = 0
    for i in range(n):
        total += r[i]
    tc = 0
    for j in range(m):
        tc += c[j]
    if total != tc:
        return False
    supply = r.copy()
    demand = c.copy()
    # greedy start, row-major
    for i in range(n):
        for j in range(m):
            if supply[i] == 0:
                break
            if demand[j] > 0 and r[i] + c[j] >= 4:
                out[i, j] = 1
                supply[i] -= 1
                demand[j] -= 1
    nodes = n + m
    parent = np.empty(nodes, dtype=np.int64)
    queue = np.empty(nodes, dtype=np.int64)
    while True:
        any_supply = False
        for i in range(n):
            if supply[i] > 0:
                any_supply = True
                break
        if not any_supply:
            return True
        for v in range(nodes):
            parent[v] = -2
        head = 0
        tail = 0
        for i in range(n):
            if supply[i] > 0:
                parent[i] = -1
                queue[tail] = i
                tail += 1
        sink = -1
        while head < tail and sink < 0:
            u = queue[head]
            head += 1
            if u < n:
                for j in range(m):
                    v = n + j
                    if parent[v] == -2 and out[u, j] == 0 and r[u] + c[j] >= 4:
                        parent[v] = u
                        if demand[j] > 0:
                            sink = v
                            break
                        queue[tail] = v
                        tail += 1
            else:
                j = u - n
                for i in range(n):
                    if parent[i] == -2 and out[i, j] == 1:
                        parent[i] = u
                        queue[tail] = i
                        tail += 1
        if sink < 0:
            return False
        demand[sink - n] -= 1
        v = sink
        while True:
            u = parent[v]
            if v >= n:
                out[u, v - n] = 1
            else:
                out[v, u - n] = 0
            if u < n and parent[u] == -1:
                supply[u] -= 1
                break
            v = u


@jit
def _quick_reject(r, c):
    n = r.shape[0]
    m = c.shape[0]
    if r[n - 1] + c[m - 1] < 2:
        return True
    # row i can only use columns with c[j] >= 4 - r[i]; r and c are sorted
    for i in range(n):
        cnt = 0
        for j in range(m):
            if r[i] + c[j] >= 4:
                cnt += 1
            else:
                break
        if cnt < r[i]:
            return True
    for j in range(m):
        cnt = 0
        for i in range(n):
            if r[i] + c[j] >= 4:
                cnt += 1
            else:
                break
        if cnt < c[j]:
            return True
    return False


@jit
def scan_margin_pairs(rows, cols, max_checks, out):
    """First (row, col) margin pair, in loop order, that is realizable.

    ``rows`` is P x n and ``cols`` Q x m, each row of which is a non-increasing
    margin vector. Returns (p, q, checks); p == -1 when no pair works and
    p == -2 when ``max_checks`` flow runs were spent first (max_checks < 0
    means unlimited). On success ``out`` holds the placement.
    """
    checks = 0
    for p in range(rows.shape[0]):
        r = rows[p]
        for q in range(cols.shape[0]):
            c = cols[q]
            if _quick_reject(r, c):
                continue
            if max_checks >= 0 and checks >= max_checks:
                return -2, -1, checks
            checks += 1
            out[:, :] = 0
            if realize_margins(r, c, out):
                return p, q, checks
    return -1, -1, checks


@jit
def _popcount(x):
    cnt = 0
    while x:
        x &= x - 1
        cnt += 1
    return cnt


@jit
def brute_force_scan(n, m, size):
    """Smallest board bitmask (bit i*m + j for 0-based cell (i, j)) with
    ``size`` rooks that is total 2-dominating, subject to: row 0 holds a
    maximal row count and column 0 a maximal column count. -1 if none.

    Walks all size-subsets in increasing integer order (Gosper's hack).
    """
    nbits = n * m
    if size <= 0 or size > nbits:
        return -1
    row_mask = np.zeros(n, dtype=np.int64)
    col_mask = np.zeros(m, dtype=np.int64)
    for i in range(n):
        for j in range(m):
            b = np.int64(1) << (i * m + j)
            row_mask[i] |= b
            col_mask[j] |= b
    rc = np.zeros(n, dtype=np.int64)
    cc = np.zeros(m, dtype=np.int64)
    limit = np.int64(1) << nbits
    v = (np.int64(1) << size) - 1
    while v < limit:
        ok = True
        rmax = 0
        for i in range(n):
            rc[i] = _popcount(v & row_mask[i])
            if rc[i] > rmax:
                rmax = rc[i]
        if rc[0] != rmax:
            ok = False
        if ok:
            cmax = 0
            for j in range(m):
                cc[j] = _popcount(v & col_mask[j])
                if cc[j] > cmax:
                    cmax = cc[j]
            if cc[0] != cmax:
                ok = False
        if ok:
            for i in range(n):
                for j in range(m):
                    occ = (v >> (i * m + j)) & 1
                    if rc[i] + cc[j] - 2 * occ < 2:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            return v
        low = v & -v
        ripple = v + low
        v = (((ripple ^ v) >> 2) // low) | ripple
    return -1
