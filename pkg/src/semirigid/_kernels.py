"""Backtracking search kernels over label matrices.

These are the hot inner loops of the package: depth-first assignment of
images element by element, with a per-relation partial map on class ids
(the growing coordinate family) that prunes any branch forcing one source
class onto two different target classes.  Picking the unassigned element
whose classes are constrained in the most relations first means that, on
pairwise orthogonal systems, elements whose image is already forced by two
known class values are filled in immediately.

The kernels are compiled with numba when it is importable.  Setting the
environment variable ``SEMIRIGID_PURE_PYTHON=1`` selects the plain-Python
path instead; the same functions then run uncompiled over numpy arrays.
``benchmarks/bench_search.py`` compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np

_PURE_ENV = os.environ.get("SEMIRIGID_PURE_PYTHON", "").strip()
PURE_REQUESTED = _PURE_ENV not in ("", "0")

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env-flag path
    HAVE_NUMBA = False

NUMBA_ENABLED = HAVE_NUMBA and not PURE_REQUESTED

if NUMBA_ENABLED:

    def _jit(fn):
        return _njit(cache=True)(fn)

else:

    def _jit(fn):
        return fn


@_jit
def _pick_most_constrained(labels, amap, img):
    """Unassigned element with class values known in the most relations."""
    k, n = labels.shape
    best = -1
    best_score = -1
    for x in range(n):
        if img[x] < 0:
            s = 0
            for i in range(k):
                if amap[i, labels[i, x]] >= 0:
                    s += 1
            if s > best_score:
                best_score = s
                best = x
    return best


@_jit
def _find_witness(labels, maxc, use_mcf, out):
    """Search for a homomorphism that is neither the identity nor constant.

    Returns True and fills ``out`` with the first such complete map found.
    With ``use_mcf`` False the elements are assigned in index order and
    values ascend, so complete maps are visited in lexicographic order and
    the map returned is the lexicographically smallest witness.
    """
    k, n = labels.shape
    kk = k if k > 0 else 1
    amap = np.full((k, maxc), -1, np.int32)
    img = np.full(n, -1, np.int32)
    chosen = np.zeros(n, np.int32)
    vnext = np.zeros(n, np.int32)
    tcnt = np.zeros(n, np.int32)
    trel = np.zeros((n, kk), np.int32)
    tcls = np.zeros((n, kk), np.int32)

    d = 0
    if use_mcf:
        chosen[0] = _pick_most_constrained(labels, amap, img)
    else:
        chosen[0] = 0
    vnext[0] = 0
    while d >= 0:
        x = chosen[d]
        v = vnext[d]
        placed = False
        while v < n:
            ok = True
            for i in range(k):
                a = amap[i, labels[i, x]]
                if a >= 0 and a != labels[i, v]:
                    ok = False
                    break
            if ok:
                placed = True
                break
            v += 1
        if not placed:
            d -= 1
            if d >= 0:
                xp = chosen[d]
                img[xp] = -1
                for t in range(tcnt[d]):
                    amap[trel[d, t], tcls[d, t]] = -1
                tcnt[d] = 0
            continue
        vnext[d] = v + 1
        img[x] = v
        cnt = 0
        for i in range(k):
            c = labels[i, x]
            if amap[i, c] < 0:
                amap[i, c] = labels[i, v]
                trel[d, cnt] = i
                tcls[d, cnt] = c
                cnt += 1
        tcnt[d] = cnt
        if d + 1 == n:
            ident = True
            const = True
            v0 = img[0]
            for j in range(n):
                if img[j] != j:
                    ident = False
                if img[j] != v0:
                    const = False
            if not (ident or const):
                for j in range(n):
                    out[j] = img[j]
                return True
            img[x] = -1
            for t in range(tcnt[d]):
                amap[trel[d, t], tcls[d, t]] = -1
            tcnt[d] = 0
            continue
        d += 1
        if use_mcf:
            chosen[d] = _pick_most_constrained(labels, amap, img)
        else:
            chosen[d] = d
        vnext[d] = 0
    return False


@_jit
def _count_endos(labels, maxc, cap, use_mcf):
    """Count homomorphisms of the system into itself, stopping past cap.

    Returns (count, capped); when capped is True the count equals cap and
    at least one further map exists.
    """
    k, n = labels.shape
    kk = k if k > 0 else 1
    amap = np.full((k, maxc), -1, np.int32)
    img = np.full(n, -1, np.int32)
    chosen = np.zeros(n, np.int32)
    vnext = np.zeros(n, np.int32)
    tcnt = np.zeros(n, np.int32)
    trel = np.zeros((n, kk), np.int32)
    tcls = np.zeros((n, kk), np.int32)

    count = 0
    d = 0
    if use_mcf:
        chosen[0] = _pick_most_constrained(labels, amap, img)
    else:
        chosen[0] = 0
    vnext[0] = 0
    while d >= 0:
        x = chosen[d]
        v = vnext[d]
        placed = False
        while v < n:
            ok = True
            for i in range(k):
                a = amap[i, labels[i, x]]
                if a >= 0 and a != labels[i, v]:
                    ok = False
                    break
            if ok:
                placed = True
                break
            v += 1
        if not placed:
            d -= 1
            if d >= 0:
                xp = chosen[d]
                img[xp] = -1
                for t in range(tcnt[d]):
                    amap[trel[d, t], tcls[d, t]] = -1
                tcnt[d] = 0
            continue
        vnext[d] = v + 1
        img[x] = v
        cnt = 0
        for i in range(k):
            c = labels[i, x]
            if amap[i, c] < 0:
                amap[i, c] = labels[i, v]
                trel[d, cnt] = i
                tcls[d, cnt] = c
                cnt += 1
        tcnt[d] = cnt
        if d + 1 == n:
            count += 1
            if count > cap:
                return cap, True
            img[x] = -1
            for t in range(tcnt[d]):
                amap[trel[d, t], tcls[d, t]] = -1
            tcnt[d] = 0
            continue
        d += 1
        if use_mcf:
            chosen[d] = _pick_most_constrained(labels, amap, img)
        else:
            chosen[d] = d
        vnext[d] = 0
    return count, False


@_jit
def _fill_endos(labels, maxc, out):
    """Write homomorphisms into ``out`` in lexicographic order.

    Stops once ``out`` is full; returns the number of rows written.
    """
    k, n = labels.shape
    kk = k if k > 0 else 1
    limit = out.shape[0]
    if limit == 0:
        return 0
    amap = np.full((k, maxc), -1, np.int32)
    img = np.full(n, -1, np.int32)
    vnext = np.zeros(n, np.int32)
    tcnt = np.zeros(n, np.int32)
    trel = np.zeros((n, kk), np.int32)
    tcls = np.zeros((n, kk), np.int32)

    rows = 0
    d = 0
    vnext[0] = 0
    while d >= 0:
        x = d  # index order keeps the output lexicographically sorted
        v = vnext[d]
        placed = False
        while v < n:
            ok = True
            for i in range(k):
                a = amap[i, labels[i, x]]
                if a >= 0 and a != labels[i, v]:
                    ok = False
                    break
            if ok:
                placed = True
                break
            v += 1
        if not placed:
            d -= 1
            if d >= 0:
                img[d] = -1
                for t in range(tcnt[d]):
                    amap[trel[d, t], tcls[d, t]] = -1
                tcnt[d] = 0
            continue
        vnext[d] = v + 1
        img[x] = v
        cnt = 0
        for i in range(k):
            c = labels[i, x]
            if amap[i, c] < 0:
                amap[i, c] = labels[i, v]
                trel[d, cnt] = i
                tcls[d, cnt] = c
                cnt += 1
        tcnt[d] = cnt
        if d + 1 == n:
            for j in range(n):
                out[rows, j] = img[j]
            rows += 1
            if rows == limit:
                return rows
            img[x] = -1
            for t in range(tcnt[d]):
                amap[trel[d, t], tcls[d, t]] = -1
            tcnt[d] = 0
            continue
        d += 1
        vnext[d] = 0
    return rows


@_jit
def _census_mask(parts, maxc, lo, hi, mask):
    """Mark semirigid ordered triples of partitions.

    ``parts`` holds all partitions of the ground set as label rows; the
    triples scanned are (i, j, l) for i in [lo, hi) and j, l over all rows,
    written to ``mask`` in row-major order relative to the chunk.  Returns
    the number of semirigid triples found.
    """
    P, n = parts.shape
    labels = np.empty((3, n), np.int32)
    scratch = np.empty(n, np.int32)
    total = 0
    idx = 0
    for i in range(lo, hi):
        for j in range(P):
            for l in range(P):
                for t in range(n):
                    labels[0, t] = parts[i, t]
                    labels[1, t] = parts[j, t]
                    labels[2, t] = parts[l, t]
                if not _find_witness(labels, maxc, True, scratch):
                    mask[idx] = 1
                    total += 1
                idx += 1
    return total
