"""Meets and joins of partitions, the M3 test, generation of the full
partition lattice, isomorphism of systems, and the small-size census of
semirigid triples.

Semirigid triples necessarily sit inside the partition lattice as an M3:
pairwise meets are the equality relation and pairwise joins the full one.
The converse generation test (the given relations generate the whole
lattice under binary meets and joins) is a sufficient condition for
semirigidity.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

import numpy as np

from . import _kernels
from .core import Partition, SelfMap, System, _normalize

__all__ = [
    "meet",
    "join",
    "is_m3",
    "generates_eqv",
    "Isomorphism",
    "are_isomorphic",
    "iter_partitions",
    "semirigid_triples",
    "canonical_triple",
    "census",
]

_MAX_LATTICE_N = 8
_MAX_CENSUS_N = 5


def meet(r: Partition, t: Partition) -> Partition:
    """Common refinement: classes are the non-empty intersections."""
    if r.n != t.n:
        raise ValueError("partitions live on different ground sets")
    return Partition(zip(r.labels, t.labels))


def join(r: Partition, t: Partition) -> Partition:
    """Finest common coarsening: transitive closure of the union."""
    if r.n != t.n:
        raise ValueError("partitions live on different ground sets")
    n = r.n
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in (r, t):
        first: dict[int, int] = {}
        for x, lab in enumerate(p.labels):
            if lab in first:
                ra, rb = find(first[lab]), find(x)
                if ra != rb:
                    parent[rb] = ra
            else:
                first[lab] = x
    return Partition(find(x) for x in range(n))


def is_m3(m: System) -> bool:
    """All three pairwise meets are equality and all pairwise joins full."""
    if m.arity != 3:
        raise ValueError("the M3 test needs exactly three relations")
    rels = m.relations
    for i in range(3):
        for j in range(i + 1, 3):
            if meet(rels[i], rels[j]).num_classes != m.n:
                return False
            if join(rels[i], rels[j]).num_classes != 1:
                return False
    return True


def _bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def generates_eqv(m: System) -> bool:
    """Do the relations generate every partition under binary meet/join?

    The closure starts from the given relations only; equality and the full
    relation must arise from the operations themselves.
    """
    if m.arity < 1:
        raise ValueError("need at least one relation")
    if m.n > _MAX_LATTICE_N:
        raise ValueError(f"lattice closure is limited to n <= {_MAX_LATTICE_N}")
    seen = set(m.relations)
    work = list(seen)
    while work:
        p = work.pop()
        for q in list(seen):
            for r in (meet(p, q), join(p, q)):
                if r not in seen:
                    seen.add(r)
                    work.append(r)
    return len(seen) == _bell(m.n)


@dataclass(frozen=True)
class Isomorphism:
    """Ground-set bijection plus the relation reordering it realizes."""

    mapping: SelfMap
    relation_permutation: tuple[int, ...]


def are_isomorphic(
    m: System, other: System, allow_relation_permutation: bool = False
) -> Isomorphism | None:
    """A bijection g (and optionally a relation permutation pi) with
    x related to y in relation i exactly when g(x) is related to g(y) in
    relation pi(i); None when no such pair exists."""
    if m.arity != other.arity:
        raise ValueError("systems have different arities")
    if m.n != other.n:
        return None
    if allow_relation_permutation:
        orders = list(permutations(range(m.arity)))
    else:
        orders = [tuple(range(m.arity))]
    for order in orders:
        mapping = _iso_search(m, other, order)
        if mapping is not None:
            return Isomorphism(SelfMap(mapping), order)
    return None


def _iso_search(m: System, other: System, order: tuple[int, ...]):
    n, k = m.n, m.arity
    la = [m.relations[i].labels for i in range(k)]
    lb = [other.relations[order[i]].labels for i in range(k)]
    sizes_a = []
    sizes_b = []
    for i in range(k):
        ca = [0] * (max(la[i]) + 1)
        for lab in la[i]:
            ca[lab] += 1
        cb = [0] * (max(lb[i]) + 1)
        for lab in lb[i]:
            cb[lab] += 1
        if sorted(ca) != sorted(cb):
            return None
        sizes_a.append(ca)
        sizes_b.append(cb)

    fwd: list[dict[int, int]] = [{} for _ in range(k)]
    rev: list[dict[int, int]] = [{} for _ in range(k)]
    used = [False] * n
    img = [-1] * n

    def rec(x: int) -> bool:
        if x == n:
            return True
        for y in range(n):
            if used[y]:
                continue
            touched = []
            ok = True
            for i in range(k):
                ca, cb = la[i][x], lb[i][y]
                have_f = ca in fwd[i]
                have_r = cb in rev[i]
                if have_f or have_r:
                    if not (have_f and fwd[i].get(ca) == cb and rev[i].get(cb) == ca):
                        ok = False
                        break
                else:
                    if sizes_a[i][ca] != sizes_b[i][cb]:
                        ok = False
                        break
                    fwd[i][ca] = cb
                    rev[i][cb] = ca
                    touched.append(i)
            if ok:
                used[y] = True
                img[x] = y
                if rec(x + 1):
                    return True
                used[y] = False
                img[x] = -1
            for i in touched:
                del rev[i][fwd[i][la[i][x]]]
                del fwd[i][la[i][x]]
        return False

    if rec(0):
        return tuple(img)
    return None


def iter_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All normalized label vectors on {0..n-1}, lexicographically."""
    if n < 1:
        raise ValueError("n must be at least 1")

    def rec(i: int, prefix: list[int], mx: int):
        if i == n:
            yield tuple(prefix)
            return
        for v in range(mx + 2):
            prefix.append(v)
            yield from rec(i + 1, prefix, max(mx, v))
            prefix.pop()

    yield from rec(1, [0], 0)


def _partition_array(n: int) -> np.ndarray:
    return np.array(list(iter_partitions(n)), dtype=np.int32)


def _census_chunk(n: int, lo: int, hi: int) -> np.ndarray:
    parts = _partition_array(n)
    count_p = parts.shape[0]
    mask = np.zeros((hi - lo) * count_p * count_p, dtype=np.uint8)
    _kernels._census_mask(parts, n, lo, hi, mask)
    return np.nonzero(mask)[0] + lo * count_p * count_p


def semirigid_triples(n: int, jobs: int = 1) -> list[tuple[tuple[int, ...], ...]]:
    """All ordered triples of partitions of {0..n-1} that are semirigid."""
    if n > _MAX_CENSUS_N:
        raise ValueError(f"census is limited to n <= {_MAX_CENSUS_N}")
    parts = list(iter_partitions(n))
    count_p = len(parts)
    if jobs <= 1:
        indices = _census_chunk(n, 0, count_p)
    else:
        bounds = np.linspace(0, count_p, jobs + 1, dtype=int)
        chunks = [(n, int(lo), int(hi)) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_census_chunk_star, chunks))
        indices = np.concatenate(results) if results else np.zeros(0, dtype=np.int64)
    out = []
    for idx in indices:
        idx = int(idx)
        i, rest = divmod(idx, count_p * count_p)
        j, l = divmod(rest, count_p)
        out.append((parts[i], parts[j], parts[l]))
    return out


def _census_chunk_star(args) -> np.ndarray:
    return _census_chunk(*args)


def canonical_triple(
    triple: tuple[tuple[int, ...], ...], permute_relations: bool = False
) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least label matrix over all relabelings of the
    ground set, optionally over relation reorderings as well."""
    n = len(triple[0])
    rel_orders = (
        list(permutations(range(len(triple)))) if permute_relations else [tuple(range(len(triple)))]
    )
    best = None
    for sigma in permutations(range(n)):
        rows = [_normalize(row[sigma[x]] for x in range(n)) for row in triple]
        for order in rel_orders:
            cand = tuple(rows[i] for i in order)
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def census(
    n: int,
    up_to_iso: bool = False,
    permute_relations: bool = False,
    jobs: int = 1,
) -> int:
    """Number of semirigid ordered triples on {0..n-1}, or of their classes
    under ground-set relabeling (plus relation reordering if requested)."""
    triples = semirigid_triples(n, jobs=jobs)
    if not up_to_iso:
        return len(triples)
    return len({canonical_triple(t, permute_relations) for t in triples})
