"""Reproducible constructors for the named families.

Element orderings are fixed (sorted points, lexicographic tuples) so that
emitted files and golden tests stay stable.  Size caps guard against
accidental combinatorial explosions and can be raised per call.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

from .core import Partition, System
from .planar import PlanarSet

__all__ = [
    "zadori",
    "tn",
    "tn2",
    "tn2p",
    "simplex_system",
    "pierce_system",
    "product_system",
    "from_matrix",
    "to_matrix",
    "u_example",
    "DEFAULT_SIZE_CAP",
]

DEFAULT_SIZE_CAP = 10_000


def zadori(n: int) -> System:
    """The three-relation block family on {0..n-1}, odd case n=2k+1 (k>=1),
    even case n=2k+2 (k>=2).  Sizes 1, 2 and 4 are rejected."""
    if n <= 0 or n in (1, 2, 4):
        raise ValueError(f"no system of this family exists for n={n}")
    if n % 2 == 1:
        k = (n - 1) // 2
        rho = [list(range(k)), list(range(k, 2 * k + 1))]
        sigma = [[i, k + i] for i in range(k)] + [[2 * k]]
        tau = [[i, k + 1 + i] for i in range(k)] + [[k]]
    else:
        k = (n - 2) // 2
        rho = [[0], list(range(1, k + 1)), list(range(k + 1, 2 * k + 2))]
        sigma = [[0, 1, k + 1]] + [[i, k + i] for i in range(2, k + 1)] + [[2 * k + 1]]
        tau = (
            [[i, k + 1 + i] for i in range(1, k)]
            + [[0, k, 2 * k + 1]]
            + [[k + 1]]
        )
    return System(
        n,
        (
            Partition.from_blocks(n, rho),
            Partition.from_blocks(n, sigma),
            Partition.from_blocks(n, tau),
        ),
    )


def tn(n: int) -> PlanarSet:
    """Triangular set {(i,j): i+j <= n}; (n+1)(n+2)/2 points."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return PlanarSet((i, j) for i in range(n + 1) for j in range(n + 1 - i))


def tn2(n: int) -> PlanarSet:
    """The two outermost diagonals of tn: points with i+j in {n-1, n}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return PlanarSet(
        (i, j)
        for i in range(n + 1)
        for j in range(n + 1 - i)
        if i + j in (n - 1, n)
    )


def tn2p(n: int) -> PlanarSet:
    """tn2 with the origin adjoined."""
    return PlanarSet(tuple(tn2(n)) + ((0, 0),))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` non-negative integers summing to ``total``, in
    lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def simplex_system(i_count: int, n: int, max_size: int = DEFAULT_SIZE_CAP) -> System:
    """Coordinate system on all i_count-tuples of naturals summing to n.

    Relation i groups tuples with equal i-th coordinate; elements are
    ordered lexicographically.
    """
    if i_count < 3:
        raise ValueError("need at least three coordinates")
    if n < 1:
        raise ValueError("n must be at least 1")
    size = comb(n + i_count - 1, i_count - 1)
    if size > max_size:
        raise ValueError(f"system would have {size} elements (cap {max_size})")
    elems = list(_compositions(n, i_count))
    rels = tuple(Partition(e[i] for e in elems) for i in range(i_count))
    return System(len(elems), rels)


def pierce_system(k: int) -> System:
    """k relations on k elements; relation i splits off the singleton {i}."""
    if k < 3:
        raise ValueError("need at least three elements")
    rels = tuple(Partition(1 if x == i else 0 for x in range(k)) for i in range(k))
    return System(k, rels)


def product_system(w: int, i_count: int, max_size: int = DEFAULT_SIZE_CAP) -> System:
    """Full product: all tuples in {0..w-1}^i_count, relation i compares the
    i-th coordinate.  Tuples in lexicographic order."""
    if w < 1 or i_count < 1:
        raise ValueError("w and i_count must be positive")
    size = w**i_count
    if size > max_size:
        raise ValueError(f"system would have {size} elements (cap {max_size})")
    elems = list(_compositions_product(w, i_count))
    rels = tuple(Partition(e[i] for e in elems) for i in range(i_count))
    return System(len(elems), rels)


def _compositions_product(w: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        yield ()
        return
    for head in range(w):
        for rest in _compositions_product(w, parts - 1):
            yield (head,) + rest


def from_matrix(rows: Sequence[Sequence[int]]) -> System:
    """System whose relation j compares column j of the matrix by value."""
    if not rows:
        raise ValueError("matrix needs at least one row")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("matrix must be rectangular")
    rels = tuple(Partition(r[j] for r in rows) for j in range(width))
    return System(len(rows), rels)


def to_matrix(m: System) -> list[list[int]]:
    """Label vectors as matrix columns; from_matrix recovers the system."""
    return [[r.labels[x] for r in m.relations] for x in range(m.n)]


def u_example() -> PlanarSet:
    """The 8-point planar set whose induced system is semirigid although no
    two points generate it under triangle completion."""
    return PlanarSet(
        [(0, 0), (2, 0), (1, 1), (2, 1), (1, 2), (2, 2), (0, 3), (1, 3)]
    )
