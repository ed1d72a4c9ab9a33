"""Shared helpers: brute-force oracles and seeded random generators.

The oracle deliberately enumerates every one of the n^n self-maps and
filters with the public homomorphism predicate, staying independent of the
pruned search it is used to check.
"""

from __future__ import annotations

import random
from itertools import product

from hypothesis import HealthCheck, settings

from semirigid import Partition, SelfMap, System, is_homomorphism
from semirigid.constructions import (
    pierce_system,
    product_system,
    simplex_system,
    tn,
    zadori,
)
from semirigid.nets import LatinSquare, orthogonal
from semirigid.planar import induced_system
from semirigid.ultra import ChainUltrametric

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=40,
)
settings.load_profile("suite")


def all_selfmaps(n: int):
    for images in product(range(n), repeat=n):
        yield SelfMap(images)


def naive_endomorphisms(m: System) -> list[SelfMap]:
    return [f for f in all_selfmaps(m.n) if is_homomorphism(f, m, m)]


def random_partition(rng: random.Random, n: int) -> Partition:
    return Partition(rng.randrange(max(1, n - 1)) for _ in range(n))


def random_system(rng: random.Random, n: int, arity: int = 3) -> System:
    return System(n, tuple(random_partition(rng, n) for _ in range(arity)))


def golden_small_systems() -> list[System]:
    """Named systems with at most four elements."""
    return [
        System(1, (Partition([0]),) * 3),
        System(2, (Partition([0, 1]), Partition([0, 0]), Partition([0, 1]))),
        zadori(3),
        induced_system(tn(1)),
        pierce_system(3),
        pierce_system(4),
        simplex_system(3, 1),
        product_system(2, 2),
        System(3, (Partition([0, 1, 2]),) * 3),
        System(3, (Partition([0, 0, 0]),) * 3),
    ]


def shuffled_latin(rng: random.Random, order: int) -> LatinSquare:
    """Random latin square: cyclic table scrambled by row/column/symbol
    permutations."""
    rows = list(range(order))
    cols = list(range(order))
    syms = list(range(order))
    rng.shuffle(rows)
    rng.shuffle(cols)
    rng.shuffle(syms)
    cells = [
        [syms[(rows[r] + cols[c]) % order] for c in range(order)]
        for r in range(order)
    ]
    return LatinSquare(cells)


def random_orthogonal_triple(rng: random.Random, max_n: int = 12) -> System:
    """Pairwise orthogonal triple sampled as a random piece of a latin
    square: relations are symbol, row and column equality on chosen cells."""
    n = rng.randint(3, max_n)
    min_side = 2
    while min_side * min_side < n:
        min_side += 1
    w = rng.randint(min_side, n)
    square = shuffled_latin(rng, w)
    cells = [(r, c) for r in range(w) for c in range(w)]
    rng.shuffle(cells)
    chosen = cells[:n]
    syms = Partition(square.cells[r][c] for r, c in chosen)
    rows = Partition(r for r, _ in chosen)
    cols = Partition(c for _, c in chosen)
    m = System(n, (syms, rows, cols))
    assert all(
        orthogonal(m.relations[i], m.relations[j])
        for i in range(3)
        for j in range(i + 1, 3)
    )
    return m


def random_chain_space(rng: random.Random, n: int, depth: int = 3) -> ChainUltrametric:
    """Random chain ultrametric from random leaf paths: the distance is the
    number of trailing coordinates after the longest common prefix, plus a
    final always-distinct coordinate enforcing separation."""
    paths = [
        tuple(rng.randrange(2) for _ in range(depth)) + (i,) for i in range(n)
    ]
    rank = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            common = 0
            for a, b in zip(paths[x], paths[y]):
                if a != b:
                    break
                common += 1
            rank[x][y] = depth + 1 - common
    return ChainUltrametric(rank)
