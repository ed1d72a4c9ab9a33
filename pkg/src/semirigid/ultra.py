"""Set-valued distances of systems and chain-valued ultrametric spaces.

A system of equivalence relations measures the distance between two
elements by the set of relation indices that separate them; homomorphisms
are then exactly the non-expansive maps for set inclusion.  When the
distance values form a chain instead, a space with at least two points is
never semirigid: either every permutation preserves it, or collapsing a
smallest ball produces a proper non-expansive self-map.
"""

from __future__ import annotations

import json
from typing import Iterable

from .core import SelfMap, System

__all__ = [
    "ChainUltrametric",
    "set_distance",
    "is_nonexpansive",
    "chain_nonexpansive",
    "proper_nonexpansive_map",
]


class ChainUltrametric:
    """Ultrametric space with distances encoded as integer ranks.

    Only the order of the values matters, so ranks stand in for an
    arbitrary linearly ordered value set: 0 is the zero distance, and
    rank[x][y] <= max(rank[x][z], rank[z][y]) for every triple.
    """

    __slots__ = ("rank",)

    def __init__(self, rank: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rank)
        n = len(rows)
        if n == 0:
            raise ValueError("space needs at least one point")
        if any(len(r) != n for r in rows):
            raise ValueError("rank matrix must be square")
        for x in range(n):
            if rows[x][x] != 0:
                raise ValueError(f"rank[{x}][{x}] must be 0")
            for y in range(n):
                if rows[x][y] != rows[y][x]:
                    raise ValueError(f"rank matrix not symmetric at ({x},{y})")
                if x != y and rows[x][y] <= 0:
                    raise ValueError(f"distinct points {x},{y} need positive rank")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if rows[x][y] > max(rows[x][z], rows[z][y]):
                        raise ValueError(
                            f"ultrametric inequality fails on ({x},{z},{y})"
                        )
        self.rank = rows

    @property
    def n(self) -> int:
        return len(self.rank)

    def ball(self, x: int, r: int) -> tuple[int, ...]:
        """Closed ball: points within rank r of x."""
        return tuple(z for z in range(self.n) if self.rank[x][z] <= r)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rank": [list(row) for row in self.rank]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ChainUltrametric":
        if not isinstance(data, dict) or "n" not in data or "rank" not in data:
            raise ValueError('chain-space JSON needs keys "n" and "rank"')
        space = cls(data["rank"])
        if space.n != data["n"]:
            raise ValueError('"n" does not match the rank matrix size')
        return space

    @classmethod
    def from_json(cls, text: str) -> "ChainUltrametric":
        return cls.from_json_dict(json.loads(text))


def set_distance(m: System, x: int, y: int) -> frozenset[int]:
    """Indices of the relations separating x and y; empty iff no relation
    distinguishes them (always empty on the diagonal)."""
    if not (0 <= x < m.n and 0 <= y < m.n):
        raise ValueError("element out of range")
    return frozenset(
        i for i, r in enumerate(m.relations) if r.labels[x] != r.labels[y]
    )


def is_nonexpansive(f: SelfMap, src: System, dst: System) -> bool:
    """Distance sets never grow under f.  Agrees with is_homomorphism on
    every input: failing some relation on an image pair is the same as that
    relation index entering the distance."""
    if src.arity != dst.arity:
        raise ValueError(f"arity mismatch: {src.arity} vs {dst.arity}")
    if len(f.images) != src.n:
        raise ValueError("map does not match the source ground set")
    if any(v >= dst.n for v in f.images):
        raise ValueError(f"image out of range for codomain of size {dst.n}")
    for x in range(src.n):
        for y in range(x + 1, src.n):
            if not set_distance(dst, f(x), f(y)) <= set_distance(src, x, y):
                return False
    return True


def chain_nonexpansive(s: ChainUltrametric, f: SelfMap) -> bool:
    """Rank distances never grow under f."""
    if len(f.images) != s.n or any(v >= s.n for v in f.images):
        raise ValueError("map does not match the space")
    rank = s.rank
    for x in range(s.n):
        for y in range(x + 1, s.n):
            if rank[f(x)][f(y)] > rank[x][y]:
                return False
    return True


def proper_nonexpansive_map(s: ChainUltrametric) -> SelfMap:
    """A non-expansive self-map that is neither the identity nor constant.

    If all non-zero ranks coincide every permutation is non-expansive, so
    the transposition of the two smallest points works.  Otherwise collapse
    the closed ball of smallest positive radius onto its center: the ball
    is proper because any pair at a larger distance cannot fit inside it.
    """
    n = s.n
    if n < 2:
        raise ValueError("need at least two points")
    values = {s.rank[x][y] for x in range(n) for y in range(x + 1, n)}
    if len(values) == 1:
        images = list(range(n))
        images[0], images[1] = 1, 0
        return SelfMap(images)
    r = min(values)
    center = None
    for x in range(n):
        for y in range(x + 1, n):
            if s.rank[x][y] == r:
                center = x
                break
        if center is not None:
            break
    assert center is not None
    ball = set(s.ball(center, r))
    return SelfMap(center if z in ball else z for z in range(n))
