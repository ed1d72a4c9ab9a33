"""Ground representations: equivalence relations, systems and self-maps.

Every value is immutable after construction and every operation is a pure
function, so instances can be shared between threads and worker processes
without coordination.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

__all__ = [
    "Partition",
    "System",
    "SelfMap",
    "is_homomorphism",
    "is_reduced",
    "restrict",
]


def _normalize(values) -> tuple[int, ...]:
    """Relabel so class ids appear in first-occurrence order starting at 0."""
    ids: dict = {}
    out = []
    for v in values:
        if v not in ids:
            ids[v] = len(ids)
        out.append(ids[v])
    return tuple(out)


class Partition:
    """An equivalence relation on {0..n-1} stored as a normalized label vector.

    Two elements are equivalent exactly when their labels coincide, so
    reflexivity, symmetry and transitivity hold by construction.  The label
    vector is normalized: scanning left to right, each new class receives the
    smallest unused natural number, hence ``labels[0] == 0`` and class ids
    are contiguous ``0..num_classes-1``.  Arbitrary hashable label values are
    accepted and renormalized on input.
    """

    __slots__ = ("labels", "num_classes")

    def __init__(self, labels: Iterable):
        seq = _normalize(labels)
        if not seq:
            raise ValueError("a partition needs at least one element")
        self.labels = seq
        self.num_classes = max(seq) + 1

    @property
    def n(self) -> int:
        return len(self.labels)

    def same(self, x: int, y: int) -> bool:
        """True when x and y lie in the same class."""
        return self.labels[x] == self.labels[y]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Derived block view, classes in label order, members ascending."""
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.labels):
            out[c].append(x)
        return tuple(tuple(b) for b in out)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        """Build from a list of disjoint blocks covering {0..n-1}."""
        labels = [-1] * n
        for i, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < n:
                    raise ValueError(f"element {x} out of range for n={n}")
                if labels[x] != -1:
                    raise ValueError(f"element {x} appears in two blocks")
                labels[x] = i
        if -1 in labels:
            raise ValueError(f"element {labels.index(-1)} not covered by any block")
        return cls(labels)

    @classmethod
    def equality(cls, n: int) -> "Partition":
        return cls(range(n))

    @classmethod
    def full(cls, n: int) -> "Partition":
        return cls([0] * n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Partition({list(self.labels)})"


class System:
    """A ground-set size together with an ordered family of partitions.

    The ground set is always {0..n-1}; named elements are handled at the
    I/O layer.  Arity is not fixed: operations that need exactly three
    relations enforce that themselves.
    """

    __slots__ = ("n", "relations")

    def __init__(self, n: int, relations: Iterable[Partition]):
        rels = tuple(relations)
        if n < 1:
            raise ValueError("ground set must have at least one element")
        for r in rels:
            if not isinstance(r, Partition):
                raise TypeError("relations must be Partition instances")
            if r.n != n:
                raise ValueError(
                    f"relation on {r.n} elements does not match ground set of size {n}"
                )
        self.n = n
        self.relations = rels

    @property
    def arity(self) -> int:
        return len(self.relations)

    @classmethod
    def from_labels(cls, n: int, rows: Iterable[Iterable]) -> "System":
        return cls(n, tuple(Partition(row) for row in rows))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "relations": [list(r.labels) for r in self.relations]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "System":
        if not isinstance(data, dict) or "n" not in data or "relations" not in data:
            raise ValueError('system JSON needs keys "n" and "relations"')
        n = data["n"]
        rows = data["relations"]
        if not isinstance(n, int):
            raise ValueError('"n" must be an integer')
        if not isinstance(rows, list):
            raise ValueError('"relations" must be a list of label vectors')
        rels = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise ValueError(f"relation {i} is not a label vector of length {n}")
            rels.append(Partition(row))
        return cls(n, rels)

    @classmethod
    def from_json(cls, text: str) -> "System":
        return cls.from_json_dict(json.loads(text))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, System)
            and self.n == other.n
            and self.relations == other.relations
        )

    def __hash__(self) -> int:
        return hash((self.n, self.relations))

    def __repr__(self) -> str:
        return f"System(n={self.n}, relations={list(self.relations)})"


class SelfMap:
    """A total map on {0..n-1}, possibly into a larger codomain.

    The image sequence is the whole state; range checks against a concrete
    codomain happen in the operations that know both systems.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(v) for v in images)
        if not imgs:
            raise ValueError("a self-map needs at least one point")
        if any(v < 0 for v in imgs):
            raise ValueError("images must be non-negative")
        self.images = imgs

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    @classmethod
    def identity(cls, n: int) -> "SelfMap":
        return cls(range(n))

    @classmethod
    def constant(cls, n: int, value: int) -> "SelfMap":
        return cls([value] * n)

    @property
    def is_identity(self) -> bool:
        return all(v == x for x, v in enumerate(self.images))

    @property
    def is_constant(self) -> bool:
        return all(v == self.images[0] for v in self.images)

    def after(self, other: "SelfMap") -> "SelfMap":
        """Composition self∘other: x goes to self(other(x))."""
        return SelfMap(self.images[v] for v in other.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, SelfMap) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"SelfMap({list(self.images)})"


def is_homomorphism(f: SelfMap, src: System, dst: System) -> bool:
    """True when f maps every src-equivalent pair to a dst-equivalent pair.

    Equivalently, for each relation index the induced class map is
    well-defined: all members of a source class land in one target class.
    """
    if src.arity != dst.arity:
        raise ValueError(f"arity mismatch: {src.arity} vs {dst.arity}")
    imgs = f.images
    if len(imgs) != src.n:
        raise ValueError(f"map on {len(imgs)} points does not match ground set of size {src.n}")
    if any(v >= dst.n for v in imgs):
        raise ValueError(f"image out of range for codomain of size {dst.n}")
    for rs, rd in zip(src.relations, dst.relations):
        ls, ld = rs.labels, rd.labels
        seen: dict[int, int] = {}
        for x, y in enumerate(imgs):
            c = ls[x]
            d = ld[y]
            if c in seen:
                if seen[c] != d:
                    return False
            else:
                seen[c] = d
    return True


def is_reduced(m: System) -> bool:
    """True when every pair of distinct elements is separated by some relation."""
    if m.arity < 1:
        raise ValueError("reducedness needs at least one relation")
    if m.n == 1:
        return True
    signatures = set(zip(*(r.labels for r in m.relations)))
    return len(signatures) == m.n


def restrict(m: System, subset: Sequence[int]) -> System:
    """Induced system on the listed elements, labels renormalized."""
    elems = list(subset)
    if len(set(elems)) != len(elems):
        raise ValueError("subset elements must be distinct")
    if any(not 0 <= e < m.n for e in elems):
        raise ValueError("subset element out of range")
    if not elems:
        raise ValueError("subset must be non-empty")
    rows = [tuple(r.labels[e] for e in elems) for r in m.relations]
    return System.from_labels(len(elems), rows)
