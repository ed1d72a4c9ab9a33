"""Endomorphism enumeration and the semirigidity decision.

A system is semirigid when its only endomorphisms are the identity and the
constant maps.  The search runs over raw self-maps with class-consistency
pruning (see ``_kernels``); for reduced systems the surviving assignments
are exactly the coordinate families, per-relation maps on class ids whose
induced map lands inside the system.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import SelfMap, System, is_homomorphism, is_reduced

__all__ = [
    "DEFAULT_ENDO_CAP",
    "EndoReport",
    "EndoEnumeration",
    "CoordinateFamily",
    "canonical_embedding",
    "endomorphisms",
    "count_endomorphisms",
    "is_semirigid",
    "coordinate_families",
]

DEFAULT_ENDO_CAP = 10**6


def _label_matrix(m: System) -> np.ndarray:
    arr = np.zeros((m.arity, m.n), dtype=np.int32)
    for i, r in enumerate(m.relations):
        arr[i, :] = r.labels
    return arr


def _max_classes(m: System) -> int:
    return max((r.num_classes for r in m.relations), default=1)


@dataclass(frozen=True)
class EndoReport:
    """Outcome of the semirigidity decision.

    ``endo_count`` is exact when the system is semirigid (identity plus the
    constant maps) and None otherwise, because the search stops at the first
    witness.  The witness, when present, is the lexicographically smallest
    endomorphism that is neither the identity nor constant.
    """

    semirigid: bool
    endo_count: int | None
    witness: SelfMap | None


@dataclass(frozen=True)
class EndoEnumeration:
    """Endomorphism list in lexicographic order, with a truncation flag."""

    maps: tuple[SelfMap, ...]
    capped: bool

    def __iter__(self):
        return iter(self.maps)

    def __len__(self) -> int:
        return len(self.maps)


@dataclass(frozen=True)
class CoordinateFamily:
    """Per-relation maps on class ids that assemble into an endomorphism.

    ``class_maps[i][c]`` is the class id that class c of relation i is sent
    to.  For a reduced system the family determines the endomorphism: each
    element is identified by its class tuple, and the family sends that
    tuple to the class tuple of the image element.
    """

    class_maps: tuple[tuple[int, ...], ...]

    def to_selfmap(self, m: System) -> SelfMap:
        """Evaluate the family on the system; fails if a tuple leaves it."""
        index: dict[tuple[int, ...], int] = {}
        for x in range(m.n):
            index[tuple(r.labels[x] for r in m.relations)] = x
        images = []
        for x in range(m.n):
            target = tuple(
                self.class_maps[i][r.labels[x]] for i, r in enumerate(m.relations)
            )
            if target not in index:
                raise ValueError(
                    "coordinate family maps an element outside the system"
                )
            images.append(index[target])
        return SelfMap(images)


def canonical_embedding(m: System) -> list[tuple[int, ...]]:
    """Class tuple of each element; pairwise distinct for reduced systems."""
    if not is_reduced(m):
        raise ValueError("canonical embedding needs a reduced system")
    return [tuple(r.labels[x] for r in m.relations) for x in range(m.n)]


def count_endomorphisms(m: System, cap: int | None = None) -> tuple[int, bool]:
    """Number of endomorphisms, stopping past ``cap`` with a capped flag."""
    effective = DEFAULT_ENDO_CAP if cap is None else int(cap)
    count, capped = _kernels._count_endos(
        _label_matrix(m), _max_classes(m), effective, True
    )
    return int(count), bool(capped)


def endomorphisms(m: System, cap: int | None = None) -> EndoEnumeration:
    """All self-maps preserving every relation, lexicographically sorted.

    Truncated at ``cap`` (default 10**6) with ``capped`` set rather than
    silently dropping maps.
    """
    count, capped = count_endomorphisms(m, cap)
    labels = _label_matrix(m)
    out = np.zeros((count, m.n), dtype=np.int32)
    rows = _kernels._fill_endos(labels, _max_classes(m), out)
    assert rows == count
    maps = tuple(SelfMap(int(v) for v in out[r]) for r in range(rows))
    return EndoEnumeration(maps, capped)


def is_semirigid(m: System) -> EndoReport:
    """Decide whether identity and constants are the only endomorphisms.

    The decision search stops at the first non-trivial endomorphism; a
    second, lexicographically ordered pass then produces the canonical
    witness so that failures are reproducible.
    """
    labels = _label_matrix(m)
    maxc = _max_classes(m)
    scratch = np.empty(m.n, dtype=np.int32)
    if _kernels._find_witness(labels, maxc, True, scratch):
        wit = np.empty(m.n, dtype=np.int32)
        found = _kernels._find_witness(labels, maxc, False, wit)
        assert found
        witness = SelfMap(int(v) for v in wit)
        assert is_homomorphism(witness, m, m)
        assert not witness.is_identity and not witness.is_constant
        return EndoReport(False, None, witness)
    if m.arity >= 1:
        # a semirigid system is necessarily reduced
        assert is_reduced(m)
    count = 1 if m.n == 1 else m.n + 1
    return EndoReport(True, count, None)


def coordinate_families(m: System) -> list[CoordinateFamily]:
    """Families in bijection with the endomorphisms of a reduced system."""
    if not is_reduced(m):
        raise ValueError("coordinate families need a reduced system")
    endos = endomorphisms(m)
    if endos.capped:
        raise ValueError("endomorphism enumeration hit the cap; raise it first")
    families = []
    for f in endos.maps:
        per_relation = []
        for r in m.relations:
            a = [-1] * r.num_classes
            for x, fx in enumerate(f.images):
                a[r.labels[x]] = r.labels[fx]
            per_relation.append(tuple(a))
        families.append(CoordinateFamily(tuple(per_relation)))
    # one family per endomorphism, and evaluating it recovers the map
    assert len(set(families)) == len(families)
    for fam, f in zip(families, endos.maps):
        assert fam.to_selfmap(m) == f
    return families
