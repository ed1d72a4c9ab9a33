"""Orthogonality, 3-nets, and partial latin square completion.

Two equivalence relations are orthogonal when any class of one meets any
class of the other in at most one element, strongly orthogonal when the
intersection is always exactly one element.  Three pairwise strongly
orthogonal relations form a 3-net, the row/column/symbol structure of a
latin square.  A system of three pairwise orthogonal relations embeds into
a 3-net of order at most twice its size: write it as a partial latin
square of order e, complete that inside a square of order 2e, and read the
net back off.
"""

from __future__ import annotations

from typing import Iterable

from .core import Partition, SelfMap, System

__all__ = [
    "PartialLatinSquare",
    "LatinSquare",
    "orthogonal",
    "strongly_orthogonal",
    "is_3net",
    "to_partial_latin",
    "evans_extend",
    "embed_into_3net",
    "latin_to_3net",
    "parse_latin",
    "format_latin",
]

_COMPLETION_NODE_BUDGET = 5_000_000


class PartialLatinSquare:
    """Square array over symbols {0..m-1} with optional entries; no symbol
    repeats within a row or column among the filled cells."""

    __slots__ = ("order", "cells")

    def __init__(self, cells: Iterable[Iterable]):
        rows = tuple(tuple(c) for c in cells)
        m = len(rows)
        if m == 0:
            raise ValueError("square must have at least one row")
        if any(len(r) != m for r in rows):
            raise ValueError("array is not square")
        for r, row in enumerate(rows):
            for c, s in enumerate(row):
                if s is None:
                    continue
                if not isinstance(s, int) or not 0 <= s < m:
                    raise ValueError(f"cell ({r},{c}): symbol {s!r} out of range")
        for r, row in enumerate(rows):
            filled = [s for s in row if s is not None]
            if len(set(filled)) != len(filled):
                raise ValueError(f"row {r} repeats a symbol")
        for c in range(m):
            filled = [rows[r][c] for r in range(m) if rows[r][c] is not None]
            if len(set(filled)) != len(filled):
                raise ValueError(f"column {c} repeats a symbol")
        self.order = m
        self.cells = rows

    @property
    def filled_count(self) -> int:
        return sum(1 for row in self.cells for s in row if s is not None)

    @property
    def is_complete(self) -> bool:
        return all(s is not None for row in self.cells for s in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialLatinSquare) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order})"


class LatinSquare(PartialLatinSquare):
    """Fully filled square: each row and column is a permutation of the
    symbol set."""

    def __init__(self, cells: Iterable[Iterable]):
        super().__init__(cells)
        if not self.is_complete:
            raise ValueError("latin square must have every cell filled")


def orthogonal(r: Partition, t: Partition) -> bool:
    """Each class of r meets each class of t in at most one element."""
    if r.n != t.n:
        raise ValueError("partitions live on different ground sets")
    return len(set(zip(r.labels, t.labels))) == r.n


def strongly_orthogonal(r: Partition, t: Partition) -> bool:
    """Each class of r meets each class of t in exactly one element."""
    return orthogonal(r, t) and r.num_classes * t.num_classes == r.n


def _pairwise_orthogonal(m: System) -> bool:
    rels = m.relations
    return all(
        orthogonal(rels[i], rels[j])
        for i in range(len(rels))
        for j in range(i + 1, len(rels))
    )


def is_3net(m: System) -> bool:
    """Three pairwise strongly orthogonal relations."""
    if m.arity != 3:
        raise ValueError("a 3-net has exactly three relations")
    rels = m.relations
    if not all(
        strongly_orthogonal(rels[i], rels[j])
        for i in range(3)
        for j in range(i + 1, 3)
    ):
        return False
    # strong orthogonality forces a square grid with equal line counts
    side = rels[0].num_classes
    assert all(r.num_classes == side for r in rels) and side * side == m.n
    return True


def to_partial_latin(m: System) -> tuple[PartialLatinSquare, tuple[tuple[int, int], ...]]:
    """Partial latin square of a pairwise orthogonal triple.

    The square order is the largest class count; element x occupies cell
    (class of x in relation 1, class of x in relation 2) with symbol equal
    to its class in relation 0.  Class ids follow first-occurrence order,
    padding rows/columns/symbols take the next indices.  Returns the square
    together with the cell of each element.
    """
    if m.arity != 3:
        raise ValueError("need exactly three relations")
    if not _pairwise_orthogonal(m):
        raise ValueError("relations are not pairwise orthogonal")
    r0, r1, r2 = m.relations
    e = max(r0.num_classes, r1.num_classes, r2.num_classes)
    cells: list[list[int | None]] = [[None] * e for _ in range(e)]
    placed = []
    for x in range(m.n):
        row, col, sym = r1.labels[x], r2.labels[x], r0.labels[x]
        assert cells[row][col] is None
        cells[row][col] = sym
        placed.append((row, col))
    return PartialLatinSquare(cells), tuple(placed)


def evans_extend(p: PartialLatinSquare) -> LatinSquare:
    """Complete a partial square of order e inside a square of order 2e.

    A completion at order 2e always exists, so the search below cannot run
    out of options; it uses most-constrained-cell backtracking rather than
    the constructive matching argument, and a search failure would be an
    implementation defect, reported as such.
    """
    e = p.order
    size = 2 * e
    grid = [[-1] * size for _ in range(size)]
    rowmask = [0] * size
    colmask = [0] * size
    for r in range(e):
        for c in range(e):
            s = p.cells[r][c]
            if s is not None:
                grid[r][c] = s
                rowmask[r] |= 1 << s
                colmask[c] |= 1 << s
    full = (1 << size) - 1

    def pick_cell():
        best = None
        best_count = size + 1
        for r in range(size):
            free_row = full & ~rowmask[r]
            if free_row == 0:
                continue
            row = grid[r]
            for c in range(size):
                if row[c] < 0:
                    avail = free_row & ~colmask[c]
                    cnt = avail.bit_count()
                    if cnt < best_count:
                        best_count = cnt
                        best = (r, c)
                        if cnt == 0:
                            return best
        return best

    frames: list[tuple[int, int, int]] = []
    nodes = 0
    cell = pick_cell()
    nxt = 0
    while cell is not None:
        r, c = cell
        avail = full & ~(rowmask[r] | colmask[c])
        s = -1
        for cand in range(nxt, size):
            if avail >> cand & 1:
                s = cand
                break
        if s < 0:
            if not frames:
                raise RuntimeError(
                    "internal error: latin completion search exhausted"
                )
            r, c, prev = frames.pop()
            rowmask[r] &= ~(1 << grid[r][c])
            colmask[c] &= ~(1 << grid[r][c])
            grid[r][c] = -1
            cell = (r, c)
            nxt = prev + 1
            continue
        nodes += 1
        if nodes > _COMPLETION_NODE_BUDGET:
            raise RuntimeError("internal error: latin completion exceeded budget")
        grid[r][c] = s
        rowmask[r] |= 1 << s
        colmask[c] |= 1 << s
        frames.append((r, c, s))
        cell = pick_cell()
        nxt = 0
    result = LatinSquare(grid)
    for r in range(e):
        for c in range(e):
            s = p.cells[r][c]
            assert s is None or result.cells[r][c] == s
    return result


def latin_to_3net(l: LatinSquare) -> System:
    """System of a latin square: cell (r,c) is element r*m+c, relations are
    equal row, equal column, equal symbol.  Always a 3-net."""
    m = l.order
    rows = Partition(r for r in range(m) for _ in range(m))
    cols = Partition(c for _ in range(m) for c in range(m))
    syms = Partition(l.cells[r][c] for r in range(m) for c in range(m))
    return System(m * m, (rows, cols, syms))


def embed_into_3net(m: System) -> tuple[System, SelfMap]:
    """Embed a pairwise orthogonal triple into a 3-net of order at most 2|E|.

    The net's relations are ordered to match the input: index 0 is symbol
    equality, 1 row equality, 2 column equality.  The returned map g is an
    embedding in both directions: x and y are i-related exactly when g(x)
    and g(y) are.  Orthogonality is necessary as well as sufficient, so a
    non-orthogonal input is rejected.
    """
    if m.arity != 3:
        raise ValueError("need exactly three relations")
    if not _pairwise_orthogonal(m):
        raise ValueError("relations are not pairwise orthogonal")
    if is_3net(m):
        return m, SelfMap.identity(m.n)
    partial, placed = to_partial_latin(m)
    square = evans_extend(partial)
    t = square.order
    syms = Partition(square.cells[e // t][e % t] for e in range(t * t))
    rows = Partition(e // t for e in range(t * t))
    cols = Partition(e % t for e in range(t * t))
    net = System(t * t, (syms, rows, cols))
    g = SelfMap(r * t + c for r, c in placed)
    for i in range(3):
        src = m.relations[i].labels
        dst = net.relations[i].labels
        for x in range(m.n):
            for y in range(x + 1, m.n):
                assert (src[x] == src[y]) == (dst[g(x)] == dst[g(y)])
    return net, g


def parse_latin(text: str) -> PartialLatinSquare:
    """Latin square text format: m lines of m whitespace-separated tokens,
    ``.`` for an empty cell, symbols 0..m-1."""
    rows = []
    lines = [ln for ln in text.splitlines() if ln.strip()]
    m = len(lines)
    for ln, raw in enumerate(lines, 1):
        tokens = raw.split()
        if len(tokens) != m:
            raise ValueError(f"line {ln}: expected {m} cells, got {len(tokens)}")
        row: list[int | None] = []
        for tok in tokens:
            if tok == ".":
                row.append(None)
            else:
                try:
                    row.append(int(tok))
                except ValueError:
                    raise ValueError(f"line {ln}: bad cell {tok!r}") from None
        rows.append(row)
    return PartialLatinSquare(rows)


def format_latin(p: PartialLatinSquare) -> str:
    return "".join(
        " ".join("." if s is None else str(s) for s in row) + "\n"
        for row in p.cells
    )
