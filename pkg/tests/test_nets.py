import random

import pytest

from conftest import random_orthogonal_triple, shuffled_latin
from semirigid import (
    LatinSquare,
    PartialLatinSquare,
    Partition,
    System,
    embed_into_3net,
    evans_extend,
    is_3net,
    is_m3,
    latin_to_3net,
    orthogonal,
    pierce_system,
    product_system,
    restrict,
    strongly_orthogonal,
    to_partial_latin,
    zadori,
)
from semirigid.nets import format_latin, parse_latin


def _grid9():
    return product_system(3, 2)


class TestOrthogonality:
    def test_grid_rows_columns(self):
        rows, cols = _grid9().relations
        assert orthogonal(rows, cols)
        assert strongly_orthogonal(rows, cols)

    def test_equality_versus_anything(self):
        eq = Partition(range(4))
        other = Partition([0, 0, 1, 1])
        assert orthogonal(eq, other)
        assert not strongly_orthogonal(eq, other)

    def test_one_element(self):
        one = Partition([0])
        assert strongly_orthogonal(one, one)

    def test_equal_nontrivial_not_orthogonal(self):
        p = Partition([0, 0, 1])
        assert not orthogonal(p, p)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            orthogonal(Partition([0]), Partition([0, 1]))


class TestIs3Net:
    def test_full_grid(self):
        rows, cols = _grid9().relations
        diag = Partition((r + c) % 3 for r in range(3) for c in range(3))
        assert is_3net(System(9, (rows, cols, diag)))

    def test_zadori5_is_not(self):
        assert not is_3net(zadori(5))

    def test_one_element(self):
        assert is_3net(System(1, (Partition([0]),) * 3))

    def test_arity_enforced(self):
        with pytest.raises(ValueError):
            is_3net(System(2, (Partition([0, 1]),)))


class TestToPartialLatin:
    def test_zadori3(self):
        square, placed = to_partial_latin(zadori(3))
        assert square.order == 2
        assert square.filled_count == 3
        assert placed == ((0, 0), (0, 1), (1, 0))
        assert square.cells == ((0, 1), (1, None))

    def test_3net_gives_complete_square(self):
        rows, cols = _grid9().relations
        diag = Partition((r + c) % 3 for r in range(3) for c in range(3))
        square, _ = to_partial_latin(System(9, (diag, rows, cols)))
        assert square.is_complete

    def test_one_element(self):
        square, placed = to_partial_latin(System(1, (Partition([0]),) * 3))
        assert square.order == 1 and square.is_complete
        assert placed == ((0, 0),)

    def test_non_orthogonal_rejected(self):
        p = Partition([0, 0, 1])
        with pytest.raises(ValueError):
            to_partial_latin(System(3, (p, p, Partition([0, 1, 2]))))


class TestPartialLatinValidation:
    def test_row_repeat(self):
        with pytest.raises(ValueError):
            PartialLatinSquare([[0, 0], [None, None]])

    def test_column_repeat(self):
        with pytest.raises(ValueError):
            PartialLatinSquare([[0, None], [0, None]])

    def test_symbol_range(self):
        with pytest.raises(ValueError):
            PartialLatinSquare([[2, None], [None, None]])

    def test_latin_square_requires_completeness(self):
        with pytest.raises(ValueError):
            LatinSquare([[0, 1], [1, None]])


class TestEvansExtend:
    def test_empty_order_one(self):
        square = evans_extend(PartialLatinSquare([[None]]))
        assert square.cells == ((0, 1), (1, 0))

    def test_single_cell(self):
        square = evans_extend(PartialLatinSquare([[0, None], [None, None]]))
        assert square.order == 4
        assert square.cells[0][0] == 0

    def test_complete_square_embeds(self):
        rng = random.Random(3)
        base = shuffled_latin(rng, 4)
        bigger = evans_extend(base)
        assert bigger.order == 8
        for r in range(4):
            for c in range(4):
                assert bigger.cells[r][c] == base.cells[r][c]

    def test_random_partials(self):
        rng = random.Random(17)
        for _ in range(10):
            order = rng.randint(1, 6)
            full = shuffled_latin(rng, order)
            cells = [
                [
                    full.cells[r][c] if rng.random() < 0.4 else None
                    for c in range(order)
                ]
                for r in range(order)
            ]
            partial = PartialLatinSquare(cells)
            result = evans_extend(partial)
            assert result.order == 2 * order
            for r in range(order):
                for c in range(order):
                    if cells[r][c] is not None:
                        assert result.cells[r][c] == cells[r][c]


class TestLatinTo3Net:
    def test_mod3_table(self):
        table = LatinSquare([[(r + c) % 3 for c in range(3)] for r in range(3)])
        net = latin_to_3net(table)
        assert net.n == 9 and is_3net(net)
        assert net.relations[0].blocks() == ((0, 1, 2), (3, 4, 5), (6, 7, 8))

    def test_order_one(self):
        net = latin_to_3net(LatinSquare([[0]]))
        assert net.n == 1

    def test_always_a_net(self):
        rng = random.Random(23)
        for _ in range(8):
            net = latin_to_3net(shuffled_latin(rng, rng.randint(1, 6)))
            assert is_3net(net)
            assert is_m3(net)


class TestEmbedInto3Net:
    def test_zadori3(self):
        net, g = embed_into_3net(zadori(3))
        assert net.n == 16  # order 2e with e = 2
        assert is_3net(net)
        assert restrict(net, g.images) == zadori(3)

    def test_short_circuit_on_nets(self):
        rows, cols = _grid9().relations
        diag = Partition((r + c) % 3 for r in range(3) for c in range(3))
        m = System(9, (diag, rows, cols))
        net, g = embed_into_3net(m)
        assert net == m and g.is_identity

    def test_non_orthogonal_rejected(self):
        p = Partition([0, 0, 1])
        with pytest.raises(ValueError):
            embed_into_3net(System(3, (p, p, p)))

    def test_random_round_trips(self):
        rng = random.Random(5)
        for _ in range(12):
            m = random_orthogonal_triple(rng, max_n=10)
            net, g = embed_into_3net(m)
            side = net.relations[1].num_classes
            assert side <= 2 * m.n
            assert restrict(net, g.images) == m

    def test_pierce_embeds(self):
        m = pierce_system(3)
        net, g = embed_into_3net(m)
        assert restrict(net, g.images) == m


class TestLatinIO:
    def test_round_trip(self):
        square = PartialLatinSquare([[0, None], [None, 1]])
        text = format_latin(square)
        assert text == "0 .\n. 1\n"
        assert parse_latin(text) == square

    def test_errors(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_latin("0 .\n.\n")
        with pytest.raises(ValueError, match="line 1"):
            parse_latin("x .\n. .\n")
