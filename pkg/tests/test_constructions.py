import pytest

from semirigid import (
    are_isomorphic,
    from_matrix,
    induced_system,
    is_semirigid,
    pierce_system,
    product_system,
    simplex_system,
    tn,
    tn2,
    tn2p,
    to_matrix,
    u_example,
    zadori,
)


class TestZadori:
    def test_n5_blocks(self):
        rels = zadori(5).relations
        assert rels[0].blocks() == ((0, 1), (2, 3, 4))
        assert rels[1].blocks() == ((0, 2), (1, 3), (4,))
        assert rels[2].blocks() == ((0, 3), (1, 4), (2,))

    def test_n6_blocks(self):
        rels = zadori(6).relations
        assert rels[0].blocks() == ((0,), (1, 2), (3, 4, 5))
        assert rels[1].blocks() == ((0, 1, 3), (2, 4), (5,))
        assert rels[2].blocks() == ((0, 2, 5), (1, 4), (3,))

    @pytest.mark.parametrize("n", [0, -2, 1, 2, 4])
    def test_rejected_sizes(self, n):
        with pytest.raises(ValueError):
            zadori(n)

    @pytest.mark.parametrize("n", [3, 5, 6, 7])
    def test_small_sizes_semirigid(self, n):
        assert is_semirigid(zadori(n)).semirigid


class TestPlanarFamilies:
    def test_tn_sizes(self):
        for n in range(1, 6):
            assert len(tn(n)) == (n + 1) * (n + 2) // 2

    def test_tn2_3(self):
        assert tn2(3).points == tuple(
            sorted([(0, 2), (1, 1), (2, 0), (0, 3), (1, 2), (2, 1), (3, 0)])
        )

    def test_tn2p_adds_origin(self):
        assert set(tn2p(3).points) == set(tn2(3).points) | {(0, 0)}
        assert len(tn2p(3)) == 8

    def test_ranges(self):
        with pytest.raises(ValueError):
            tn(0)
        with pytest.raises(ValueError):
            tn2(1)
        with pytest.raises(ValueError):
            tn2p(1)


class TestSimplex:
    def test_counts(self):
        assert simplex_system(3, 2).n == 6
        assert simplex_system(4, 1).n == 4

    def test_isomorphic_to_triangle(self):
        # dropping the first coordinate is the isomorphism, no relation
        # permutation needed
        for n in range(1, 5):
            iso = are_isomorphic(simplex_system(3, n), induced_system(tn(n)))
            assert iso is not None

    def test_simplex_4_1_blocks(self):
        rels = simplex_system(4, 1).relations
        assert all(sorted(map(len, r.blocks())) == [1, 3] for r in rels)

    def test_simplex_k_1_matches_co_singleton_system(self):
        # unit-sum tuples are the characteristic vectors of singletons, so
        # the system coincides with the co-singleton one up to relabeling
        for k in (3, 4):
            iso = are_isomorphic(
                simplex_system(k, 1), pierce_system(k), allow_relation_permutation=True
            )
            assert iso is not None

    def test_errors(self):
        with pytest.raises(ValueError):
            simplex_system(2, 3)
        with pytest.raises(ValueError):
            simplex_system(3, 0)
        with pytest.raises(ValueError):
            simplex_system(3, 200)


class TestPierce:
    def test_k3_structure(self):
        m = pierce_system(3)
        for i, r in enumerate(m.relations):
            assert r.blocks() == tuple(
                sorted([(i,), tuple(x for x in range(3) if x != i)])
            )

    @pytest.mark.parametrize("k", [3, 4])
    def test_semirigid(self, k):
        assert is_semirigid(pierce_system(k)).semirigid

    def test_error(self):
        with pytest.raises(ValueError):
            pierce_system(2)


class TestProduct:
    def test_2_3(self):
        m = product_system(2, 3)
        assert m.n == 8 and m.arity == 3

    def test_1_k(self):
        assert product_system(1, 4).n == 1

    def test_3_2_grid(self):
        m = product_system(3, 2)
        assert m.n == 9
        for r in m.relations:
            assert sorted(map(len, r.blocks())) == [3, 3, 3]

    def test_cap(self):
        with pytest.raises(ValueError):
            product_system(10, 5)


class TestMatrix:
    def test_single_column(self):
        m = from_matrix([[0], [0], [1]])
        assert m.arity == 1 and m.relations[0].blocks() == ((0, 1), (2,))

    def test_distinct_column(self):
        m = from_matrix([[0, 5], [1, 6], [2, 7]])
        assert all(r.num_classes == 3 for r in m.relations)

    def test_round_trip(self):
        m = zadori(5)
        assert from_matrix(to_matrix(m)) == m

    def test_ragged(self):
        with pytest.raises(ValueError):
            from_matrix([[0, 1], [0]])


class TestU:
    def test_points(self):
        u = u_example()
        assert len(u) == 8
        assert (0, 0) in u and (1, 3) in u
