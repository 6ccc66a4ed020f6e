from math import comb

import networkx as nx
import numpy as np
import pytest

from errors import InvalidParameter, ResourceLimitExceeded
from graphs import FiniteGraph, ball, cartesian, half_line, integer_line, kronecker, path_graph
from lattice_catalog import LatticeKind, LatticeSpec
from walks import (WalkTable, bounded_dyck_count, cartesian_walk_convolution, cartesian_walk_table, catalan,
                   central_binomial, closed_form_walks, kronecker_walk_product, moment_coincidence_report,
                   path_walks, verify_binomial_identity, walk_count, walk_table)


def _matrix_walks(graph: nx.Graph, root, m: int) -> int:
    nodes = list(graph.nodes)
    adjacency = nx.to_numpy_array(graph, nodelist=nodes, dtype=np.int64)
    return int(np.linalg.matrix_power(adjacency, m)[nodes.index(root), nodes.index(root)])


class TestCounting:
    @pytest.mark.parametrize("m, expected", [(0, 1), (1, 0), (2, 2), (4, 6), (6, 20)])
    def test_integer_line(self, m, expected):
        assert walk_count(integer_line(), (0,), m) == expected

    def test_half_line_is_catalan(self):
        table = walk_table(half_line(), (0,), 20)
        assert [table[2 * h] for h in range(11)] == [catalan(h) for h in range(11)]

    def test_half_line_shifted_root(self):
        table = walk_table(half_line(), (1,), 20)
        for h in range(11):
            assert table[2 * h] == catalan(h + 1)
            assert table[2 * h] == comb(2 * h, h) - comb(2 * h, h + 2)

    def test_catalan_and_binomials(self):
        assert [catalan(h) for h in range(6)] == [1, 1, 2, 5, 14, 42]
        assert [central_binomial(h) for h in range(5)] == [1, 2, 6, 20, 70]

    def test_exact_big_integers(self):
        assert walk_count(integer_line(), (0,), 100) == central_binomial(50)

    def test_negative_length(self):
        with pytest.raises(InvalidParameter):
            walk_count(integer_line(), (0,), -2)

    def test_budget_refused(self):
        z = integer_line()
        with pytest.raises(ResourceLimitExceeded):
            walk_count(cartesian(cartesian(z, z), z), (0, 0, 0), 24, budget=1000)

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_matrix_power(self, seed):
        graph = nx.gnp_random_graph(7, 0.4, seed=seed)
        finite = FiniteGraph.from_networkx(graph)
        for m in range(9):
            assert walk_count(finite, (0,), m) == _matrix_walks(graph, 0, m)

    @pytest.mark.parametrize("kind", [LatticeKind.HALF_PLANE, LatticeKind.WEDGE, LatticeKind.Z_CART_ZPLUS,
                                      LatticeKind.CHAMBER3])
    @pytest.mark.parametrize("m", [4, 7, 10])
    def test_half_radius_ball_suffices(self, kind, m):
        graph, root = LatticeSpec(kind).build()
        assert walk_count(graph, root, m) == _matrix_walks(ball(graph, root, m).to_networkx(), root, m)

    @pytest.mark.parametrize("seed", range(10))
    def test_even_counts_never_decrease(self, seed):
        graph = nx.gnp_random_graph(7, 0.3, seed=seed)
        graph.add_edge(0, 1)
        table = walk_table(FiniteGraph.from_networkx(graph), (0,), 16)
        evens = [table[2 * h] for h in range(9)]
        assert evens == sorted(evens)

    @pytest.mark.parametrize("kind", [LatticeKind.ZPLUS, LatticeKind.QUARTER_PLANE, LatticeKind.Z_CART_ZPLUS,
                                      LatticeKind.BCC3])
    def test_lattice_even_counts_never_decrease(self, kind):
        graph, root = LatticeSpec(kind).build()
        table = walk_table(graph, root, 12)
        evens = [table[2 * h] for h in range(7)]
        assert evens == sorted(evens)


class TestPathWalks:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_against_ball_iteration(self, n):
        table = walk_table(path_graph(n), (0,), 14)
        assert [path_walks(n, m) for m in range(15)] == table.counts()

    def test_bounded_dyck_small(self):
        assert bounded_dyck_count(3, 1) == 1
        assert bounded_dyck_count(3, 2) == 4
        assert bounded_dyck_count(3, 3) == catalan(3)

    def test_path_needs_a_vertex(self):
        with pytest.raises(InvalidParameter):
            path_walks(0, 2)


class TestProductRules:
    @pytest.mark.parametrize("seed", range(25))
    def test_kronecker_multiplies(self, seed):
        g1 = nx.gnp_random_graph(5, 0.5, seed=seed)
        g2 = nx.gnp_random_graph(6, 0.4, seed=seed + 1000)
        f1, f2 = FiniteGraph.from_networkx(g1), FiniteGraph.from_networkx(g2)
        w1, w2 = walk_table(f1, (0,), 10), walk_table(f2, (0,), 10)
        product = walk_table(kronecker(f1, f2), (0, 0), 10)
        assert product.counts() == kronecker_walk_product(w1, w2).counts()
        assert product[6] == _matrix_walks(nx.tensor_product(g1, g2), (0, 0), 6)

    @pytest.mark.parametrize("seed", range(25))
    def test_cartesian_convolves(self, seed):
        g1 = nx.gnp_random_graph(5, 0.5, seed=seed)
        g2 = nx.gnp_random_graph(6, 0.4, seed=seed + 1000)
        f1, f2 = FiniteGraph.from_networkx(g1), FiniteGraph.from_networkx(g2)
        w1, w2 = walk_table(f1, (0,), 10), walk_table(f2, (0,), 10)
        product = walk_table(cartesian(f1, f2), (0, 0), 10)
        assert product.counts() == cartesian_walk_table(w1, w2).counts()
        assert product[5] == _matrix_walks(nx.cartesian_product(g1, g2), (0, 0), 5)

    def test_integer_plane_by_convolution(self):
        w = walk_table(integer_line(), (0,), 12)
        assert cartesian_walk_convolution(w, w, 12) == central_binomial(6) ** 2

    def test_kronecker_tables_must_align(self):
        w = walk_table(integer_line(), (0,), 4)
        with pytest.raises(InvalidParameter):
            kronecker_walk_product(w, walk_table(integer_line(), (0,), 6))

    def test_convolution_range_checked(self):
        w = walk_table(integer_line(), (0,), 4)
        with pytest.raises(InvalidParameter):
            cartesian_walk_convolution(w, w, 5)

    @pytest.mark.parametrize("m", range(31))
    def test_binomial_identity(self, m):
        assert verify_binomial_identity(m)


class TestClosedForms:
    @pytest.mark.parametrize("spec, m_max", [
        (LatticeSpec(LatticeKind.Z), 20),
        (LatticeSpec(LatticeKind.ZPLUS_AT_ONE), 20),
        (LatticeSpec(LatticeKind.FULL_Z2), 10),
        (LatticeSpec(LatticeKind.HALF_PLANE), 10),
        (LatticeSpec(LatticeKind.WEDGE), 10),
        (LatticeSpec(LatticeKind.QUARTER_PLANE), 10),
        (LatticeSpec(LatticeKind.STRIP, n=3), 10),
        (LatticeSpec(LatticeKind.DIAMOND, k=3, l=4), 10),
        (LatticeSpec(LatticeKind.BCC3), 8),
        (LatticeSpec(LatticeKind.Z3_CARTESIAN), 8),
        (LatticeSpec(LatticeKind.CHAMBER3), 8),
        (LatticeSpec(LatticeKind.Z_CART_ZPLUS), 10),
        (LatticeSpec(LatticeKind.ZPLUS_KRON_ZPLUS_AT_01), 10),
        (LatticeSpec(LatticeKind.ZPLUS_KRON_CART), 8),
    ])
    def test_ball_matches_closed_form(self, spec, m_max):
        graph, root = spec.build()
        table = walk_table(graph, root, m_max)
        assert table.counts() == [closed_form_walks(spec, m) for m in range(m_max + 1)]

    @pytest.mark.parametrize("kind, m, expected", [
        (LatticeKind.HALF_PLANE, 4, 12),
        (LatticeKind.BCC3, 2, 8),
        (LatticeKind.QUARTER_PLANE, 4, 10),
        (LatticeKind.CHAMBER3, 4, 12),
        (LatticeKind.WEDGE, 4, 4),
        (LatticeKind.FULL_Z2, 4, 36),
        (LatticeKind.Z_CART_ZPLUS, 2, 3),
        (LatticeKind.Z_CART_ZPLUS, 4, 20),
        (LatticeKind.Z_CART_ZPLUS, 6, 175),
        (LatticeKind.ZPLUS_KRON_ZPLUS_AT_01, 4, 10),
    ])
    def test_known_values(self, kind, m, expected):
        assert closed_form_walks(LatticeSpec(kind), m) == expected

    def test_odd_lengths_vanish(self):
        assert closed_form_walks(LatticeSpec(LatticeKind.BCC3), 7) == 0

    def test_unknown_kind(self):
        with pytest.raises(InvalidParameter):
            LatticeSpec.parse("hexagonal")


class TestWalkTable:
    def test_csv(self):
        assert walk_table(integer_line(), (0,), 2).to_csv() == "m,count\n0,1\n1,0\n2,2\n"

    def test_first_entry_is_one(self):
        with pytest.raises(InvalidParameter):
            WalkTable.from_counts("g", (0,), [2, 0])

    def test_out_of_range(self):
        with pytest.raises(InvalidParameter):
            walk_table(integer_line(), (0,), 2)[3]


class TestCoincidence:
    def test_chamber_and_mixed_product_agree(self):
        chamber, chamber_root = LatticeSpec(LatticeKind.CHAMBER3).build()
        mixed, mixed_root = LatticeSpec(LatticeKind.ZPLUS_KRON_CART).build()
        report = moment_coincidence_report(chamber, chamber_root, mixed, mixed_root, 8)
        assert report.all_equal
        assert report.first_difference is None

    def test_line_and_half_line_differ(self):
        report = moment_coincidence_report(integer_line(), (0,), half_line(), (0,), 6)
        assert not report.all_equal
        assert report.first_difference == 2
        assert report.to_dict()["rows"][2] == {"m": 2, "a": "2", "b": "1", "equal": False}

    def test_quarter_plane_and_shifted_kronecker_agree(self):
        report = moment_coincidence_report(cartesian(half_line(), half_line()), (0, 0),
                                           *LatticeSpec(LatticeKind.ZPLUS_KRON_ZPLUS_AT_01).build(), 16)
        assert report.all_equal
        assert [a for m, a, _ in report.rows[::2]] == [catalan(h) * catalan(h + 1) for h in range(9)]

    def test_line_times_half_line_is_not_the_catalan_product(self):
        graph, root = LatticeSpec(LatticeKind.Z_CART_ZPLUS).build()
        assert graph.degree(root) == 3
        assert walk_count(graph, root, 2) == 3 != catalan(1) * catalan(2)
