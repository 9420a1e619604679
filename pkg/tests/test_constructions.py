import pytest

from pseudolines import (
    Graph,
    WiringDiagram,
    build_cells,
    chromatic_gap_arrangement,
    crossings,
    graph_coloring_reduction,
    ordinary_crossings,
    ordinary_graph,
    polygon_cell_arrangement,
    trivial_pencil,
    turan_number,
    twisted_bundles,
    validate,
)


class TestPolygonCell:
    @pytest.mark.parametrize("n", range(3, 10))
    def test_has_cell_with_n_boundary_crossings(self, n):
        d = polygon_cell_arrangement(n)
        assert validate(d).valid and d.is_simple and d.n == n
        cx = build_cells(d)
        full = [c for c in range(cx.n_cells) if len(cx.boundary[c]) == n]
        assert full, f"no cell with {n} boundary crossings"
        assert all(not cx.unbounded[c] for c in full)

    def test_n3_is_the_classic_triangle_diagram(self):
        assert polygon_cell_arrangement(3).events == WiringDiagram(
            3, ((0, 2), (1, 2), (0, 2))
        ).events

    def test_too_small(self):
        with pytest.raises(ValueError):
            polygon_cell_arrangement(2)


class TestTwistedBundles:
    def test_paper_scale_instance(self):
        d = twisted_bundles(4, 14)
        assert validate(d).valid and d.n == 14
        # Turan count: 91 total pairs minus the pairs inside parts 4,4,3,3.
        assert turan_number(14, 4) == 73
        assert len(ordinary_crossings(d)) == 73 - 14 == 59

    @pytest.mark.parametrize(
        "k,n", [(3, 6), (3, 7), (3, 9), (4, 8), (4, 9), (5, 10), (4, 14)]
    )
    def test_ordinary_count_matches_turan(self, k, n):
        d = twisted_bundles(k, n)
        assert validate(d).valid
        assert len(ordinary_crossings(d)) == turan_number(n, k) - n

    def test_twist_degrees(self):
        # one twist per strip, of degree strip size + 1
        d = twisted_bundles(3, 7)
        degs = sorted(c.degree for c in crossings(d) if c.degree > 2)
        assert degs == [3, 3, 4]  # strips 3, 2, 2

    def test_pencil_degenerations(self):
        assert twisted_bundles(2, 4) == trivial_pencil(4)
        assert twisted_bundles(3, 3) == trivial_pencil(3)

    @pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 5), (4, 6), (5, 5)])
    def test_unrealizable_rejected(self, k, n):
        with pytest.raises(ValueError):
            twisted_bundles(k, n)

    def test_bad_params(self):
        with pytest.raises(ValueError):
            twisted_bundles(5, 4)
        with pytest.raises(ValueError):
            twisted_bundles(1, 4)


class TestChromaticGap:
    def test_r1_is_pencil(self):
        assert chromatic_gap_arrangement(1) == trivial_pencil(3)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_ordinary_graph_is_complete_multipartite(self, r):
        d = chromatic_gap_arrangement(r)
        assert validate(d).valid and d.n == 3 * r
        got = set(ordinary_graph(d).edges)
        want = {
            (a, b)
            for a in range(1, 3 * r + 1)
            for b in range(a + 1, 3 * r + 1)
            if (a - 1) // 3 != (b - 1) // 3
        }
        assert got == want

    def test_each_strip_twisted_once(self):
        d = chromatic_gap_arrangement(3)
        triples = [sorted(c.lines) for c in crossings(d) if c.degree == 3]
        assert triples == [[1, 2, 3], [4, 5, 6], [7, 8, 9]]

    def test_bad_params(self):
        with pytest.raises(ValueError):
            chromatic_gap_arrangement(0)


class TestGraphColoringReduction:
    K2 = Graph(2, ((1, 2),))
    P3 = Graph(3, ((1, 2), (2, 3)))
    K3 = Graph(3, ((1, 2), (2, 3), (1, 3)))

    @pytest.mark.parametrize(
        "g,wires",
        [(K2, 3), (P3, 5), (K3, 4), (Graph(3, ()), 7), (Graph(4, ((1, 2),))) and (Graph(4, ((1, 2),)), 10)],
    )
    def test_wire_count(self, g, wires):
        # n + C(n,2) - m + 1 wires
        d = graph_coloring_reduction(g)
        assert validate(d).valid
        assert d.n == wires

    def test_nonedge_crossings_have_degree_three(self):
        d = graph_coloring_reduction(self.P3)
        # wires: 1 = apex, 2 = the single non-edge wire, 3..5 = base wires
        degs = sorted(c.degree for c in crossings(d))
        assert degs.count(3) == 1  # exactly one non-edge of P3
        triple = next(c for c in crossings(d) if c.degree == 3)
        assert 2 in triple.lines  # the vertical wire participates

    def test_shared_crossing_of_verticals_and_apex(self):
        g = Graph(4, ((1, 2),))  # 5 non-edges
        d = graph_coloring_reduction(g)
        verticals = set(range(2, 7))  # wires 2..6
        shared = [c for c in crossings(d) if verticals <= c.lines]
        assert len(shared) == 1
        assert 1 in shared[0].lines  # apex passes through it
        assert shared[0].degree == 6

    def test_apex_meets_base_in_ordinary_points(self):
        d = graph_coloring_reduction(self.P3)
        base = {3, 4, 5}
        for w in base:
            meet = [c for c in crossings(d) if {1, w} <= c.lines]
            assert len(meet) == 1 and meet[0].degree == 2

    def test_complete_graph_reduction_is_simple(self):
        d = graph_coloring_reduction(self.K3)
        assert d.is_simple and d.n == 4

    def test_too_small(self):
        with pytest.raises(ValueError):
            graph_coloring_reduction(Graph(1, ()))
