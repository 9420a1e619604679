from functools import lru_cache
from itertools import combinations

import pytest

from pseudolines import (
    Event,
    InvalidDiagramError,
    WiringDiagram,
    canonical_form,
    crossings,
    enumerate_diagrams,
    max_line_crossings,
    ordinary_crossings,
    random_diagram,
    random_nonsimple,
    random_simple,
    restrict,
    trivial_pencil,
    validate,
    wire_orders,
)
from pseudolines.diagram import Graph, reflect_left_right, reflect_top_bottom

SIMPLE3 = WiringDiagram(3, ((0, 2), (1, 2), (0, 2)))


def count_reduced_words(n):
    """Independent count of simple diagrams: paths from the identity to the
    reversed order where each adjacent swap fixes a new inversion."""
    target = tuple(range(n, 0, -1))

    @lru_cache(maxsize=None)
    def f(perm):
        if perm == target:
            return 1
        total = 0
        for i in range(n - 1):
            if perm[i] < perm[i + 1]:
                nxt = list(perm)
                nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
                total += f(tuple(nxt))
        return total

    return f(tuple(range(1, n + 1)))


class TestTypes:
    def test_event_bounds(self):
        with pytest.raises(ValueError):
            Event(-1, 2)
        with pytest.raises(ValueError):
            Event(0, 1)

    def test_event_must_fit(self):
        with pytest.raises(ValueError):
            WiringDiagram(3, ((1, 3),))
        with pytest.raises(ValueError):
            WiringDiagram(0, ())

    def test_events_coerced_from_pairs(self):
        d = WiringDiagram(2, ((0, 2),))
        assert d.events == (Event(0, 2),)

    def test_graph_invariants(self):
        with pytest.raises(ValueError):
            Graph(3, ((1, 1),))
        with pytest.raises(ValueError):
            Graph(3, ((1, 2), (2, 1)))
        with pytest.raises(ValueError):
            Graph(2, ((1, 3),))
        g = Graph(3, ((2, 1), (3, 2)))
        assert g.edges == ((1, 2), (2, 3))


class TestValidate:
    def test_simple3_valid(self):
        assert validate(SIMPLE3).valid

    def test_pencil_valid(self):
        assert validate(WiringDiagram(4, ((0, 4),))).valid

    def test_double_crossing_reported(self):
        report = validate(WiringDiagram(3, ((0, 2), (0, 2))))
        assert not report.valid
        by_pair = dict(report.violations)
        assert by_pair[(1, 2)] == (0, 1)  # crosses twice
        assert by_pair[(1, 3)] == ()  # never crosses
        assert by_pair[(2, 3)] == ()

    def test_n1_trivially_valid(self):
        assert validate(WiringDiagram(1, ())).valid

    def test_invalid_rejected_by_ops(self):
        bad = WiringDiagram(3, ((0, 2), (0, 2)))
        with pytest.raises(InvalidDiagramError):
            crossings(bad)


class TestCrossings:
    def test_simple3_lines(self):
        lines = [sorted(c.lines) for c in crossings(SIMPLE3)]
        assert lines == [[1, 2], [1, 3], [2, 3]]

    def test_pencil_single_crossing(self):
        (c,) = crossings(WiringDiagram(4, ((0, 4),)))
        assert sorted(c.lines) == [1, 2, 3, 4] and c.degree == 4

    def test_simple4_staircase(self):
        d = random_simple(4, 0)
        infos = crossings(d)
        assert len(infos) == 6 and all(c.degree == 2 for c in infos)

    def test_final_order_reversed(self):
        d = random_diagram(5, 3)
        assert list(wire_orders(d))[-1] == (5, 4, 3, 2, 1)


class TestMaxLineCrossings:
    def test_pencil_is_one(self):
        for n in (2, 4, 7):
            assert max_line_crossings(trivial_pencil(n)) == 1

    def test_simple_is_n_minus_one(self):
        for n, seed in ((3, 0), (5, 1), (7, 2)):
            assert max_line_crossings(random_simple(n, seed)) == n - 1

    def test_simple3_explicit(self):
        assert max_line_crossings(SIMPLE3) == 2


class TestOrdinary:
    def test_pencil_empty(self):
        assert ordinary_crossings(trivial_pencil(5)) == ()

    def test_simple3_all(self):
        assert ordinary_crossings(SIMPLE3) == (0, 1, 2)


class TestRestrict:
    def test_simple3_keep_pair(self):
        r = restrict(SIMPLE3, {1, 2})
        assert r == WiringDiagram(2, ((0, 2),))

    def test_keep_all_is_identity(self):
        for d in (SIMPLE3, trivial_pencil(5), random_diagram(6, 11)):
            assert restrict(d, range(1, d.n + 1)) == d

    def test_pencil_subset(self):
        assert restrict(trivial_pencil(5), {1, 3, 5}) == trivial_pencil(3)

    def test_composition(self):
        d = random_diagram(7, 5)
        outer = [1, 2, 4, 6, 7]
        inner_old = [2, 4, 7]
        rank = {w: i + 1 for i, w in enumerate(outer)}
        once = restrict(d, inner_old)
        twice = restrict(restrict(d, outer), [rank[w] for w in inner_old])
        assert once == twice

    def test_empty_keep_rejected(self):
        with pytest.raises(ValueError):
            restrict(SIMPLE3, set())

    def test_result_valid(self):
        for seed in range(5):
            d = random_diagram(6, seed)
            assert validate(restrict(d, {2, 3, 5, 6})).valid


class TestGenerators:
    def test_trivial(self):
        assert trivial_pencil(2) == WiringDiagram(2, ((0, 2),))
        assert trivial_pencil(5).events == (Event(0, 5),)
        with pytest.raises(ValueError):
            trivial_pencil(1)

    def test_random_simple_tiny(self):
        assert random_simple(1, 0).events == ()
        assert random_simple(2, 9) == WiringDiagram(2, ((0, 2),))

    def test_random_simple_valid_and_simple(self):
        for n in range(1, 9):
            for seed in range(4):
                d = random_simple(n, seed)
                assert validate(d).valid
                assert len(d.events) == n * (n - 1) // 2
                assert d.is_simple

    def test_random_simple_reproducible(self):
        assert random_simple(5, 42) == random_simple(5, 42)
        assert random_simple(6, 1) != random_simple(6, 2)

    def test_random_diagram_valid(self):
        for n in range(1, 9):
            for seed in range(4):
                assert validate(random_diagram(n, seed)).valid

    def test_random_nonsimple(self):
        for n in (3, 6, 9):
            d = random_nonsimple(n, 0)
            assert validate(d).valid and not d.is_simple
        assert random_nonsimple(5, 3) == random_nonsimple(5, 3)


class TestInvariants:
    def test_pair_sum(self):
        # each pair crossed once: block sizes account for all C(n, 2) pairs
        for d in enumerate_diagrams(4):
            assert sum(e.width * (e.width - 1) // 2 for e in d.events) == 6
        for seed in range(5):
            d = random_diagram(7, seed)
            assert sum(e.width * (e.width - 1) // 2 for e in d.events) == 21

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_mx_bound_and_ordinary_floor(self, n):
        for d in enumerate_diagrams(n):
            mx = max_line_crossings(d)
            if mx > 1:  # non-trivial arrangement
                assert n <= mx * (mx - 1) + 1
                assert len(ordinary_crossings(d)) >= -(-6 * n // 13)


class TestEnumerate:
    def test_counts_small(self):
        assert sum(1 for _ in enumerate_diagrams(1)) == 1
        assert sum(1 for _ in enumerate_diagrams(2)) == 1

    def test_n3_contents(self):
        got = {d.events for d in enumerate_diagrams(3)}
        assert got == {
            (Event(0, 2), Event(1, 2), Event(0, 2)),
            (Event(1, 2), Event(0, 2), Event(1, 2)),
            (Event(0, 3),),
        }

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_simple_count_matches_reduced_words(self, n):
        simple = sum(1 for d in enumerate_diagrams(n) if d.is_simple)
        assert simple == count_reduced_words(n)

    def test_all_valid_and_distinct(self):
        seen = set()
        for d in enumerate_diagrams(4):
            assert validate(d).valid
            assert d.events not in seen
            seen.add(d.events)
        assert len(seen) == 25

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            next(enumerate_diagrams(7))

    def test_canonical_reduces(self):
        raw = list(enumerate_diagrams(4))
        canon = list(enumerate_diagrams(4, canonical=True))
        assert len(canon) < len(raw)
        assert {canonical_form(d).events for d in raw} == {d.events for d in canon}


class TestReflections:
    def test_reflections_valid(self):
        for d in enumerate_diagrams(4):
            assert validate(reflect_top_bottom(d)).valid
            assert validate(reflect_left_right(d)).valid

    def test_involutions(self):
        d = random_diagram(5, 8)
        assert reflect_top_bottom(reflect_top_bottom(d)) == d
        assert reflect_left_right(reflect_left_right(d)) == d

    def test_canonical_idempotent(self):
        for d in enumerate_diagrams(4):
            c = canonical_form(d)
            assert canonical_form(c) == c
