import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle, plain_graph, star
from levidecomp.graphs import build_complete, build_levi
from levidecomp.paths import (
    DuplicateEdge,
    ForeignEdge,
    NotAPath,
    PathError,
    UncoveredEdge,
    binom,
    edge_count_lower_bound,
    extend_at_endpoint,
    floor_bound,
    gallai_bound,
    labels_to_ids,
    max_path_length_bound,
    odd_vertex_lower_bound,
    pascal_floor_holds,
    subdivide_path,
    verify_decomposition,
    verify_path,
)

L42 = build_levi(4, 2).graph
EXAMPLE_PATHS = [
    ((1, 3), (1,), (1, 2), (2,), (2, 3)),
    ((1, 3), (3,), (2, 3)),
    ((1,), (1, 4), (4,), (2, 4), (2,)),
    ((4,), (3, 4), (3,)),
]


def example_decomposition():
    return [labels_to_ids(L42, p) for p in EXAMPLE_PATHS]


class TestVerifyPath:
    def test_subpath_of_worked_example(self):
        p = labels_to_ids(L42, [(1,), (1, 2), (2,), (2, 3)])
        r = verify_path(L42, p)
        assert r.ok and r.covered_edges == 3

    def test_repeated_vertex(self):
        p = labels_to_ids(L42, [(1,), (1, 2), (2,), (1, 2)])
        r = verify_path(L42, p)
        assert any(isinstance(v, NotAPath) for v in r.violations)

    def test_single_vertex(self):
        r = verify_path(L42, (0,))
        assert r.ok and r.covered_edges == 0
        assert r.warnings

    def test_out_of_range_is_reported(self):
        r = verify_path(L42, (0, 99))
        assert [type(v) for v in r.violations] == [NotAPath]

    def test_non_edge(self):
        r = verify_path(L42, (0, 1))
        assert [type(v) for v in r.violations] == [ForeignEdge]


class TestVerifyDecomposition:
    def test_worked_example(self):
        r = verify_decomposition(L42, example_decomposition())
        assert r.ok and r.size == 4 and r.covered_edges == 12

    def test_missing_path(self):
        r = verify_decomposition(L42, example_decomposition()[:-1])
        assert not r.ok
        assert {type(v) for v in r.violations} == {UncoveredEdge}
        assert len(r.violations) == 2

    def test_path_listed_twice(self):
        d = example_decomposition()
        r = verify_decomposition(L42, d + [d[0]])
        assert {type(v) for v in r.violations} == {DuplicateEdge}
        assert all(v.path_indices == (0, 4) for v in r.violations)

    def test_render(self):
        ok = verify_decomposition(L42, example_decomposition()).render()
        assert ok == "OK size=4\n"
        bad = verify_decomposition(L42, example_decomposition()[:-1]).render().splitlines()
        assert bad[-1] == "FAIL violations=2"
        assert all(line.startswith("UncoveredEdge") for line in bad[:-1])

    def test_edge_sum_equals_edge_count(self):
        d = example_decomposition()
        assert sum(len(p) - 1 for p in d) == len(L42.edges)


class TestBounds:
    @pytest.mark.parametrize("n,ceil,floor", [(10, 5, 5), (7, 4, 3), (1, 1, 0)])
    def test_gallai_and_floor(self, n, ceil, floor):
        assert gallai_bound(n) == ceil and floor_bound(n) == floor

    def test_l43_floor(self):
        assert floor_bound(binom(4, 2) + binom(4, 3)) == 5

    def test_odd_vertex_bound(self):
        assert odd_vertex_lower_bound(build_complete(4)) == 2
        assert odd_vertex_lower_bound(build_levi(5, 3).graph) == 10
        assert odd_vertex_lower_bound(cycle(6)) == 0

    def test_max_path_length(self):
        g = build_levi(5, 2).graph
        assert max_path_length_bound(g) == 10
        assert edge_count_lower_bound(g) == 2
        assert max_path_length_bound(plain_graph(2, [(0, 1)])) == 1
        for m in range(2, 12):
            assert max_path_length_bound(build_complete(m)) == m - 1
            assert edge_count_lower_bound(build_complete(m)) == (m + 1) // 2

    def test_max_path_length_star(self):
        # parts 1 and 4: longest path has 2 edges
        assert max_path_length_bound(star(4)) == 2

    def test_binom_convention(self):
        assert binom(2, -1) == 0 and binom(3, 4) == 0 and binom(5, 2) == 10

    def test_pascal_examples(self):
        assert pascal_floor_holds(4, 3)
        assert pascal_floor_holds(2, 1)

    def test_pascal_sweep(self):
        assert all(pascal_floor_holds(m, k) for m in range(1, 21) for k in range(1, m + 1))

    def test_pascal_huge_values_are_exact(self):
        assert pascal_floor_holds(200, 100)

    def test_pascal_domain(self):
        with pytest.raises(ValueError):
            pascal_floor_holds(3, 0)


class TestExtend:
    def test_first_extension_step(self):
        p = labels_to_ids(L42, [(1, 4), (4,), (2, 4)])
        out = extend_at_endpoint(L42, p, p[0], L42.id_of((1,)))
        assert out == labels_to_ids(L42, [(1,), (1, 4), (4,), (2, 4)])

    def test_single_vertex(self):
        assert extend_at_endpoint(L42, (0,), 0, 4) == (0, 4)

    def test_guards(self):
        hexagon = labels_to_ids(L42, [(1,), (1, 2), (2,), (2, 3), (3,), (1, 3)])
        with pytest.raises(PathError, match="already on the path"):
            extend_at_endpoint(L42, hexagon, hexagon[-1], hexagon[0])
        p = labels_to_ids(L42, [(1,), (1, 2), (2,)])
        with pytest.raises(PathError):
            extend_at_endpoint(L42, p, p[1], L42.id_of((1, 3)))  # interior vertex
        with pytest.raises(PathError):
            extend_at_endpoint(L42, p, p[-1], L42.id_of((1, 3)))  # not adjacent

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_output_always_a_path(self, data):
        g = build_levi(5, 3).graph
        path = [data.draw(st.integers(0, g.n - 1))]
        for _ in range(data.draw(st.integers(0, 8))):
            end = data.draw(st.sampled_from([0, -1]))
            options = [w for w in g.adjacency[path[end]] if w not in path]
            if not options:
                break
            new = data.draw(st.sampled_from(options))
            path = list(extend_at_endpoint(g, path, path[end], new))
            assert verify_path(g, path).ok


class TestSubdivide:
    def test_worked_example(self):
        out = subdivide_path((1, 2, 6, 3, 5, 4))
        assert out == (
            (1,), (1, 2), (2,), (2, 6), (6,), (3, 6), (3,), (3, 5), (5,), (4, 5), (4,),
        )

    def test_trivial(self):
        assert subdivide_path((3,)) == ((3,),)
        assert subdivide_path((1, 2)) == ((1,), (1, 2), (2,))

    @given(st.permutations(range(1, 8)), st.integers(1, 7))
    def test_doubles_length(self, perm, length):
        p = tuple(perm[:length])
        g = build_levi(7, 2).graph
        q = labels_to_ids(g, subdivide_path(p))
        assert len(q) - 1 == 2 * (len(p) - 1)
        assert verify_path(g, q).ok
