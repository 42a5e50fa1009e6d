import itertools

import pytest
from hypothesis import given, strategies as st

from cases import B, R, drawn, generated
from planarspace.gadget import planarize_with_gadgets, sparse_crossing_reach
from planarspace.graph import DrawnGraph, GraphError, validate
from planarspace.oracles import count_alternating_paths, count_paths, oracle_reach, oracle_redblue
from planarspace.redblue import is_dag


def test_crossing_free_arc_becomes_red_blue_chain():
    gm = planarize_with_gadgets(drawn(2, [(0, 1)], []))
    g = gm.planarized
    assert g.n == 3 and g.m == 2
    assert (g.src[0], g.dst[0], g.color[0]) == (0, 2, R)
    assert (g.src[1], g.dst[1], g.color[1]) == (2, 1, B)
    assert gm.provenance[2] == ("chain", 0, 0)


def test_single_crossing_isolation():
    # a=0 -> b=1 crosses c=2 -> d=3
    gm = planarize_with_gadgets(drawn(4, [(0, 1), (2, 3)], [(0, 1)]))
    g = gm.planarized
    assert validate(g) == []
    connected = {
        (s, t) for s, t in itertools.permutations(range(4), 2) if oracle_redblue(g, s, t)
    }
    assert connected == {(0, 1), (2, 3)}


def test_gadget_isolation_for_every_color_pattern():
    g = planarize_with_gadgets(drawn(4, [(0, 1), (2, 3)], [(0, 1)])).planarized
    for s, t in itertools.permutations(range(4), 2):
        for init, final in itertools.product((R, B), repeat=2):
            reached = oracle_redblue(g, s, t, init, final)
            assert reached == ((s, t) in {(0, 1), (2, 3)} and (init, final) == (R, B))


def test_all_gadget_vertices_are_traversed_straight():
    # from inside the gadget no alternating walk leaks onto the other arc
    gm = planarize_with_gadgets(drawn(4, [(0, 1), (2, 3)], [(0, 1)]))
    g = gm.planarized
    for v in range(4, g.n):
        for init in (R, B):
            assert not (oracle_redblue(g, v, 1, init, B) and oracle_redblue(g, v, 3, init, B))


def test_arc_crossing_twice_is_subdivided():
    d = drawn(6, [(0, 1), (2, 3), (4, 5)], [(0, 1), (0, 2)])
    gm = planarize_with_gadgets(d)
    kinds = [tag[0] for tag in gm.provenance]
    assert kinds.count("subdivision") == 1
    assert gm.piece_count == 4
    assert validate(gm.planarized) == []


def test_inconsistent_drawing_rejected():
    bad = DrawnGraph.build(4, [(0, 1), (2, 3)], [(0, 1)], order=[[0], []])
    with pytest.raises(GraphError):
        planarize_with_gadgets(bad)
    with pytest.raises(GraphError):
        planarize_with_gadgets(drawn(2, [(0, 0)], []))


def test_sparse_reach_trivial_cases():
    assert sparse_crossing_reach(drawn(2, [(0, 1)], []), 0, 1)
    assert not sparse_crossing_reach(drawn(4, [(0, 1), (2, 3)], []), 0, 3)
    assert sparse_crossing_reach(drawn(3, [], []), 2, 2)


def test_reach_through_two_crossings():
    # 0 -> 1 crosses both 2 -> 3 and 4 -> 5; plus 1 -> 4
    d = drawn(6, [(0, 1), (2, 3), (4, 5), (1, 4)], [(0, 1), (0, 2)])
    for s, t in itertools.permutations(range(6), 2):
        assert sparse_crossing_reach(d, s, t) == oracle_reach(d, s, t)


@given(generated("drawn-dag", 2, 45), st.data())
def test_sparse_reach_matches_dfs(d, data):
    s = data.draw(st.integers(0, d.n - 1))
    t = data.draw(st.integers(0, d.n - 1))
    assert sparse_crossing_reach(d, s, t) == oracle_reach(d, s, t)


@given(generated("drawn-dag", 2, 12))
def test_path_count_bijection(d):
    g = planarize_with_gadgets(d).planarized
    for s, t in itertools.permutations(range(d.n), 2):
        assert count_paths(d, s, t) == count_alternating_paths(g, s, t)


@given(generated("drawn-dag", 2, 60))
def test_planarization_is_valid_and_small(d):
    gm = planarize_with_gadgets(d)
    g = gm.planarized
    assert validate(g) == []
    assert is_dag(g)
    k = len(d.crossings)
    assert g.n <= d.n + 2 * k + 2 * gm.piece_count + 3 * k
    assert gm.vertex_map == tuple(range(d.n))
    assert len(gm.provenance) == g.n
