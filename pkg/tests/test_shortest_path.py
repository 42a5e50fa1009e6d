import pytest
from hypothesis import given, strategies as st

from cases import arcs_graph, chain, gen, generated
from planarspace.graph import PlanarGraph
from planarspace.meter import SpaceMeter
from planarspace.oracles import oracle_negative_cycle, oracle_reach, oracle_shortest_path
from planarspace.shortest_path import (
    INF,
    NegativeCycleError,
    NoPathError,
    bellman_ford_base,
    detect_negative_cycle,
    planar_dist,
    planar_dist_table,
    planar_reach,
    planar_short_path,
)

EPS_VALUES = (0.15, 0.25, 0.4)


def weighted(n, seed, **kw):
    return gen("triangulation-thinned", n, seed, wmin=-5, wmax=20, keep=0.5, both_ways=0.1, **kw)


def is_path(g, p, s, t):
    verts = p.forward()
    arcs = list(reversed(p.arcs))
    if verts[0] != s or verts[-1] != t or len(arcs) != len(verts) - 1:
        return False
    for i, a in enumerate(arcs):
        if (g.src[a], g.dst[a]) != (verts[i], verts[i + 1]):
            return False
    return sum(g.weight[a] for a in arcs) == p.weight


# -- base case ----------------------------------------------------------------------


def test_base_single_arc():
    assert bellman_ford_base(chain(2, weights=[5]), {0: 0}, 1) == 5


def test_base_target_is_seed():
    assert bellman_ford_base(chain(2, weights=[5]), {0: 0}, 0) == 0


def test_base_takes_best_seed():
    g = arcs_graph(3, [(0, 2, 1), (1, 2, 4)])
    assert bellman_ford_base(g, {0: 2, 1: 0}, 2) == 3


def test_base_unreachable_is_infinite():
    assert bellman_ford_base(chain(2), {1: 0}, 0) == INF


# -- distances -----------------------------------------------------------------------


def test_same_vertex_is_zero():
    g = gen("grid", 16)
    assert planar_dist(g, 5, 5) == 0


def test_grid_dag_corner_to_corner():
    g = gen("grid-dag", 9)
    assert planar_dist(g, 0, 8) == 4


def test_unreachable_is_infinite():
    g = gen("grid-dag", 9)
    assert planar_dist(g, 8, 0) == INF


def test_eps_out_of_range():
    with pytest.raises(ValueError):
        planar_dist(chain(2), 0, 1, eps=0.5)
    with pytest.raises(ValueError):
        planar_dist(chain(2), 0, 1, eps=0.0)


def test_seeds_lower_the_start():
    g = chain(4, weights=[1, 1, 1])
    # vertex 2 seeded with -5 beats the path from 0
    assert planar_dist(g, 0, 3, T=[2], A=[-5]) == -4


def test_negative_cycle_on_route_raises():
    g = chain(3, weights=[1, 1, -3], closed=True)
    with pytest.raises(NegativeCycleError) as info:
        planar_dist(g, 0, 2)
    assert info.value.cycle.weight < 0


def test_distance_table_covers_terminals():
    g = gen("grid", 400, wmin=1, wmax=9, seed=4)
    value, table = planar_dist_table(g, 0, g.n - 1)
    assert table[0] == 0
    assert table[g.n - 1] == value == oracle_shortest_path(g, 0, g.n - 1).distance


def test_round_monotonicity():
    g = weighted(150, 7)
    while oracle_negative_cycle(g):
        g = weighted(150, g.n + 1)
    history = []
    planar_dist_table(g, 0, g.n - 1, n_top=g.n, on_round=lambda i, t: history.append(dict(t)))
    for before, after in zip(history, history[1:]):
        for v in before:
            assert after[v] <= before[v]


@given(generated("triangulation-thinned", 5, 90, wmin=-5, wmax=20, keep=0.5, both_ways=0.1),
       st.sampled_from(EPS_VALUES), st.data())
def test_distance_matches_bellman_ford(g, eps, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1))
    expected = oracle_shortest_path(g, s, t)
    if oracle_negative_cycle(g):
        return
    assert planar_dist(g, s, t, eps=eps) == expected.distance


@given(generated("grid", 16, 150, wmin=0, wmax=12), st.data())
def test_answer_does_not_depend_on_eps(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1))
    answers = {planar_dist(g, s, t, eps=e) for e in (0.15, 0.25, 0.3, 0.4, 0.49)}
    assert len(answers) == 1


# -- paths ----------------------------------------------------------------------------


def test_single_arc_path_is_reversed():
    p = planar_short_path(chain(2, weights=[3]), 0, 1)
    assert p.vertices == (1, 0) and p.weight == 3


def test_grid_path_is_monotone_staircase():
    g = gen("grid-dag", 9)
    p = planar_short_path(g, 0, 8)
    assert len(p.vertices) == 5 and p.weight == 4 and is_path(g, p, 0, 8)


def test_path_to_unreachable_vertex():
    with pytest.raises(NoPathError):
        planar_short_path(gen("grid-dag", 9), 8, 0)


def test_trivial_path():
    p = planar_short_path(gen("grid", 9), 4, 4)
    assert p.vertices == (4,) and p.arcs == () and p.weight == 0


@given(generated("triangulation-thinned", 5, 90, wmin=-5, wmax=20, keep=0.5, both_ways=0.1),
       st.sampled_from(EPS_VALUES), st.data())
def test_path_is_valid_and_shortest(g, eps, data):
    if oracle_negative_cycle(g):
        return
    s = data.draw(st.integers(0, g.n - 1))
    reachable = [v for v in range(g.n) if oracle_reach(g, s, v)]
    t = data.draw(st.sampled_from(reachable))
    p = planar_short_path(g, s, t, eps=eps)
    assert is_path(g, p, s, t)
    assert p.weight == oracle_shortest_path(g, s, t).distance


# -- negative cycles --------------------------------------------------------------------


def test_triangle_with_negative_cycle():
    c = detect_negative_cycle(chain(3, weights=[1, 1, -3], closed=True))
    assert c is not None and c.weight == -1
    assert sorted(c.vertices) == [0, 1, 2]


def test_positive_weights_have_no_negative_cycle():
    assert detect_negative_cycle(gen("grid", 100, wmin=1, wmax=5)) is None


def test_zero_cycle_is_not_negative():
    assert detect_negative_cycle(chain(3, weights=[1, 1, -2], closed=True)) is None


@given(generated("triangulation-thinned", 3, 120, wmin=-5, wmax=20, keep=0.5, both_ways=0.1),
       st.sampled_from(EPS_VALUES))
def test_negative_cycle_detection_matches_oracle(g, eps):
    c = detect_negative_cycle(g, eps=eps)
    assert (c is not None) == oracle_negative_cycle(g)
    if c is not None:
        arcs = c.arcs
        assert sum(g.weight[a] for a in arcs) == c.weight < 0
        for a, b in zip(arcs, arcs[1:] + arcs[:1]):
            assert g.dst[a] == g.src[b]
        assert len(set(c.vertices)) == len(c.vertices)


# -- reachability ------------------------------------------------------------------------


def test_reach_self():
    assert planar_reach(PlanarGraph(1, [], [[]]), 0, 0)


def test_reach_isolated_pair():
    assert not planar_reach(PlanarGraph(2, [], [[], []]), 0, 1)


@given(generated("triangulation-thinned", 3, 150, keep=0.6, both_ways=0.2), st.data())
def test_reach_matches_dfs(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1))
    assert planar_reach(g, s, t) == oracle_reach(g, s, t)


# -- metering -----------------------------------------------------------------------------


def test_meter_is_balanced_and_ratio_shrinks_with_size():
    ratios = []
    for n in (256, 1024):
        g = gen("grid", n)
        meter = SpaceMeter()
        planar_dist(g, 0, g.n - 1, meter=meter)
        assert meter.live_cells == 0
        ratios.append(meter.peak_cells / g.n)
    assert ratios[1] < ratios[0]


def test_meter_balanced_after_negative_cycle():
    g = chain(3, weights=[1, 1, -3], closed=True)
    meter = SpaceMeter()
    detect_negative_cycle(g, meter=meter)
    assert meter.live_cells == 0
