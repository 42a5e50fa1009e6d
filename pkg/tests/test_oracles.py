"""The oracles themselves on hand-checkable inputs."""

import math

import pytest

from cases import B, R, arcs_graph, bip, chain, drawn
from planarspace.graph import PART_A, PART_B, Arc, PlanarGraph
from planarspace.oracles import (
    count_alternating_paths,
    count_paths,
    is_perfect_matching,
    oracle_bipartite,
    oracle_epm,
    oracle_even_path,
    oracle_matching,
    oracle_negative_cycle,
    oracle_odd_cycle,
    oracle_reach,
    oracle_redblue,
    oracle_scc,
    oracle_shortest_path,
    simple_path_parities,
)


def test_shortest_path_trivial():
    assert oracle_shortest_path(chain(2, weights=[5]), 0, 0).distance == 0
    assert oracle_shortest_path(chain(2, weights=[5]), 0, 1).distance == 5
    assert oracle_shortest_path(chain(2, weights=[5]), 1, 0).distance == math.inf


def test_planted_negative_cycle_flagged():
    g = chain(3, weights=[2, 2, -5], closed=True)
    assert oracle_shortest_path(g, 0, 1).negative_cycle
    assert oracle_negative_cycle(g)
    assert not oracle_negative_cycle(chain(3, weights=[2, 2, -4], closed=True))


def test_redblue_oracle():
    assert oracle_redblue(chain(3, colors=[R, B]), 0, 2)
    assert not oracle_redblue(chain(2, colors=[R]), 0, 1)


def test_odd_cycle_oracle():
    assert oracle_odd_cycle(chain(3, closed=True))
    assert not oracle_odd_cycle(chain(4, closed=True))
    assert oracle_odd_cycle(PlanarGraph.from_arc_order(1, [(0, 0)]))


def test_even_path_oracle():
    assert oracle_even_path(chain(3), 0, 2)
    assert not oracle_even_path(chain(2), 0, 1)
    assert simple_path_parities(chain(4), 0, 3) == {1}


def test_matching_oracle():
    k2 = bip(2, [(0, 1)], a_side={0})
    assert oracle_matching(k2).perfect
    assert not oracle_matching(bip(3, [(0, 1), (2, 1)], a_side={0, 2})).perfect
    assert is_perfect_matching(k2, {(0, 1)})
    assert not is_perfect_matching(k2, {(1, 0)})


def test_epm_oracle():
    k2 = PlanarGraph.from_arc_order(2, [Arc(0, 0, 1, 1, R)], part=[PART_A, PART_B])
    assert not oracle_epm(k2)
    arcs = [Arc(0, 0, 1, 1, R), Arc(1, 2, 1, 1, B), Arc(2, 2, 3, 1, R), Arc(3, 0, 3, 1, B)]
    c4 = PlanarGraph.from_arc_order(4, arcs, part=[PART_A, PART_B, PART_A, PART_B])
    assert oracle_epm(c4)
    with pytest.raises(ValueError):
        oracle_epm(PlanarGraph(20, [], [[]] * 20, part=[0, 1] * 10))


def test_counting_and_reach():
    d = drawn(4, [(0, 1), (0, 2), (1, 3), (2, 3)], [])
    assert count_paths(d, 0, 3) == 2
    assert oracle_reach(d, 0, 3) and not oracle_reach(d, 3, 0)
    g = chain(3, colors=[R, B])
    assert count_alternating_paths(g, 0, 2) == 1


def test_scc_and_bipartite_oracles():
    assert oracle_scc(chain(3, closed=True)) == [[0, 1, 2]]
    assert oracle_bipartite(chain(4, closed=True))
    assert not oracle_bipartite(chain(3, closed=True))
    assert not oracle_bipartite(arcs_graph(1, [(0, 0)]))
