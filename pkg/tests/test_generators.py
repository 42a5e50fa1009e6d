import pytest
from hypothesis import given, strategies as st

from cases import gen
from planarspace.generators import KINDS, GeneratorSpec, generate
from planarspace.graph import PART_A, DrawnGraph, euler_report, validate
from planarspace.plgr import dumps
from planarspace.redblue import is_dag


def test_grid_three_by_three():
    g = gen("grid", 9)
    assert g.n == 9 and validate(g) == []


def test_same_seed_same_bytes():
    for kind in KINDS:
        spec = GeneratorSpec(kind, 40, seed=11, colors=0.5, wmin=-2, wmax=5)
        assert dumps(generate(spec)) == dumps(generate(spec))


def test_different_seeds_differ():
    a = gen("triangulation-thinned", 40, seed=1)
    b = gen("triangulation-thinned", 40, seed=2)
    assert dumps(a) != dumps(b)


def test_triangulation_hundred_passes_euler():
    g = gen("triangulation-thinned", 100, keep=1.0, both_ways=0.0)
    assert validate(g) == []
    ((v, e, f),) = euler_report(g)
    # a full stacked triangulation is maximal planar
    assert e == 3 * v - 6 and v - e + f == 2


def test_unknown_kind():
    with pytest.raises(ValueError):
        generate(GeneratorSpec("torus", 10))


def test_with_changes_one_field():
    spec = GeneratorSpec("grid", 9)
    assert spec.with_(seed=4) == GeneratorSpec("grid", 9, seed=4)


@given(st.sampled_from(["grid", "grid-dag", "triangulation-thinned"]), st.integers(3, 120),
       st.integers(0, 10**6), st.booleans(), st.booleans())
def test_every_output_validates(kind, n, seed, bipartite, dag):
    g = generate(GeneratorSpec(kind, n, seed=seed, bipartite=bipartite, dag=dag, colors=0.7,
                               wmin=-5, wmax=20))
    assert validate(g) == []
    if bipartite:
        assert g.part is not None
        assert all(g.part[g.src[a]] != g.part[g.dst[a]] for a in range(g.m))
        assert all(g.part[g.src[a]] == PART_A for a in range(g.m))
    if dag or kind == "grid-dag":
        assert is_dag(g)
    assert all(-5 <= w <= 20 for w in g.weight)


@given(st.integers(2, 80), st.integers(0, 10**6))
def test_drawn_dag_respects_crossing_budget(n, seed):
    d = gen("drawn-dag", n, seed)
    assert isinstance(d, DrawnGraph)
    assert d.problems() == []
    assert len(d.crossings) <= max(2, n)
    assert all(a.src != a.dst for a in d.arcs)
