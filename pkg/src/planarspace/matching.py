"""Perfect matchings of planar bipartite graphs through dual shortest paths.

Each edge is read as a pair of opposite half-edges.  The A-to-B half-edge has
capacity 1 and the reverse 0; A-vertices have demand +1, B-vertices -1.
A spanning-tree pseudo-flow ``f'`` meets the demands but not necessarily
the capacities.  A feasible flow is ``f' + f''`` with ``f''`` a circulation, and
circulations of a plane graph are potential differences across the dual.  So
a perfect matching exists iff the dual, weighted by ``c - f'``, has no
negative cycle, and dual distances give the correcting circulation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import (
    PART_A,
    PART_B,
    RED,
    Arc,
    GraphError,
    PlanarGraph,
    build_directed_dual,
    induced_subgraph,
    undirected_components,
)
from .meter import SpaceMeter
from .parity import directed_odd_cycle
from .shortest_path import DEFAULT_EPS, detect_negative_cycle, planar_dist


class InvariantError(GraphError):
    """An internal consistency check failed; never silently corrected."""


@dataclass(frozen=True)
class CapacityDemandGraph:
    """``capacity[h]`` per half-edge (arc-end) of ``base``, ``demand[v]`` per vertex."""

    base: PlanarGraph
    capacity: tuple[int, ...]
    demand: tuple[int, ...]


@dataclass(frozen=True)
class PseudoFlow:
    """``values[h]`` is the flow along half-edge ``h`` (from the vertex owning end ``h``)."""

    values: tuple[int, ...]

    def __getitem__(self, h: int) -> int:
        return self.values[h]

    def antisymmetric(self) -> bool:
        return all(self.values[h] == -self.values[h ^ 1] for h in range(len(self.values)))

    def excess(self, g: PlanarGraph) -> list[int]:
        out = [0] * g.n
        for h, val in enumerate(self.values):
            out[g.end_vertex(h)] += val
        return out


@dataclass(frozen=True)
class Matching:
    pairs: frozenset  # (A-vertex, B-vertex)
    arcs: frozenset  # arc ids of the matched edges

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class HallObstacle:
    """``S`` with ``|N(S)| < |S|``; ``side`` says which part ``S`` is drawn from."""

    S: frozenset
    neighborhood: frozenset
    side: int = PART_A
    dual_cycle: Optional[tuple[int, ...]] = None
    flow_on_cycle: Optional[int] = None
    cut_side: Optional[frozenset] = None


def _require_parts(g: PlanarGraph) -> None:
    if g.part is None:
        raise GraphError("graph needs A/B part labels")
    for a in range(g.m):
        if g.part[g.src[a]] == g.part[g.dst[a]]:
            raise GraphError(f"arc {a} joins two vertices of the same part")


def ab_end(g: PlanarGraph, a: int) -> int:
    """The half-edge of arc ``a`` that points from its A-vertex to its B-vertex."""
    return 2 * a if g.part[g.src[a]] == PART_A else 2 * a + 1


def matching_instance(g: PlanarGraph) -> CapacityDemandGraph:
    _require_parts(g)
    cap = [0] * (2 * g.m)
    for a in range(g.m):
        cap[ab_end(g, a)] = 1
    demand = tuple(1 if p == PART_A else -1 for p in g.part)
    return CapacityDemandGraph(g, tuple(cap), demand)


def mn_pseudo_flow(cdg: CapacityDemandGraph, tree: Optional[Iterable[int]] = None) -> PseudoFlow:
    """Tree pseudo-flow: a tree edge carries the demand total of the side it leaves.

    The tree is a BFS tree from vertex 0 unless ``tree`` lists the arc ids of
    a spanning tree; non-tree half-edges carry 0.
    """
    g, d = cdg.base, cdg.demand
    if sum(d) != 0:
        raise GraphError("demands must sum to zero")
    if g.n > 1 and len(undirected_components(g)) != 1:
        raise GraphError("pseudo-flow needs a connected graph")
    allowed = None if tree is None else set(tree)
    parent_end = [-1] * g.n
    order = [0]
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for e in g.rotation[u]:
            v = g.end_vertex(e ^ 1)
            if v not in seen and (allowed is None or e >> 1 in allowed):
                seen.add(v)
                parent_end[v] = e ^ 1  # end at v, pointing back towards u
                order.append(v)
                queue.append(v)
    if len(order) != g.n:
        raise GraphError("tree arcs do not span the graph")
    subtree = list(d)
    flow = [0] * (2 * g.m)
    for v in reversed(order):
        h = parent_end[v]
        if h < 0:
            continue
        flow[h] = subtree[v]
        flow[h ^ 1] = -subtree[v]
        subtree[g.end_vertex(h ^ 1)] += subtree[v]
    return PseudoFlow(tuple(flow))


def dual_weights(cdg: CapacityDemandGraph, f: PseudoFlow, scale: int = 1, use_capacity: bool = True) -> list[int]:
    """Per half-edge ``scale * c(h) - f'(h)`` (or ``-f'(h)`` without capacities)."""
    return [(scale * c if use_capacity else 0) - f[h] for h, c in enumerate(cdg.capacity)]


def _dual_planar(g: PlanarGraph, weights: Sequence[int]):
    dual = build_directed_dual(g, weights)
    return dual, dual.to_planar(doubled=True)


def _part_components(g: PlanarGraph):
    for comp in undirected_components(g):
        sub = induced_subgraph(g, comp)
        a_count = sum(1 for p in sub.part if p == PART_A)
        yield comp, sub, a_count, sub.n - a_count


def _component_has_pm(sub: PlanarGraph, eps: float, meter) -> bool:
    if sub.n == 1:
        return False
    cdg = matching_instance(sub)
    f = mn_pseudo_flow(cdg)
    _, dual = _dual_planar(sub, dual_weights(cdg, f))
    return detect_negative_cycle(dual, eps, meter) is None


def mn_decision(g: PlanarGraph, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None) -> bool:
    """Whether ``g`` has a perfect matching (per connected component)."""
    _require_parts(g)
    a_total = sum(1 for p in g.part if p == PART_A)
    if 2 * a_total != g.n:
        return False
    for _, sub, na, nb in _part_components(g):
        if na != nb or not _component_has_pm(sub, eps, meter):
            return False
    return True


def mn_construction(g: PlanarGraph, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None) -> Matching:
    """A perfect matching read off ``f' + f''`` with ``f''`` from dual distances.

    Raises :class:`~planarspace.shortest_path.NegativeCycleError` (or a
    GraphError for unbalanced parts) when no perfect matching exists.
    """
    _require_parts(g)
    arcs = set()
    for comp, sub, na, nb in _part_components(g):
        if na != nb or sub.n == 1:
            raise GraphError("a component has unequal part sizes; no perfect matching")
        cset = set(comp)
        global_arc = [a for a in range(g.m) if g.src[a] in cset]  # induced order
        cdg = matching_instance(sub)
        f = mn_pseudo_flow(cdg)
        dual, dg = _dual_planar(sub, dual_weights(cdg, f))
        start = dual.src[0]  # face holding the smallest arc-end
        dist = [planar_dist(dg, start, face, eps=eps, meter=meter) for face in range(dual.face_count)]
        for a in range(sub.m):
            h = ab_end(sub, a)
            total = f[h] + dist[dual.dst[h]] - dist[dual.src[h]]
            if total not in (0, 1):
                raise InvariantError(f"flow {total} on arc {a} violates the capacities")
            if total == 1:
                arcs.add(global_arc[a])
    pairs = {_pair(g, a) for a in arcs}
    matching = Matching(frozenset(pairs), frozenset(arcs))
    if not is_perfect(g, matching):
        raise InvariantError("constructed edge set is not a perfect matching")
    return matching


def _pair(g: PlanarGraph, a: int) -> tuple[int, int]:
    u, v = g.src[a], g.dst[a]
    return (u, v) if g.part[u] == PART_A else (v, u)


def is_perfect(g: PlanarGraph, m: Matching) -> bool:
    touched: list[int] = []
    for a in m.arcs:
        touched.extend((g.src[a], g.dst[a]))
    return len(touched) == len(set(touched)) == g.n and {_pair(g, a) for a in m.arcs} == set(m.pairs)


def neighborhood(g: PlanarGraph, S) -> frozenset:
    s = set(S)
    return frozenset(x for u in s for _, x in g.incident(u))


def _obstacle(g: PlanarGraph, S, side: int, **extra) -> HallObstacle:
    N = neighborhood(g, S)
    S = frozenset(S)
    if not len(N) < len(S):
        raise InvariantError(f"Hall obstacle check failed: |N(S)| = {len(N)} >= |S| = {len(S)}")
    return HallObstacle(S, N, side, **extra)


def hall_obstacle(g: PlanarGraph, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None) -> Optional[HallObstacle]:
    """A set ``S`` with ``|N(S)| < |S|``, or None when a perfect matching exists."""
    _require_parts(g)
    A = [v for v in range(g.n) if g.part[v] == PART_A]
    B = [v for v in range(g.n) if g.part[v] == PART_B]
    if len(A) > len(B):
        return _obstacle(g, A, PART_A)
    if len(A) < len(B):
        return _obstacle(g, B, PART_B)
    comps = list(_part_components(g))
    for comp, sub, na, nb in comps:
        if na > nb:
            return _obstacle(g, [comp[v] for v in range(sub.n) if sub.part[v] == PART_A], PART_A)
    for comp, sub, na, nb in comps:
        if sub.n == 1 or _component_has_pm(sub, eps, meter):
            continue
        V1, cycle, flow = _cut_side(sub, eps, meter)
        S = [comp[v] for v in V1 if sub.part[v] == PART_A]
        return _obstacle(g, S, PART_A, dual_cycle=cycle, flow_on_cycle=flow,
                         cut_side=frozenset(comp[v] for v in V1))
    return None


def _cut_side(sub: PlanarGraph, eps: float, meter):
    """Negative dual cycle under ``c * n^4 - f'`` turned into the surplus side of a cut."""
    cdg = matching_instance(sub)
    f = mn_pseudo_flow(cdg)
    scale = sub.n ** 4
    _, dg = _dual_planar(sub, dual_weights(cdg, f, scale))
    cycle = detect_negative_cycle(dg, eps, meter)
    if cycle is None:
        raise InvariantError("no negative dual cycle under scaled weights although no perfect matching exists")
    cut = {h >> 1 for h in cycle.arcs}
    tails = {sub.end_vertex(h) for h in cycle.arcs}
    comp_of = {}
    for i, comp in enumerate(_components_without(sub, cut)):
        for v in comp:
            comp_of[v] = i
    if len(set(comp_of.values())) != 2:
        raise InvariantError("dual cycle does not correspond to a two-sided cut")
    tail_side = {comp_of[v] for v in tails}
    if len(tail_side) != 1:
        raise InvariantError("cut half-edges do not all leave the same side")
    side = tail_side.pop()
    V1 = [v for v in range(sub.n) if comp_of[v] == side]
    a1 = sum(1 for v in V1 if sub.part[v] == PART_A)
    b1 = len(V1) - a1
    flow = sum(f[h] for h in cycle.arcs)
    if flow != a1 - b1:
        raise InvariantError(f"flow around the dual cycle {flow} != |A1| - |B1| = {a1 - b1}")
    if not a1 > b1:
        raise InvariantError("selected cut side has no surplus of A-vertices")
    return V1, tuple(cycle.arcs), flow


def _components_without(g: PlanarGraph, removed_arcs: set[int]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for a, w in g.incident(u):
                if a not in removed_arcs and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(comp)
    return out


def negative_dual_cycle_present(g: PlanarGraph, weighting: str, eps: float = DEFAULT_EPS) -> bool:
    """Negative-cycle presence in the dual of every component under one weighting.

    ``weighting`` is ``"c-f"``, ``"-f"`` or ``"cn4-f"``; true if any
    component's dual has a negative cycle.
    """
    _require_parts(g)
    for _, sub, _, _ in _part_components(g):
        if sub.m == 0:
            continue
        cdg = matching_instance(sub)
        try:
            f = mn_pseudo_flow(cdg)
        except GraphError:
            continue
        if weighting == "c-f":
            w = dual_weights(cdg, f)
        elif weighting == "-f":
            w = dual_weights(cdg, f, use_capacity=False)
        elif weighting == "cn4-f":
            w = dual_weights(cdg, f, sub.n ** 4)
        else:
            raise ValueError(f"unknown weighting {weighting!r}")
        _, dg = _dual_planar(sub, w)
        if detect_negative_cycle(dg, eps) is not None:
            return True
    return False


# -- even perfect matching ---------------------------------------------------------


def build_parity_graph_H(g: PlanarGraph, M: Matching) -> PlanarGraph:
    """Arc ``mate(x) -> v`` for every unmatched edge ``{x, v}``, from both endpoints.

    The weight is 0 when ``{mate(x), x}`` and ``{x, v}`` share a color, else 1.
    The embedding is that of ``g`` with matched edges contracted: the
    contracted node lists the rotation of one endpoint after its matched
    end, then the rotation of the other endpoint after its matched end.
    """
    _require_parts(g)
    if not is_perfect(g, M):
        raise GraphError("H needs a perfect matching")
    mate_arc = {}
    for a in M.arcs:
        mate_arc[g.src[a]] = a
        mate_arc[g.dst[a]] = a

    def mate(v: int) -> int:
        a = mate_arc[v]
        return g.dst[a] if g.src[a] == v else g.src[a]

    free = [a for a in range(g.m) if a not in M.arcs]
    k = len(free)
    index = {a: i for i, a in enumerate(free)}
    arcs = []
    for i, a in enumerate(free):
        x, v = _pair(g, a)  # x in A, v in B
        # pivot at x: node mate(x) (a B-vertex) -> v
        w_b = 0 if g.color[mate_arc[x]] == g.color[a] else 1
        arcs.append(Arc(i, mate(x), v, w_b, g.color[a]))
    for i, a in enumerate(free):
        x, v = _pair(g, a)
        # pivot at v: node mate(v) (an A-vertex) -> x
        w_a = 0 if g.color[mate_arc[v]] == g.color[a] else 1
        arcs.append(Arc(k + i, mate(v), x, w_a, g.color[a]))

    def h_end(e: int, copy_b: bool) -> int:
        a = e >> 1
        y = g.end_vertex(e)
        base = index[a] if copy_b else k + index[a]
        src_side = PART_A if copy_b else PART_B
        return 2 * base if g.part[y] == src_side else 2 * base + 1

    rotation: list[list[int]] = [[] for _ in range(g.n)]
    for node in range(g.n):
        copy_b = g.part[node] == PART_B
        for y in (node, mate(node)):
            rot = g.rotation[y]
            ma = mate_arc[y]
            start = next(i for i, e in enumerate(rot) if e >> 1 == ma)
            for j in range(1, len(rot)):
                e = rot[(start + j) % len(rot)]
                if e >> 1 in index:
                    rotation[node].append(h_end(e, copy_b))
    return PlanarGraph(g.n, arcs, rotation, None, max(1, g.n ** 3))


def parity_arc_origin(g: PlanarGraph, M: Matching) -> list[tuple[int, int]]:
    """``(edge arc, pivot x)`` behind each arc of :func:`build_parity_graph_H`, by index."""
    free = [a for a in range(g.m) if a not in M.arcs]
    return [(a, _pair(g, a)[0]) for a in free] + [(a, _pair(g, a)[1]) for a in free]


def flip_along(g: PlanarGraph, M: Matching, h_arcs) -> Matching:
    """Swap ``M`` along the alternating cycle behind a cycle of ``H`` (given by arc ids)."""
    origin = parity_arc_origin(g, M)
    mate_arc = {}
    for a in M.arcs:
        mate_arc[g.src[a]] = mate_arc[g.dst[a]] = a
    cycle = set()
    for i in h_arcs:
        a, x = origin[i]
        cycle.update((a, mate_arc[x]))
    arcs = frozenset(set(M.arcs) ^ cycle)
    return Matching(frozenset(_pair(g, a) for a in arcs), arcs)


def subdivide_zero_edges(H: PlanarGraph) -> PlanarGraph:
    """Split every weight-0 arc ``x -> y`` into ``x -> v -> y`` with unit weights."""
    for a in range(H.m):
        if H.weight[a] not in (0, 1):
            raise GraphError(f"arc {a} has weight {H.weight[a]}, expected 0 or 1")
    arcs = [Arc(a, H.src[a], H.dst[a], 1, H.color[a]) for a in range(H.m)]
    rotation = [list(r) for r in H.rotation]
    n = H.n
    for a in range(H.m):
        if H.weight[a] != 0:
            continue
        v = n
        n += 1
        y = H.dst[a]
        extra = len(arcs)
        arcs[a] = Arc(a, H.src[a], v, 1, H.color[a])
        arcs.append(Arc(extra, v, y, 1, H.color[a]))
        rot = rotation[y]
        rot[rot.index(2 * a + 1)] = 2 * extra + 1
        rotation.append([2 * a + 1, 2 * extra])
    return PlanarGraph(n, arcs, rotation, None, max(1, n ** 3))


def even_perfect_matching(g: PlanarGraph, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None) -> bool:
    """Whether some perfect matching has an even number of Red edges."""
    _require_parts(g)
    for a in range(g.m):
        if g.color[a] is None:
            raise GraphError(f"arc {a} has no Red/Blue color")
    if not mn_decision(g, eps, meter):
        return False
    M = mn_construction(g, eps, meter)
    reds = sum(1 for a in M.arcs if g.color[a] == RED)
    if reds % 2 == 0:
        return True
    H = build_parity_graph_H(g, M)
    return directed_odd_cycle(subdivide_zero_edges(H), eps, meter)
