"""Separator-based shortest distances, paths and negative-cycle detection.

The recursion works on *regions*: vertex subsets of the input graph.  A
region that is small enough (at most ``sqrt(n_top)`` vertices, or at the
depth cap) is solved by Bellman-Ford.  Otherwise a separator family ``S'``
of the region is built, extended by the region's seeds and targets, and a
table ``C`` over ``S'`` is relaxed round by round: direct arcs between
separator vertices, plus one recursive call per component ``X`` of the
region minus ``S'``, run on ``X`` together with the separator vertices
bordering it.

Internally every arc weight ``w`` is replaced by ``w * (n + 1) + 1``.  This
keeps the order of real path weights, breaks ties towards fewer arcs and
turns zero-weight cycles into positive ones, so shortest walks are simple
paths and parent pointers never loop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .graph import GraphError, PlanarGraph
from .meter import NullMeter, SpaceMeter, bit_cells
from .separator import build_separator_family, components

INF = math.inf
INT_LIMIT = 2 ** 63
DEFAULT_EPS = 0.25

Distance = Union[int, float]


class NoPathError(GraphError):
    """The target is not reachable from the source."""


@dataclass(frozen=True)
class NegativeCycle:
    vertices: tuple[int, ...]
    arcs: tuple[int, ...]
    weight: int


class NegativeCycleError(GraphError):
    def __init__(self, cycle: NegativeCycle) -> None:
        super().__init__(f"negative cycle of weight {cycle.weight} through {list(cycle.vertices)}")
        self.cycle = cycle


@dataclass(frozen=True)
class DistanceTable:
    """Final distances of the top-level call, keyed by the vertices in ``order``."""

    order: tuple[int, ...]
    values: tuple[Distance, ...]

    def __getitem__(self, v: int) -> Distance:
        return self.values[self.order.index(v)]

    def as_dict(self) -> dict[int, Distance]:
        return dict(zip(self.order, self.values))


@dataclass(frozen=True)
class PathResult:
    """A shortest path; ``vertices`` and ``arcs`` run from the target back to the source."""

    vertices: tuple[int, ...]
    arcs: tuple[int, ...]
    weight: int

    def forward(self) -> tuple[int, ...]:
        return tuple(reversed(self.vertices))


class _CycleFound(Exception):
    def __init__(self, arcs: list[int]) -> None:
        super().__init__()
        self.arcs = arcs


def _check_eps(eps: float) -> None:
    if not 0 < eps < 0.5:
        raise ValueError(f"eps must lie strictly between 0 and 1/2, got {eps}")


def _checked(value: int) -> int:
    if not -INT_LIMIT < value < INT_LIMIT:
        raise OverflowError("distance left the checked 64-bit range")
    return value


def bellman_ford_base(
    g: PlanarGraph,
    sources: Union[Mapping[int, Distance], DistanceTable],
    target: int,
    vertices: Optional[Iterable[int]] = None,
) -> Distance:
    """Minimum of ``seed value + walk weight`` over seeded vertices, inside ``G[vertices]``.

    Runs ``|V'|`` rounds of relaxation with real weights; ``inf`` if no
    seeded vertex reaches ``target``.
    """
    seeds = sources.as_dict() if isinstance(sources, DistanceTable) else dict(sources)
    pool = set(range(g.n)) if vertices is None else set(vertices)
    dist: dict[int, Distance] = {v: INF for v in pool}
    for v, val in seeds.items():
        if v in pool and val < dist[v]:
            dist[v] = val
    arcs = [a for a in range(g.m) if g.src[a] in pool and g.dst[a] in pool]
    for _ in range(len(pool)):
        changed = False
        for a in arcs:
            du = dist[g.src[a]]
            if du == INF:
                continue
            nd = _checked(du + g.weight[a])
            if nd < dist[g.dst[a]]:
                dist[g.dst[a]] = nd
                changed = True
        if not changed:
            break
    return dist.get(target, INF)


@dataclass
class _Plan:
    sep: list[int]
    sep_set: set[int]
    comps: list[tuple[list[int], list[int], list[int], set[int]]]  # (X, boundary, region, region set)
    direct: list[int]


class _Engine:
    """One top-level computation: weights, thresholds, meter and plan memo."""

    def __init__(
        self,
        g: PlanarGraph,
        weights: Sequence[int],
        n_top: int,
        eps: float,
        meter: SpaceMeter,
        on_round: Optional[Callable[[int, dict[int, Distance]], None]] = None,
    ) -> None:
        self.g = g
        self.scale = g.n + 1
        self.w = [x * self.scale + 1 for x in weights]
        self.n_top = max(1, n_top)
        self.base_size = math.sqrt(self.n_top)
        self.max_depth = max(1, math.ceil(math.log(2) / -math.log(1 - eps)))
        self.eps = eps
        self.meter = meter
        self.on_round = on_round
        self.plans: dict = {}
        self.top_table: Optional[DistanceTable] = None
        bound = max([1, *(abs(x) for x in self.w)])
        _checked(bound * (g.n + 1) * (g.n + 1))

    def real(self, value: Distance) -> Distance:
        return value if value == INF else value // self.scale

    def is_base(self, size: int, depth: int) -> bool:
        return size <= self.base_size or depth >= self.max_depth

    # -- plans -------------------------------------------------------------------

    def plan(self, verts: list[int], vset: set[int], terminals: Iterable[int]) -> _Plan:
        terms = frozenset(terminals)
        key = (frozenset(vset), terms)
        cached = self.plans.get(key)
        if cached is not None:
            return cached
        g = self.g
        size = len(verts)
        r = max(2, math.ceil(size ** (1 - self.eps)))
        fam = build_separator_family(g, r, verts).members
        sep = sorted(set(fam) | terms)
        sep_set = set(sep)
        comps = []
        for comp in components(g, vset - sep_set):
            bd = set()
            for u in comp:
                for _, x in g.incident(u):
                    if x in sep_set:
                        bd.add(x)
            region = sorted(set(comp) | bd)
            comps.append((comp, sorted(bd), region, set(region)))
        direct = [a for u in sep for a in g.out_arcs(u) if g.dst[a] in sep_set]
        plan = _Plan(sep, sep_set, comps, direct)
        self.plans[key] = plan
        return plan

    # -- base case ---------------------------------------------------------------

    def base(self, verts, vset, seeds, uniform, rev, track=False):
        """Bellman-Ford on the region; returns ``(dist, root, parent)``."""
        g, w = self.g, self.w
        n = len(verts)
        cells = (3 if track else 2) * n + bit_cells(n)
        self.meter.alloc(cells)
        try:
            dist: dict[int, Distance] = {}
            root: dict[int, Optional[int]] = {}
            for v in verts:
                dist[v] = 0 if uniform else INF
                root[v] = None
            for v, val in seeds.items():
                if val < dist[v] or (val == dist[v] and root[v] is None):
                    dist[v] = val
                    root[v] = v
            parent: dict[int, int] = {}
            if rev:
                arcs = [(a, g.dst[a], g.src[a]) for v in verts for a in g.in_arcs(v) if g.src[a] in vset]
            else:
                arcs = [(a, g.src[a], g.dst[a]) for v in verts for a in g.out_arcs(v) if g.dst[a] in vset]
            for rnd in range(4 * n + 8):
                last = None
                for a, u, h in arcs:
                    du = dist[u]
                    if du == INF:
                        continue
                    nd = du + w[a]
                    if nd < dist[h]:
                        dist[h] = _checked(nd)
                        root[h] = root[u]
                        parent[h] = a
                        last = h
                if last is None:
                    return dist, root, parent
                if rnd >= n:
                    cycle = self._parent_cycle(parent, last, n)
                    if cycle is not None:
                        raise _CycleFound(cycle)
            raise RuntimeError("negative cycle detected but no witness could be traced")
        finally:
            self.meter.release(cells)

    def _parent_cycle(self, parent: dict[int, int], x: int, n: int) -> Optional[list[int]]:
        g = self.g
        for _ in range(n):
            if x not in parent:
                return None
            x = g.src[parent[x]]
        start, arcs = x, []
        while True:
            if x not in parent or len(arcs) > n:
                return None
            a = parent[x]
            arcs.append(a)
            x = g.src[a]
            if x == start:
                break
        arcs.reverse()
        return self.negative_part(arcs)

    # -- recursive rounds ----------------------------------------------------------

    def rounds(self, plan: _Plan, verts, seeds, uniform, rev, depth):
        """Relax the table over ``plan.sep`` to its fixpoint.

        Returns ``(C, pred, kind, root)``: ``pred[v]`` is the separator vertex
        where the last improving segment into ``v`` started, ``kind[v]`` the
        arc id (``>= 0``) or ``~component`` it went through.
        """
        g, w, meter = self.g, self.w, self.meter
        sep = plan.sep
        cells = 6 * len(sep) + 2 * len(plan.comps) + bit_cells(len(verts))
        meter.alloc(cells)
        try:
            C: dict[int, Distance] = {}
            root: dict[int, Optional[int]] = {}
            for v in sep:
                C[v] = 0 if uniform else INF
                root[v] = None
            for v, val in seeds.items():
                if val < C[v] or (val == C[v] and root[v] is None):
                    C[v] = val
                    root[v] = v
            pred: dict[int, Optional[int]] = {v: None for v in sep}
            kind: dict[int, int] = {}
            stamp = {v: 0 for v in sep}
            processed = [-1] * len(plan.comps)
            clock = 1
            if rev:
                direct = [(a, g.dst[a], g.src[a]) for a in plan.direct]
            else:
                direct = [(a, g.src[a], g.dst[a]) for a in plan.direct]
            limit = max(1, len(sep))
            hard_cap = 4 * limit + 8
            rnd = 0
            while True:
                last = None
                for a, u, h in direct:
                    cu = C[u]
                    if cu == INF:
                        continue
                    nd = cu + w[a]
                    if nd < C[h]:
                        C[h] = _checked(nd)
                        pred[h], kind[h], root[h] = u, a, root[u]
                        stamp[h] = clock
                        clock += 1
                        last = h
                for i, (_, bd, region, rset) in enumerate(plan.comps):
                    if processed[i] >= 0 and all(stamp[b] < processed[i] for b in bd):
                        continue
                    processed[i] = clock
                    clock += 1
                    child_seeds = {b: C[b] for b in bd if C[b] != INF}
                    if not child_seeds and not uniform:
                        continue
                    with meter.hold(1 + len(bd)):
                        res = self.dist(region, rset, child_seeds, uniform, bd, rev, depth + 1)
                    for b in bd:
                        val, org = res[b]
                        if val < C[b]:
                            C[b] = val
                            pred[b], kind[b], root[b] = org, ~i, org if org is None else root[org]
                            stamp[b] = clock
                            clock += 1
                            last = b
                if depth == 0 and self.on_round is not None:
                    self.on_round(rnd, {v: self.real(C[v]) for v in sep})
                rnd += 1
                if last is None:
                    return C, pred, kind, root
                if rnd > limit:
                    cycle = self._pred_cycle(plan, pred, kind, last, depth)
                    if cycle is not None:
                        raise _CycleFound(cycle)
                    if rnd > hard_cap:
                        raise RuntimeError("negative cycle detected but no witness could be traced")
        finally:
            meter.release(cells)

    def _pred_cycle(self, plan: _Plan, pred, kind, x, depth) -> Optional[list[int]]:
        for _ in range(len(plan.sep)):
            x = pred[x]
            if x is None:
                return None
        start, segs = x, []
        while True:
            b = pred[x]
            if b is None or len(segs) > len(plan.sep):
                return None
            segs.append((b, kind[x], x))
            x = b
            if x == start:
                break
        segs.reverse()
        walk: list[int] = []
        for b, k, v in segs:
            if k >= 0:
                walk.append(k)
            else:
                _, _, region, rset = plan.comps[~k]
                walk.extend(self.report(region, rset, {b: 0}, v, depth + 1))
        return self.negative_part(walk)

    def negative_part(self, walk: list[int]) -> Optional[list[int]]:
        """A simple cycle of negative (scaled) weight inside a closed walk, if any."""
        g, w = self.g, self.w
        if not walk:
            return None
        pos = {g.src[walk[0]]: 0}
        verts = [g.src[walk[0]]]
        stack: list[int] = []
        for a in walk:
            v = g.dst[a]
            stack.append(a)
            if v in pos:
                k = pos[v]
                cyc = stack[k:]
                if sum(w[c] for c in cyc) < 0:
                    return cyc
                del stack[k:]
                for u in verts[k + 1:]:
                    pos.pop(u, None)
                del verts[k + 1:]
            else:
                pos[v] = len(verts)
                verts.append(v)
        return None

    # -- entry points --------------------------------------------------------------

    def dist(self, verts, vset, seeds, uniform, targets, rev, depth):
        """``{t: (value, root)}`` for every target of the region."""
        if self.is_base(len(verts), depth):
            d, root, _ = self.base(verts, vset, seeds, uniform, rev)
            if depth == 0:
                self.top_table = DistanceTable(tuple(verts), tuple(self.real(d[v]) for v in verts))
            return {t: (d[t], root[t]) for t in targets}
        plan = self.plan(verts, vset, set(seeds) | set(targets))
        C, _, _, root = self.rounds(plan, verts, seeds, uniform, rev, depth)
        if depth == 0:
            self.top_table = DistanceTable(tuple(plan.sep), tuple(self.real(C[v]) for v in plan.sep))
        return {t: (C[t], root[t]) for t in targets}

    def report(self, verts, vset, seeds, target, depth) -> list[int]:
        """Arc ids of a shortest walk from some seed to ``target``, in walk order."""
        g = self.g
        if self.is_base(len(verts), depth):
            d, _, parent = self.base(verts, vset, seeds, False, False, track=True)
            if d[target] == INF:
                raise NoPathError(f"vertex {target} is unreachable")
            arcs = []
            x = target
            while x in parent:
                a = parent[x]
                arcs.append(a)
                x = g.src[a]
            arcs.reverse()
            return arcs
        plan = self.plan(verts, vset, set(seeds) | {target})
        C, _, kind, _ = self.rounds(plan, verts, seeds, False, False, depth)
        if C[target] == INF:
            raise NoPathError(f"vertex {target} is unreachable")
        backwards: list[int] = []
        cur = target
        self.meter.alloc(1)
        try:
            for _ in range(len(plan.sep) + 1):
                if cur in seeds and seeds[cur] == C[cur]:
                    backwards.reverse()
                    return backwards
                nxt = self._step_back(plan, C, cur, kind.get(cur), depth, backwards)
                if nxt is None:
                    break
                cur = nxt
        finally:
            self.meter.release(1)
        raise RuntimeError("shortest-path traceback failed to reach a seed")

    def _step_back(self, plan: _Plan, C, cur, hint, depth, backwards) -> Optional[int]:
        g, w = self.g, self.w
        for a in plan.direct:
            u = g.src[a]
            if g.dst[a] == cur and u != cur and C[u] != INF and C[u] + w[a] == C[cur]:
                backwards.append(a)
                return u
        order = [i for i, (_, bd, _, _) in enumerate(plan.comps) if cur in bd]
        if hint is not None and hint < 0 and ~hint in order:
            order.remove(~hint)
            order.insert(0, ~hint)
        for i in order:
            _, bd, region, rset = plan.comps[i]
            others = [b for b in bd if b != cur and C[b] != INF]
            if not others:
                continue
            with self.meter.hold(1 + len(bd)):
                drev = self.dist(region, rset, {cur: 0}, False, others, True, depth + 1)
            for b in others:
                if C[b] + drev[b][0] == C[cur]:
                    seg = self.report(region, rset, {b: 0}, cur, depth + 1)
                    backwards.extend(reversed(seg))
                    return b
        return None


def _seed_map(s: int, T: Optional[Sequence[int]], A: Optional[Sequence[int]]) -> dict[int, int]:
    seeds = {s: 0}
    if T is not None:
        if A is None or len(A) != len(T):
            raise ValueError("seed vertices and seed values must have equal length")
        for v, val in zip(T, A):
            seeds[v] = min(seeds.get(v, val), val)
    return seeds


def _check_vertex(g: PlanarGraph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")


def _raise_cycle(engine: _Engine, arcs: list[int]) -> NegativeCycleError:
    return NegativeCycleError(_make_cycle(engine.g, arcs))


def _make_cycle(g: PlanarGraph, arcs: Sequence[int]) -> NegativeCycle:
    return NegativeCycle(
        tuple(g.src[a] for a in arcs), tuple(arcs), sum(g.weight[a] for a in arcs)
    )


def _run_dist(engine: _Engine, s: int, t: int, seeds: dict[int, int]) -> Distance:
    g = engine.g
    verts = list(range(g.n))
    scaled = {v: val * engine.scale for v, val in seeds.items()}
    try:
        res = engine.dist(verts, set(verts), scaled, False, [t], False, 0)
    except _CycleFound as found:
        raise _raise_cycle(engine, found.arcs) from None
    return engine.real(res[t][0])


def planar_dist_table(
    g: PlanarGraph,
    s: int,
    t: int,
    n_top: Optional[int] = None,
    T: Optional[Sequence[int]] = None,
    A: Optional[Sequence[int]] = None,
    eps: float = DEFAULT_EPS,
    meter: Optional[SpaceMeter] = None,
    on_round: Optional[Callable[[int, dict[int, Distance]], None]] = None,
) -> tuple[Distance, DistanceTable]:
    """Like :func:`planar_dist`, also returning the top-level table over ``S'``.

    ``on_round(i, table)`` is called after every round of the top frame.
    """
    _check_eps(eps)
    _check_vertex(g, s, t)
    engine = _Engine(g, g.weight, n_top or g.n, eps, meter or NullMeter(), on_round)
    value = _run_dist(engine, s, t, _seed_map(s, T, A))
    return value, engine.top_table


def planar_dist(
    g: PlanarGraph,
    s: int,
    t: int,
    n_top: Optional[int] = None,
    T: Optional[Sequence[int]] = None,
    A: Optional[Sequence[int]] = None,
    eps: float = DEFAULT_EPS,
    meter: Optional[SpaceMeter] = None,
) -> Distance:
    """Shortest ``s -> t`` distance, ``inf`` when unreachable.

    ``T``/``A`` optionally seed extra vertices with starting values.
    Raises :class:`NegativeCycleError` if a negative cycle is reachable.
    """
    return planar_dist_table(g, s, t, n_top, T, A, eps, meter)[0]


def planar_short_path(
    g: PlanarGraph,
    s: int,
    t: int,
    n_top: Optional[int] = None,
    T: Optional[Sequence[int]] = None,
    A: Optional[Sequence[int]] = None,
    eps: float = DEFAULT_EPS,
    meter: Optional[SpaceMeter] = None,
) -> PathResult:
    """A shortest ``s -> t`` path, vertices listed from ``t`` back to its start."""
    _check_eps(eps)
    _check_vertex(g, s, t)
    engine = _Engine(g, g.weight, n_top or g.n, eps, meter or NullMeter())
    seeds = {v: val * engine.scale for v, val in _seed_map(s, T, A).items()}
    verts = list(range(g.n))
    try:
        arcs = engine.report(verts, set(verts), seeds, t, 0)
    except _CycleFound as found:
        raise _raise_cycle(engine, found.arcs) from None
    start = g.src[arcs[0]] if arcs else t
    vertices = [start] + [g.dst[a] for a in arcs]
    weight = sum(g.weight[a] for a in arcs) + _seed_map(s, T, A)[start]
    return PathResult(tuple(reversed(vertices)), tuple(reversed(arcs)), weight)


def detect_negative_cycle(
    g: PlanarGraph, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None
) -> Optional[NegativeCycle]:
    """A negative-weight simple cycle of ``g``, or ``None`` if there is none.

    Every vertex is seeded with 0, so any negative cycle keeps improving the
    tables past the round bound.
    """
    _check_eps(eps)
    engine = _Engine(g, g.weight, g.n, eps, meter or NullMeter())
    verts = list(range(g.n))
    try:
        engine.dist(verts, set(verts), {}, True, [], False, 0)
    except _CycleFound as found:
        return _make_cycle(g, found.arcs)
    return None


def planar_reach(
    g: PlanarGraph, s: int, t: int, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None
) -> bool:
    """Directed ``s -> t`` reachability via unit-weight distances."""
    _check_eps(eps)
    _check_vertex(g, s, t)
    engine = _Engine(g, [1] * g.m, g.n, eps, meter or NullMeter())
    return _run_dist(engine, s, t, {s: 0}) != INF
