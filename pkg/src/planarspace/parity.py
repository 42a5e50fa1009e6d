"""Odd cycles and even paths.

A directed graph has an odd closed walk iff one of its strong components
is non-bipartite as an undirected graph, so odd-cycle detection reduces to
strong components plus an undirected 2-coloring.  The 2-coloring recurses
over separator families; only the colors of separator vertices survive
between calls.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import GraphError, PlanarGraph
from .meter import NullMeter, SpaceMeter, bit_cells
from .redblue import is_dag
from .separator import build_separator_family, components
from .shortest_path import DEFAULT_EPS, NoPathError, planar_reach, planar_short_path

RED_MARK = 0
BLUE_MARK = 1


@dataclass
class TwoColoring:
    """Stored colors of separator vertices (``None`` = unset) and the conflict flag."""

    colors: dict[int, int] = field(default_factory=dict)
    conflict: bool = False

    def get(self, v: int) -> Optional[int]:
        return self.colors.get(v)

    def assign(self, v: int, color: int) -> bool:
        """Store ``color`` for ``v``; returns False (and raises the flag) on a clash."""
        old = self.colors.get(v)
        if old is not None and old != color:
            self.conflict = True
            return False
        self.colors[v] = color
        return True


def _kosaraju(g: PlanarGraph, vertices: Optional[Iterable[int]] = None) -> list[list[int]]:
    pool = set(range(g.n)) if vertices is None else set(vertices)
    order: list[int] = []
    seen: set[int] = set()
    for root in sorted(pool):
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, iter(g.out_arcs(root)))]
        while stack:
            u, it = stack[-1]
            for a in it:
                v = g.dst[a]
                if v in pool and v not in seen:
                    seen.add(v)
                    stack.append((v, iter(g.out_arcs(v))))
                    break
            else:
                stack.pop()
                order.append(u)
    comp_of: dict[int, int] = {}
    comps: list[list[int]] = []
    for root in reversed(order):
        if root in comp_of:
            continue
        comp_of[root] = len(comps)
        comp = [root]
        stack2 = [root]
        while stack2:
            u = stack2.pop()
            for a in g.in_arcs(u):
                v = g.src[a]
                if v in pool and v not in comp_of:
                    comp_of[v] = len(comps)
                    comp.append(v)
                    stack2.append(v)
        comps.append(sorted(comp))
    comps.sort()
    return comps


def strong_components(
    g: PlanarGraph, eps: float = DEFAULT_EPS, mode: str = "fast"
) -> list[list[int]]:
    """Strong components, each sorted, ordered by least vertex.

    ``mode="faithful"`` groups ``x`` and ``y`` exactly when separator-based
    reachability holds both ways (quadratically many queries); ``"fast"``
    uses a linear-time search and yields the same partition.
    """
    if mode == "fast":
        return _kosaraju(g)
    if mode != "faithful":
        raise ValueError(f"unknown mode {mode!r}")
    placed: set[int] = set()
    comps = []
    for v in range(g.n):
        if v in placed:
            continue
        comp = [v] + [
            u for u in range(v + 1, g.n)
            if u not in placed and planar_reach(g, v, u, eps) and planar_reach(g, u, v, eps)
        ]
        placed.update(comp)
        comps.append(comp)
    return comps


class _Coloring:
    def __init__(self, g: PlanarGraph, n_top: int, eps: float, meter: SpaceMeter,
                 coloring: TwoColoring) -> None:
        self.g = g
        self.base_size = math.sqrt(max(1, n_top))
        self.max_depth = max(1, math.ceil(math.log(2) / -math.log(1 - eps)))
        self.eps = eps
        self.meter = meter
        self.store = coloring
        self.plans: dict = {}

    def plan(self, verts, vset, terminals):
        key = (frozenset(vset), frozenset(terminals))
        if key not in self.plans:
            g = self.g
            r = max(2, math.ceil(len(verts) ** (1 - self.eps)))
            sep = set(build_separator_family(g, r, verts).members) | set(terminals)
            comps = []
            for comp in components(g, vset - sep):
                bd = sorted({x for u in comp for _, x in g.incident(u) if x in sep})
                region = sorted(set(comp) | set(bd))
                comps.append((bd, region, set(region)))
            self.plans[key] = (sorted(sep), sep, comps)
        return self.plans[key]

    def base(self, verts, vset, persist) -> bool:
        """BFS 2-coloring from stored colors, then one red seed per uncolored piece."""
        g = self.g
        cells = 2 * len(verts) + bit_cells(len(verts))
        self.meter.alloc(cells)
        try:
            color: dict[int, int] = {}
            for v in verts:
                c = self.store.get(v)
                if c is not None:
                    color[v] = c
            explored: set[int] = set()
            for root in sorted(color) + verts:
                if root in explored:
                    continue
                if root not in color:
                    color[root] = RED_MARK
                explored.add(root)
                queue = deque([root])
                while queue:
                    u = queue.popleft()
                    for _, x in g.incident(u):
                        if x not in vset:
                            continue
                        want = 1 - color[u]
                        if x not in color:
                            color[x] = want
                        elif color[x] != want:
                            self.store.conflict = True
                            return True
                        if x not in explored:
                            explored.add(x)
                            queue.append(x)
            for v in persist:
                if not self.store.assign(v, color[v]):
                    return True
            return False
        finally:
            self.meter.release(cells)

    def recurse(self, verts, vset, persist, depth) -> bool:
        if len(verts) <= self.base_size or depth >= self.max_depth:
            return self.base(verts, vset, persist)
        colored_terms = {v for v in verts if self.store.get(v) is not None}
        sep, sep_set, comps = self.plan(verts, vset, colored_terms | set(persist))
        cells = 2 * len(sep) + len(comps)
        self.meter.alloc(cells)
        added: list[int] = []
        try:
            pending = list(range(len(comps)))
            while True:
                if self._spread_direct(sep, sep_set, added):
                    return True
                ready = [i for i in pending if any(self.store.get(b) is not None for b in comps[i][0])]
                if ready:
                    i = ready[0]
                    pending.remove(i)
                    bd, region, rset = comps[i]
                    newly = [b for b in bd if self.store.get(b) is None]
                    added.extend(newly)
                    with self.meter.hold(1 + len(bd)):
                        if self.recurse(region, rset, bd, depth + 1):
                            return True
                    continue
                fresh = [v for v in sep if self.store.get(v) is None]
                if fresh:
                    self.store.assign(fresh[0], RED_MARK)
                    added.append(fresh[0])
                    continue
                if pending:
                    i = pending.pop(0)
                    bd, region, rset = comps[i]
                    if self.recurse(region, rset, bd, depth + 1):
                        return True
                    continue
                return False
        finally:
            # only the caller's separator colors persist upwards
            keep = set(persist)
            for v in added:
                if v not in keep:
                    self.store.colors.pop(v, None)
            self.meter.release(cells)

    def _spread_direct(self, sep, sep_set, added) -> bool:
        g = self.g
        queue = deque(v for v in sep if self.store.get(v) is not None)
        while queue:
            u = queue.popleft()
            cu = self.store.get(u)
            for _, x in g.incident(u):
                if x not in sep_set:
                    continue
                cx = self.store.get(x)
                if cx is None:
                    self.store.assign(x, 1 - cu)
                    added.append(x)
                    queue.append(x)
                elif cx == cu:
                    self.store.conflict = True
                    return True
        return False


def undirected_odd_cycle(
    g: PlanarGraph,
    s: Optional[int] = None,
    n_top: Optional[int] = None,
    coloring: Optional[TwoColoring] = None,
    eps: float = DEFAULT_EPS,
    vertices: Optional[Iterable[int]] = None,
    meter: Optional[SpaceMeter] = None,
) -> bool:
    """Whether the underlying undirected graph of ``G[vertices]`` has an odd cycle.

    ``s`` (default: the least vertex) starts red; loops count as odd cycles.
    """
    if not 0 < eps < 0.5:
        raise ValueError(f"eps must lie strictly between 0 and 1/2, got {eps}")
    verts = sorted(set(range(g.n)) if vertices is None else set(vertices))
    if not verts:
        return False
    vset = set(verts)
    if any(g.src[a] == g.dst[a] and g.src[a] in vset for a in range(g.m)):
        return True
    store = coloring if coloring is not None else TwoColoring()
    root = verts[0] if s is None else s
    if root not in vset:
        raise GraphError(f"start vertex {root} is not in the vertex set")
    if store.get(root) is None:
        store.assign(root, RED_MARK)
    engine = _Coloring(g, n_top or len(verts), eps, meter or NullMeter(), store)
    return engine.recurse(verts, vset, [root], 0)


def directed_odd_cycle(
    g: PlanarGraph, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None,
    scc_mode: str = "fast",
) -> bool:
    """Whether some closed directed walk has odd length."""
    for comp in strong_components(g, eps, scc_mode):
        if len(comp) == 1:
            v = comp[0]
            if any(g.dst[a] == v for a in g.out_arcs(v)):
                return True
            continue
        if undirected_odd_cycle(g, comp[0], eps=eps, vertices=comp, meter=meter):
            return True
    return False


def even_path(
    g: PlanarGraph, s: int, t: int, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None
) -> bool:
    """Whether the DAG ``g`` has an ``s -> t`` path with an even number of arcs.

    Take a shortest path ``P``; if it is odd, reverse its arcs and ask
    whether the result has an odd cycle.
    """
    if not is_dag(g):
        raise GraphError("graph has a directed cycle; a DAG is required")
    if s == t:
        return True
    unit = g.with_weights([1] * g.m)
    try:
        path = planar_short_path(unit, s, t, eps=eps, meter=meter)
    except NoPathError:
        return False
    if len(path.arcs) % 2 == 0:
        return True
    return directed_odd_cycle(g.reversed(path.arcs), eps, meter)
