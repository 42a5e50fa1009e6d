"""Alternating Red-Blue paths in planar DAGs.

Search states are pairs ``(vertex, wanted color)``: the color the next arc
must have.  Arriving at ``t`` over an arc of color ``final`` means reaching
state ``(t, 1 - final)``.  Small regions are searched directly with one
visited set per color; larger ones run the same search over a separator
family, asking each bordering component which separator states it connects.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Optional

from .graph import BLUE, RED, GraphError, PlanarGraph
from .meter import NullMeter, SpaceMeter, bit_cells
from .separator import SeparatorFamily, build_separator_family, components

DEFAULT_EPS = 0.25

State = tuple[int, int]


def check_colored(g: PlanarGraph) -> None:
    for a in range(g.m):
        if g.color[a] not in (RED, BLUE):
            raise GraphError(f"arc {a} has no Red/Blue color")


def is_dag(g: PlanarGraph) -> bool:
    indeg = [0] * g.n
    for v in g.dst:
        indeg[v] += 1
    ready = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while ready:
        u = ready.pop()
        seen += 1
        for a in g.out_arcs(u):
            v = g.dst[a]
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    return seen == g.n


def _check_color_arg(*colors: int) -> None:
    for c in colors:
        if c not in (RED, BLUE):
            raise ValueError(f"color must be 0 (Red) or 1 (Blue), got {c!r}")


class _Search:
    def __init__(self, g: PlanarGraph, n_top: int, eps: float, meter: SpaceMeter,
                 on_expand: Optional[Callable[[int, int], None]] = None) -> None:
        self.g = g
        self.n_top = max(1, n_top)
        self.base_size = math.sqrt(self.n_top)
        self.max_depth = max(1, math.ceil(math.log(2) / -math.log(1 - eps)))
        self.eps = eps
        self.meter = meter
        self.on_expand = on_expand
        self.plans: dict = {}

    def is_base(self, size: int, depth: int) -> bool:
        return size <= self.base_size or depth >= self.max_depth

    def plan(self, verts, vset, terminals, family: Optional[Iterable[int]] = None):
        key = (frozenset(vset), frozenset(terminals))
        if family is None and key in self.plans:
            return self.plans[key]
        g = self.g
        if family is None:
            r = max(2, math.ceil(len(verts) ** (1 - self.eps)))
            family = build_separator_family(g, r, verts).members
        sep_set = set(family) | set(terminals)
        comps = []
        touching: dict[int, list[int]] = {}
        for comp in components(g, vset - sep_set):
            bd = sorted({x for u in comp for _, x in g.incident(u) if x in sep_set})
            region = sorted(set(comp) | set(bd))
            for b in bd:
                touching.setdefault(b, []).append(len(comps))
            comps.append((bd, region, set(region)))
        result = (sorted(sep_set), sep_set, comps, touching)
        self.plans[key] = result
        return result

    def base(self, verts, vset, starts: Iterable[State], targets) -> set[State]:
        """Direct search; ``N[c]`` marks vertices already entered wanting color ``c``."""
        g = self.g
        cells = 2 * bit_cells(len(verts)) + 2 * len(verts)
        self.meter.alloc(cells)
        try:
            N = (set(), set())
            stack = []
            for v, c in starts:
                if v not in N[c]:
                    N[c].add(v)
                    stack.append((v, c))
            while stack:
                u, c = stack.pop()
                if self.on_expand is not None:
                    self.on_expand(u, c)
                for a in g.out_arcs(u):
                    v = g.dst[a]
                    if g.color[a] == c and v in vset and v not in N[1 - c]:
                        N[1 - c].add(v)
                        stack.append((v, 1 - c))
            return {(t, c) for t in targets for c in (RED, BLUE) if t in N[c]}
        finally:
            self.meter.release(cells)

    def overlay(self, plan, starts: Iterable[State], targets, depth) -> set[State]:
        """Search over separator states; ``R[c]`` plays the role of ``N[c]``."""
        g = self.g
        sep, sep_set, comps, touching = plan
        cells = 2 * bit_cells(len(sep)) + 3 * len(sep) + len(comps)
        self.meter.alloc(cells)
        try:
            R = (set(), set())
            stack = []
            for v, c in starts:
                if v not in R[c]:
                    R[c].add(v)
                    stack.append((v, c))
            while stack:
                u, c = stack.pop()
                reached: list[State] = []
                for a in g.out_arcs(u):
                    v = g.dst[a]
                    if g.color[a] == c and v in sep_set:
                        reached.append((v, 1 - c))
                for i in touching.get(u, ()):
                    bd, region, rset = comps[i]
                    with self.meter.hold(1 + len(bd)):
                        reached.extend(self.frame(region, rset, [(u, c)], bd, depth + 1))
                for v, c2 in reached:
                    if v not in R[c2]:
                        R[c2].add(v)
                        stack.append((v, c2))
            return {(t, c) for t in targets for c in (RED, BLUE) if t in R[c]}
        finally:
            self.meter.release(cells)

    def frame(self, verts, vset, starts, targets, depth) -> set[State]:
        if self.is_base(len(verts), depth):
            return self.base(verts, vset, starts, targets)
        plan = self.plan(verts, vset, {v for v, _ in starts} | set(targets))
        return self.overlay(plan, starts, targets, depth)


def _prepare(g: PlanarGraph, s: int, t: int, init: int, final: int, eps: float) -> None:
    if not 0 < eps < 0.5:
        raise ValueError(f"eps must lie strictly between 0 and 1/2, got {eps}")
    _check_color_arg(init, final)
    for v in (s, t):
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    check_colored(g)


def _starts(g: PlanarGraph, s: int, t: int, init: int, final: int) -> list[State]:
    # when s == t the empty path would already sit in the accepting state, so step once
    if s == t and init == 1 - final:
        return [(g.dst[a], 1 - init) for a in g.out_arcs(s) if g.color[a] == init]
    return [(s, init)]


def colored_dfs(
    g: PlanarGraph,
    s: int,
    t: int,
    init: int = RED,
    final: int = BLUE,
    meter: Optional[SpaceMeter] = None,
    on_expand: Optional[Callable[[int, int], None]] = None,
) -> bool:
    """Alternating ``s -> t`` path with first arc ``init`` and last arc ``final``, searched flat.

    ``on_expand(v, color)`` is called once per expanded state.
    """
    _prepare(g, s, t, init, final, DEFAULT_EPS)
    search = _Search(g, g.n, DEFAULT_EPS, meter or NullMeter(), on_expand)
    verts = list(range(g.n))
    starts = _starts(g, s, t, init, final)
    return (t, 1 - final) in search.base(verts, set(verts), starts, [t])


def modified_colored_dfs(
    g: PlanarGraph,
    s: int,
    t: int,
    init: int = RED,
    final: int = BLUE,
    eps: float = DEFAULT_EPS,
    family: Optional[SeparatorFamily] = None,
    n_top: Optional[int] = None,
    meter: Optional[SpaceMeter] = None,
) -> bool:
    """One overlay level over ``family`` (built with ``r = n^(1-eps)`` if omitted).

    Overlay arcs between separator states are answered by recursive
    searches inside the bordering components.
    """
    _prepare(g, s, t, init, final, eps)
    search = _Search(g, n_top or g.n, eps, meter or NullMeter())
    verts = list(range(g.n))
    members = None if family is None else family.members
    starts = _starts(g, s, t, init, final)
    plan = search.plan(verts, set(verts), {t} | {v for v, _ in starts}, members)
    return (t, 1 - final) in search.overlay(plan, starts, [t], 0)


def red_blue_path(
    g: PlanarGraph,
    s: int,
    t: int,
    n_top: Optional[int] = None,
    init: int = RED,
    final: int = BLUE,
    eps: float = DEFAULT_EPS,
    meter: Optional[SpaceMeter] = None,
    check_dag: bool = True,
) -> bool:
    """Whether an alternating ``s -> t`` path starts with ``init`` and ends with ``final``."""
    _prepare(g, s, t, init, final, eps)
    if check_dag and not is_dag(g):
        raise GraphError("graph has a directed cycle; a DAG is required")
    search = _Search(g, n_top or g.n, eps, meter or NullMeter())
    verts = list(range(g.n))
    starts = _starts(g, s, t, init, final)
    return (t, 1 - final) in search.frame(verts, set(verts), starts, [t], 0)
