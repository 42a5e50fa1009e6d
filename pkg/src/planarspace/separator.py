"""Balanced vertex separators and r-separator families for embedded planar graphs.

The split step is a fundamental-cycle separator: grow a BFS tree, and for
every non-tree edge count the vertices strictly inside and outside its
fundamental cycle using face/degree sums over the interdigitating cotree
(inside a disk bounded by a cycle of length L with F faces and degree sum D,
there are ``1 + (D - L)/2 - F`` vertices).  The best cycle is kept when
its larger side is at most 2/3 of the component; otherwise the median BFS
level is used, which always leaves parts of at most half the component.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import PlanarGraph

BALANCE = 8 / 9
TARGET_BALANCE = 2 / 3


@dataclass(frozen=True)
class SeparatorFamily:
    members: tuple[int, ...]
    component_bound: int
    graph_n: int

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in set(self.members)


def components(g: PlanarGraph, allowed: set[int]) -> list[list[int]]:
    """Undirected components of ``G[allowed]``, each sorted, ordered by least vertex."""
    seen: set[int] = set()
    out = []
    for root in sorted(allowed):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for _, w in g.incident(u):
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        out.append(comp)
    return out


def max_component_after(g: PlanarGraph, removed: Iterable[int], vertices: Optional[Iterable[int]] = None) -> int:
    """Size of the largest component of ``G[vertices] - removed`` (0 if empty)."""
    pool = set(range(g.n)) if vertices is None else set(vertices)
    rest = pool - set(removed)
    return max((len(c) for c in components(g, rest)), default=0)


def _bfs(g: PlanarGraph, comp_set: set[int], root: int):
    depth = {root: 0}
    parent_arc = {root: -1}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for a, w in g.incident(u):
            if w in comp_set and w not in depth:
                depth[w] = depth[u] + 1
                parent_arc[w] = a
                order.append(w)
                queue.append(w)
    return depth, parent_arc, order


def _level_separator(depth: dict[int, int], order: list[int]) -> list[int]:
    size = len(order)
    counts: dict[int, int] = {}
    for v in order:
        counts[depth[v]] = counts.get(depth[v], 0) + 1
    running = 0
    chosen = 0
    for level in sorted(counts):
        running += counts[level]
        if 2 * running >= size:
            chosen = level
            break
    return sorted(v for v in order if depth[v] == chosen)


def _cycle_vertices(g: PlanarGraph, a: int, depth, parent_arc) -> list[int]:
    u, v = g.src[a], g.dst[a]
    left, right = [u], [v]
    while u != v:
        if depth[u] >= depth[v]:
            pa = parent_arc[u]
            u = g.src[pa] if g.dst[pa] == u else g.dst[pa]
            left.append(u)
        else:
            pa = parent_arc[v]
            v = g.src[pa] if g.dst[pa] == v else g.dst[pa]
            right.append(v)
    right.pop()
    return left + right


def _best_cycle(g: PlanarGraph, comp: list[int], comp_set: set[int], depth, parent_arc):
    """Non-tree arc minimising the larger side of its fundamental cycle.

    Returns ``(larger_side, arc)`` or ``None`` when the component is a tree
    or its embedding does not yield a cotree.
    """
    tree = {pa for pa in parent_arc.values() if pa >= 0}
    nontree = []
    rot_next: dict[int, int] = {}
    for v in comp:
        rot = [e for e in g.rotation[v] if g.end_vertex(e ^ 1) in comp_set]
        k = len(rot)
        for i, e in enumerate(rot):
            rot_next[e] = rot[(i + 1) % k]
            if not e & 1 and (e >> 1) not in tree:
                nontree.append(e >> 1)
    if not nontree:
        return None
    face_of: dict[int, int] = {}
    face_deg: list[int] = []
    for start in sorted(rot_next):
        if start in face_of:
            continue
        f = len(face_deg)
        e = start
        deg = 0
        while e not in face_of:
            face_of[e] = f
            deg += 1
            e = rot_next[e ^ 1]
        face_deg.append(deg)
    nf = len(face_deg)
    if nf != len(nontree) + 1:
        return None
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nf)]
    for a in nontree:
        f1, f2 = face_of[2 * a], face_of[2 * a + 1]
        adj[f1].append((a, f2))
        adj[f2].append((a, f1))
    parent_edge = [-2] * nf
    parent_edge[0] = -1
    order = [0]
    for f in order:
        for a, h in adj[f]:
            if parent_edge[h] == -2:
                parent_edge[h] = a
                order.append(h)
    if len(order) != nf:
        return None
    sub_f = [1] * nf
    sub_d = face_deg[:]
    child_of_arc: dict[int, int] = {}
    for f in reversed(order):
        a = parent_edge[f]
        if a < 0:
            continue
        child_of_arc[a] = f
        f1, f2 = face_of[2 * a], face_of[2 * a + 1]
        p = f2 if f1 == f else f1
        sub_f[p] += sub_f[f]
        sub_d[p] += sub_d[f]
    size = len(comp)
    best = None
    for a in sorted(nontree):
        child = child_of_arc.get(a)
        if child is None:
            continue
        cyc = len(_cycle_vertices(g, a, depth, parent_arc))
        twice_inner_edges = sub_d[child] - cyc
        if twice_inner_edges < 0 or twice_inner_edges % 2:
            continue
        inside = 1 + twice_inner_edges // 2 - sub_f[child]
        outside = size - cyc - inside
        if inside < 0 or outside < 0:
            continue
        key = (max(inside, outside), a)
        if best is None or key < best:
            best = key
    return best


def split_component(g: PlanarGraph, comp: list[int]) -> list[int]:
    """Separator of one connected vertex set (sorted list); never empty for |comp| >= 2."""
    if len(comp) < 2:
        return []
    comp_set = set(comp)
    depth, parent_arc, order = _bfs(g, comp_set, comp[0])
    best = _best_cycle(g, comp, comp_set, depth, parent_arc)
    if best is not None and best[0] <= TARGET_BALANCE * len(comp):
        sep = sorted(set(_cycle_vertices(g, best[1], depth, parent_arc)))
        if max_component_after(g, sep, comp) <= BALANCE * len(comp):
            return sep
    return _level_separator(depth, order)


def build_separator(g: PlanarGraph, vertices: Optional[Iterable[int]] = None) -> list[int]:
    """A vertex set whose removal leaves parts of at most 8/9 of the vertices."""
    pool = set(range(g.n)) if vertices is None else set(vertices)
    comps = components(g, pool)
    if not comps:
        return []
    largest = max(comps, key=len)
    if len(largest) <= BALANCE * len(pool):
        return []
    return split_component(g, largest)


def build_separator_family(
    g: PlanarGraph, r: int, vertices: Optional[Iterable[int]] = None
) -> SeparatorFamily:
    """Vertices whose removal leaves components of at most ``r`` vertices."""
    if r < 1:
        raise ValueError("component bound r must be at least 1")
    pool = set(range(g.n)) if vertices is None else set(vertices)
    if r == 1:
        members = {v for c in components(g, pool) if len(c) > 1 for v in c}
        return SeparatorFamily(tuple(sorted(members)), r, g.n)
    family: set[int] = set()
    stack = [c for c in components(g, pool) if len(c) > r]
    while stack:
        comp = stack.pop()
        sep = split_component(g, comp)
        family.update(sep)
        rest = set(comp).difference(sep)
        stack.extend(c for c in components(g, rest) if len(c) > r)
    return SeparatorFamily(tuple(sorted(family)), r, g.n)
