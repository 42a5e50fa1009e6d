"""Deterministic random planar instances.

Every generator draws from ``random.Random(seed)`` only, so the same spec
always yields the same graph.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from typing import Optional, Union

from .graph import BLUE, PART_A, PART_B, RED, Arc, DrawnGraph, PlanarGraph

KINDS = ("grid", "grid-dag", "triangulation-thinned", "drawn-dag")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    seed: int = 0
    wmin: int = 1
    wmax: int = 1
    colors: float = 0.0
    bipartite: bool = False
    dag: bool = False
    keep: float = 0.75
    both_ways: float = 0.3

    def with_(self, **changes) -> "GeneratorSpec":
        return replace(self, **changes)


def _rotation_from_neighbors(
    n: int, nbr_order: list[list[int]], edge_arcs: dict[tuple[int, int], list[Arc]]
) -> list[list[int]]:
    """Turn an undirected neighbour rotation into arc-end rotations.

    Parallel arcs of one edge are listed in reverse at the smaller endpoint
    and in order at the larger one, so consecutive parallels bound 2-gons.
    """
    rotation: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for w in nbr_order[v]:
            key = (min(v, w), max(v, w))
            arcs = edge_arcs.get(key)
            if not arcs:
                continue
            seq = list(reversed(arcs)) if v == key[0] else arcs
            for a in seq:
                rotation[v].append(2 * a.id if a.src == v else 2 * a.id + 1)
    return rotation


def _assemble(
    n: int,
    nbr_order: list[list[int]],
    edges: list[tuple[int, int]],
    rng: random.Random,
    spec: GeneratorSpec,
    part: Optional[list[int]] = None,
    direction=None,
) -> PlanarGraph:
    arcs: list[Arc] = []
    edge_arcs: dict[tuple[int, int], list[Arc]] = {}

    def color() -> Optional[int]:
        if spec.colors > 0 and rng.random() < spec.colors:
            return rng.choice((RED, BLUE))
        return None

    def add(u: int, v: int) -> None:
        arc = Arc(len(arcs), u, v, rng.randint(spec.wmin, spec.wmax), color())
        arcs.append(arc)
        edge_arcs.setdefault((min(u, v), max(u, v)), []).append(arc)

    for u, v in edges:
        for a, b in direction(u, v):
            add(a, b)
    rotation = _rotation_from_neighbors(n, nbr_order, edge_arcs)
    bound = max([max(1, n ** 3), abs(spec.wmin), abs(spec.wmax)])
    return PlanarGraph(n, arcs, rotation, part, bound)


def grid(spec: GeneratorSpec) -> PlanarGraph:
    """k x k grid, k = round(sqrt(n)); vertex ``r*k + c``.

    ``grid`` is bidirected, ``grid-dag`` (or ``dag``) only points right and down; with
    ``bipartite`` the checkerboard labels are attached and edges are thinned.
    """
    rng = random.Random(spec.seed)
    k = max(1, round(math.sqrt(spec.n)))
    n = k * k
    nbr_order: list[list[int]] = [[] for _ in range(n)]
    for r in range(k):
        for c in range(k):
            v = r * k + c
            # counterclockwise: east, north, west, south
            for dr, dc in ((0, 1), (-1, 0), (0, -1), (1, 0)):
                rr, cc = r + dr, c + dc
                if 0 <= rr < k and 0 <= cc < k:
                    nbr_order[v].append(rr * k + cc)
    edges = []
    for r in range(k):
        for c in range(k):
            v = r * k + c
            if c + 1 < k:
                edges.append((v, v + 1))
            if r + 1 < k:
                edges.append((v, v + k))
    part = None
    if spec.bipartite:
        part = [PART_A if (v // k + v % k) % 2 == 0 else PART_B for v in range(n)]
        edges = [e for e in edges if rng.random() < spec.keep]

        def direction(u, v):
            return [(u, v) if part[u] == PART_A else (v, u)]
    elif spec.kind == "grid-dag" or spec.dag:
        def direction(u, v):
            return [(u, v)]
    else:
        def direction(u, v):
            return [(u, v), (v, u)]
    return _assemble(n, nbr_order, edges, rng, spec, part, direction)


def _triangulation(n: int, rng: random.Random) -> list[list[int]]:
    """Stacked triangulation: repeatedly drop a vertex into a random face."""
    rot: list[list[int]] = [[1, 2], [2, 0], [0, 1]][: max(n, 1)]
    if n < 3:
        return [[w for w in range(n) if w != v] for v in range(n)]
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        # walk a->b->c means succ_b(a) = c; slot v in after a at b, after b at c, after c at a
        for x, after in ((b, a), (c, b), (a, c)):
            rx = rot[x]
            rx.insert(rx.index(after) + 1, v)
        rot.append([a, c, b])
        faces[i] = (a, b, v)
        faces.append((b, c, v))
        faces.append((c, a, v))
    return rot


def triangulation_thinned(spec: GeneratorSpec) -> PlanarGraph:
    rng = random.Random(spec.seed)
    n = max(1, spec.n)
    rot = _triangulation(n, rng)
    part = None
    if spec.bipartite:
        labels = [PART_A] * (n // 2) + [PART_B] * (n - n // 2)
        rng.shuffle(labels)
        part = labels
    edges = []
    for u in range(n):
        for w in rot[u]:
            if u < w and (part is None or part[u] != part[w]) and rng.random() < spec.keep:
                edges.append((u, w))
    kept = set(edges)
    nbr_order = [[w for w in rot[u] if (min(u, w), max(u, w)) in kept] for u in range(n)]
    rank = list(range(n))
    rng.shuffle(rank)
    if part is not None:
        def direction(u, v):
            return [(u, v) if part[u] == PART_A else (v, u)]
    elif spec.dag:
        def direction(u, v):
            return [(u, v) if rank[u] < rank[v] else (v, u)]
    else:
        def direction(u, v):
            roll = rng.random()
            if roll < spec.both_ways:
                return [(u, v), (v, u)]
            return [(u, v)] if roll < (1 + spec.both_ways) / 2 else [(v, u)]
    return _assemble(n, nbr_order, edges, rng, spec, part, direction)


def _segments_cross(p, q, r, s) -> Optional[tuple[float, float]]:
    """Parameters along pq and rs of a proper crossing, or None."""
    d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    if d == 0:
        return None
    t = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / d
    u = ((r[0] - p[0]) * (q[1] - p[1]) - (r[1] - p[1]) * (q[0] - p[0])) / d
    eps = 1e-12
    if eps < t < 1 - eps and eps < u < 1 - eps:
        return t, u
    return None


def drawn_dag(spec: GeneratorSpec, max_crossings: Optional[int] = None) -> DrawnGraph:
    """Straight-line upward drawing of a random DAG, crossings computed exactly.

    Arcs always point to a lower point, so the planarisation of the drawing is
    acyclic as well.
    """
    rng = random.Random(spec.seed)
    n = max(2, spec.n)
    limit = n if max_crossings is None else max_crossings
    pts = [(rng.random(), rng.random()) for _ in range(n)]
    cand = []
    for u in range(n):
        for v in range(u + 1, n):
            d = math.dist(pts[u], pts[v])
            cand.append((d, u, v))
    cand.sort()
    pairs = []
    target = int(1.6 * n)
    for d, u, v in cand:
        if len(pairs) >= target:
            break
        if rng.random() < 0.6:
            pairs.append((u, v) if pts[u][1] > pts[v][1] else (v, u))

    def crossings_of(ps):
        found = []
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                a, b = ps[i], ps[j]
                if len({a[0], a[1], b[0], b[1]}) < 4:
                    continue
                hit = _segments_cross(pts[a[0]], pts[a[1]], pts[b[0]], pts[b[1]])
                if hit:
                    found.append((i, j, hit[0], hit[1]))
        return found

    found = crossings_of(pairs)
    while len(found) > limit:
        load = [0] * len(pairs)
        for i, j, _, _ in found:
            load[i] += 1
            load[j] += 1
        worst = max(range(len(pairs)), key=lambda a: (load[a], -a))
        pairs.pop(worst)
        found = crossings_of(pairs)
    arcs = [
        Arc(i, u, v, rng.randint(spec.wmin, spec.wmax)) for i, (u, v) in enumerate(pairs)
    ]
    crossings = [(i, j) for i, j, _, _ in found]
    along: list[list[tuple[float, int]]] = [[] for _ in pairs]
    for c, (i, j, ti, tj) in enumerate(found):
        along[i].append((ti, c))
        along[j].append((tj, c))
    order = [[c for _, c in sorted(seq)] for seq in along]
    return DrawnGraph.build(n, arcs, crossings, order)


def generate(spec: GeneratorSpec) -> Union[PlanarGraph, DrawnGraph]:
    if spec.kind in ("grid", "grid-dag"):
        return grid(spec)
    if spec.kind == "triangulation-thinned":
        return triangulation_thinned(spec)
    if spec.kind == "drawn-dag":
        return drawn_dag(spec)
    raise ValueError(f"unknown generator kind {spec.kind!r}; expected one of {KINDS}")
