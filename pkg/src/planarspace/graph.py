"""Embedded planar multigraphs: arcs, rotation systems, faces and directed duals.

Arc-ends are plain integers: arc ``a`` owns end ``2*a`` at its source and end
``2*a + 1`` at its destination, so ``end ^ 1`` is the opposite end and
``end >> 1`` the arc.  A rotation lists, for each vertex, its incident ends in
counterclockwise order.  Mirrored (clockwise) inputs are equally valid
embeddings; nothing here depends on the handedness.

Face walks use one rule everywhere: the successor of end ``x`` is the
rotation-successor of ``x ^ 1`` at the vertex where ``x ^ 1`` sits.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

RED = 0
BLUE = 1
PART_A = 0
PART_B = 1

COLOR_CHARS = {RED: "R", BLUE: "B", None: "-"}
PART_CHARS = {PART_A: "A", PART_B: "B"}


class GraphError(ValueError):
    """Malformed graph data or a violated structural precondition."""


class EmbeddingError(GraphError):
    """The rotation system does not describe a usable embedding."""


def src_end(arc: int) -> int:
    return 2 * arc


def dst_end(arc: int) -> int:
    return 2 * arc + 1


def twin(end: int) -> int:
    return end ^ 1


def arc_of(end: int) -> int:
    return end >> 1


@dataclass(frozen=True)
class Arc:
    id: int
    src: int
    dst: int
    weight: int = 1
    color: Optional[int] = None


class PlanarGraph:
    """Directed multigraph with a combinatorial embedding.

    Instances are treated as immutable; every transformation returns a new
    graph.  ``part`` optionally labels vertices ``PART_A``/``PART_B``.
    """

    __slots__ = (
        "n", "src", "dst", "weight", "color", "rotation", "part", "weight_bound",
        "_out", "_in", "_inc",
    )

    def __init__(
        self,
        n: int,
        arcs: Iterable[Union[Arc, Sequence]],
        rotation: Sequence[Sequence[int]],
        part: Optional[Sequence[int]] = None,
        weight_bound: Optional[int] = None,
    ) -> None:
        if n < 1:
            raise GraphError("vertex count must be positive")
        src, dst, weight, color = [], [], [], []
        for i, arc in enumerate(arcs):
            if not isinstance(arc, Arc):
                arc = Arc(i, *arc)
            if arc.id != i:
                raise GraphError(f"arc ids must be dense and ordered, got {arc.id} at {i}")
            for v in (arc.src, arc.dst):
                if not 0 <= v < n:
                    raise GraphError(f"arc {i}: vertex {v} out of range")
            if arc.color not in (None, RED, BLUE):
                raise GraphError(f"arc {i}: bad color {arc.color!r}")
            src.append(arc.src)
            dst.append(arc.dst)
            weight.append(int(arc.weight))
            color.append(arc.color)
        if len(rotation) != n:
            raise GraphError("rotation must have one entry per vertex")
        if part is not None:
            if len(part) != n or any(p not in (PART_A, PART_B) for p in part):
                raise GraphError("part labels must be A/B for every vertex")
            part = tuple(part)
        self.n = n
        self.src = tuple(src)
        self.dst = tuple(dst)
        self.weight = tuple(weight)
        self.color = tuple(color)
        self.rotation = tuple(tuple(r) for r in rotation)
        self.part = part
        self.weight_bound = weight_bound if weight_bound is not None else max(1, n ** 3)
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for a in range(len(src)):
            u, v = src[a], dst[a]
            out[u].append(a)
            inn[v].append(a)
            inc[u].append((a, v))
            if u != v:
                inc[v].append((a, u))
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inn)
        self._inc = tuple(tuple(x) for x in inc)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_arc_order(
        cls,
        n: int,
        arcs: Iterable[Union[Arc, Sequence]],
        order: Optional[Sequence[Sequence[int]]] = None,
        **kwargs,
    ) -> "PlanarGraph":
        """Build a graph whose rotation at each vertex follows ``order``.

        ``order[v]`` lists arc ids around ``v``; a loop contributes both of
        its ends in place.  Without ``order`` the arc-id order is used, which
        is a valid embedding for trees, cycles and other max-degree-2 shapes.
        """
        arcs = [a if isinstance(a, Arc) else Arc(i, *a) for i, a in enumerate(arcs)]
        if order is None:
            order = [[] for _ in range(n)]
            for a in arcs:
                order[a.src].append(a.id)
                if a.dst != a.src:
                    order[a.dst].append(a.id)
        rotation = []
        for v in range(n):
            ends = []
            for a in order[v]:
                arc = arcs[a]
                if arc.src == v:
                    ends.append(src_end(a))
                if arc.dst == v:
                    ends.append(dst_end(a))
            rotation.append(ends)
        return cls(n, arcs, rotation, **kwargs)

    # -- accessors -------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.src)

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(
            Arc(a, self.src[a], self.dst[a], self.weight[a], self.color[a])
            for a in range(self.m)
        )

    def out_arcs(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_arcs(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """Undirected incidences of ``v`` as ``(arc, other endpoint)``."""
        return self._inc[v]

    def end_vertex(self, end: int) -> int:
        a = end >> 1
        return self.dst[a] if end & 1 else self.src[a]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.src == other.src
            and self.dst == other.dst
            and self.weight == other.weight
            and self.color == other.color
            and self.rotation == other.rotation
            and self.part == other.part
            and self.weight_bound == other.weight_bound
        )

    def __hash__(self) -> int:
        return hash((self.n, self.src, self.dst, self.weight, self.rotation))

    def __repr__(self) -> str:
        return f"PlanarGraph(n={self.n}, m={self.m})"

    # -- derived graphs ----------------------------------------------------------

    def with_weights(self, weights: Sequence[int], weight_bound: Optional[int] = None) -> "PlanarGraph":
        if len(weights) != self.m:
            raise GraphError("one weight per arc required")
        arcs = [Arc(a, self.src[a], self.dst[a], weights[a], self.color[a]) for a in range(self.m)]
        bound = weight_bound
        if bound is None:
            bound = max([self.weight_bound, *(abs(w) for w in weights)])
        return PlanarGraph(self.n, arcs, self.rotation, self.part, bound)

    def with_colors(self, colors: Sequence[Optional[int]]) -> "PlanarGraph":
        arcs = [Arc(a, self.src[a], self.dst[a], self.weight[a], colors[a]) for a in range(self.m)]
        return PlanarGraph(self.n, arcs, self.rotation, self.part, self.weight_bound)

    def reversed(self, arcs: Optional[Iterable[int]] = None) -> "PlanarGraph":
        """Reverse the given arcs (all arcs by default); the embedding is kept."""
        flip = set(range(self.m)) if arcs is None else set(arcs)
        new_arcs = []
        for a in range(self.m):
            u, v = (self.dst[a], self.src[a]) if a in flip else (self.src[a], self.dst[a])
            new_arcs.append(Arc(a, u, v, self.weight[a], self.color[a]))
        rotation = [[e ^ 1 if (e >> 1) in flip else e for e in rot] for rot in self.rotation]
        return PlanarGraph(self.n, new_arcs, rotation, self.part, self.weight_bound)


@dataclass(frozen=True)
class DrawnGraph:
    """A directed graph with a drawing summarised by its edge crossings.

    ``crossings[c]`` is the pair of arcs meeting at crossing ``c`` and
    ``order[a]`` lists the crossings met while travelling along arc ``a``.
    """

    n: int
    arcs: tuple[Arc, ...]
    crossings: tuple[tuple[int, int], ...]
    order: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n: int, arcs: Iterable[Union[Arc, Sequence]], crossings, order=None) -> "DrawnGraph":
        arcs = tuple(a if isinstance(a, Arc) else Arc(i, *a) for i, a in enumerate(arcs))
        crossings = tuple((int(i), int(j)) for i, j in crossings)
        if order is None:
            seq: list[list[int]] = [[] for _ in arcs]
            for c, (i, j) in enumerate(crossings):
                seq[i].append(c)
                seq[j].append(c)
            order = seq
        return cls(n, arcs, crossings, tuple(tuple(o) for o in order))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def problems(self) -> list[str]:
        out = []
        m = len(self.arcs)
        for a in self.arcs:
            if not (0 <= a.src < self.n and 0 <= a.dst < self.n):
                out.append(f"arc {a.id} has an endpoint out of range")
        if len(self.order) != m:
            out.append("crossing order must list every arc")
            return out
        expected: list[list[int]] = [[] for _ in range(m)]
        for c, (i, j) in enumerate(self.crossings):
            if i == j:
                out.append(f"crossing {c} references arc {i} twice")
            for a in (i, j):
                if not 0 <= a < m:
                    out.append(f"crossing {c} references unknown arc {a}")
                else:
                    expected[a].append(c)
        for a in range(m):
            if sorted(self.order[a]) != sorted(expected[a]):
                out.append(f"arc {a}: crossing sequence does not match the crossings naming it")
        return out


# -- validation and faces --------------------------------------------------------


def _rotation_problems(g: PlanarGraph) -> list[str]:
    problems = []
    seen: dict[int, int] = {}
    for v, rot in enumerate(g.rotation):
        for e in rot:
            if not 0 <= e < 2 * g.m:
                problems.append(f"rotation of {v} names unknown end {e}")
                continue
            if e in seen:
                problems.append(f"end {e} appears more than once in the rotation")
                continue
            seen[e] = v
            if g.end_vertex(e) != v:
                problems.append(f"end {e} listed at {v} but belongs to {g.end_vertex(e)}")
    missing = 2 * g.m - len(seen)
    if missing > 0:
        problems.append(f"rotation-coverage violated: {missing} arc-end(s) missing")
    return problems


def _successor_map(g: PlanarGraph) -> list[int]:
    nxt = [0] * (2 * g.m)
    for rot in g.rotation:
        k = len(rot)
        for i, e in enumerate(rot):
            nxt[e] = rot[(i + 1) % k]
    return nxt


def trace_faces(g: PlanarGraph) -> list[tuple[int, ...]]:
    """All face boundary walks, each a cyclic tuple of arc-ends.

    Faces are emitted in order of their smallest end, each starting from it.
    """
    problems = _rotation_problems(g)
    if problems:
        raise EmbeddingError("; ".join(problems))
    rot_next = _successor_map(g)
    seen = [False] * (2 * g.m)
    faces = []
    for start in range(2 * g.m):
        if seen[start]:
            continue
        walk = []
        e = start
        while not seen[e]:
            seen[e] = True
            walk.append(e)
            e = rot_next[e ^ 1]
        if e != start:
            raise EmbeddingError("face walk did not close")
        faces.append(tuple(walk))
    return faces


def face_index(g: PlanarGraph, faces: Optional[Sequence[Sequence[int]]] = None) -> list[int]:
    """Map each arc-end to the index of the face it bounds."""
    faces = trace_faces(g) if faces is None else faces
    owner = [0] * (2 * g.m)
    for f, walk in enumerate(faces):
        for e in walk:
            owner[e] = f
    return owner


def undirected_components(g: PlanarGraph, vertices: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Connected components of the underlying undirected graph, sorted by least vertex."""
    allowed = None if vertices is None else set(vertices)
    order = range(g.n) if allowed is None else sorted(allowed)
    label: dict[int, int] = {}
    comps = []
    for root in order:
        if root in label:
            continue
        label[root] = len(comps)
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for _, w in g.incident(u):
                if w not in label and (allowed is None or w in allowed):
                    label[w] = len(comps)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def euler_report(g: PlanarGraph) -> list[tuple[int, int, int]]:
    """``(v, e, f)`` per connected component that carries at least one arc."""
    faces = trace_faces(g)
    comps = undirected_components(g)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    edges = [0] * len(comps)
    for a in range(g.m):
        edges[comp_of[g.src[a]]] += 1
    face_count = [0] * len(comps)
    for walk in faces:
        face_count[comp_of[g.end_vertex(walk[0])]] += 1
    return [
        (len(comp), edges[i], face_count[i]) for i, comp in enumerate(comps) if edges[i] > 0
    ]


def validate(g: PlanarGraph) -> list[str]:
    """Return the violated invariants of ``g``; an empty list means valid."""
    problems = _rotation_problems(g)
    embedding_ok = not problems
    for a in range(g.m):
        if abs(g.weight[a]) > g.weight_bound:
            problems.append(f"arc {a}: |weight| {abs(g.weight[a])} exceeds bound {g.weight_bound}")
    if embedding_ok:
        try:
            for v, e, f in euler_report(g):
                if v - e + f != 2:
                    problems.append(f"Euler check failed: v-e+f = {v}-{e}+{f} != 2")
        except EmbeddingError as exc:
            problems.append(str(exc))
    if g.part is not None:
        for a in range(g.m):
            if g.part[g.src[a]] == g.part[g.dst[a]]:
                problems.append(f"arc {a} joins two vertices of the same part")
    return problems


def face_count(g: PlanarGraph) -> int:
    return len(trace_faces(g))


# -- subgraphs -------------------------------------------------------------------


def induced_subgraph(g: PlanarGraph, vertices: Iterable[int]) -> PlanarGraph:
    """``G[X]`` relabelled densely: new vertex ``i`` is the ``i``-th smallest of ``X``.

    Arcs keep their relative order and the rotation keeps its cyclic order.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    if not keep:
        raise GraphError("induced subgraph needs at least one vertex")
    new_id = {v: i for i, v in enumerate(keep)}
    arc_map = {}
    arcs = []
    for a in range(g.m):
        if g.src[a] in new_id and g.dst[a] in new_id:
            arc_map[a] = len(arcs)
            arcs.append(Arc(len(arcs), new_id[g.src[a]], new_id[g.dst[a]], g.weight[a], g.color[a]))
    rotation = []
    for v in keep:
        rotation.append([2 * arc_map[e >> 1] + (e & 1) for e in g.rotation[v] if (e >> 1) in arc_map])
    part = None if g.part is None else [g.part[v] for v in keep]
    return PlanarGraph(len(keep), arcs, rotation, part, g.weight_bound)


# -- directed dual ------------------------------------------------------------------


@dataclass(frozen=True)
class DualGraph:
    """Directed dual: dual arc ``h`` crosses the primal edge of end ``h``.

    Dual arc ``h`` runs from the face bounded by end ``h`` to the face bounded
    by ``h ^ 1``, so ``primal_map[a] == (2a, 2a + 1)`` pairs the two opposite
    dual arcs crossing primal edge ``a``.
    """

    face_count: int
    src: tuple[int, ...]
    dst: tuple[int, ...]
    weight: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def primal_map(self) -> dict[int, tuple[int, int]]:
        return {a: (2 * a, 2 * a + 1) for a in range(len(self.src) // 2)}

    def to_planar(self, doubled: bool = True) -> PlanarGraph:
        """Embedded dual.  With ``doubled=False`` only one arc per primal edge is kept."""
        keep = range(len(self.src)) if doubled else range(0, len(self.src), 2)
        index = {h: i for i, h in enumerate(keep)}
        arcs = [Arc(index[h], self.src[h], self.dst[h], self.weight[h]) for h in keep]
        rotation = []
        for walk in self.faces:
            rot = []
            for x in walk:
                # x bounds this face: dual arc x leaves here, dual arc x^1 arrives here
                if x in index:
                    rot.append(2 * index[x])
                if (x ^ 1) in index:
                    rot.append(2 * index[x ^ 1] + 1)
            rotation.append(rot)
        bound = max([1, *(abs(w) for w in self.weight)])
        return PlanarGraph(self.face_count, arcs, rotation, weight_bound=bound)


def build_directed_dual(
    g: PlanarGraph,
    arc_weights: Union[Sequence[int], Callable[[int], int], None] = None,
) -> DualGraph:
    """Directed dual of a connected embedded graph.

    ``arc_weights`` assigns a weight to each primal half-edge (arc-end) and may
    differ between the two directions of one edge; it defaults to the primal
    arc weight in both directions.
    """
    if len(undirected_components(g)) != 1:
        raise GraphError("directed dual is only defined here for connected graphs")
    faces = trace_faces(g)
    owner = face_index(g, faces)
    if arc_weights is None:
        weights = [g.weight[h >> 1] for h in range(2 * g.m)]
    elif callable(arc_weights):
        weights = [int(arc_weights(h)) for h in range(2 * g.m)]
    else:
        if len(arc_weights) != 2 * g.m:
            raise GraphError("one weight per arc-end required")
        weights = [int(w) for w in arc_weights]
    src = tuple(owner[h] for h in range(2 * g.m))
    dst = tuple(owner[h ^ 1] for h in range(2 * g.m))
    return DualGraph(len(faces), src, dst, tuple(weights), tuple(faces))
