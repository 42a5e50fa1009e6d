"""Planarising drawn DAGs with colored crossing gadgets.

Step one cuts every arc between consecutive crossings, so each piece meets
at most one crossing.  Step two colors the pieces: a crossing-free piece
``u -> v`` becomes ``u -R-> x -B-> v``; two pieces ``a -> b`` and ``c -> d``
meeting at a crossing share one middle vertex ``m``::

    a -R-> x1 -B-> m -R-> y1 -B-> b
    c -R-> x2 -B-> x3 -R-> m -B-> y2 -R-> y3 -B-> d

The first chain enters ``m`` on Blue and must leave on Red; the second
enters on Red and must leave on Blue.  So alternating walks go straight
through the crossing and never turn onto the other arc.

Crossings carry no coordinates, so the embedding of the planarised graph
is computed with networkx's planarity test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graph import BLUE, RED, Arc, DrawnGraph, GraphError, PlanarGraph
from .meter import SpaceMeter
from .redblue import DEFAULT_EPS, red_blue_path


@dataclass(frozen=True)
class GadgetMap:
    """``planarized`` plus where its vertices came from.

    ``vertex_map[v]`` is the image of original vertex ``v``.  ``provenance``
    has one entry per vertex of ``planarized``: ``("vertex", v)``,
    ``("subdivision", arc, index)``, ``("chain", arc, piece)`` or
    ``("gadget", crossing, name)``.
    """

    planarized: PlanarGraph
    vertex_map: tuple[int, ...]
    provenance: tuple[tuple, ...]
    piece_count: int
    crossing_count: int


def _pieces(d: DrawnGraph, provenance: list[tuple]):
    """Step one: per arc, a list of ``(tail, head, crossing or None)`` pieces."""
    out = []
    for arc in d.arcs:
        seq = d.order[arc.id]
        points = [arc.src]
        for i in range(len(seq) - 1):
            provenance.append(("subdivision", arc.id, i))
            points.append(len(provenance) - 1)
        points.append(arc.dst)
        if not seq:
            out.append([(arc.src, arc.dst, None)])
        else:
            out.append([(points[i], points[i + 1], seq[i]) for i in range(len(seq))])
    return out


def planarize_with_gadgets(d: DrawnGraph) -> GadgetMap:
    """Replace crossings by colored gadgets; alternating paths mirror the original paths."""
    problems = d.problems()
    problems += [f"arc {a.id} is a loop" for a in d.arcs if a.src == a.dst]
    if problems:
        raise GraphError("inconsistent drawing: " + "; ".join(problems))
    provenance: list[tuple] = [("vertex", v) for v in range(d.n)]
    pieces = _pieces(d, provenance)

    def new_vertex(tag: tuple) -> int:
        provenance.append(tag)
        return len(provenance) - 1

    arcs: list[tuple[int, int, int]] = []  # (src, dst, color)
    middle: dict[int, int] = {}
    piece_count = 0
    for a, plist in enumerate(pieces):
        for p, (u, v, c) in enumerate(plist):
            piece_count += 1
            if c is None:
                x = new_vertex(("chain", a, p))
                arcs += [(u, x, RED), (x, v, BLUE)]
                continue
            if c not in middle:
                middle[c] = new_vertex(("gadget", c, "m"))
            m = middle[c]
            if d.crossings[c][0] == a:
                x1, y1 = new_vertex(("gadget", c, "x1")), new_vertex(("gadget", c, "y1"))
                arcs += [(u, x1, RED), (x1, m, BLUE), (m, y1, RED), (y1, v, BLUE)]
            else:
                x2, x3 = new_vertex(("gadget", c, "x2")), new_vertex(("gadget", c, "x3"))
                y2, y3 = new_vertex(("gadget", c, "y2")), new_vertex(("gadget", c, "y3"))
                arcs += [
                    (u, x2, RED), (x2, x3, BLUE), (x3, m, RED),
                    (m, y2, BLUE), (y2, y3, RED), (y3, v, BLUE),
                ]
    n = len(provenance)
    und = nx.Graph()
    und.add_nodes_from(range(n))
    for i, (u, v, _) in enumerate(arcs):
        if und.has_edge(u, v):
            raise GraphError("planarised graph is not simple; crossing data is inconsistent")
        und.add_edge(u, v, arc=i)
    planar, emb = nx.check_planarity(und)
    if not planar:
        raise GraphError("crossing annotations do not describe a drawing: planarisation is not planar")
    rotation = []
    for v in range(n):
        ends = []
        # networkx lists neighbours clockwise; reverse for counterclockwise
        for w in reversed(list(emb.neighbors_cw_order(v))):
            i = und.edges[v, w]["arc"]
            ends.append(2 * i if arcs[i][0] == v else 2 * i + 1)
        rotation.append(ends)
    g = PlanarGraph(n, [Arc(i, u, v, 1, col) for i, (u, v, col) in enumerate(arcs)], rotation)
    return GadgetMap(g, tuple(range(d.n)), tuple(provenance), piece_count, len(d.crossings))


def sparse_crossing_reach(
    d: DrawnGraph, s: int, t: int, eps: float = DEFAULT_EPS, meter: Optional[SpaceMeter] = None
) -> bool:
    """Directed ``s -> t`` reachability in a drawn DAG via its planarisation."""
    if not (0 <= s < d.n and 0 <= t < d.n):
        raise GraphError("vertex out of range")
    if s == t:
        return True
    gm = planarize_with_gadgets(d)
    return red_blue_path(
        gm.planarized, gm.vertex_map[s], gm.vertex_map[t], init=RED, final=BLUE,
        eps=eps, meter=meter, check_dag=False,
    )
