"""Reader and writer for the line-oriented ``plgr 1`` graph format.

::

    plgr 1
    n <count>
    wmax <bound>                      # optional, only when not n**3
    part <vertex> <A|B>
    a <arc_id> <src> <dst> <weight> <R|B|->
    rot <vertex> <end>...             # end = <arc_id>s | <arc_id>d
    cross <arc_i> <arc_j> [<pos_i> <pos_j>]

A file with ``rot`` lines is an embedded :class:`PlanarGraph`; a file without
them is a :class:`DrawnGraph`.  ``pos_i`` is the index of the crossing along
arc ``i``; when positions are omitted the file order of ``cross`` lines gives
the order along every arc.
"""

from __future__ import annotations

import io
from typing import IO, Union

from .graph import (
    BLUE,
    COLOR_CHARS,
    PART_A,
    PART_B,
    PART_CHARS,
    RED,
    Arc,
    DrawnGraph,
    GraphError,
    PlanarGraph,
    validate,
)

_COLORS = {"R": RED, "B": BLUE, "-": None}
_PARTS = {"A": PART_A, "B": PART_B}


class ParseError(GraphError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(GraphError):
    def __init__(self, problems: list[str]) -> None:
        super().__init__("; ".join(problems))
        self.problems = problems


def _int(tok: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line, f"expected an integer, got {tok!r}") from None


def read_graph(stream: Union[IO[str], str], format: str = "plgr", check: bool = True):
    """Parse a ``plgr`` document from a text stream or a string."""
    if format != "plgr":
        raise ValueError(f"unsupported format {format!r}")
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    n = None
    wmax = None
    parts: dict[int, int] = {}
    arcs: dict[int, Arc] = {}
    rots: dict[int, list[int]] = {}
    crosses: list[tuple[int, int, int, int, int]] = []
    header = False
    for lineno, raw in enumerate(stream, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        tok = text.split()
        if not header:
            if tok != ["plgr", "1"]:
                raise ParseError(lineno, "missing 'plgr 1' header")
            header = True
            continue
        kind = tok[0]
        if kind == "n":
            if len(tok) != 2 or n is not None:
                raise ParseError(lineno, "malformed or repeated 'n' line")
            n = _int(tok[1], lineno)
            if n < 1:
                raise ParseError(lineno, "vertex count must be positive")
        elif kind == "wmax":
            if len(tok) != 2:
                raise ParseError(lineno, "malformed 'wmax' line")
            wmax = _int(tok[1], lineno)
        elif kind == "part":
            if len(tok) != 3 or tok[2] not in _PARTS:
                raise ParseError(lineno, "expected 'part <vertex> <A|B>'")
            v = _int(tok[1], lineno)
            if v in parts:
                raise ParseError(lineno, f"duplicate part label for vertex {v}")
            parts[v] = _PARTS[tok[2]]
        elif kind == "a":
            if len(tok) != 6 or tok[5] not in _COLORS:
                raise ParseError(lineno, "expected 'a <id> <src> <dst> <weight> <R|B|->'")
            aid, u, v, w = (_int(t, lineno) for t in tok[1:5])
            if aid in arcs:
                raise ParseError(lineno, f"duplicate arc id {aid}")
            arcs[aid] = Arc(aid, u, v, w, _COLORS[tok[5]])
        elif kind == "rot":
            if len(tok) < 2:
                raise ParseError(lineno, "expected 'rot <vertex> <end>...'")
            v = _int(tok[1], lineno)
            if v in rots:
                raise ParseError(lineno, f"duplicate rotation for vertex {v}")
            ends = []
            for t in tok[2:]:
                if len(t) < 2 or t[-1] not in "sd":
                    raise ParseError(lineno, f"bad arc-end {t!r}")
                ends.append(2 * _int(t[:-1], lineno) + (t[-1] == "d"))
            rots[v] = ends
        elif kind == "cross":
            if len(tok) not in (3, 5):
                raise ParseError(lineno, "expected 'cross <arc_i> <arc_j> [<pos_i> <pos_j>]'")
            vals = [_int(t, lineno) for t in tok[1:]]
            if len(vals) == 2:
                vals += [-1, -1]
            crosses.append((*vals, lineno))
        else:
            raise ParseError(lineno, f"unknown record {kind!r}")
    if not header:
        raise ParseError(1, "empty document")
    if n is None:
        raise ParseError(1, "missing 'n' line")
    if sorted(arcs) != list(range(len(arcs))):
        raise ParseError(1, "arc ids must be dense 0..m-1")
    arc_list = [arcs[i] for i in range(len(arcs))]
    for v in list(parts) + list(rots):
        if not 0 <= v < n:
            raise ParseError(1, f"vertex {v} out of range")

    if rots:
        if crosses:
            raise ParseError(crosses[0][4], "'cross' records are only allowed in drawn graphs")
        part = None
        if parts:
            if len(parts) != n:
                raise ParseError(1, "part labels must cover every vertex")
            part = [parts[v] for v in range(n)]
        rotation = [rots.get(v, []) for v in range(n)]
        try:
            g = PlanarGraph(n, arc_list, rotation, part, wmax)
        except GraphError as exc:
            raise ParseError(1, str(exc)) from None
        if check:
            problems = validate(g)
            if problems:
                raise ValidationError(problems)
        return g

    order: list[list[tuple[int, int]]] = [[] for _ in arc_list]
    pairs = []
    for c, (i, j, pi, pj, lineno) in enumerate(crosses):
        if not (0 <= i < len(arc_list) and 0 <= j < len(arc_list)):
            raise ParseError(lineno, "crossing references an unknown arc")
        pairs.append((i, j))
        order[i].append((pi if pi >= 0 else len(order[i]), c))
        order[j].append((pj if pj >= 0 else len(order[j]), c))
    seqs = []
    for a, entries in enumerate(order):
        entries.sort()
        if [p for p, _ in entries] != list(range(len(entries))):
            raise ParseError(1, f"arc {a}: crossing positions must be 0..k-1")
        seqs.append([c for _, c in entries])
    d = DrawnGraph.build(n, arc_list, pairs, seqs)
    if check:
        problems = d.problems()
        if problems:
            raise ValidationError(problems)
    return d


def write_graph(g: Union[PlanarGraph, DrawnGraph], stream: IO[str]) -> None:
    stream.write(dumps(g))


def dumps(g: Union[PlanarGraph, DrawnGraph]) -> str:
    lines = ["plgr 1", f"n {g.n}"]
    if isinstance(g, PlanarGraph):
        if g.weight_bound != max(1, g.n ** 3):
            lines.append(f"wmax {g.weight_bound}")
        if g.part is not None:
            lines.extend(f"part {v} {PART_CHARS[p]}" for v, p in enumerate(g.part))
        for a in range(g.m):
            lines.append(f"a {a} {g.src[a]} {g.dst[a]} {g.weight[a]} {COLOR_CHARS[g.color[a]]}")
        for v, rot in enumerate(g.rotation):
            ends = " ".join(f"{e >> 1}{'d' if e & 1 else 's'}" for e in rot)
            lines.append(f"rot {v} {ends}".rstrip())
    else:
        for a in g.arcs:
            lines.append(f"a {a.id} {a.src} {a.dst} {a.weight} {COLOR_CHARS[a.color]}")
        for c, (i, j) in enumerate(g.crossings):
            lines.append(f"cross {i} {j} {g.order[i].index(c)} {g.order[j].index(c)}")
    return "\n".join(lines) + "\n"


def loads(text: str, check: bool = True):
    return read_graph(io.StringIO(text), check=check)
