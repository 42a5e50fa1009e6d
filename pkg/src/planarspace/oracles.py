"""Brute-force reference answers.

Nothing here touches the separator or recursive machinery; these are the
textbook algorithms the fast paths are checked against.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from typing import NamedTuple, Optional

from .graph import BLUE, PART_A, RED, DrawnGraph, PlanarGraph

INF = math.inf


class OracleDistance(NamedTuple):
    distance: float
    negative_cycle: bool


def oracle_shortest_path(g: PlanarGraph, s: int, t: int) -> OracleDistance:
    """Bellman-Ford from ``s``: ``|V|`` rounds plus one detection round."""
    dist = [INF] * g.n
    dist[s] = 0
    for _ in range(g.n):
        changed = False
        for a in range(g.m):
            u, v = g.src[a], g.dst[a]
            if dist[u] + g.weight[a] < dist[v]:
                dist[v] = dist[u] + g.weight[a]
                changed = True
        if not changed:
            return OracleDistance(dist[t], False)
    neg = any(dist[g.src[a]] + g.weight[a] < dist[g.dst[a]] for a in range(g.m))
    return OracleDistance(dist[t], neg)


def oracle_negative_cycle(g: PlanarGraph) -> bool:
    """Whether any cycle of ``g`` has negative total weight."""
    dist = [0] * g.n
    for _ in range(g.n):
        changed = False
        for a in range(g.m):
            if dist[g.src[a]] + g.weight[a] < dist[g.dst[a]]:
                dist[g.dst[a]] = dist[g.src[a]] + g.weight[a]
                changed = True
        if not changed:
            return False
    return True


def _adjacency(n: int, pairs) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
    return adj


def oracle_reach(g, s: int, t: int) -> bool:
    """Plain DFS reachability; accepts a PlanarGraph or a DrawnGraph."""
    pairs = [(a.src, a.dst) for a in g.arcs] if isinstance(g, DrawnGraph) else zip(g.src, g.dst)
    adj = _adjacency(g.n, pairs)
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        if u == t:
            return True
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def oracle_redblue(g: PlanarGraph, s: int, t: int, init: int = RED, final: int = BLUE) -> bool:
    """BFS over (vertex, next expected color); accept an arc into ``t`` of color ``final``."""
    start = (s, init)
    seen = {start}
    queue = deque([start])
    while queue:
        u, want = queue.popleft()
        for a in g.out_arcs(u):
            if g.color[a] != want:
                continue
            v = g.dst[a]
            if v == t and want == final:
                return True
            state = (v, 1 - want)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return False


def oracle_odd_cycle(g: PlanarGraph) -> bool:
    """True iff some ``(v, 0)`` reaches ``(v, 1)`` in the parity product."""
    for v in range(g.n):
        seen = {(v, 0)}
        stack = [(v, 0)]
        while stack:
            u, p = stack.pop()
            for a in g.out_arcs(u):
                state = (g.dst[a], 1 - p)
                if state == (v, 1):
                    return True
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return False


def oracle_even_path(g: PlanarGraph, s: int, t: int) -> bool:
    """Parity-product reachability from ``(s, even)`` to ``(t, even)``."""
    seen = {(s, 0)}
    stack = [(s, 0)]
    while stack:
        u, p = stack.pop()
        if (u, p) == (t, 0):
            return True
        for a in g.out_arcs(u):
            state = (g.dst[a], 1 - p)
            if state not in seen:
                seen.add(state)
                stack.append(state)
    return False


def simple_path_parities(g: PlanarGraph, s: int, t: int) -> set[int]:
    """Parities of all simple ``s -> t`` paths, by exhaustive DFS."""
    found: set[int] = set()
    on_path = {s}

    def walk(u: int, length: int) -> None:
        if u == t:
            found.add(length % 2)
            return
        for a in g.out_arcs(u):
            v = g.dst[a]
            if v not in on_path:
                on_path.add(v)
                walk(v, length + 1)
                on_path.discard(v)

    walk(s, 0)
    return found


def count_paths(g, s: int, t: int) -> int:
    """Number of directed ``s -> t`` paths in a DAG (arcs counted with multiplicity)."""
    pairs = [(a.src, a.dst) for a in g.arcs] if isinstance(g, DrawnGraph) else list(zip(g.src, g.dst))
    adj = _adjacency(g.n, pairs)
    memo: dict[int, int] = {}

    def count(u: int) -> int:
        if u == t:
            return 1
        if u not in memo:
            memo[u] = sum(count(v) for v in adj[u])
        return memo[u]

    return count(s)


def count_alternating_paths(g: PlanarGraph, s: int, t: int, init: int = RED, final: int = BLUE) -> int:
    """Number of color-alternating ``s -> t`` paths in a colored DAG."""
    memo: dict[tuple[int, int], int] = {}

    def count(u: int, want: int) -> int:
        key = (u, want)
        if key in memo:
            return memo[key]
        total = 0
        for a in g.out_arcs(u):
            if g.color[a] != want:
                continue
            v = g.dst[a]
            if v == t and want == final:
                total += 1
            if v != t:
                total += count(v, 1 - want)
        memo[key] = total
        return total

    return count(s, init)


def oracle_scc(g: PlanarGraph) -> list[list[int]]:
    """Strong components via mutual reachability, sorted by least vertex."""
    reach = []
    for v in range(g.n):
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for a in g.out_arcs(u):
                w = g.dst[a]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach.append(seen)
    comps: list[list[int]] = []
    placed = set()
    for v in range(g.n):
        if v in placed:
            continue
        comp = sorted(u for u in reach[v] if v in reach[u])
        placed.update(comp)
        comps.append(comp)
    return comps


def oracle_bipartite(g: PlanarGraph) -> bool:
    """Whole-graph BFS 2-coloring of the underlying undirected graph."""
    if any(g.src[a] == g.dst[a] for a in range(g.m)):
        return False
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for _, v in g.incident(u):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


class OracleMatching(NamedTuple):
    perfect: bool
    pairs: frozenset


def oracle_matching(g: PlanarGraph) -> OracleMatching:
    """Augmenting-path maximum matching (Kuhn); perfect iff it covers A and B."""
    if g.part is None:
        raise ValueError("matching oracle needs part labels")
    left = [v for v in range(g.n) if g.part[v] == PART_A]
    right_count = g.n - len(left)
    nbrs = {u: sorted({x for _, x in g.incident(u)}) for u in left}
    mate: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in nbrs[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in mate or augment(mate[v], seen):
                mate[v] = u
                return True
        return False

    for u in left:
        augment(u, set())
    pairs = frozenset((u, v) for v, u in mate.items())
    perfect = len(left) == right_count and len(pairs) == len(left)
    return OracleMatching(perfect, pairs)


def perfect_matchings(g: PlanarGraph):
    """Yield every perfect matching as a tuple of arc ids (small graphs only)."""
    if g.part is None:
        raise ValueError("perfect-matching enumeration needs part labels")
    left = [v for v in range(g.n) if g.part[v] == PART_A]
    if 2 * len(left) != g.n:
        return
    by_left: dict[int, list[int]] = {u: [] for u in left}
    for a in range(g.m):
        u = g.src[a] if g.part[g.src[a]] == PART_A else g.dst[a]
        by_left[u].append(a)

    def extend(i: int, used: set[int], chosen: list[int]):
        if i == len(left):
            yield tuple(chosen)
            return
        u = left[i]
        for a in by_left[u]:
            v = g.dst[a] if g.src[a] == u else g.src[a]
            if v in used:
                continue
            used.add(v)
            chosen.append(a)
            yield from extend(i + 1, used, chosen)
            chosen.pop()
            used.discard(v)

    yield from extend(0, set(), [])


def oracle_epm(g: PlanarGraph, limit: int = 16) -> bool:
    """Whether some perfect matching has an even number of Red arcs (enumeration)."""
    if g.n > limit:
        raise ValueError(f"enumeration oracle is capped at n <= {limit}")
    return any(
        sum(1 for a in pm if g.color[a] == RED) % 2 == 0 for pm in perfect_matchings(g)
    )


def is_perfect_matching(g: PlanarGraph, pairs) -> bool:
    """Check that ``pairs`` of (A-vertex, B-vertex) is a perfect matching of ``g``."""
    edges = {frozenset((g.src[a], g.dst[a])) for a in range(g.m)}
    covered: list[int] = []
    for u, v in pairs:
        if frozenset((u, v)) not in edges or g.part is None or g.part[u] != PART_A or g.part[v] == PART_A:
            return False
        covered.extend((u, v))
    return len(covered) == len(set(covered)) == g.n


def neighborhood(g: PlanarGraph, S) -> set[int]:
    s = set(S)
    return {x for u in s for _, x in g.incident(u)}


def cycle_weight_parities(g: PlanarGraph, max_len: Optional[int] = None) -> set[int]:
    """Parities of weights of all simple directed cycles (tiny graphs only)."""
    out: set[int] = set()
    limit = max_len or g.n
    for start in range(g.n):
        stack = [(start, 0, frozenset([start]))]
        while stack:
            u, wsum, seen = stack.pop()
            for a in g.out_arcs(u):
                v = g.dst[a]
                if v == start:
                    out.add((wsum + g.weight[a]) % 2)
                elif v > start and v not in seen and len(seen) < limit:
                    stack.append((v, wsum + g.weight[a], seen | {v}))
    return out


def all_pairs(n: int):
    return itertools.product(range(n), repeat=2)
