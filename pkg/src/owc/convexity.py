"""Geodesic intervals, convex sets, and weakly convex sets.

Two routes decide weak convexity.  The fast path compares induced-subgraph
distances against global distances level by level.  The reference oracle
enumerates geodesics explicitly by walking the shortest-path DAG between each
pair; it is exponential and meant for small orders.  The fast path's
characterization is validated against the oracle in the test suite, not
assumed.

Pairs are quantified over the *members* of the candidate set: a set is weakly
convex when every two of its members are joined by some geodesic lying wholly
inside it.  The empty set and singletons are vacuously weakly convex.
"""

from __future__ import annotations

from typing import Iterator

from .graphs import UNREACHABLE, DistanceMatrix, Graph, VertexSet, distance_matrix, iter_bits


class IntervalCache:
    """Per-graph context: distance matrix plus memoized intervals and level masks."""

    def __init__(self, g: Graph, dm: DistanceMatrix | None = None):
        self.graph = g
        self.dm = dm if dm is not None else distance_matrix(g)
        self.adj_bits = g.adjacency_bits()
        self._intervals: dict[tuple[int, int], VertexSet] = {}
        self._levels: list[list[int]] | None = None
        self._balls: list[list[int]] | None = None

    @property
    def level_masks(self) -> list[list[int]]:
        """``level_masks[u][d]`` is the mask of vertices at distance exactly d from u."""
        if self._levels is None:
            n = self.graph.order
            levels = []
            for u in range(n):
                row = self.dm.rows[u]
                ecc = max(d for d in row if d != UNREACHABLE)
                lvl = [0] * (ecc + 1)
                for v, d in enumerate(row):
                    if d != UNREACHABLE:
                        lvl[d] |= 1 << v
                levels.append(lvl)
            self._levels = levels
        return self._levels

    @property
    def ball_masks(self) -> list[list[int]]:
        """``ball_masks[u][d]`` is the mask of vertices within distance d of u."""
        if self._balls is None:
            balls = []
            for lvl in self.level_masks:
                acc = 0
                cum = []
                for mask in lvl:
                    acc |= mask
                    cum.append(acc)
                balls.append(cum)
            self._balls = balls
        return self._balls


def interval(cache: IntervalCache, u: int, v: int) -> VertexSet:
    """I[u,v]: all vertices on some u-v geodesic."""
    key = (u, v) if u <= v else (v, u)
    hit = cache._intervals.get(key)
    if hit is not None:
        return hit
    rows = cache.dm.rows
    duv = rows[u][v]
    if duv == UNREACHABLE:
        raise ValueError(f"vertices {u} and {v} are disconnected; no geodesic exists")
    bits = 0
    ru, rv = rows[u], rows[v]
    for w in range(cache.graph.order):
        if ru[w] != UNREACHABLE and rv[w] != UNREACHABLE and ru[w] + rv[w] == duv:
            bits |= 1 << w
    result = VertexSet(cache.graph.order, bits)
    if len(cache._intervals) < cache.graph.order * cache.graph.order:
        cache._intervals[key] = result
    return result


def interval_closure(cache: IntervalCache, d: VertexSet) -> VertexSet:
    """I[D]: union of I[x,y] over all pairs x, y in d."""
    members = d.vertices()
    bits = d.bits
    for i, u in enumerate(members):
        for v in members[i:]:
            bits |= interval(cache, u, v).bits
    return VertexSet(cache.graph.order, bits)


def is_convex(cache: IntervalCache, d: VertexSet) -> bool:
    """True iff d is closed under geodesics: I[D] = D."""
    if len(d) <= 1:
        return True
    return interval_closure(cache, d) == d


def weakly_convex_bits(adj: tuple[int, ...], balls: list[list[int]], cbits: int) -> bool:
    """Fast weak-convexity test on a raw mask.

    For each member u, grow the reachable set inside ``cbits`` one hop at a
    time and demand it matches the global distance ball restricted to the set
    at every level.  Any shortfall means some pair's induced distance exceeds
    its graph distance (or the pair disconnects), so no geodesic fits inside.
    """
    if cbits & (cbits - 1) == 0:
        return True
    for u in iter_bits(cbits):
        ball_u = balls[u]
        last = len(ball_u) - 1
        target = ball_u[last] & cbits
        if target != cbits:
            return False
        vis = 1 << u
        frontier = vis
        level = 0
        while vis != target:
            level += 1
            grow = 0
            for v in iter_bits(frontier):
                grow |= adj[v]
            frontier = grow & cbits & ~vis
            if not frontier:
                return False
            vis |= frontier
            if vis != ball_u[level if level < last else last] & cbits:
                return False
    return True


def is_weakly_convex(cache: IntervalCache, d: VertexSet) -> bool:
    """Fast path: every pair of members keeps its graph distance inside the set."""
    return weakly_convex_bits(cache.adj_bits, cache.ball_masks, d.bits)


def geodesics(cache: IntervalCache, u: int, v: int) -> Iterator[tuple[int, ...]]:
    """Enumerate every u-v geodesic by walking the shortest-path DAG of I[u,v]."""
    rows = cache.dm.rows
    duv = rows[u][v]
    if duv == UNREACHABLE:
        raise ValueError(f"vertices {u} and {v} are disconnected; no geodesic exists")
    adj = cache.adj_bits
    lvl_u = cache.level_masks[u]
    lvl_v = cache.level_masks[v]
    path = [u]

    def walk(w: int, dw: int) -> Iterator[tuple[int, ...]]:
        if w == v:
            yield tuple(path)
            return
        succ = adj[w] & lvl_u[dw + 1] & lvl_v[duv - dw - 1]
        for x in iter_bits(succ):
            path.append(x)
            yield from walk(x, dw + 1)
            path.pop()

    yield from walk(u, 0)


def is_weakly_convex_oracle(cache: IntervalCache, d: VertexSet) -> bool:
    """Reference route: some explicitly enumerated geodesic lies inside d, per pair."""
    members = d.vertices()
    if len(members) <= 1:
        return True
    rows = cache.dm.rows
    dbits = d.bits
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if rows[u][v] == UNREACHABLE:
                return False
            if not any(
                all((dbits >> w) & 1 for w in path) for path in geodesics(cache, u, v)
            ):
                return False
    return True
