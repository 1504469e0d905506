"""Negative girth via the signed double cover, plus a brute-force oracle.

The double cover lifts each vertex v to (v, 0) and (v, 1); an edge uv lifts
to the parity-preserving pair when positive and the parity-swapping pair
when negative.  A shortest negative closed walk through v is then a
shortest (v, 0) -> (v, 1) path, and a minimum-length negative closed walk
is automatically a cycle (splitting at a repeated vertex would leave a
strictly shorter negative closed walk).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import NEG, CycleSeq, Sign, SignedGraph, canonical_cycle
from .errors import HasPositiveEdgeError, TooLargeError

BRUTE_FORCE_MAX_N = 14


@dataclass(frozen=True)
class DoubleCover:
    """2-lift of a signed graph; cover vertex (v, parity) has id 2v + parity."""

    base: SignedGraph
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def cover_id(v: int, parity: int) -> int:
        return 2 * v + parity

    @staticmethod
    def project(cid: int) -> tuple[int, int]:
        return cid // 2, cid % 2

    @property
    def n(self) -> int:
        return 2 * self.base.n


@dataclass(frozen=True)
class GirthResult:
    """Shortest negative cycle length and a witness; length None = none exists."""

    length: Optional[int]
    witness: Optional[CycleSeq]

    @property
    def is_infinite(self) -> bool:
        return self.length is None


def double_cover(g: SignedGraph) -> DoubleCover:
    adj: list[list[int]] = [[] for _ in range(2 * g.n)]
    for u, v, sign in g.edges:
        flip = 1 if sign is NEG else 0
        for parity in (0, 1):
            a = DoubleCover.cover_id(u, parity)
            b = DoubleCover.cover_id(v, parity ^ flip)
            adj[a].append(b)
            adj[b].append(a)
    return DoubleCover(g, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def negative_girth(g: SignedGraph) -> GirthResult:
    """Length (and witness) of a shortest negative cycle.

    One BFS per vertex v from (v, 0) to (v, 1) in the double cover; the
    global minimum over v is the negative girth.  The witness is the
    projected BFS path, reduced to a simple cycle if needed and put in
    canonical (lexicographically smallest) rotation, so output is
    deterministic.
    """
    cover = double_cover(g)
    best: Optional[tuple[int, tuple[int, ...]]] = None
    for v in range(g.n):
        walk = _lift_walk(cover, v, None if best is None else best[0])
        if walk is None:
            continue
        cycle = canonical_cycle(_reduce_to_negative_cycle(g, walk))
        cand = (len(cycle), cycle)
        if best is None or cand < best:
            best = cand
    if best is None:
        return GirthResult(None, None)
    witness = CycleSeq(best[1])
    assert g.walk_sign(witness.vertices) is NEG
    return GirthResult(best[0], witness)


def _lift_walk(cover: DoubleCover, v: int, cap: Optional[int]) -> Optional[list[int]]:
    """BFS (v,0) -> (v,1); return the projected closed walk [v, ..., v) or None.

    Paths longer than ``cap`` cannot improve on the running minimum and are
    not expanded; equal length is kept so ties can be broken on the witness.
    """
    source = DoubleCover.cover_id(v, 0)
    target = DoubleCover.cover_id(v, 1)
    dist = {source: 0}
    parent: dict[int, int] = {}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        d = dist[node]
        if cap is not None and d + 1 > cap:
            continue
        for nxt in cover.adj[node]:
            if nxt in dist:
                continue
            dist[nxt] = d + 1
            parent[nxt] = node
            if nxt == target:
                path = [nxt]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                return [DoubleCover.project(c)[0] for c in reversed(path)][:-1]
            queue.append(nxt)
    return None


def _reduce_to_negative_cycle(g: SignedGraph, walk: list[int]) -> list[int]:
    """Extract a negative simple cycle from a negative closed walk.

    A globally minimal walk is already simple; the reduction guards the
    per-vertex candidates.  Splitting a closed walk at a repeated vertex
    yields two closed walks whose signs multiply to the original, so the
    negative side can be kept.
    """
    while True:
        first_pos: dict[int, int] = {}
        split = None
        for idx, vertex in enumerate(walk):
            if vertex in first_pos:
                split = (first_pos[vertex], idx)
                break
            first_pos[vertex] = idx
        if split is None:
            return walk
        i, j = split
        inner = walk[i:j]
        outer = walk[:i] + walk[j:]
        walk = inner if g.walk_sign(inner) is NEG else outer


def odd_girth(g: SignedGraph) -> GirthResult:
    """Shortest odd cycle of the underlying graph of an all-negative input."""
    if not g.is_all_negative():
        raise HasPositiveEdgeError("odd girth is defined on all-negative graphs")
    return negative_girth(g)


def brute_force_negative_girth(g: SignedGraph) -> GirthResult:
    """Oracle: enumerate simple cycles, return the shortest negative one.

    Independent of the double-cover engine; guarded to n <= 14.
    """
    if g.n > BRUTE_FORCE_MAX_N:
        raise TooLargeError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    best: Optional[tuple[int, tuple[int, ...]]] = None
    for cycle, sign in enumerate_simple_cycles(
            g, length_cap=lambda: None if best is None else best[0]):
        if sign is not NEG:
            continue
        cand = (len(cycle), canonical_cycle(cycle))
        if best is None or cand < best:
            best = cand
    if best is None:
        return GirthResult(None, None)
    return GirthResult(best[0], CycleSeq(best[1]))


def enumerate_simple_cycles(g: SignedGraph, length_cap=None) -> Iterator[tuple[tuple[int, ...], Sign]]:
    """Yield every simple cycle once, with its sign.

    Cycles are rooted at their smallest vertex and traversed with second
    vertex smaller than last, so each comes out exactly once.  ``length_cap``
    may be an int or a nullary callable giving a current bound; paths that
    cannot close below the bound are pruned (useful for shortest-cycle
    search, harmless for full enumeration).
    """
    def cap_value() -> Optional[int]:
        if length_cap is None:
            return None
        return length_cap() if callable(length_cap) else length_cap

    n = g.n
    adjacency = [g.neighbors(v) for v in range(n)]
    for root in range(n):
        path = [root]
        on_path = [False] * n
        on_path[root] = True

        def extend(current: int, sign: Sign) -> Iterator[tuple[tuple[int, ...], Sign]]:
            cap = cap_value()
            for nxt, edge_sign in adjacency[current]:
                if nxt == root and len(path) >= 3 and path[1] < path[-1]:
                    if cap is None or len(path) <= cap:
                        yield tuple(path), sign * edge_sign
                if nxt <= root or on_path[nxt]:
                    continue
                if cap is not None and len(path) + 1 > cap:
                    continue
                path.append(nxt)
                on_path[nxt] = True
                yield from extend(nxt, sign * edge_sign)
                on_path[nxt] = False
                path.pop()

        yield from extend(root, Sign.POSITIVE)
