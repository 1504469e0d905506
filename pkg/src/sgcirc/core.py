"""Signed-graph data model: labelled vertices, signed edges, switching.

Graphs are simple (no loops, no parallel edges) and immutable after
construction, so instances are safe to share between threads; every
operation here is a pure function returning fresh objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Optional, Sequence, Union, TYPE_CHECKING

from .errors import (
    BadEndpointError,
    BadVertexError,
    DegenerateSquareError,
    DuplicateEdgeError,
    LoopEdgeError,
)

if TYPE_CHECKING:  # pragma: no cover
    from .families import FamilyParams


class Sign(Enum):
    """Edge sign; products follow the usual rule of signs."""

    POSITIVE = 1
    NEGATIVE = -1

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign(self.value * other.value)

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"

    @classmethod
    def from_symbol(cls, text: str) -> "Sign":
        if text == "+":
            return cls.POSITIVE
        if text == "-":
            return cls.NEGATIVE
        raise ValueError(f"bad sign symbol {text!r}")


NEG = Sign.NEGATIVE
POS = Sign.POSITIVE


# -- vertex labels -------------------------------------------------------------

@dataclass(frozen=True)
class Grid:
    """Cylinder position with the 1-based (layer, index) convention."""

    layer: int
    index: int


@dataclass(frozen=True)
class Apex:
    """The universal vertex attached to the last cylinder layer."""


@dataclass(frozen=True)
class Rung:
    """An added first-layer vertex u_i, 1-based."""

    index: int


@dataclass(frozen=True)
class Plain:
    """An unstructured vertex."""

    id: int


VertexLabel = Union[Grid, Apex, Rung, Plain]


class Edge(NamedTuple):
    u: int
    v: int
    sign: Sign


@dataclass(frozen=True)
class CycleSeq:
    """Cyclic order of at least three distinct vertices.

    The sequence is purely combinatorial: its edges need not exist in any
    graph (several constructions below walk cycles through non-edges).
    Indexing is cyclic, so ``seq[i]`` is defined for every integer i.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]


@dataclass(frozen=True)
class SignedGraph:
    """Simple signed graph on vertices 0..n-1.

    Edges are normalised to u < v and stored sorted; construction rejects
    loops, repeated pairs and out-of-range endpoints.  ``params`` records
    the family instance a constructor produced, when there is one.
    """

    n: int
    labels: tuple[VertexLabel, ...]
    edges: tuple[Edge, ...]
    params: Optional["FamilyParams"] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise BadEndpointError("vertex count must be non-negative")
        if len(self.labels) != self.n:
            raise BadVertexError(
                f"expected {self.n} labels, got {len(self.labels)}")
        normalised = []
        seen: set[tuple[int, int]] = set()
        for u, v, sign in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BadEndpointError(f"edge ({u}, {v}) out of range 0..{self.n - 1}")
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalised.append(Edge(u, v, sign))
        normalised.sort(key=lambda e: (e.u, e.v))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "edges", tuple(normalised))
        adj: list[list[tuple[int, Sign]]] = [[] for _ in range(self.n)]
        for u, v, sign in self.edges:
            adj[u].append((v, sign))
            adj[v].append((u, sign))
        object.__setattr__(
            self, "_adj", tuple(tuple(sorted(nbrs)) for nbrs in adj))

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[tuple[int, Sign], ...]:
        """Neighbours of v as (vertex, sign) pairs, sorted by vertex."""
        self._check_vertex(v)
        return self._adj[v]  # type: ignore[attr-defined]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return any(w == v for w, _ in self._adj[u])  # type: ignore[attr-defined]

    def edge_sign(self, u: int, v: int) -> Sign:
        for w, sign in self.neighbors(u):
            if w == v:
                return sign
        raise KeyError(f"no edge ({u}, {v})")

    def is_all_negative(self) -> bool:
        return all(e.sign is NEG for e in self.edges)

    def walk_sign(self, walk: Sequence[int], closed: bool = True) -> Sign:
        """Sign product along a vertex walk (closing edge included if closed)."""
        sign = POS
        pairs = list(zip(walk, walk[1:]))
        if closed and len(walk) > 1:
            pairs.append((walk[-1], walk[0]))
        for u, v in pairs:
            sign = sign * self.edge_sign(u, v)
        return sign

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise BadVertexError(f"vertex {v} out of range 0..{self.n - 1}")


# -- operations ----------------------------------------------------------------

def build_graph(n: int, edges: Sequence[tuple[int, int, Sign]]) -> SignedGraph:
    """Validate and build a signed graph with Plain vertex labels."""
    labels = tuple(Plain(i) for i in range(n))
    return SignedGraph(n, labels, tuple(Edge(u, v, s) for u, v, s in edges))


def switch(g: SignedGraph, s: Sequence[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in s.

    Switching preserves the sign of every cycle, hence negative girth and
    the circular chromatic number.
    """
    sset = set(s)
    for v in sset:
        if not (0 <= v < g.n):
            raise BadVertexError(f"switch vertex {v} out of range 0..{g.n - 1}")
    edges = tuple(
        Edge(u, v, sign * NEG if (u in sset) != (v in sset) else sign)
        for u, v, sign in g.edges)
    return SignedGraph(g.n, g.labels, edges, g.params)


def is_bipartite(g: SignedGraph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """2-colour the underlying graph; return the parts (A, B) or None.

    Each component is rooted at its smallest vertex, which lands in A.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, _ in g.neighbors(u):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    part_a = tuple(v for v in range(g.n) if side[v] == 0)
    part_b = tuple(v for v in range(g.n) if side[v] == 1)
    return part_a, part_b


def exact_square(cycle: CycleSeq) -> tuple[CycleSeq, ...]:
    """Cycles of the distance-2 graph of a cycle.

    Odd length m gives one cycle through every vertex (positions
    0, 2, 4, ...); even length m gives the two half-length cycles on even
    and odd positions, in that order.  Even m < 6 would produce 2-cycles
    and is rejected.
    """
    m = len(cycle)
    if m % 2 == 1:
        return (CycleSeq(tuple(cycle[2 * t] for t in range(m))),)
    if m < 6:
        raise DegenerateSquareError(
            f"exact square of an even {m}-cycle is not a pair of cycles")
    first = CycleSeq(tuple(cycle[2 * t] for t in range(m // 2)))
    second = CycleSeq(tuple(cycle[2 * t + 1] for t in range(m // 2)))
    return first, second


def validate(g: SignedGraph) -> list[str]:
    """Re-check every graph invariant; return violations (empty = valid).

    Construction already enforces these, so a non-empty report indicates
    in-memory tampering or a bug.  Grid/Rung label ranges are checked
    against the attached family parameters when present.
    """
    report: list[str] = []
    if len(g.labels) != g.n:
        report.append(f"label count {len(g.labels)} != n {g.n}")
    seen: set[tuple[int, int]] = set()
    for u, v, _ in g.edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            report.append(f"edge ({u}, {v}) endpoint out of range")
            continue
        if u == v:
            report.append(f"loop at {u}")
        if u > v:
            report.append(f"edge ({u}, {v}) not normalised")
        key = (min(u, v), max(u, v))
        if key in seen:
            report.append(f"duplicate edge {key}")
        seen.add(key)
    params = g.params
    if params is not None:
        ell = params.ell
        k = params.grid_width()
        for v, label in enumerate(g.labels):
            if isinstance(label, Grid):
                if ell is not None and not (1 <= label.layer <= ell):
                    report.append(f"vertex {v}: grid layer {label.layer} outside 1..{ell}")
                if k is not None and not (1 <= label.index <= k):
                    report.append(f"vertex {v}: grid index {label.index} outside 1..{k}")
            elif isinstance(label, Rung):
                if params.k is not None and not (1 <= label.index <= params.k):
                    report.append(f"vertex {v}: rung index {label.index} outside 1..{params.k}")
    return report


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation of the cycle, either direction."""
    seq = tuple(vertices)
    m = len(seq)
    best = None
    for direction in (seq, seq[::-1]):
        for start in range(m):
            cand = direction[start:] + direction[:start]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best
