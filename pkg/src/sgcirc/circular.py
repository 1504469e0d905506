"""Exact circular p/q-colorability of signed graphs.

Semantics are scaled-integer throughout: a circular r-coloring with
r = p/q places colors on Z_p with threshold q (the full circle is p
units), so all arithmetic is exact.  p is kept even so the antipode
c + p/2 is a lattice point; a value with an odd reduced numerator is
represented as 2p/2q.

A negative edge uv requires d_p(c(u), c(v)) >= q and a positive edge
requires d_p(c(u), c(v) + p/2) >= q, where d_p(a, b) is the cyclic
distance min(|a-b|, p - |a-b|).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterator, Optional, Sequence

from .core import NEG, SignedGraph, is_bipartite
from .errors import (
    InvalidPQError,
    NoCandidateColorableError,
    NotBipartiteError,
    PartialAssignmentError,
    TooLargeError,
)

BRUTE_FORCE_MAX_N = 8


@dataclass(frozen=True)
class PQ:
    """Scaled circle: circumference p units, separation threshold q."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise InvalidPQError(f"q must be positive, got {self.q}")
        if self.p % 2 != 0:
            raise InvalidPQError(f"p must be even, got {self.p}")
        if self.p < 2 * self.q:
            raise InvalidPQError(f"need p >= 2q, got {self.p}/{self.q}")

    @property
    def r(self) -> Fraction:
        return Fraction(self.p, self.q)

    def canonical(self) -> "PQ":
        """Smallest even-p representation of the same circumference."""
        value = self.r
        if value.numerator % 2 == 0:
            return PQ(value.numerator, value.denominator)
        return PQ(2 * value.numerator, 2 * value.denominator)

    @classmethod
    def from_value(cls, value: Fraction) -> "PQ":
        return cls(2 * value.numerator, 2 * value.denominator).canonical()


@dataclass(frozen=True)
class Coloring:
    """Total assignment of Z_p points to vertices 0..len(assign)-1."""

    pq: PQ
    assign: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assign", tuple(self.assign))
        for a in self.assign:
            if not (0 <= a < self.pq.p):
                raise ValueError(f"color {a} outside Z_{self.pq.p}")

    def rotated(self, t: int) -> "Coloring":
        p = self.pq.p
        return Coloring(self.pq, tuple((a + t) % p for a in self.assign))

    def reflected(self) -> "Coloring":
        p = self.pq.p
        return Coloring(self.pq, tuple((p - a) % p for a in self.assign))


@dataclass(frozen=True)
class ChiCResult:
    """Least colorable grid candidate, its certificate, and the refutations."""

    value: Fraction
    certificate: Coloring
    refuted: tuple[PQ, ...]


def circ_distance(a: int, b: int, p: int) -> int:
    d = abs(a - b)
    return min(d, p - d)


def verify_coloring(g: SignedGraph, c: Coloring) -> bool:
    """Check both edge constraints for every edge of g."""
    if len(c.assign) != g.n:
        raise PartialAssignmentError(
            f"coloring covers {len(c.assign)} vertices, graph has {g.n}")
    p, q = c.pq.p, c.pq.q
    half = p // 2
    for u, v, sign in g.edges:
        a, b = c.assign[u], c.assign[v]
        if sign is NEG:
            if circ_distance(a, b, p) < q:
                return False
        else:
            if circ_distance(a, (b + half) % p, p) < q:
                return False
    return True


# -- the backtracking engine ----------------------------------------------------

def _allowed_tables(p: int, q: int) -> tuple[list[int], list[int]]:
    """allowed-value bitmasks per already-placed color, for each edge sign.

    Either constraint forbids the cyclic ball of radius q-1 around one
    center: the placed color itself for a negative edge, its antipode for
    a positive edge.
    """
    full = (1 << p) - 1
    ball = 0
    for d in range(-(q - 1), q):
        ball |= 1 << (d % p)
    def rot(mask: int, a: int) -> int:
        return ((mask << a) | (mask >> (p - a))) & full if a else mask
    neg = [full ^ rot(ball, a) for a in range(p)]
    half = p // 2
    pos = [neg[(a + half) % p] for a in range(p)]
    return neg, pos


def _bits_ascending(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _search(g: SignedGraph, pq: PQ,
            rng: Optional[Random] = None) -> Optional[tuple[int, ...]]:
    """Complete backtracking search; returns a per-vertex assignment or None.

    Vertices are ordered by descending degree; domains are Z_p bitsets
    pruned by forward checking.  Rotational symmetry pins the first
    ordered vertex to 0 and reflection symmetry caps the second at p/2,
    both sound because rotations and reflections of the circle preserve
    the constraints.  With ``rng`` the value order is shuffled per node
    (used for sampling); otherwise values ascend, so search is
    deterministic.
    """
    n = g.n
    if n == 0:
        return ()
    p, q = pq.p, pq.q
    neg_table, pos_table = _allowed_tables(p, q)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    rank = {v: i for i, v in enumerate(order)}
    nbrs: list[list[tuple[int, list[int]]]] = [[] for _ in range(n)]
    for u, v, sign in g.edges:
        table = neg_table if sign is NEG else pos_table
        nbrs[rank[u]].append((rank[v], table))
        nbrs[rank[v]].append((rank[u], table))
    full = (1 << p) - 1
    domains = [full] * n
    domains[0] = 1
    if n >= 2:
        domains[1] &= (1 << (p // 2 + 1)) - 1
    assigned = [False] * n
    assignment = [0] * n

    def rec(depth: int) -> bool:
        if depth == n:
            return True
        i = depth
        assigned[i] = True
        if rng is None:
            values: Sequence[int] = _bits_ascending(domains[i])
        else:
            values = list(_bits_ascending(domains[i]))
            rng.shuffle(values)
        for a in values:
            saved = []
            ok = True
            for j, table in nbrs[i]:
                if assigned[j]:
                    continue
                old = domains[j]
                new = old & table[a]
                if new == old:
                    continue
                if new == 0:
                    ok = False
                    break
                saved.append((j, old))
                domains[j] = new
            if ok:
                assignment[i] = a
                if rec(depth + 1):
                    return True
            for j, old in saved:
                domains[j] = old
        assigned[i] = False
        return False

    if not rec(0):
        return None
    by_vertex = [0] * n
    for i, v in enumerate(order):
        by_vertex[v] = assignment[i]
    return tuple(by_vertex)


def decide_colorable(g: SignedGraph, pq: PQ) -> Optional[Coloring]:
    """Find a circular p/q-coloring, or None after an exhaustive search."""
    assignment = _search(g, pq)
    if assignment is None:
        return None
    coloring = Coloring(pq, assignment)
    assert verify_coloring(g, coloring)
    return coloring


def sample_coloring(g: SignedGraph, pq: PQ, rng: Random) -> Optional[Coloring]:
    """Randomized-restart variant of decide_colorable for property sampling.

    The solver shuffles value orders, then a random rotation and an
    optional reflection are applied, so repeated calls cover colorings the
    deterministic scan would never return.
    """
    assignment = _search(g, pq, rng=rng)
    if assignment is None:
        return None
    coloring = Coloring(pq, assignment)
    if rng.random() < 0.5:
        coloring = coloring.reflected()
    coloring = coloring.rotated(rng.randrange(pq.p))
    assert verify_coloring(g, coloring)
    return coloring


# -- the candidate grid and chi_c ------------------------------------------------

def candidate_grid(q_max: int, upper: Fraction) -> list[PQ]:
    """All candidate circumferences 2 <= p/q <= upper with q <= q_max.

    One PQ per distinct value, the smallest-q even-p representation,
    ascending by value.
    """
    if q_max < 1:
        raise InvalidPQError(f"q_max must be positive, got {q_max}")
    upper = Fraction(upper)
    if upper < 2:
        raise InvalidPQError(f"upper must be at least 2, got {upper}")
    by_value: dict[Fraction, PQ] = {}
    for q in range(1, q_max + 1):
        for p in range(2 * q, int(upper * q) + 1, 2):
            value = Fraction(p, q)
            if value > upper:
                break
            cur = by_value.get(value)
            if cur is None or q < cur.q:
                by_value[value] = PQ(p, q)
    return [by_value[v] for v in sorted(by_value)]


def chi_c(g: SignedGraph, q_max: Optional[int] = None,
          upper: Optional[Fraction] = None,
          threads: Optional[int] = None) -> ChiCResult:
    """Least colorable candidate on the (q_max, upper) grid, with certificate.

    Defaults: q_max = n and upper = 4 for bipartite underlying graphs,
    2n otherwise.  Candidates are scanned in ascending value order and the
    first success wins; everything below it is returned as refuted.  The
    scan relies on colorability being monotone in the circumference, which
    the test suite checks empirically on a random corpus.

    q_max is a working assumption, not a proven denominator bound, so the
    result is exact relative to the declared grid; callers see the grid in
    the refuted list (and the CLI echoes it).

    An edgeless graph is colorable for every r, so the smallest admissible
    circumference 2 is returned directly.
    """
    if q_max is None:
        q_max = max(1, g.n)
    if upper is None:
        upper = Fraction(4) if is_bipartite(g) else Fraction(2 * g.n)
    if g.m == 0:
        cert = Coloring(PQ(2, 1), (0,) * g.n)
        return ChiCResult(Fraction(2), cert, ())
    candidates = candidate_grid(q_max, upper)
    refuted: list[PQ] = []
    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for start in range(0, len(candidates), threads):
                chunk = candidates[start:start + threads]
                for pq, coloring in zip(chunk, pool.map(
                        lambda c: decide_colorable(g, c), chunk)):
                    if coloring is not None:
                        return ChiCResult(pq.r, coloring, tuple(refuted))
                    refuted.append(pq)
    else:
        for pq in candidates:
            coloring = decide_colorable(g, pq)
            if coloring is not None:
                return ChiCResult(pq.r, coloring, tuple(refuted))
            refuted.append(pq)
    raise NoCandidateColorableError(
        f"no candidate with q <= {q_max}, value <= {upper} is colorable "
        f"({len(refuted)} refuted)")


def bipartite_four_coloring(g: SignedGraph) -> Coloring:
    """The north-pole/east-point 4-coloring of a signed bipartite graph."""
    parts = is_bipartite(g)
    if parts is None:
        raise NotBipartiteError("graph has an odd cycle")
    part_a, _ = parts
    in_a = set(part_a)
    coloring = Coloring(PQ(4, 1), tuple(0 if v in in_a else 1 for v in range(g.n)))
    assert verify_coloring(g, coloring)
    return coloring


# -- brute-force oracle ----------------------------------------------------------

def brute_force_decide(g: SignedGraph, pq: PQ) -> Optional[tuple[int, ...]]:
    """Oracle decision: plain depth-first enumeration in vertex-id order.

    No bitset domains, no propagation, no degree ordering; constraints are
    checked arithmetically against already-placed neighbours.  Vertex 0 is
    pinned to 0 by rotational symmetry.
    """
    if g.n > BRUTE_FORCE_MAX_N:
        raise TooLargeError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    p, q = pq.p, pq.q
    half = p // 2
    n = g.n
    if n == 0:
        return ()
    earlier = [[(u, sign) for u, sign in g.neighbors(v) if u < v]
               for v in range(n)]
    assign = [0] * n

    def fits(v: int, a: int) -> bool:
        for u, sign in earlier[v]:
            b = assign[u] if sign is NEG else (assign[u] + half) % p
            if circ_distance(a, b, p) < q:
                return False
        return True

    def rec(v: int) -> bool:
        if v == n:
            return True
        for a in (0,) if v == 0 else range(p):
            if fits(v, a):
                assign[v] = a
                if rec(v + 1):
                    return True
        return False

    return tuple(assign) if rec(0) else None


def brute_force_chi_c(g: SignedGraph, q_max: int, upper: Fraction) -> Fraction:
    """Oracle chi_c over the same candidate grid as chi_c; value only."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise TooLargeError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    if g.m == 0:
        return Fraction(2)
    for pq in candidate_grid(q_max, Fraction(upper)):
        if brute_force_decide(g, pq) is not None:
            return pq.r
    raise NoCandidateColorableError(
        f"no candidate with q <= {q_max}, value <= {upper} is colorable")
