"""Exact circle geometry: arc extensions, winding numbers, far-polar tests.

Positions on a circle of circumference r live in [0, r) as exact
Fractions, with "clockwise" meaning increasing position (mod r).  A
closed vertex mapping of a cycle extends to a closed arc walk in two
canonical ways: every edge clockwise (cD), or every edge along the
strictly shorter side (csh).  Winding numbers are computed
combinatorially: fix an open interval free of vertex images and count
signed traversals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from .circular import Coloring, verify_coloring
from .core import CycleSeq, Grid, SignedGraph
from .errors import (
    AmbiguousTieError,
    CircleMismatchError,
    EqualAdjacentImagesError,
    IntervalTouchesImageError,
    NotCylinderError,
    PartialAssignmentError,
    RTooLargeError,
)

RationalLike = Union[Fraction, int, str]


@dataclass(frozen=True)
class CircleR:
    """Geometric circle of circumference r > 0."""

    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", Fraction(self.r))
        if self.r <= 0:
            raise ValueError(f"circumference must be positive, got {self.r}")


@dataclass(frozen=True)
class CirclePoint:
    circle: CircleR
    pos: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "pos", Fraction(self.pos))
        if not (0 <= self.pos < self.circle.r):
            raise ValueError(f"position {self.pos} outside [0, {self.circle.r})")


def point(circle: CircleR, pos: RationalLike) -> CirclePoint:
    """Place pos on the circle, normalising modulo the circumference."""
    return CirclePoint(circle, Fraction(pos) % circle.r)


def circ_dist(x: CirclePoint, y: CirclePoint) -> Fraction:
    """Shorter-arc distance between two points of the same circle."""
    if x.circle != y.circle:
        raise CircleMismatchError(
            f"points on circles of circumference {x.circle.r} and {y.circle.r}")
    d = abs(x.pos - y.pos)
    return min(d, x.circle.r - d)


def antipode(x: CirclePoint) -> CirclePoint:
    return point(x.circle, x.pos + x.circle.r / 2)


class Direction(Enum):
    CLOCKWISE = 1
    ANTICLOCKWISE = -1


@dataclass(frozen=True)
class Arc:
    """Directed arc; covers the open set of points swept from start."""

    start: CirclePoint
    end: CirclePoint
    direction: Direction
    length: Fraction

    def covers(self, pos: Fraction) -> bool:
        """True iff pos lies strictly inside the swept arc."""
        r = self.start.circle.r
        if self.direction is Direction.CLOCKWISE:
            offset = (pos - self.start.pos) % r
        else:
            offset = (self.start.pos - pos) % r
        return 0 < offset < self.length


@dataclass(frozen=True)
class ArcWalk:
    """Closed head-to-tail sequence of directed arcs."""

    circle: CircleR
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        for arc, nxt in zip(self.arcs, self.arcs[1:] + self.arcs[:1]):
            if arc.end.pos != nxt.start.pos:
                raise ValueError("arc walk does not close up head-to-tail")

    def signed_length(self) -> Fraction:
        return sum((arc.length * arc.direction.value for arc in self.arcs),
                   Fraction(0))


@dataclass(frozen=True)
class CycleMap:
    """A cycle's vertices mapped to exact points of one circle."""

    cycle: CycleSeq
    circle: CircleR
    images: tuple[CirclePoint, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.cycle):
            raise PartialAssignmentError(
                f"{len(self.images)} images for {len(self.cycle)} vertices")
        for img in self.images:
            if img.circle != self.circle:
                raise CircleMismatchError("image on a different circle")

    def image(self, i: int) -> CirclePoint:
        """Image of the vertex at cyclic position i."""
        return self.images[i % len(self.images)]


def cycle_map(cycle: CycleSeq, circle: CircleR,
              positions: Sequence[RationalLike]) -> CycleMap:
    """Convenience builder taking raw positions (normalised mod r)."""
    return CycleMap(cycle, circle, tuple(point(circle, x) for x in positions))


@dataclass(frozen=True)
class Interval:
    """Open arc (start, start+length) clockwise, free of reference images."""

    circle: CircleR
    start: Fraction
    length: Fraction

    def __post_init__(self) -> None:
        if not (0 < self.length <= self.circle.r):
            raise ValueError(f"interval length {self.length} outside (0, r]")

    @property
    def midpoint(self) -> Fraction:
        return (self.start + self.length / 2) % self.circle.r

    def contains(self, pos: Fraction) -> bool:
        offset = (pos - self.start) % self.circle.r
        return 0 < offset < self.length


# -- extensions -------------------------------------------------------------------

def extend_cD(m: CycleMap) -> ArcWalk:
    """Route every cycle edge clockwise from the first image to the next.

    Total length is a positive multiple of r, so the winding number of the
    result is a positive integer.  Equal adjacent images leave the edge's
    arc undefined (far-polar mappings never produce them).
    """
    n = len(m.cycle)
    r = m.circle.r
    arcs = []
    for i in range(n):
        a, b = m.image(i), m.image(i + 1)
        length = (b.pos - a.pos) % r
        if length == 0:
            raise EqualAdjacentImagesError(
                f"adjacent vertices {m.cycle[i]} and {m.cycle[i + 1]} share image {a.pos}")
        arcs.append(Arc(a, b, Direction.CLOCKWISE, length))
    return ArcWalk(m.circle, tuple(arcs))


def extend_csh(m: CycleMap) -> ArcWalk:
    """Route every cycle edge along the strictly shorter side.

    Equal images give a zero-length arc; exactly antipodal images have no
    shorter side and are rejected.
    """
    n = len(m.cycle)
    r = m.circle.r
    arcs = []
    for i in range(n):
        a, b = m.image(i), m.image(i + 1)
        clockwise = (b.pos - a.pos) % r
        if clockwise == 0:
            arcs.append(Arc(a, b, Direction.CLOCKWISE, Fraction(0)))
        elif clockwise < r - clockwise:
            arcs.append(Arc(a, b, Direction.CLOCKWISE, clockwise))
        elif clockwise > r - clockwise:
            arcs.append(Arc(a, b, Direction.ANTICLOCKWISE, r - clockwise))
        else:
            raise AmbiguousTieError(
                f"vertices {m.cycle[i]} and {m.cycle[i + 1]} map to antipodal points")
    return ArcWalk(m.circle, tuple(arcs))


def pick_interval(m: CycleMap) -> Interval:
    """Deterministic image-free open interval: the gap clockwise from the
    smallest image position to the next distinct one (the whole remaining
    circle when all images coincide)."""
    positions = sorted({img.pos for img in m.images})
    start = positions[0]
    if len(positions) == 1:
        return Interval(m.circle, start, m.circle.r)
    return Interval(m.circle, start, positions[1] - start)


def all_gap_intervals(m: CycleMap) -> list[Interval]:
    """Every maximal image-free open interval (for invariance checks)."""
    positions = sorted({img.pos for img in m.images})
    r = m.circle.r
    if len(positions) == 1:
        return [Interval(m.circle, positions[0], r)]
    return [Interval(m.circle, a, (b - a) % r)
            for a, b in zip(positions, positions[1:] + positions[:1])]


def winding_number(walk: ArcWalk, interval: Interval) -> int:
    """Clockwise minus anticlockwise traversals of an image-free interval.

    Every arc either covers the interval completely or misses it, so one
    interior probe point decides each arc; the interval must not contain
    any arc endpoint.
    """
    probe = interval.midpoint
    for arc in walk.arcs:
        for endpoint in (arc.start, arc.end):
            if interval.contains(endpoint.pos):
                raise IntervalTouchesImageError(
                    f"interval contains arc endpoint at {endpoint.pos}")
    total = 0
    for arc in walk.arcs:
        if arc.covers(probe):
            total += arc.direction.value
    return total


# -- far-polar tests ----------------------------------------------------------------

def is_far_polar_cycle(m: CycleMap) -> bool:
    """Each image must sit strictly inside the larger of the two parts cut
    by its cyclic neighbours' images (equal neighbours cut parts of length
    0 and r, so anything except their common point qualifies)."""
    n = len(m.cycle)
    r = m.circle.r
    for i in range(n):
        a = m.image(i - 1).pos
        b = m.image(i + 1).pos
        x = m.image(i).pos
        clockwise = (b - a) % r
        if clockwise == 0:
            if x == a:
                return False
        elif clockwise == r - clockwise:
            return False
        elif clockwise > r - clockwise:
            if not 0 < (x - a) % r < clockwise:
                return False
        else:
            if not 0 < (x - b) % r < r - clockwise:
                return False
    return True


def is_far_polar_graph(g: SignedGraph, images: Sequence[CirclePoint]) -> bool:
    """True iff every vertex is separated from all its neighbours' images
    by some diameter.

    Searched exactly: the set of admissible semicircle boundaries changes
    only at image points and their antipodes, so probing the midpoint of
    every gap between consecutive breakpoints is exhaustive.
    """
    if len(images) != g.n:
        raise PartialAssignmentError(
            f"{len(images)} images for {g.n} vertices")
    circle = images[0].circle if images else None
    for img in images:
        if img.circle != circle:
            raise CircleMismatchError("image on a different circle")
    for v in range(g.n):
        nbrs = [images[w].pos for w, _ in g.neighbors(v)]
        if not nbrs:
            continue
        if not _has_separating_semicircle(circle.r, images[v].pos, nbrs):
            return False
    return True


def _has_separating_semicircle(r: Fraction, x: Fraction,
                               nbrs: list[Fraction]) -> bool:
    half = r / 2
    breakpoints = sorted({pos % r for p in nbrs + [x] for pos in (p, p + half)})
    candidates = [
        ((a + b) / 2) % r
        for a, b in zip(breakpoints, breakpoints[1:] + [breakpoints[0] + r])]
    for t in candidates:
        if not 0 < (x - t - half) % r < half:
            continue
        if all(0 < (pos - t) % r < half for pos in nbrs):
            return True
    return False


# -- green/orange classification ----------------------------------------------------

@dataclass(frozen=True)
class GreenOrange:
    """cD edge classification against a fixed interval.

    ``greens[i]`` says whether the arc of edge (v_i, v_{i+1}) covers the
    interval; ``bichromatic`` lists cycle positions whose two incident
    edges got different colors (always evenly many).
    """

    greens: tuple[bool, ...]
    bichromatic: tuple[int, ...]

    @property
    def green_count(self) -> int:
        return sum(self.greens)


def green_orange(m: CycleMap, interval: Interval) -> GreenOrange:
    walk = extend_cD(m)
    probe = interval.midpoint
    for arc in walk.arcs:
        for endpoint in (arc.start, arc.end):
            if interval.contains(endpoint.pos):
                raise IntervalTouchesImageError(
                    f"interval contains image at {endpoint.pos}")
    greens = tuple(arc.covers(probe) for arc in walk.arcs)
    n = len(greens)
    bichromatic = tuple(i for i in range(n) if greens[i - 1] != greens[i])
    return GreenOrange(greens, bichromatic)


# -- bridges from colorings ----------------------------------------------------------

def coloring_to_cyclemap(c: Coloring, cyc: CycleSeq) -> CycleMap:
    """Scale Z_p colors onto O_{p/q}: position = assign(v) / q."""
    circle = CircleR(c.pq.r)
    images = []
    for v in cyc:
        if v >= len(c.assign):
            raise PartialAssignmentError(f"vertex {v} has no color")
        images.append(point(circle, Fraction(c.assign[v], c.pq.q)))
    return CycleMap(cyc, circle, tuple(images))


def coloring_to_images(c: Coloring) -> tuple[CirclePoint, ...]:
    """All vertex images of a coloring on O_{p/q}."""
    circle = CircleR(c.pq.r)
    return tuple(point(circle, Fraction(a, c.pq.q)) for a in c.assign)


def layer_winding_parities(g: SignedGraph, c: Coloring) -> list[int]:
    """Winding parity of every layer cycle of a cylinder-labelled graph.

    Layer i's cycle (v_{i,1}, ..., v_{i,k}) is an exact-square half of the
    all-negative zigzag cycle between layers i and i+1, so for any valid
    coloring at r < 4 all parities agree; this computes them so the
    property can be observed.
    """
    if c.pq.r >= 4:
        raise RTooLargeError(f"need r < 4, got {c.pq.r}")
    grid: dict[tuple[int, int], int] = {}
    for v, label in enumerate(g.labels):
        if not isinstance(label, Grid):
            raise NotCylinderError(f"vertex {v} is not grid-labelled")
        grid[(label.layer, label.index)] = v
    layers = max(layer for layer, _ in grid)
    width = max(index for _, index in grid)
    if len(grid) != g.n or len(grid) != layers * width:
        raise NotCylinderError("grid labels do not form a complete cylinder")
    if not verify_coloring(g, c):
        raise ValueError("coloring does not satisfy the edge constraints")
    parities = []
    for layer in range(1, layers + 1):
        cyc = CycleSeq(tuple(grid[(layer, j)] for j in range(1, width + 1)))
        m = coloring_to_cyclemap(c, cyc)
        walk = extend_csh(m)
        parities.append(winding_number(walk, pick_interval(m)) % 2)
    return parities
