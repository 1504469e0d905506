"""Deterministic constructors for every graph family used by the suite.

All constructors return immutable :class:`SignedGraph` instances whose
vertices carry structural labels (Grid/Rung/Apex) and whose ``params``
field records the instance, so downstream checks can recover (ell, k).

Index convention: the 1-based modular arithmetic on grid columns is
implemented as ``((j - 1 + shift) % width) + 1`` to avoid off-by-one
drift against the (layer, index) labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import NEG, POS, Apex, Edge, Grid, Plain, Rung, SignedGraph
from .errors import BadParamsError


class Family(str, Enum):
    CYLINDER = "cylinder"
    MYCIELSKI = "mycielski"
    BQ_ODD = "bq-odd"
    BQ_EVEN = "bq-even"
    BM = "bm"
    MOBIUS_LADDER = "mobius"
    S_CONSTRUCTION = "s-of"


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    ell: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self) -> None:
        fam, ell, k = self.family, self.ell, self.k
        if fam is Family.CYLINDER:
            _require(ell is not None and ell >= 1, "cylinder needs ell >= 1")
            _require(k is not None and k >= 3, "cylinder needs k >= 3")
        elif fam is Family.MYCIELSKI:
            _require(ell is not None and ell >= 1, "mycielski needs ell >= 1")
            _require(k is not None and k >= 1, "mycielski needs k >= 1")
        elif fam is Family.BQ_ODD:
            _require(ell is not None and ell >= 2, "bq-odd needs ell >= 2")
            _require(k is not None and k >= 1, "bq-odd needs k >= 1")
        elif fam is Family.BQ_EVEN:
            _require(ell is not None and ell >= 2, "bq-even needs ell >= 2")
            _require(k is not None and k >= 2, "bq-even needs k >= 2")
        elif fam is Family.BM:
            # ell = 1 is admitted so the 2k^2-k+1 instance exists at k = 2
            _require(ell is not None and ell >= 1, "bm needs ell >= 1")
            _require(k is not None and k >= 2, "bm needs k >= 2")
        elif fam is Family.MOBIUS_LADDER:
            _require(k is not None and k >= 1, "mobius needs k >= 1")

    def grid_width(self) -> Optional[int]:
        """Number of columns in the underlying cylinder grid, if any."""
        if self.k is None:
            return None
        if self.family is Family.CYLINDER:
            return self.k
        if self.family in (Family.MYCIELSKI, Family.BQ_ODD):
            return 2 * self.k + 1
        if self.family in (Family.BQ_EVEN, Family.BM):
            return 2 * self.k
        return None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise BadParamsError(message)


def _gid(i: int, j: int, width: int) -> int:
    """Vertex id of grid position (layer i, index j), both 1-based."""
    return (i - 1) * width + (j - 1)


def _wrap(j: int, width: int) -> int:
    return ((j - 1) % width) + 1


def _grid_labels(ell: int, width: int) -> list:
    return [Grid(i, j) for i in range(1, ell + 1) for j in range(1, width + 1)]


def _cylinder_edges(ell: int, width: int) -> list[Edge]:
    """All-negative quadrangulation edges between consecutive layers."""
    edges = []
    for i in range(1, ell):
        for j in range(1, width + 1):
            edges.append(Edge(_gid(i, j, width), _gid(i + 1, _wrap(j - 1, width), width), NEG))
            edges.append(Edge(_gid(i, j, width), _gid(i + 1, j, width), NEG))
    return edges


def cylinder(ell: int, k: int) -> SignedGraph:
    """Cylinder grid: ell layers of k vertices, zigzag-joined, all negative."""
    params = FamilyParams(Family.CYLINDER, ell, k)
    return SignedGraph(ell * k, tuple(_grid_labels(ell, k)),
                       tuple(_cylinder_edges(ell, k)), params)


def mycielski_cycle(ell: int, k: int) -> SignedGraph:
    """Generalised Mycielski over the odd cycle on 2k+1 vertices, all negative.

    Layer 1 gains the near-diagonal chords joining indices k apart (they
    form a copy of the odd cycle); an apex is joined to all of layer ell.
    """
    params = FamilyParams(Family.MYCIELSKI, ell, k)
    width = 2 * k + 1
    edges = _cylinder_edges(ell, width)
    for j in range(1, width + 1):
        edges.append(Edge(_gid(1, j, width), _gid(1, _wrap(j + k, width), width), NEG))
    apex = ell * width
    for j in range(1, width + 1):
        edges.append(Edge(_gid(ell, j, width), apex, NEG))
    labels = _grid_labels(ell, width) + [Apex()]
    return SignedGraph(ell * width + 1, tuple(labels), tuple(edges), params)


def bq_odd(ell: int, k: int) -> SignedGraph:
    """Signed bipartite quadrangulation over an odd-width cylinder.

    The cylinder is all negative; a positive edge joins v_{1,j} to
    v_{2,j+k} (these steps make the first two layers a Moebius ladder);
    an apex is joined negatively to all of layer ell.
    """
    params = FamilyParams(Family.BQ_ODD, ell, k)
    width = 2 * k + 1
    edges = _cylinder_edges(ell, width)
    for j in range(1, width + 1):
        edges.append(Edge(_gid(1, j, width), _gid(2, _wrap(j + k, width), width), POS))
    apex = ell * width
    for j in range(1, width + 1):
        edges.append(Edge(_gid(ell, j, width), apex, NEG))
    labels = _grid_labels(ell, width) + [Apex()]
    return SignedGraph(ell * width + 1, tuple(labels), tuple(edges), params)


def bq_even(ell: int, k: int) -> SignedGraph:
    """Even-width quadrangulation with antipodal chords, all negative.

    Layers 1 and 2 each gain the k antipodal chords v_{i,j}v_{i,j+k}
    (the pairing j <-> j+k over 2k indices yields each chord once);
    an apex is joined to all of layer ell.
    """
    params = FamilyParams(Family.BQ_EVEN, ell, k)
    width = 2 * k
    edges = _cylinder_edges(ell, width)
    for layer in (1, 2):
        for j in range(1, k + 1):
            edges.append(Edge(_gid(layer, j, width), _gid(layer, _wrap(j + k, width), width), NEG))
    apex = ell * width
    for j in range(1, width + 1):
        edges.append(Edge(_gid(ell, j, width), apex, NEG))
    labels = _grid_labels(ell, width) + [Apex()]
    return SignedGraph(ell * width + 1, tuple(labels), tuple(edges), params)


def bm(ell: int, k: int) -> SignedGraph:
    """Signed bipartite ladder variant with k added first-layer rungs.

    Rung u_i is joined negatively to v_{1,i}, v_{1,i+1} and positively to
    v_{1,i+k}, v_{1,i+k+1} (indices mod 2k); an apex is joined to layer ell.
    """
    params = FamilyParams(Family.BM, ell, k)
    width = 2 * k
    edges = _cylinder_edges(ell, width)
    rung_base = ell * width
    for i in range(1, k + 1):
        rung = rung_base + (i - 1)
        edges.append(Edge(_gid(1, _wrap(i, width), width), rung, NEG))
        edges.append(Edge(_gid(1, _wrap(i + 1, width), width), rung, NEG))
        edges.append(Edge(_gid(1, _wrap(i + k, width), width), rung, POS))
        edges.append(Edge(_gid(1, _wrap(i + k + 1, width), width), rung, POS))
    apex = rung_base + k
    for j in range(1, width + 1):
        edges.append(Edge(_gid(ell, j, width), apex, NEG))
    labels = _grid_labels(ell, width) + [Rung(i) for i in range(1, k + 1)] + [Apex()]
    return SignedGraph(ell * width + k + 1, tuple(labels), tuple(edges), params)


def mobius_ladder(k: int) -> SignedGraph:
    """Moebius ladder on 4k vertices: the rim cycle plus antipodal chords.

    Vertices 0..4k-1 run around the rim; chord i joins i to i+2k.  k = 1
    gives K_4, accepted here although its rim squares are degenerate.
    """
    params = FamilyParams(Family.MOBIUS_LADDER, None, k)
    n = 4 * k
    edges = [Edge(i, (i + 1) % n, NEG) for i in range(n)]
    edges += [Edge(i, i + 2 * k, NEG) for i in range(2 * k)]
    labels = tuple(Plain(i) for i in range(n))
    return SignedGraph(n, labels, tuple(edges), params)


def s_construction(g: SignedGraph) -> SignedGraph:
    """Replace each edge uv by a negative 4-cycle u-x-v-y through new vertices.

    Input signs are ignored (the construction depends only on the
    underlying graph).  Each 4-cycle carries exactly one positive edge,
    fixed as u-x for u < v, so the output is deterministic; the result is
    always bipartite (originals on one side, new vertices on the other).
    """
    edges: list[Edge] = []
    labels = list(g.labels)
    nxt = g.n
    for u, v, _ in g.edges:
        x, y = nxt, nxt + 1
        nxt += 2
        labels += [Plain(x), Plain(y)]
        edges.append(Edge(u, x, POS))
        edges.append(Edge(x, v, NEG))
        edges.append(Edge(v, y, NEG))
        edges.append(Edge(y, u, NEG))
    return SignedGraph(nxt, tuple(labels), tuple(edges),
                       FamilyParams(Family.S_CONSTRUCTION))


def make_family(params: FamilyParams, base: Optional[SignedGraph] = None) -> SignedGraph:
    """Dispatch a FamilyParams to its constructor (s-of requires ``base``)."""
    fam = params.family
    if fam is Family.CYLINDER:
        return cylinder(params.ell, params.k)
    if fam is Family.MYCIELSKI:
        return mycielski_cycle(params.ell, params.k)
    if fam is Family.BQ_ODD:
        return bq_odd(params.ell, params.k)
    if fam is Family.BQ_EVEN:
        return bq_even(params.ell, params.k)
    if fam is Family.BM:
        return bm(params.ell, params.k)
    if fam is Family.MOBIUS_LADDER:
        return mobius_ladder(params.k)
    if fam is Family.S_CONSTRUCTION:
        if base is None:
            raise BadParamsError("s-of needs a base graph")
        return s_construction(base)
    raise BadParamsError(f"unknown family {fam!r}")
