"""Randomized verification harness for the winding-number lemmas.

Each suite draws mappings at random (solver-sampled circular colorings at
r < 4, which are automatically far-polar, mixed with direct rejection
sampling of rational image tuples), evaluates the lemma's predicate, and
reports passes/failures with full counterexample mappings.  Trials use
independent RNG streams split from the seed, so reports are reproducible
and order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from random import Random
from typing import Callable, Mapping, Optional, Union

from .circular import Coloring, PQ, candidate_grid, sample_coloring
from .core import NEG, CycleSeq, SignedGraph, build_graph, exact_square
from .errors import (
    BadLemmaParamsError,
    HasPositiveEdgeError,
    RTooLargeError,
    UncolorableError,
)
from .families import mobius_ladder
from .winding import (
    CircleR,
    CirclePoint,
    CycleMap,
    coloring_to_cyclemap,
    coloring_to_images,
    cycle_map,
    extend_cD,
    extend_csh,
    green_orange,
    is_far_polar_cycle,
    is_far_polar_graph,
    pick_interval,
    winding_number,
)


class Lemma(Enum):
    NONCROSSING = "noncrossing"
    EVEN_CYCLE_PARITY = "even-cycle-parity"
    ODD_SQUARE_ODD = "odd-square-odd"
    STAR_ZERO = "star-zero"
    C4_TWO = "c4-two"
    GREEN_PARITY = "green-parity"
    ZIGZAG_4K = "zigzag-4k"
    MOBIUS_ODD = "mobius-odd"


@dataclass(frozen=True)
class LemmaReport:
    lemma: Lemma
    params: dict
    seed: int
    trials: int
    passes: int
    failures: int
    counterexamples: tuple[dict, ...]
    details: dict = field(default_factory=dict)


def cyclemap_to_json(m: CycleMap) -> dict:
    """The JSON mapping format shared with the CLI: rationals as strings."""
    r = m.circle.r
    return {
        "r": f"{r.numerator}/{r.denominator}",
        "cycle": list(m.cycle),
        "images": [f"{img.pos.numerator}/{img.pos.denominator}" for img in m.images],
    }


# -- samplers --------------------------------------------------------------------

def _cycle_graph(n: int) -> SignedGraph:
    return build_graph(n, [(i, (i + 1) % n, NEG) for i in range(n)])


def _star_graph(leaves: int) -> SignedGraph:
    return build_graph(leaves + 1, [(0, i, NEG) for i in range(1, leaves + 1)])


def _sample_on_grid(g: SignedGraph, rng: Random, lower: Fraction,
                    q_cap: int = 4) -> Coloring:
    """Solver-sample a coloring at a random grid circumference in [lower, 4)."""
    cands = [pq for pq in candidate_grid(q_cap, Fraction(4))
             if lower <= pq.r < 4]
    rng.shuffle(cands)
    for pq in cands:
        coloring = sample_coloring(g, pq, rng)
        if coloring is not None:
            return coloring
    raise UncolorableError(
        f"no grid circumference in [{lower}, 4) colors the graph")


def sample_far_polar(g: SignedGraph, pq: PQ,
                     seed: Union[int, Random]) -> tuple[CirclePoint, ...]:
    """Solver-sampled vertex images of an all-negative graph at r < 4.

    Any circular r-coloring with r < 4 of an all-negative graph keeps each
    vertex at distance >= 1 from its neighbours, confining them to an arc
    of length r - 2 < r/2 opposite it, so the returned images are always
    far-polar; this is asserted.
    """
    if not g.is_all_negative():
        raise HasPositiveEdgeError("far-polar sampling needs an all-negative graph")
    if pq.r >= 4:
        raise RTooLargeError(f"need r < 4, got {pq.r}")
    rng = seed if isinstance(seed, Random) else Random(seed)
    coloring = sample_coloring(g, pq, rng)
    if coloring is None:
        raise UncolorableError(f"graph admits no circular {pq.r}-coloring")
    images = coloring_to_images(coloring)
    assert is_far_polar_graph(g, images)
    return images


def _rejection_cycle_map(n: int, rng: Random,
                         attempts: int = 300) -> Optional[CycleMap]:
    """Direct sampling of rational image tuples, rejected until far-polar.

    Covers far-polar maps that are not colorings; viable for short cycles
    where the acceptance rate is workable.
    """
    denom = 24
    r = Fraction(rng.randint(2, 6))
    circle = CircleR(r)
    cyc = CycleSeq(tuple(range(n)))
    for _ in range(attempts):
        positions = [Fraction(rng.randrange(denom), denom) * r for _ in range(n)]
        m = cycle_map(cyc, circle, positions)
        if is_far_polar_cycle(m):
            return m
    return None


def _far_polar_cycle_map(n: int, rng: Random) -> CycleMap:
    """A far-polar mapping of the n-cycle, mixing both samplers."""
    if n <= 8 and rng.random() < 0.5:
        m = _rejection_cycle_map(n, rng)
        if m is not None:
            return m
    g = _cycle_graph(n)
    lower = Fraction(2) if n % 2 == 0 else Fraction(2 * n, n - 1)
    coloring = _sample_on_grid(g, rng, lower)
    m = coloring_to_cyclemap(coloring, CycleSeq(tuple(range(n))))
    assert is_far_polar_cycle(m)
    return m


def _square_maps(m: CycleMap) -> list[CycleMap]:
    by_vertex = dict(zip(m.cycle, m.images))
    return [CycleMap(sq, m.circle, tuple(by_vertex[v] for v in sq))
            for sq in exact_square(m.cycle)]


# -- per-lemma trial predicates -----------------------------------------------------

def _trial_noncrossing(rng: Random, params: dict) -> tuple[bool, CycleMap]:
    n = params["n"]
    m = _far_polar_cycle_map(n, rng)
    interval = pick_interval(m)
    probe = interval.midpoint
    noncrossing = 0
    for sq_map in _square_maps(m):
        for arc in extend_csh(sq_map).arcs:
            if not arc.covers(probe):
                noncrossing += 1
    return noncrossing % 2 == 0, m


def _trial_even_cycle_parity(rng: Random, params: dict) -> tuple[bool, CycleMap]:
    n = params["n"]
    coloring = _sample_on_grid(_cycle_graph(n), rng, Fraction(2))
    m = coloring_to_cyclemap(coloring, CycleSeq(tuple(range(n))))
    parities = []
    for sq_map in _square_maps(m):
        w = winding_number(extend_csh(sq_map), pick_interval(sq_map))
        parities.append(w % 2)
    return parities[0] == parities[1], m


def _trial_odd_square_odd(rng: Random, params: dict) -> tuple[bool, CycleMap]:
    n = params["n"]
    m = _far_polar_cycle_map(n, rng)
    (sq_map,) = _square_maps(m)
    w = winding_number(extend_csh(sq_map), pick_interval(sq_map))
    return w % 2 == 1, m


def _trial_star_zero(rng: Random, params: dict) -> tuple[bool, CycleMap]:
    leaves = params["n"]
    star = _star_graph(leaves)
    coloring = _sample_on_grid(star, rng, Fraction(2))
    order = list(range(1, leaves + 1))
    rng.shuffle(order)
    m = coloring_to_cyclemap(coloring, CycleSeq(tuple(order)))
    w = winding_number(extend_csh(m), pick_interval(m))
    return w == 0, m


def _trial_c4_two(rng: Random, params: dict,
                  details: dict) -> tuple[bool, CycleMap]:
    m = _far_polar_cycle_map(4, rng)
    w = winding_number(extend_cD(m), pick_interval(m))
    counts = details.setdefault("sign_counts", {"+2": 0, "-2": 0, "other": 0})
    if w == 2:
        counts["+2"] += 1
    elif w == -2:
        counts["-2"] += 1
    else:
        counts["other"] += 1
    return abs(w) == 2, m


def _trial_green_parity(rng: Random, params: dict) -> tuple[bool, CycleMap]:
    n = 2 * params["k"]
    m = _far_polar_cycle_map(n, rng)
    go = green_orange(m, pick_interval(m))
    even_positions = sum(1 for i in go.bichromatic if i % 2 == 0)
    odd_positions = sum(1 for i in go.bichromatic if i % 2 == 1)
    target = go.green_count % 2
    return even_positions % 2 == target and odd_positions % 2 == target, m


def _trial_zigzag_4k(rng: Random, params: dict) -> tuple[bool, CycleMap]:
    n = 4 * params["k"]
    m = _far_polar_cycle_map(n, rng)
    target = green_orange(m, pick_interval(m)).green_count % 2
    for sq_map in _square_maps(m):
        w = winding_number(extend_csh(sq_map), pick_interval(sq_map))
        if w % 2 != target:
            return False, m
    return True, m


def _trial_mobius_odd(rng: Random, params: dict) -> tuple[bool, CycleMap]:
    k = params["k"]
    ladder = mobius_ladder(k)
    lower = Fraction(4 * k + 2, 2 * k)  # odd girth 2k+1 forces r >= 2 + 1/k
    coloring = _sample_on_grid(ladder, rng, lower)
    assert is_far_polar_graph(ladder, coloring_to_images(coloring))
    rim = CycleSeq(tuple(range(4 * k)))
    m = coloring_to_cyclemap(coloring, rim)
    for sq_map in _square_maps(m):
        w = winding_number(extend_csh(sq_map), pick_interval(sq_map))
        if w % 2 != 1:
            return False, m
    return True, m


# -- the suite ------------------------------------------------------------------

def _check_params(lemma: Lemma, params: dict) -> dict:
    def need(name: str, minimum: int, parity: Optional[int] = None) -> None:
        if name not in params:
            raise BadLemmaParamsError(f"{lemma.value} needs parameter {name!r}")
        value = params[name]
        if not isinstance(value, int) or value < minimum:
            raise BadLemmaParamsError(
                f"{lemma.value}: {name} must be an int >= {minimum}")
        if parity is not None and value % 2 != parity:
            raise BadLemmaParamsError(
                f"{lemma.value}: {name} must be {'odd' if parity else 'even'}")

    if lemma in (Lemma.NONCROSSING,):
        need("n", 5)
        if params["n"] % 2 == 0 and params["n"] < 6:
            raise BadLemmaParamsError("even n below 6 has a degenerate square")
    elif lemma is Lemma.EVEN_CYCLE_PARITY:
        need("n", 6, parity=0)
    elif lemma is Lemma.ODD_SQUARE_ODD:
        need("n", 3, parity=1)
    elif lemma is Lemma.STAR_ZERO:
        need("n", 3)
    elif lemma is Lemma.C4_TWO:
        pass
    elif lemma in (Lemma.GREEN_PARITY, Lemma.ZIGZAG_4K, Lemma.MOBIUS_ODD):
        need("k", 2)
    return params


_TRIALS: dict[Lemma, Callable] = {
    Lemma.NONCROSSING: _trial_noncrossing,
    Lemma.EVEN_CYCLE_PARITY: _trial_even_cycle_parity,
    Lemma.ODD_SQUARE_ODD: _trial_odd_square_odd,
    Lemma.STAR_ZERO: _trial_star_zero,
    Lemma.GREEN_PARITY: _trial_green_parity,
    Lemma.ZIGZAG_4K: _trial_zigzag_4k,
    Lemma.MOBIUS_ODD: _trial_mobius_odd,
}


def lemma_suite(lemma: Union[Lemma, str], params: Optional[Mapping] = None,
                trials: int = 500, seed: int = 0) -> LemmaReport:
    """Run ``trials`` independent randomized checks of one lemma predicate.

    Failures carry the full counterexample mapping in the shared JSON
    mapping format.  Per-trial RNG streams are split from (seed, index),
    so a report is reproducible regardless of execution order.
    """
    lemma = Lemma(lemma)
    if trials < 1:
        raise BadLemmaParamsError("trials must be at least 1")
    params = _check_params(lemma, dict(params or {}))
    details: dict = {}
    passes = 0
    counterexamples: list[dict] = []
    for index in range(trials):
        rng = Random(f"{seed}:{lemma.value}:{index}")
        if lemma is Lemma.C4_TWO:
            ok, mapping = _trial_c4_two(rng, params, details)
        else:
            ok, mapping = _TRIALS[lemma](rng, params)
        if ok:
            passes += 1
        else:
            counterexamples.append(cyclemap_to_json(mapping))
    return LemmaReport(
        lemma=lemma,
        params=params,
        seed=seed,
        trials=trials,
        passes=passes,
        failures=trials - passes,
        counterexamples=tuple(counterexamples),
        details=details,
    )
