"""File formats: SGF text graphs, DOT export, JSON payload helpers.

SGF is a minimal line format:

    sg <n> <m>
    e <u> <v> <+|->

with 0-based vertices and '#' comment lines.  The writer is canonical
(edges sorted, one trailing newline), so write -> read -> write is
byte-identical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .circular import Coloring, PQ
from .core import NEG, Sign, SignedGraph, build_graph
from .errors import Error
from .winding import CircleR, CycleMap, cycle_map
from .core import CycleSeq


class SGFFormatError(Error):
    """Malformed SGF text."""


def write_sgf(g: SignedGraph) -> str:
    lines = [f"sg {g.n} {g.m}"]
    for u, v, sign in g.edges:
        lines.append(f"e {u} {v} {sign.symbol}")
    return "\n".join(lines) + "\n"


def read_sgf(text: str) -> SignedGraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "sg":
            if header is not None:
                raise SGFFormatError(f"line {lineno}: repeated header")
            if len(fields) != 3:
                raise SGFFormatError(f"line {lineno}: header needs 'sg <n> <m>'")
            header = (int(fields[1]), int(fields[2]))
        elif fields[0] == "e":
            if header is None:
                raise SGFFormatError(f"line {lineno}: edge before header")
            if len(fields) != 4:
                raise SGFFormatError(f"line {lineno}: edge needs 'e <u> <v> <+|->'")
            try:
                sign = Sign.from_symbol(fields[3])
            except ValueError as exc:
                raise SGFFormatError(f"line {lineno}: {exc}") from exc
            edges.append((int(fields[1]), int(fields[2]), sign))
        else:
            raise SGFFormatError(f"line {lineno}: unknown record {fields[0]!r}")
    if header is None:
        raise SGFFormatError("missing 'sg <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise SGFFormatError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def to_dot(g: SignedGraph) -> str:
    """DOT text: negative edges solid, positive dashed, sign attribute set."""
    lines = ["graph {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v, sign in g.edges:
        style = "solid" if sign is NEG else "dashed"
        lines.append(f'  {u} -- {v} [style={style}, sign="{sign.symbol}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- rationals and JSON payloads --------------------------------------------------

def frac_str(value: Union[Fraction, int]) -> str:
    """Lowest-terms "p/q" string, denominator always shown."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_frac(text: str) -> Fraction:
    return Fraction(text)


def coloring_to_json(c: Coloring) -> dict:
    return {"p": c.pq.p, "q": c.pq.q, "assign": list(c.assign)}


def coloring_from_json(payload: dict) -> Coloring:
    try:
        pq = PQ(int(payload["p"]), int(payload["q"]))
        assign = tuple(int(a) for a in payload["assign"])
    except KeyError as exc:
        raise Error(f"certificate JSON missing field {exc}") from exc
    return Coloring(pq, assign)


def cyclemap_from_json(payload: dict) -> CycleMap:
    try:
        circle = CircleR(parse_frac(str(payload["r"])))
        cyc = CycleSeq(tuple(int(v) for v in payload["cycle"]))
        positions = [parse_frac(str(x)) for x in payload["images"]]
    except KeyError as exc:
        raise Error(f"mapping JSON missing field {exc}") from exc
    return cycle_map(cyc, circle, positions)
