"""Command-line front end: generate families, compute girth/chi_c/windings,
run lemma suites, and cross-check against the brute-force oracles.

Exit codes: 0 success, 1 domain error (reported as JSON on stdout),
2 usage error (argparse message on stderr).  SGC_THREADS caps the number
of worker threads `chic` may use for candidate evaluation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Optional

from . import circular, girth, io, lemmas
from .core import SignedGraph, is_bipartite
from .errors import Error
from .families import Family, FamilyParams, make_family
from .winding import extend_cD, extend_csh, pick_interval, winding_number

_FAMILY_CHOICES = [f.value for f in Family]
_LEMMA_CHOICES = [l.value for l in lemmas.Lemma]


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _read_graph(path: str) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as handle:
        return io.read_sgf(handle.read())


def _engine_threads() -> Optional[int]:
    raw = os.environ.get("SGC_THREADS")
    if raw is None:
        return os.cpu_count()
    threads = int(raw)
    if threads < 1:
        raise Error(f"SGC_THREADS must be a positive integer, got {raw!r}")
    return threads


def _cmd_gen(args: argparse.Namespace) -> int:
    family = Family(args.family)
    if family is Family.S_CONSTRUCTION:
        if args.input is None:
            raise Error("--family s-of needs --input base.sgf")
        base = _read_graph(args.input)
        graph = make_family(FamilyParams(family), base)
    elif family is Family.MOBIUS_LADDER:
        if args.k is None:
            raise Error("mobius needs --k")
        graph = make_family(FamilyParams(family, None, args.k))
    else:
        if args.ell is None or args.k is None:
            raise Error(f"{family.value} needs --ell and --k")
        graph = make_family(FamilyParams(family, args.ell, args.k))
    text = io.write_sgf(graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(io.to_dot(graph))
    return 0


def _girth_payload(result: girth.GirthResult) -> dict:
    return {
        "negative_girth": result.length,
        "witness": list(result.witness) if result.witness is not None else None,
    }


def _cmd_girth(args: argparse.Namespace) -> int:
    _emit(_girth_payload(girth.negative_girth(_read_graph(args.graph))))
    return 0


def _cmd_chic(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    qmax = args.qmax if args.qmax is not None else max(1, graph.n)
    if args.upper:
        upper = io.parse_frac(args.upper)
    else:
        upper = Fraction(4) if is_bipartite(graph) else Fraction(2 * graph.n)
    result = circular.chi_c(graph, q_max=qmax, upper=upper,
                            threads=_engine_threads())
    payload = {
        "value": io.frac_str(result.value),
        "qmax": qmax,
        "upper": io.frac_str(upper),
        "refuted": len(result.refuted),
        "certificate": io.coloring_to_json(result.certificate),
        "certificate_path": None,
        "note": "value is the least colorable candidate on the declared grid",
    }
    if args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as handle:
            json.dump(io.coloring_to_json(result.certificate), handle, sort_keys=True)
            handle.write("\n")
        payload["certificate_path"] = args.certificate
    _emit(payload)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    with open(args.certificate, "r", encoding="utf-8") as handle:
        coloring = io.coloring_from_json(json.load(handle))
    _emit(circular.verify_coloring(graph, coloring))
    return 0


def _cmd_winding(args: argparse.Namespace) -> int:
    with open(args.mapping, "r", encoding="utf-8") as handle:
        mapping = io.cyclemap_from_json(json.load(handle))
    extend = extend_cD if args.extension == "cD" else extend_csh
    walk = extend(mapping)
    _emit(winding_number(walk, pick_interval(mapping)))
    return 0


def _cmd_lemmas(args: argparse.Namespace) -> int:
    params = {}
    for item in args.params or []:
        if "=" not in item:
            raise Error(f"--params entries must be key=value, got {item!r}")
        key, value = item.split("=", 1)
        params[key] = int(value)
    report = lemmas.lemma_suite(args.name, params, trials=args.trials,
                                seed=args.seed)
    payload = asdict(report)
    payload["lemma"] = report.lemma.value
    payload["counterexamples"] = list(report.counterexamples)
    _emit(payload)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    if args.engine == "girth":
        _emit(_girth_payload(girth.brute_force_negative_girth(graph)))
    else:
        value = circular.brute_force_chi_c(
            graph,
            args.qmax if args.qmax is not None else max(1, graph.n),
            io.parse_frac(args.upper) if args.upper else Fraction(4))
        _emit({"value": io.frac_str(value)})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgc",
        description="Signed graphs: families, negative girth, exact circular "
                    "coloring, winding numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family instance as SGF")
    gen.add_argument("--family", required=True, choices=_FAMILY_CHOICES)
    gen.add_argument("--ell", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--input", help="base graph for s-of")
    gen.add_argument("-o", "--output", help="SGF output path (default stdout)")
    gen.add_argument("--dot", help="also write a DOT rendering")
    gen.set_defaults(func=_cmd_gen)

    gir = sub.add_parser("girth", help="negative girth of an SGF graph")
    gir.add_argument("graph")
    gir.set_defaults(func=_cmd_girth)

    chic = sub.add_parser("chic", help="circular chromatic number")
    chic.add_argument("graph")
    chic.add_argument("--qmax", type=int)
    chic.add_argument("--upper", help='candidate ceiling as "p/q"')
    chic.add_argument("--certificate", help="write certificate JSON here")
    chic.set_defaults(func=_cmd_chic)

    ver = sub.add_parser("verify", help="check a coloring certificate")
    ver.add_argument("graph")
    ver.add_argument("certificate")
    ver.set_defaults(func=_cmd_verify)

    wind = sub.add_parser("winding", help="winding number of a mapping file")
    wind.add_argument("mapping")
    wind.add_argument("--extension", choices=["cD", "csh"], default="cD")
    wind.set_defaults(func=_cmd_winding)

    lem = sub.add_parser("lemmas", help="run a lemma property suite")
    lem.add_argument("--name", required=True, choices=_LEMMA_CHOICES)
    lem.add_argument("--trials", type=int, default=500)
    lem.add_argument("--seed", type=int, required=True)
    lem.add_argument("--params", nargs="*", metavar="KEY=VALUE")
    lem.set_defaults(func=_cmd_lemmas)

    orc = sub.add_parser("oracle", help="brute-force cross-check engines")
    orc.add_argument("engine", choices=["girth", "chic"])
    orc.add_argument("graph")
    orc.add_argument("--qmax", type=int)
    orc.add_argument("--upper", help='candidate ceiling as "p/q"')
    orc.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Error, io.SGFFormatError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
