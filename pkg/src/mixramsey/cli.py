"""Command-line front end.

Exit codes: 0 success or admissible, 1 checked and negative, 2 usage or
input error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import admissibility as adm
from . import colouring as col
from . import projective_plane as pp
from .cnf import encode_sat
from .maxr import brute_force_maxr
from .search import Checkpoint, SearchConfig, search_rotational

OK, NEGATIVE, INPUT_ERROR, INCONCLUSIVE = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_plane(args) -> int:
    plane = pp.build_plane(args.q)
    sys.stdout.write(pp.dump_plane(plane))
    sys.stdout.write(pp.dump_graph(pp.levi_graph(plane)))
    return OK


def cmd_cycle(args) -> int:
    lab = pp.rotational_cycle(args.q, args.exponent)
    ok = pp.verify_rotational(pp.levi_graph_for(args.q), lab)
    N = args.q**2 + args.q + 1
    residues = sorted(pp.offsets_to_residues(lab.offsets, N))
    sys.stdout.write(pp.dump_labeling(lab))
    sys.stdout.write(f"rotational {'true' if ok else 'false'}\n")
    sys.stdout.write(f"difference_set {' '.join(map(str, residues))} mod {N} "
                     f"{'true' if pp.is_planar_difference_set(N, residues) else 'false'}\n")
    return OK if ok else NEGATIVE


def cmd_fano(args) -> int:
    C, D = col.fano_cycles()
    sc = col.fano_colouring((C, D))
    print("points cycle " + " ".join(f"{a}-{b}" for a, b in C), file=sys.stderr)
    print("lines cycle " + " ".join(f"{a}-{b}" for a, b in D), file=sys.stderr)
    _emit(col.format_mrc(sc.base), args.out)
    return OK


def cmd_expand(args) -> int:
    words = col.parse_words(Path(args.words).read_text())
    if words.q != args.q:
        raise ValueError(f"word file is for q={words.q}, not {args.q}")
    words.validate()
    lab = pp.labeling_with_offsets(args.q, words.stars(0))
    sc = col.expand_words(lab, words)
    _emit(col.format_mrc(sc.base), args.out)
    return OK


def cmd_extract(args) -> int:
    colouring = col.parse_mrc(Path(args.input).read_text())
    sc = col.special_from_colouring(colouring, args.q)
    try:
        words = col.extract_words(sc)
    except col.RotationError as exc:
        print(f"not rotational: positions {exc.witness[0]} and {exc.witness[1]}", file=sys.stderr)
        return NEGATIVE
    sys.stdout.write(col.format_words(words))
    return OK


def cmd_verify(args) -> int:
    colouring = col.parse_mrc(Path(args.input).read_text())
    report = adm.is_admissible(colouring, args.m)
    sys.stdout.write(report.to_text())
    if args.lemma_samples and report.admissible:
        queries = adm.lemma_sweep(colouring, args.m, args.lemma_samples, args.rng_seed)
        held = sum(qr.holds for qr in queries)
        sys.stdout.write(f"lemma {held}/{len(queries)}\n")
        if held != len(queries):
            return NEGATIVE
    return OK if report.admissible else NEGATIVE


def cmd_search(args) -> int:
    resume = Checkpoint.from_text(Path(args.resume).read_text()) if args.resume else None
    mode = "count" if args.count else ("all" if args.all else "first")
    offsets = tuple(args.offsets) if args.offsets else None
    if resume is not None:
        if (resume.q, resume.m, resume.palette_size, resume.mode) != (args.q, args.m, args.palette, mode):
            raise ValueError("checkpoint does not match the requested search")
    config = SearchConfig(args.q, args.m, args.palette, mode, args.node_budget, args.threads, offsets)
    outcome = search_rotational(config, resume)
    blocks = [col.format_words(w) for w in outcome.solutions]
    sys.stdout.write("\n".join(blocks))
    if mode == "count":
        sys.stdout.write(f"count {outcome.count}\n")
    print(f"nodes {outcome.nodes_explored} exhausted {'true' if outcome.exhausted else 'false'}",
          file=sys.stderr)
    if outcome.checkpoint is not None:
        if args.checkpoint:
            Path(args.checkpoint).write_text(outcome.checkpoint.to_text())
        return INCONCLUSIVE
    return OK if outcome.count else NEGATIVE


def cmd_brute(args) -> int:
    result = brute_force_maxr(args.n, args.m)
    sys.stdout.write(f"maxr = {result.value}\n")
    sys.stdout.write(col.format_mrc(result.witness))
    return OK


def cmd_sat(args) -> int:
    _emit(encode_sat(args.q, args.m), args.out)
    return OK


def cmd_bound(args) -> int:
    n, m = args.n, args.m
    sys.stdout.write(f"bound {adm.theorem_bound(n, m):.6f}\n")
    sys.stdout.write(f"pairs {math.comb(n, 2)}\n")
    sys.stdout.write(f"base_case {'true' if adm.base_case_check(m) else 'false'}\n")
    sys.stdout.write(f"reference_nlogn {adm.nlogn_reference(n):.6f}\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixramsey", description="Mixed Ramsey colourings on projective-plane incidence graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plane", help="dump PG(2,q) and its Levi graph")
    p.add_argument("--q", type=int, required=True, help="plane order (prime power)")
    p.set_defaults(func=cmd_plane)

    p = sub.add_parser("cycle", help="rotational Hamilton cycle of L_q")
    p.add_argument("--q", type=int, required=True, help="plane order (prime power)")
    p.add_argument("--exponent", type=int, default=1, help="power of the generator used as primitive element")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("fano", help="K_14 colouring from two 7-cycles")
    p.add_argument("--out", help="write the colouring file here instead of stdout")
    p.set_defaults(func=cmd_fano)

    p = sub.add_parser("expand", help="expand a word file into a colouring file")
    p.add_argument("--q", type=int, required=True, help="plane order")
    p.add_argument("--words", required=True, help="word file")
    p.add_argument("--out", help="output colouring file (default stdout)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("extract", help="recover the word pair of a rotational colouring")
    p.add_argument("--input", required=True, help="colouring file")
    p.add_argument("--q", type=int, required=True, help="plane order")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="check admissibility of a colouring file")
    p.add_argument("--input", required=True, help="colouring file")
    p.add_argument("--m", type=int, default=4, help="forbidden monochromatic clique size (default 4)")
    p.add_argument("--lemma-samples", type=int, default=0, help="random disjoint pairs for the sigma bound")
    p.add_argument("--rng-seed", type=int, default=0, help="seed for the sigma sampling (default 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search admissible rotational word pairs")
    p.add_argument("--q", type=int, required=True, help="plane order")
    p.add_argument("--m", type=int, default=4, help="forbidden monochromatic clique size (default 4)")
    p.add_argument("--palette", type=int, default=2, help="number of palette symbols (default 2)")
    p.add_argument("--all", action="store_true", help="list every solution")
    p.add_argument("--count", action="store_true", help="only count solutions")
    p.add_argument("--node-budget", type=int, help="stop after this many search nodes")
    p.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--resume", help="continue from a checkpoint file")
    p.add_argument("--checkpoint", help="write a checkpoint here if the budget runs out")
    p.add_argument("--offsets", type=int, nargs="+", help="star offsets selecting the labeling")
    p.add_argument("--rng-seed", type=int, default=0, help="accepted for uniformity; the search is deterministic")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("brute", help="exact maxr for 3 <= n <= 6")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--m", type=int, default=4, help="forbidden monochromatic clique size (default 4)")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("sat", help="DIMACS CNF for two-symbol rotational words")
    p.add_argument("--q", type=int, required=True, help="plane order")
    p.add_argument("--m", type=int, default=4, help="forbidden monochromatic clique size (default 4)")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_sat)

    p = sub.add_parser("bound", help="upper bound n^(3/2) sqrt(2m) and the base-case check")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--m", type=int, default=4, help="forbidden monochromatic clique size (default 4)")
    p.set_defaults(func=cmd_bound)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())
