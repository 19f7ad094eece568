"""Command-line front end.

    frobaut analyze SPEC.json [--json | --text]
    frobaut verify SPEC.json --oracle normalizer|aut|both [--limit N]
    frobaut sweep --p P --n N[,N2,...] --max-d D [--json]

Exit codes: 0 ok / all oracles match, 1 oracle mismatch, 2 validation
error, 3 instance too large for an oracle, 4 randomness requested under
--seed-free.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys

from . import oracle
from .autstruct import analyze
from .determinism import RandomnessRequested, seed_free
from .ffield import build_h_matrix
from .report import render, render_text
from .repdecomp import KernelActionSpec, ValidationError
from .sweep import sweep_specs

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_TOO_LARGE, EXIT_RANDOM = 0, 1, 2, 3, 4

log = logging.getLogger("frobaut")


def load_spec(path: str) -> KernelActionSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON in {path}: {exc}") from None
    return KernelActionSpec.from_dict(doc)


def _emit(doc: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write(render_text(doc))


def cmd_analyze(args, out) -> int:
    report = analyze(load_spec(args.spec))
    for note in report.notes:
        log.info("%s", note)
    _emit(render(report), args.format != "text", out)
    return EXIT_OK


def verify_document(spec: KernelActionSpec, which: str, matrix_limit: int, aut_limit: int,
                    method: str = "auto") -> dict:
    """Formula vs oracle for one spec; raises OracleLimitError when oversize."""
    report = analyze(spec)
    doc = render(report)
    results = {}
    if which in ("normalizer", "both"):
        hs = [build_h_matrix(c.p, spec.n, c.constituents) for c in sorted(spec.components, key=lambda c: c.p)]
        counted = oracle.count_normalizer_bruteforce(hs, limit=matrix_limit, method=method)
        results["normalizer"] = {
            "formula": str(report.normalizer_order),
            "oracle": str(counted),
            "match": counted == report.normalizer_order,
        }
    if which in ("aut", "both"):
        group = oracle.build_group(spec)
        gens = oracle.find_generating_set(group)
        counted = oracle.count_automorphisms_bruteforce(group, gens, limit=aut_limit)
        results["aut"] = {
            "formula": str(report.aut_order),
            "oracle": str(counted),
            "match": counted == report.aut_order,
            "generators": len(gens),
        }
    doc["verify"] = results
    doc["all_match"] = all(r["match"] for r in results.values())
    return doc


def cmd_verify(args, out) -> int:
    spec = load_spec(args.spec)
    doc = verify_document(spec, args.oracle, args.limit, args.aut_limit, args.method)
    _emit(doc, True, out)
    if not doc["all_match"]:
        log.error("oracle mismatch: %s", json.dumps(doc["verify"], sort_keys=True))
        return EXIT_MISMATCH
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_sweep(args, out) -> int:
    for spec in sweep_specs(args.p, args.n, args.max_d):
        try:
            report = analyze(spec)
        except ValidationError as exc:
            log.warning("skipping %s: %s", spec.to_dict(), exc)
            continue
        doc = render(report)
        if args.json:
            out.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
        else:
            constituents = " ".join(f"{r}^{e}" for r, e in spec.components[0].constituents)
            out.write(f"n={spec.n} p={args.p} [{constituents}] |Aut|={doc['aut_order']} {doc['structure']}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobaut", description=__doc__.split("\n\n")[0])
    parser.add_argument("--seed-free", action="store_true",
                        help="fail the run if anything asks for random numbers")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="compute |Aut(G)| and its structure")
    p_an.add_argument("spec")
    fmt = p_an.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    p_an.set_defaults(format="json", func=cmd_analyze)

    p_ve = sub.add_parser("verify", help="check the formulas against brute force")
    p_ve.add_argument("spec")
    p_ve.add_argument("--oracle", choices=("normalizer", "aut", "both"), default="both")
    p_ve.add_argument("--limit", type=int, default=oracle.DEFAULT_MATRIX_LIMIT,
                      help="candidate-matrix bound for the normalizer oracle")
    p_ve.add_argument("--aut-limit", type=int, default=oracle.DEFAULT_AUT_LIMIT,
                      help="candidate-assignment bound for the automorphism oracle")
    p_ve.add_argument("--method", choices=("auto", "enumerate", "intertwiner"), default="auto")
    p_ve.set_defaults(func=cmd_verify)

    p_sw = sub.add_parser("sweep", help="analyze every class multiset for (p, n)")
    p_sw.add_argument("--p", type=int, required=True)
    p_sw.add_argument("--n", type=_int_list, required=True)
    p_sw.add_argument("--max-d", type=int, required=True)
    p_sw.add_argument("--json", action="store_true")
    p_sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    guard = seed_free() if args.seed_free else contextlib.nullcontext()
    try:
        with guard:
            return args.func(args, out)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except oracle.OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except RandomnessRequested as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANDOM
