"""Command-line interface.

Exit codes: 0 on success (empty results included), 1 when ``axioms`` finds a
violated law, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import cluster, laws, zerodiv
from .corpus import code_corpus, format_table, load_catalog, parse_table, read_annotations, read_corpus, render
from .errors import BoolRingError
from .module import BrMatrix, kernel_basis
from .pext import Pext
from .transform import TransformSpec, complexity_report


class InputError(Exception):
    """Bad user input; reported with exit status 2."""


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _read_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _load_table(path: str) -> Tuple[List[str], List[Pext]]:
    try:
        rows = parse_table(_read_text(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    ids = [doc_id for doc_id, _ in rows]
    if len(set(ids)) != len(ids):
        raise InputError(f"{path}: duplicate doc_id")
    if len({p.width for _, p in rows}) > 1:
        raise InputError(f"{path}: rows have different widths")
    return ids, [p for _, p in rows]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _split_ids(values: Sequence[str]) -> List[str]:
    return [v for item in values for v in item.split(",") if v]


def cmd_code(args) -> str:
    try:
        cat = load_catalog(args.catalog)
    except OSError as exc:
        raise InputError(f"{args.catalog}: {exc.strerror or exc}") from None
    except BoolRingError as exc:
        raise InputError(f"{args.catalog}: {exc}") from None
    try:
        docs = read_corpus(args.corpus)
        notes = read_annotations(args.annotations) if args.annotations else {}
    except OSError as exc:
        raise InputError(f"{exc.filename}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        coded = code_corpus(cat, docs, notes)
    except BoolRingError as exc:
        raise InputError(f"{args.annotations}: {exc}") from None
    if args.format == "json":
        return _dump([
            {"doc_id": c.doc_id, "bits": str(c.pext), "matched": list(c.matched)} for c in coded
        ])
    return format_table((c.doc_id, c.pext) for c in coded)


def cmd_compare(args) -> str:
    ids, xs = _load_table(args.table)
    index = {doc_id: i for i, doc_id in enumerate(ids)}

    def pick(names: Sequence[str]) -> List[Pext]:
        missing = [n for n in names if n not in index]
        if missing:
            raise InputError(f"unknown id(s): {', '.join(missing)}")
        return [xs[index[n]] for n in names]

    left, right = pick(_split_ids(args.left)), pick(_split_ids(args.right or []))
    if not left:
        raise InputError("--left needs at least one id")
    result = cluster.stack_characteristics(left, right)
    statement = None
    if args.catalog:
        cat = load_catalog(args.catalog)
        statement = render(cat, result)
    if args.format == "json":
        return _dump({"bits": str(result), "statement": statement})
    return f"{result}\n" + (f"{statement}\n" if statement is not None else "")


def _load_pairs(path: str, k: int) -> List[Tuple[int, int]]:
    doc = _read_json(path)
    if not isinstance(doc, list) or not all(isinstance(p, list) and len(p) == 2 for p in doc):
        raise InputError(f"{path}: expected a JSON array of [i, j] pairs")
    pairs = []
    for i, j in doc:
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= k and 1 <= j <= k):
            raise InputError(f"{path}: pair [{i}, {j}] is not a pair of row numbers in 1..{k}")
        pairs.append((i - 1, j - 1))
    return pairs


def cmd_cluster(args) -> str:
    ids, xs = _load_table(args.table)
    if len(xs) < 2:
        raise InputError("clustering needs at least two texts")
    if args.method == "atoms":
        found = cluster.cluster_atoms(xs)
    elif args.method == "m":
        found = cluster.cluster_via_m(xs, seed=args.seed, tries=args.tries)
    else:
        pairs = _load_pairs(args.pairs, len(xs)) if args.pairs else None
        found = cluster.cluster_via_gram(xs, pairs, depth=args.depth)
    if args.format == "tsv":
        return "".join(
            f"{w.method}\t{w.l}\t{w.r}\t{','.join(ids[i] for i in sorted(w.left))}\t"
            f"{','.join(ids[i] for i in sorted(w.right))}\n"
            for w in found
        )
    return _dump([w.to_json(ids) for w in found])


def cmd_zerodiv(args) -> str:
    ids, xs = _load_table(args.table)
    if args.mode == "random" and args.budget < 1:
        raise InputError("--budget must be >= 1")
    start = time.perf_counter()
    if args.mode == "brute":
        found, stats = zerodiv.solve_bruteforce(xs, limit=args.limit)
    else:
        found, stats = zerodiv.solve_random(xs, budget=args.budget, seed=args.seed)
    elapsed = (time.perf_counter() - start) * 1000
    report = {
        "found": found is not None,
        "assignment": found.to_json(ids) if found else None,
        "left_product": str(cluster.stack_characteristics([xs[i] for i in sorted(found.left)], []))
        if found else None,
        "guesses": stats.guesses,
        "ring_ops": stats.ring_ops,
        "wall_ms": round(elapsed, 3) if args.timing else None,
    }
    return _dump(report)


def cmd_transform(args) -> str:
    _, xs = _load_table(args.table)
    if not xs:
        raise InputError(f"{args.table}: no texts")
    doc = _read_json(args.spec)
    try:
        spec = TransformSpec.from_json(doc, width=xs[0].width)
    except BoolRingError as exc:
        raise InputError(f"{args.spec}: {exc}") from None
    except (ValueError, AttributeError) as exc:
        raise InputError(f"{args.spec}: {exc}") from None
    report = complexity_report(xs, spec).to_json()
    report["transform"] = spec.to_json()
    return _dump(report)


def cmd_kernel(args) -> str:
    doc = _read_json(args.matrix)
    try:
        mat = BrMatrix.from_json(doc)
    except (KeyError, TypeError) as exc:
        raise InputError(f"{args.matrix}: malformed matrix ({exc})") from None
    except (BoolRingError, ValueError) as exc:
        raise InputError(f"{args.matrix}: {exc}") from None
    return _dump(kernel_basis(mat).to_json())


def cmd_axioms(args) -> Tuple[str, int]:
    if args.trials < 1 or args.width < 1:
        raise InputError("--trials and --width must be >= 1")
    results = laws.run_laws(args.trials, args.width, args.seed, module_trials=args.module_trials)
    lines = []
    for r in results:
        if r.ok:
            lines.append(f"PASS  {r.name} ({r.trials} trials)")
        else:
            lines.append(f"FAIL  {r.name} counterexample: {' '.join(r.counterexample)}")
    failed = sum(not r.ok for r in results)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n", 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--format", choices=["json", "tsv", "text"], default=None)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="boolring", description="Boolean-ring comparative text analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", parents=[common], help="code a corpus into a doc_id/bitstring table")
    p.add_argument("--catalog", required=True)
    p.add_argument("--corpus", required=True, help="directory of .txt files or JSON-lines {id, text}")
    p.add_argument("--annotations", help="JSON-lines {doc_id, bits} overriding pattern results")
    p.set_defaults(func=cmd_code, default_format="tsv")

    p = sub.add_parser("compare", parents=[common], help="characteristics L R of a stack split")
    p.add_argument("table")
    p.add_argument("--left", nargs="+", required=True)
    p.add_argument("--right", nargs="*", default=[])
    p.add_argument("--catalog", help="catalog used to render the result")
    p.set_defaults(func=cmd_compare, default_format="text")

    p = sub.add_parser("cluster", parents=[common], help="reasonable 2-clusterings")
    p.add_argument("table")
    p.add_argument("--method", choices=["atoms", "m", "gram"], default="atoms")
    p.add_argument("--pairs", help="JSON array of [i, j] row numbers (1-based); gram only")
    p.add_argument("--depth", type=int, default=cluster.DEFAULT_GRAM_DEPTH)
    p.add_argument("--tries", type=int, default=cluster.DEFAULT_M_TRIES)
    p.set_defaults(func=cmd_cluster, default_format="json")

    p = sub.add_parser("zerodiv", parents=[common], help="search an assignment with L R = 0")
    p.add_argument("table")
    p.add_argument("--mode", choices=["brute", "random"], default="brute")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--limit", type=int, default=zerodiv.DEFAULT_LIMIT)
    p.add_argument("--timing", action="store_true", help="fill wall_ms (makes output run-dependent)")
    p.set_defaults(func=cmd_zerodiv, default_format="json")

    p = sub.add_parser("transform", parents=[common], help="Galerkin complexity report of a transformation")
    p.add_argument("table")
    p.add_argument("--spec", required=True, help="JSON {name, set, clear, flip}")
    p.set_defaults(func=cmd_transform, default_format="json")

    p = sub.add_parser("kernel", parents=[common], help="kernel generators of a matrix file")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_kernel, default_format="json")

    p = sub.add_parser("axioms", parents=[common], help="check ring and module laws on random data")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--width", type=int, default=64)
    p.add_argument("--module-trials", type=int, default=laws.DEFAULT_MODULE_TRIALS)
    p.set_defaults(func=cmd_axioms, default_format="text")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    if getattr(args, "budget", 1) < 0 or args.seed < 0:
        print("boolring: error: --seed and --budget must be non-negative", file=sys.stderr)
        return 2
    try:
        out = args.func(args)
    except InputError as exc:
        print(f"boolring: error: {exc}", file=sys.stderr)
        return 2
    except BoolRingError as exc:
        print(f"boolring: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"boolring: error: {exc.filename}: {exc.strerror}", file=sys.stderr)
        return 2
    status = 0
    if isinstance(out, tuple):
        out, status = out
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
