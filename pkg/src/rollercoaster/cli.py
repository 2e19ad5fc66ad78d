"""Command-line front end.

Every command reads its input from ``--input`` or, without one, draws it from
``SplitMix64(--seed)``.  Text output is meant for people; ``--format json``
prints a run report whose only run-dependent field (``wall_time``) stays null
unless ``--timing`` is given, so identical flags give identical bytes.

Exit codes: 0 success, 2 unreadable input or bad usage, 3 precondition
violated, 4 ``--validate`` found a problem.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import ceil

import numpy as np

from . import counting, greedy, k_roller, longest, oracle
from .core import NumberSequence, validate
from .drawing import (
    PathGraph,
    TopViewCaterpillar,
    draw_caterpillar,
    export_json,
    export_svg,
    straight_through_path,
    validate_drawing,
)
from .drawing.caterpillar import points_needed
from .errors import PreconditionError
from .io import ParseError, format_points, format_sequence, parse_points, parse_sequence, read_text
from .rng import VERSION, SplitMix64

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INVALID = 0, 2, 3, 4
BENCH_START = 1 << 10
BENCH_TRIALS = 5


class UsageError(Exception):
    pass


class Outcome:
    """What a command produced: a result summary, its text rendering and
    an optional validation verdict."""

    def __init__(self, result, text, violations=None, svg=None, tsv=None):
        self.result = result
        self.text = text
        self.violations = violations
        self.svg = svg
        self.tsv = tsv


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("ascii")).hexdigest()


def _load_sequence(args):
    """``(NumberSequence, canonical input text)``."""
    if args.input:
        try:
            text = read_text(args.input)
        except (OSError, UnicodeDecodeError) as exc:
            raise ParseError(f"cannot read {args.input}: {exc}") from None
        return parse_sequence(text), text
    if args.n is None:
        raise UsageError("give --input FILE or --n INT for a random permutation")
    if args.n < 0:
        raise PreconditionError("--n must be non-negative")
    perm = SplitMix64(args.seed).permutation(args.n).tolist()
    return NumberSequence(perm), format_sequence(perm)


def _load_points(args, count):
    if args.input:
        try:
            text = read_text(args.input)
        except (OSError, UnicodeDecodeError) as exc:
            raise ParseError(f"cannot read {args.input}: {exc}") from None
        return parse_points(text), text
    pts = SplitMix64(args.seed).point_set(count)
    return pts, format_points(pts)


def _one_based(rc):
    return [i + 1 for i in rc.indices]


def _rollercoaster_outcome(seq, rc, min_run, check, extra=None):
    if rc is None:
        result = {"n": len(seq), "length": 0, "indices": None}
        text = "none"
    else:
        result = {"n": len(seq), "length": len(rc), "indices": _one_based(rc)}
        text = f"{len(rc)}\n" + " ".join(map(str, result["indices"]))
    if extra:
        result.update(extra)
    violations = None
    if check is not None:
        violations = []
        if rc is not None and not validate(seq, rc.indices, min_run):
            violations.append(f"output is not a rollercoaster with runs >= {min_run}")
        violations += check(rc)
    return Outcome(result, text, violations)


def cmd_greedy(args):
    seq, src = _load_sequence(args)
    rc = greedy.half_rollercoaster(seq)
    bound = ceil(len(seq) / 2) if len(seq) >= 8 else 3

    def check(rc):
        return [] if len(rc) >= bound else [f"length {len(rc)} is below {bound}"]

    return _rollercoaster_outcome(seq, rc, 3, check if args.validate else None, {"bound": bound}), src


def _longest_check(seq):
    def check(rc):
        if len(seq) > 2000:
            return []
        ref = oracle.longest_quadratic_dp(seq)
        got, want = (len(rc) if rc else 0), (len(ref) if ref else 0)
        return [] if got == want else [f"length {got} differs from the quadratic oracle ({want})"]
    return check


def cmd_longest(args):
    seq, src = _load_sequence(args)
    rc = longest.longest_rollercoaster(seq)
    return _rollercoaster_outcome(seq, rc, 3, _longest_check(seq) if args.validate else None), src


def cmd_longest_perm(args):
    seq, src = _load_sequence(args)
    perm = longest.normalize_to_permutation(seq.keys) if len(seq) else np.zeros(0, dtype=np.int64)
    rc = longest.longest_rollercoaster_perm(perm) if len(seq) else None
    return _rollercoaster_outcome(seq, rc, 3, _longest_check(seq) if args.validate else None), src


def cmd_kroller(args):
    seq, src = _load_sequence(args)
    k = 4 if args.k is None else args.k
    rc = k_roller.k_rollercoaster(seq, k)
    bound = k_roller.theorem_bound(len(seq), k)

    def check(rc):
        return [] if len(rc) >= bound else [f"length {len(rc)} is below {bound:.3f}"]

    extra = {"k": k, "bound": round(bound, 6)}
    return _rollercoaster_outcome(seq, rc, k, check if args.validate else None, extra), src


def cmd_count(args):
    if args.n is None:
        raise UsageError("count needs --n")
    if args.n < 1:
        raise PreconditionError("--n must be at least 1")
    src = f"count {args.n}\n"
    rows = []
    for n in range(1, args.n + 1):
        r = counting.count_rollercoasters(n)
        rows.append({
            "n": n,
            "count": r,
            "ratio": round(counting.asymptotic_ratio(n), 10) if n >= 3 else None,
            "published": counting.PUBLISHED.get(n),
            "suspect": n in counting.SUSPECT and counting.PUBLISHED[n] != r,
        })
    violations = None
    if args.validate:
        violations = []
        for row in rows:
            pub = row["published"]
            if pub is not None and pub != row["count"] and not row["suspect"]:
                violations.append(f"r({row['n']}) = {row['count']} but the published table has {pub}")
            if row["n"] <= oracle.COUNT_LIMIT and oracle.count_bruteforce(row["n"]) != row["count"]:
                violations.append(f"r({row['n']}) disagrees with enumeration")
    lines = ["n\tr(n)\tratio\tpublished\tnote"]
    for row in rows:
        ratio = "" if row["ratio"] is None else f"{row['ratio']:.10f}"
        pub = "" if row["published"] is None else str(row["published"])
        note = "table entry disagrees with the exact count" if row["suspect"] else ""
        lines.append(f"{row['n']}\t{row['count']}\t{ratio}\t{pub}\t{note}")
    result = {"n": args.n, "count": rows[-1]["count"], "table": rows}
    return Outcome(result, str(rows[-1]["count"]), violations, tsv="\n".join(lines)), src


def _drawing_outcome(drawing, tree, pts, extra, args, x_monotone):
    violations = None
    if args.validate:
        violations = validate_drawing(drawing, tree, pts, x_monotone=x_monotone).violations
    body = export_json(drawing)
    result = dict(extra)
    result["drawing"] = json.loads(body)
    return Outcome(result, body, violations, svg=export_svg(drawing))


def cmd_draw_path(args):
    n = args.n
    if n is None and not args.input:
        raise UsageError("draw-path needs --n or --input")
    pts, src = _load_points(args, 3 * n - 3 if n is not None else 0)
    if n is None:
        n = (len(pts) + 3) // 3
    d = straight_through_path(pts, n)
    return _drawing_outcome(d, PathGraph(n), pts, {"n": n, "points": len(pts)}, args, True), src


def _largest_caterpillar(m):
    n = 2
    while points_needed(n + 3) <= m:
        n += 3
    return n


def cmd_draw_cat(args):
    n = args.n
    if n is None and not args.input:
        raise UsageError("draw-cat needs --n or --input")
    if n is not None:
        cat = TopViewCaterpillar.from_vertex_count(n)
    pts, src = _load_points(args, points_needed(n) if n is not None else 0)
    if n is None:
        n = _largest_caterpillar(len(pts))
        cat = TopViewCaterpillar.from_vertex_count(n)
    stats = []
    d = draw_caterpillar(pts, cat, stats)
    extra = {
        "n": n,
        "spine": cat.spine_len,
        "points": len(pts),
        "steps": [{"case": s.case, "groups": s.parsed, "placed": s.placed} for s in stats],
    }
    return _drawing_outcome(d, cat, pts, extra, args, False), src


def cmd_oracle(args):
    if args.count:
        if args.n is None:
            raise UsageError("oracle --count needs --n")
        r = oracle.count_bruteforce(args.n)
        return Outcome({"n": args.n, "count": r}, str(r)), f"count {args.n}\n"
    seq, src = _load_sequence(args)
    rc = oracle.longest_quadratic_dp(seq)
    result = {"n": len(seq), "length": len(rc) if rc else 0, "indices": _one_based(rc) if rc else None}
    text = "none" if rc is None else f"{len(rc)}\n" + " ".join(map(str, result["indices"]))
    violations = None
    if len(seq) <= oracle.EXHAUSTIVE_LIMIT:
        result["exhaustive"] = oracle.longest_exhaustive(seq)
        if args.validate and result["exhaustive"] != result["length"]:
            violations = ["the two oracles disagree"]
    if args.validate and violations is None:
        violations = [] if rc is None or validate(seq, rc.indices) else ["witness is not a rollercoaster"]
    return Outcome(result, text, violations), src


BENCH_TARGETS = {
    "greedy": greedy.half_rollercoaster,
    "longest": longest.longest_rollercoaster,
    "longest-perm": longest.longest_rollercoaster_perm,
}


def _bench_trial(job):
    target, n, seed = job
    perm = SplitMix64(seed).permutation(n)
    t0 = time.perf_counter()
    BENCH_TARGETS[target](perm)
    return time.perf_counter() - t0


def _workers():
    cap = os.environ.get("ROLLER_THREADS")
    limit = os.cpu_count() or 1
    if cap:
        try:
            limit = min(limit, max(1, int(cap)))
        except ValueError:
            raise UsageError("ROLLER_THREADS must be an integer") from None
    return limit


def cmd_bench(args):
    top = args.n if args.n is not None else 1 << 16
    trials = args.k if args.k is not None else BENCH_TRIALS
    if top < BENCH_START or trials < 1:
        raise PreconditionError(f"bench needs --n >= {BENCH_START} and at least one trial")
    ladder = []
    n = BENCH_START
    while n <= top:
        ladder.append(n)
        n *= 2
    # warm up compiled kernels outside the measurement
    _bench_trial((args.target, 64, args.seed))
    jobs = [(args.target, n, args.seed + t) for n in ladder for t in range(trials)]
    workers = _workers()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            times = list(pool.map(_bench_trial, jobs))
    else:
        times = [_bench_trial(j) for j in jobs]
    rows = [
        {"n": n, "seconds": statistics.median(times[i * trials:(i + 1) * trials])}
        for i, n in enumerate(ladder)
    ]
    lines = ["n\tseconds"] + [f"{r['n']}\t{r['seconds']:.6f}" for r in rows]
    result = {"target": args.target, "trials": trials, "workers": workers, "rng": VERSION, "rows": rows}
    src = f"bench {args.target} {top} {trials} {args.seed}\n"
    return Outcome(result, "\n".join(lines), tsv="\n".join(lines)), src


COMMANDS = {
    "greedy": (cmd_greedy, "rollercoaster of length at least ceil(n/2) in linear time"),
    "longest": (cmd_longest, "exact longest rollercoaster, O(n log n)"),
    "longest-perm": (cmd_longest_perm, "exact longest rollercoaster through the permutation structures"),
    "kroller": (cmd_kroller, "rollercoaster whose runs all have at least k elements"),
    "count": (cmd_count, "number of rollercoaster permutations of length n"),
    "draw-path": (cmd_draw_path, "straight-through drawing of an n-vertex path"),
    "draw-cat": (cmd_draw_cat, "L-shaped drawing of an n-vertex top-view caterpillar"),
    "oracle": (cmd_oracle, "brute-force reference answers"),
    "bench": (cmd_bench, "timings over a doubling ladder of n"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="sequence or point file; random input when omitted")
    common.add_argument("--k", type=int, help="run length for kroller, trials per size for bench")
    common.add_argument("--n", type=int, help="size of the random input or of the drawn graph")
    common.add_argument("--seed", type=int, default=0, help="seed for random input (default 0)")
    common.add_argument("--format", choices=("text", "json", "tsv", "svg"), default="text")
    common.add_argument("--validate", action="store_true", help="check the result and exit 4 on failure")
    common.add_argument("--timing", action="store_true", help="record wall time in the JSON report")
    parser = argparse.ArgumentParser(prog="rollercoaster", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "oracle":
            p.add_argument("--count", action="store_true", help="count permutations of length --n by enumeration")
        if name == "bench":
            p.add_argument("--target", choices=sorted(BENCH_TARGETS), default="greedy")
    return parser


def _render(args, outcome, src, elapsed):
    fmt = args.format
    if fmt == "json":
        verdict = None
        if outcome.violations is not None:
            verdict = {"ok": not outcome.violations, "violations": outcome.violations}
        report = {
            "command": args.command,
            "input_digest": _digest(src),
            "result": outcome.result,
            "wall_time": elapsed if args.timing else None,
            "validation": verdict,
        }
        return json.dumps(report, indent=1)
    if fmt == "svg":
        if outcome.svg is None:
            raise UsageError(f"{args.command} has no SVG output")
        return outcome.svg.rstrip("\n")
    if fmt == "tsv" and outcome.tsv is not None:
        return outcome.tsv
    return outcome.text


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        t0 = time.perf_counter()
        outcome, src = handler(args)
        elapsed = time.perf_counter() - t0
        out = _render(args, outcome, src, elapsed)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(out)
    if outcome.violations:
        for v in outcome.violations:
            print(f"validation: {v}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
