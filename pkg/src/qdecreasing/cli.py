"""Command-line front end: ``qdwords <command> [options]``.

Every command writes deterministic text; wall-clock timings only appear in
the optional ``--timing`` sidecar (``<out>.timing.json`` or stderr).
Exit status: 0 ok, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import asymptotics, formulas, lattice, oracle
from .qparam import PrecisionError, RationalQ, parse_q
from .words import count_words, enumerate_words

FORMATS = ("plain", "json", "csv", "dot")

_RAT_STR = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_INT_LIST = {"type": "array", "items": {"type": "integer"}}

GF_SCHEMA = {
    "type": "object",
    "required": ["q", "statistic", "num", "den", "series"],
    "additionalProperties": False,
    "properties": {
        "q": {"type": "string"},
        "statistic": {"type": "string"},
        "num": {"oneOf": [{"type": "array", "items": _RAT_STR}, {"type": "null"}]},
        "den": {"oneOf": [{"type": "array", "items": _RAT_STR}, {"type": "null"}]},
        "series": _INT_LIST,
    },
}

WORDS_SCHEMA = {
    "type": "object",
    "required": ["q", "n", "count"],
    "properties": {
        "q": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "count": {"type": "integer", "minimum": 0},
        "words": {"type": "array", "items": {"type": "string", "pattern": "^[01]*$"}},
    },
}

LATTICE_SCHEMA = {
    "type": "object",
    "required": ["q", "n", "elements", "coverings", "intervals", "join_irreducible", "meet_irreducible"],
    "properties": {
        "q": {"type": "string"},
        **{
            k: {"type": "integer", "minimum": 0}
            for k in ("n", "elements", "coverings", "intervals", "join_irreducible", "meet_irreducible")
        },
    },
}

_CHECK_ROW = {
    "type": "object",
    "required": ["n", "brute", "closed", "match"],
    "properties": {
        "n": {"type": "integer"},
        "brute": {"type": "integer"},
        "closed": {"type": "integer"},
        "match": {"type": "boolean"},
    },
}

CHECK_SCHEMA = {
    "type": "object",
    "required": ["q", "n_max", "pass", "truncated_at", "statistics"],
    "properties": {
        "q": {"type": "string"},
        "n_max": {"type": "integer"},
        "pass": {"type": "boolean"},
        "truncated_at": {"type": ["integer", "null"]},
        "statistics": {
            "type": "object",
            "required": list(oracle.STATISTICS),
            "additionalProperties": {"type": "array", "items": _CHECK_ROW},
        },
    },
}

ASYMPT_SCHEMA = {
    "type": "object",
    "required": ["q", "phi", "tol", "statistic", "window", "ratios", "spread", "verdict"],
    "properties": {
        "q": {"type": "string"},
        "phi": {"type": "number", "exclusiveMinimum": 1},
        "tol": {"type": "number", "exclusiveMinimum": 0},
        "statistic": {"enum": ["words", "coverings"]},
        "window": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "ratios": {"type": "array", "items": {"type": "number"}},
        "spread": {"type": "number", "minimum": 0},
        "monotone_tail": {"type": "boolean"},
        "verdict": {"enum": ["converged", "not converged"]},
    },
}

SCHEMAS = {
    "gf": GF_SCHEMA,
    "words": WORDS_SCHEMA,
    "lattice": LATTICE_SCHEMA,
    "check": CHECK_SCHEMA,
    "asympt": ASYMPT_SCHEMA,
}


class UsageError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def _require_format(args, allowed):
    if args.format not in allowed:
        raise UsageError(f"'{args.command}' supports --format {', '.join(allowed)}")


# -- commands ------------------------------------------------------------------

def cmd_words(args, q):
    _require_format(args, ("plain", "json", "csv"))
    n = args.n
    if args.count:
        total = count_words(n, q)
        if args.format == "json":
            return _dump_json({"q": str(q), "n": n, "count": total}), {}
        if args.format == "csv":
            return _csv([["q", "n", "count"], [str(q), n, total]]), {}
        return f"{total}\n", {}
    ws = enumerate_words(n, q)
    if args.format == "json":
        return _dump_json({"q": str(q), "n": n, "count": len(ws), "words": ws}), {}
    if args.format == "csv":
        return _csv([["word"]] + [[w] for w in ws]), {}
    return "".join(w + "\n" for w in ws), {}


def cmd_gf(args, q):
    _require_format(args, ("plain", "json", "csv"))
    stat, terms = args.statistic, args.terms
    if isinstance(q, RationalQ):
        f = formulas.gf(stat, q)
        num, den = f.num.to_strings(), f.den.to_strings()
        series = f.integer_series(terms)
    else:
        if stat not in formulas.REAL_SERIES:
            raise UsageError(
                f"irrational q supports only {sorted(formulas.REAL_SERIES)} (series only)"
            )
        num = den = None
        series = list(formulas.REAL_SERIES[stat](q, terms))
    if args.format == "json":
        payload = {"q": str(q), "statistic": stat, "num": num, "den": den, "series": series}
        return _dump_json(payload), {}
    if args.format == "csv":
        return _csv([["n", "coefficient"]] + [[k, v] for k, v in enumerate(series)]), {}
    lines = [f"q = {q}", f"statistic = {stat}"]
    if num is not None:
        lines.append(f"gf = {f}")
    lines.append("series = " + ", ".join(map(str, series)))
    return "\n".join(lines) + "\n", {}


def cmd_lattice(args, q):
    _require_format(args, ("plain", "json", "csv"))
    start = time.perf_counter()
    report = lattice.build_lattice(args.n, q).report()
    timing = {"seconds": time.perf_counter() - start}
    if args.format == "json":
        return _dump_json(report), timing
    if args.format == "csv":
        return _csv([list(report), list(report.values())]), timing
    return "".join(f"{k}: {v}\n" for k, v in report.items()), timing


def cmd_hasse(args, q):
    if args.format == "plain":
        args.format = "dot"
    _require_format(args, ("dot", "json"))
    model = lattice.build_lattice(args.n, q)
    if args.format == "json":
        payload = {
            "q": str(q),
            "n": args.n,
            "elements": model.elements,
            "edges": [list(e) for e in sorted(model.edges())],
        }
        return _dump_json(payload), {}
    return lattice.to_dot(model), {}


def cmd_check(args, q):
    _require_format(args, ("plain", "json", "csv"))
    report = oracle.verify(q, args.n_max)
    timing = {"seconds_per_n": {str(n): t for n, t in sorted(report.seconds.items())}}
    if args.format == "json":
        text = report.to_json()
    elif args.format == "csv":
        text = report.to_csv()
    else:
        lines = [f"q = {report.q}", "n," + ",".join(oracle.STATISTICS) + ",match"]
        for n in sorted({r.n for r in report.rows}):
            rows = [r for r in report.rows if r.n == n]
            vals = ",".join(str(r.brute) for r in rows)
            lines.append(f"{n},{vals},{'yes' if all(r.match for r in rows) else 'NO'}")
        for r in report.mismatches:
            lines.append(f"mismatch: n={r.n} {r.statistic} brute={r.brute} closed={r.closed}")
        if report.truncated_at is not None:
            lines.append(f"truncated at n={report.truncated_at} (lattice cap)")
        lines.append("PASS" if report.passed else "FAIL")
        text = "\n".join(lines) + "\n"
    return text, timing, (0 if report.passed else 1)


def cmd_asympt(args, q):
    _require_format(args, ("plain", "json"))
    est = asymptotics.growth_check(args.statistic, q, args.n_lo, args.n_hi, tol=args.tol)
    if args.format == "json":
        return _dump_json(est.to_dict()), {}
    ph = asymptotics.phi(q, args.tol)
    lines = [
        f"q = {q}",
        f"phi = {float(ph):.15f}",
        f"statistic = {est.statistic}",
        f"window = {est.window[0]}..{est.window[1]}",
        f"ratio[first] = {est.ratios[0]:.12g}",
        f"ratio[last] = {est.ratios[-1]:.12g}",
        f"spread = {est.spread:.6g}",
        f"verdict = {est.verdict}",
    ]
    return "\n".join(lines) + "\n", {}


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", required=True, help="c/d, an integer, or a name such as sqrt2, pi/4, e")
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--timing", action="store_true", help="emit wall times to a sidecar")
    common.add_argument(
        "--precision-bits", type=int, default=None,
        help="interval precision cap for irrational q (default: $QDWORDS_PRECISION_BITS or 512)",
    )

    p = argparse.ArgumentParser(prog="qdwords", description="Lattices of q-decreasing words.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("words", parents=[common], help="list or count W_n^q")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--count", action="store_true")

    s = sub.add_parser("gf", parents=[common], help="generating function and series")
    s.add_argument("statistic", choices=formulas.STATISTICS)
    s.add_argument("--terms", type=_nonneg, default=30)

    s = sub.add_parser("lattice", parents=[common], help="lattice statistics for one n")
    s.add_argument("--n", type=_nonneg, required=True)

    s = sub.add_parser("hasse", parents=[common], help="Hasse diagram (DOT)")
    s.add_argument("--n", type=_nonneg, required=True)

    s = sub.add_parser("check", parents=[common], help="brute force vs closed forms")
    s.add_argument("--n-max", type=int, default=10)

    s = sub.add_parser("asympt", parents=[common], help="growth constant and window check")
    s.add_argument("--statistic", choices=("words", "coverings"), default="coverings")
    s.add_argument("--tol", type=_positive_float, default=1e-12)
    s.add_argument("--n-lo", type=int, default=30)
    s.add_argument("--n-hi", type=int, default=60)
    return p


COMMANDS = {
    "words": cmd_words,
    "gf": cmd_gf,
    "lattice": cmd_lattice,
    "hasse": cmd_hasse,
    "check": cmd_check,
    "asympt": cmd_asympt,
}


def _emit(text: str, timing: dict, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.timing:
        side = _dump_json(timing)
        if args.out:
            with open(args.out + ".timing.json", "w", encoding="utf-8") as fh:
                fh.write(side)
        else:
            sys.stderr.write(side)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        q = parse_q(args.q, args.precision_bits)
        result = COMMANDS[args.command](args, q)
    except (UsageError, ValueError, KeyError) as e:
        print(f"qdwords: error: {e}", file=sys.stderr)
        return 2
    except PrecisionError as e:
        print(f"qdwords: error: {e}", file=sys.stderr)
        return 1
    text, timing, *rest = result
    _emit(text, timing, args)
    return rest[0] if rest else 0


if __name__ == "__main__":
    sys.exit(main())
