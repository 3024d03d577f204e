"""Command-line front end.

Subcommands map one-to-one onto library operations:

* ``eval``     term values over a k-range
* ``diff``     difference-sequence terms over a k-range
* ``norm``     the order-m difference norm over a window
* ``classify`` membership of a difference sequence space
* ``dual``     dual-space membership (alpha, alpha-alpha, beta, gamma)
* ``lemma``    the two-sided boundedness equivalence check
* ``demo``     the strict-inclusion and product-escape demonstrations

Sequences are given with ``--seq`` as either expression text (``"exp(k^2)"``)
or a path to an existing file of newline-separated positive values
(``--logs`` reads the lines as logs instead).  Numeric output is log-domain
under ``log_value`` plus a rendering ``e^{...}``.

Exit status: 0 definite verdict, 2 inconclusive, 1 error, 64 usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from .duals import DualReport, dual_test
from .errors import GeometricError, ParseError
from .gdiff import delta_binomial, delta_norm
from .gseq import (
    DEFAULT_TOL,
    DEFAULT_WINDOW,
    GSeq,
    Verdict,
    seq_from_expr,
    seq_from_logs,
    seq_from_values,
    term,
)
from .spaces import (
    SPACES,
    MembershipReport,
    algebra_counterexample,
    classify,
    inclusion_demo,
    lemma_equivalence_check,
)

__all__ = [
    "main",
    "load_sequence",
    "membership_report_from_envelope",
    "dual_report_from_envelope",
]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is 64."""

    def error(self, message):  # noqa: A002 - argparse API
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _window_type(text: str) -> int:
    n = int(text)
    if n < 4:
        raise argparse.ArgumentTypeError("N must be at least 4")
    return n


def _order_type(text: str) -> int:
    m = int(text)
    if m < 0:
        raise argparse.ArgumentTypeError("m must be non-negative")
    return m


def _tol_type(text: str) -> float:
    t = float(text)
    if not t > 0:
        raise argparse.ArgumentTypeError("tol must be positive")
    return t


def _range_type(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like 1..10")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("range bounds must be integers") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError("range needs 1 <= start <= end")
    return a, b


def load_sequence(spec: str, logs: bool = False) -> GSeq:
    """An expression, unless ``spec`` names an existing file of numbers."""
    path = Path(spec)
    if path.is_file():
        values = []
        for lineno, line in enumerate(path.read_text().splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                values.append(float(stripped))
            except ValueError:
                raise ValueError(
                    f"{spec}:{lineno}: not a number: {stripped!r}"
                ) from None
        arr = np.asarray(values, dtype=np.float64)
        if logs:
            return seq_from_logs(arr)
        return seq_from_values(arr)
    return seq_from_expr(spec)


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="geomseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def seq_flags(p, with_range=False, with_window=False, with_m=True):
        p.add_argument("--seq", required=True, help="expression text or buffer file path")
        p.add_argument("--logs", action="store_true", help="buffer file lines are logs, not values")
        if with_m:
            p.add_argument("--m", type=_order_type, default=1, help="difference order (default 1)")
        if with_range:
            p.add_argument("--range", type=_range_type, default=(1, 10), metavar="A..B",
                           help="k-range, default 1..10")
        if with_window:
            p.add_argument("--N", type=_window_type, default=DEFAULT_WINDOW,
                           help=f"probe window (default {DEFAULT_WINDOW})")
            p.add_argument("--tol", type=_tol_type, default=DEFAULT_TOL,
                           help=f"stabilization tolerance (default {DEFAULT_TOL})")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p_eval = sub.add_parser("eval", help="evaluate terms over a k-range")
    seq_flags(p_eval, with_range=True, with_m=False)

    p_diff = sub.add_parser("diff", help="difference-sequence terms over a k-range")
    seq_flags(p_diff, with_range=True)

    p_norm = sub.add_parser("norm", help="order-m difference norm over a window")
    seq_flags(p_norm, with_window=True)

    p_classify = sub.add_parser("classify", help="difference-space membership")
    seq_flags(p_classify, with_window=True)
    p_classify.add_argument("--space", required=True, choices=SPACES)

    p_dual = sub.add_parser("dual", help="dual-space membership")
    seq_flags(p_dual, with_window=True)
    p_dual.add_argument(
        "--kind",
        required=True,
        choices=("alpha", "alpha-alpha", "alpha_alpha", "beta", "gamma"),
    )

    p_lemma = sub.add_parser("lemma", help="two-sided boundedness equivalence check")
    seq_flags(p_lemma, with_window=True, with_m=False)

    p_demo = sub.add_parser("demo", help="inclusion / product-escape demonstrations")
    p_demo.add_argument("--which", choices=("inclusion", "algebra"), default="inclusion")
    p_demo.add_argument("--m", type=_order_type, default=1)
    p_demo.add_argument("--N", type=_window_type, default=DEFAULT_WINDOW)
    p_demo.add_argument("--tol", type=_tol_type, default=DEFAULT_TOL)
    p_demo.add_argument("--format", choices=("json", "csv"), default="json")

    return parser


def _verdict_blocks(v: Verdict) -> tuple[dict, dict]:
    d = v.to_dict()
    verdict = {"kind": d["kind"], "estimate_log": d["estimate_log"], "window": d["window"]}
    diagnostics = {"probe_N": d["probe_N"], "probe_2N": d["probe_2N"], "note": d["note"]}
    return verdict, diagnostics


def _merge_blocks(verdict: dict, diagnostics: dict) -> dict:
    return {**verdict, **diagnostics}


def membership_report_from_envelope(env: dict) -> MembershipReport:
    """Rebuild the classify report from its JSON envelope."""
    return MembershipReport.from_dict(
        {
            "space": env["inputs"]["space"],
            "m": env["inputs"]["m"],
            "verdict": _merge_blocks(env["verdict"], env["diagnostics"]),
            "witness_index": env["witness_index"],
            "window": env["verdict"]["window"],
        }
    )


def dual_report_from_envelope(env: dict) -> DualReport:
    """Rebuild the dual report from its JSON envelope."""
    return DualReport.from_dict(
        {
            "kind": env["inputs"]["kind"],
            "m": env["inputs"]["m"],
            "verdict": _merge_blocks(env["verdict"], env["diagnostics"]),
            "partial_log": env["partial_log"],
            "remainder_ok": env["remainder_ok"],
        }
    )


def _rows_envelope(command: str, inputs: dict, seq: GSeq, lo: int, hi: int) -> dict:
    rows = []
    for k in range(lo, hi + 1):
        g = term(seq, k)
        rows.append({"k": k, "log_value": g.log_value, "rendering": g.render()})
    return {"command": command, "inputs": inputs, "rows": rows}


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _flatten(d: dict, prefix: str = ""):
    for key, val in d.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            yield from _flatten(val, name + ".")
        elif isinstance(val, list):
            yield name, json.dumps(val)
        else:
            yield name, val


def _emit(env: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(env, indent=2))
        return
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if "rows" in env:
        writer.writerow(["k", "log_value", "rendering"])
        for row in env["rows"]:
            writer.writerow([row["k"], _csv_value(row["log_value"]), row["rendering"]])
    else:
        writer.writerow(["key", "value"])
        for key, val in _flatten(env):
            writer.writerow([key, _csv_value(val)])
    sys.stdout.write(out.getvalue())


def _exit_for(*verdict_kinds: str) -> int:
    return EXIT_INCONCLUSIVE if "inconclusive" in verdict_kinds else EXIT_OK


def _run(args: argparse.Namespace) -> int:
    fmt = args.format

    if args.command == "eval":
        seq = load_sequence(args.seq, args.logs)
        lo, hi = args.range
        env = _rows_envelope("eval", {"seq": args.seq, "range": f"{lo}..{hi}"}, seq, lo, hi)
        _emit(env, fmt)
        return EXIT_OK

    if args.command == "diff":
        seq = load_sequence(args.seq, args.logs)
        lo, hi = args.range
        view = delta_binomial(seq, args.m)
        env = _rows_envelope(
            "diff", {"seq": args.seq, "m": args.m, "range": f"{lo}..{hi}"}, view, lo, hi
        )
        _emit(env, fmt)
        return EXIT_OK

    if args.command == "norm":
        seq = load_sequence(args.seq, args.logs)
        g = delta_norm(seq, args.m, args.N)
        env = {
            "command": "norm",
            "inputs": {"seq": args.seq, "m": args.m, "N": args.N, "tol": args.tol},
            "log_value": g.log_value,
            "rendering": g.render(),
        }
        _emit(env, fmt)
        return EXIT_OK

    if args.command == "classify":
        seq = load_sequence(args.seq, args.logs)
        report = classify(seq, args.space, args.m, args.N, args.tol)
        verdict, diagnostics = _verdict_blocks(report.verdict)
        env = {
            "command": "classify",
            "inputs": {
                "seq": args.seq,
                "space": args.space,
                "m": args.m,
                "N": args.N,
                "tol": args.tol,
            },
            "verdict": verdict,
            "diagnostics": diagnostics,
            "witness_index": report.witness_index,
            "member": report.member,
        }
        _emit(env, fmt)
        return _exit_for(report.verdict.kind.value)

    if args.command == "dual":
        seq = load_sequence(args.seq, args.logs)
        kind = args.kind.replace("-", "_")
        report = dual_test(seq, kind, args.m, args.N, args.tol)
        verdict, diagnostics = _verdict_blocks(report.verdict)
        env = {
            "command": "dual",
            "inputs": {
                "seq": args.seq,
                "kind": kind,
                "m": report.m,
                "N": args.N,
                "tol": args.tol,
            },
            "verdict": verdict,
            "diagnostics": diagnostics,
            "witness_index": None,
            "member": report.member,
            "partial_log": report.partial_value.log_value,
            "remainder_ok": None
            if report.remainder_ok is None
            else report.remainder_ok.to_dict(),
        }
        _emit(env, fmt)
        return _exit_for(report.verdict.kind.value)

    if args.command == "lemma":
        seq = load_sequence(args.seq, args.logs)
        report = lemma_equivalence_check(seq, args.N, args.tol)
        env = {
            "command": "lemma",
            "inputs": {"seq": args.seq, "N": args.N, "tol": args.tol},
            "agreement": report.agreement,
            "has_inconclusive": report.has_inconclusive,
            "cond_a": report.cond_a.to_dict(),
            "cond_b_i": report.cond_b_i.to_dict(),
            "cond_b_ii": report.cond_b_ii.to_dict(),
            "window": report.window,
        }
        _emit(env, fmt)
        return EXIT_INCONCLUSIVE if report.has_inconclusive else EXIT_OK

    if args.command == "demo":
        if args.which == "inclusion":
            report = inclusion_demo(args.m, args.N, args.tol)
            sub_reports = (
                report.at_order_m,
                report.at_order_m_plus_1,
                report.chain_c,
                report.chain_linf,
            )
        else:
            report = algebra_counterexample(args.m, args.N, args.tol)
            sub_reports = (report.x_report, report.y_report, report.product_report)
        env = {
            "command": "demo",
            "inputs": {"which": args.which, "m": args.m, "N": args.N, "tol": args.tol},
            "holds": report.holds,
            "report": report.to_dict(),
        }
        _emit(env, fmt)
        kinds = tuple(r.verdict.kind.value for r in sub_reports)
        return _exit_for(*kinds)

    raise AssertionError(f"unhandled command {args.command!r}")


def _error_payload(exc: BaseException) -> dict:
    payload = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        payload["offset"] = exc.offset
        payload["expected"] = list(exc.expected)
    return {"error": payload}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (GeometricError, ValueError, OverflowError, LookupError, OSError) as exc:
        print(json.dumps(_error_payload(exc), indent=2))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
