"""
Command line front end.

    onebridge gamma --catalog km3 -n 2
    onebridge alexander --p 2 --q 1 --relator agagagAg
    onebridge verify --catalog km5 --n-max 12 --format json
    onebridge batch knots.ndjson

Exit status: 0 success, 1 a theorem check failed on valid input,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import catalog
from .intlinalg import circulant
from .invariants import (INFINITE, VerificationError, alexander_polynomial, check_cover,
                         coprime_degrees, covering_polynomial, reduced_torsion, verify_knot)
from .knot import (KnotError, OneOneKnot, associated_polynomial, lift_presentation,
                   strongly_cyclic_monodromy, validate)
from .polyring import NotDivisible
from .words import RelatorSyntaxError

SCHEMA = "onebridge.report/1"


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    knot: Optional[dict]
    params: dict
    result: dict
    witnesses: list = field(default_factory=list)
    ok: bool = True
    error: Optional[str] = None
    timing_ms: float = 0.0
    schema: str = SCHEMA

    def to_json(self) -> dict:
        return {"schema": self.schema, "command": self.command, "knot": self.knot,
                "params": self.params, "result": self.result, "witnesses": self.witnesses,
                "ok": self.ok, "error": self.error, "timing_ms": self.timing_ms}

    @classmethod
    def from_json(cls, data: dict) -> "Report":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(data["command"], data["knot"], data["params"], data["result"],
                   data["witnesses"], data["ok"], data["error"], data["timing_ms"], data["schema"])

    def to_text(self) -> str:
        lines = []
        head = self.command
        if self.knot:
            head += f" {self.knot.get('name') or ''} L({self.knot['p']},{self.knot['q']}) " \
                    f"<a,g | {self.knot['relator']}>"
        if self.params:
            head += " " + " ".join(f"{k}={v}" for k, v in self.params.items())
        lines.append(head.replace("  ", " "))
        if self.error:
            lines.append(f"error: {self.error}")
        _text_lines(self.result, lines, "")
        for w in self.witnesses:
            lines.append("witness: " + ", ".join(f"{k}={v}" for k, v in w.items()))
        lines.append("status: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines)


def _text_lines(value, lines, prefix):
    if isinstance(value, dict):
        if "text" in value:
            lines.append(f"{prefix}: {value['text']}")
            return
        for k, v in value.items():
            _text_lines(v, lines, f"{prefix}.{k}" if prefix else k)
    elif isinstance(value, list):
        if all(not isinstance(v, dict) for v in value):
            lines.append(f"{prefix}: {json.dumps(value, ensure_ascii=False)}")
            return
        for i, v in enumerate(value):
            _text_lines(v, lines, f"{prefix}[{i}]")
    else:
        lines.append(f"{prefix}: {'-' if value is None else value}")


def _cover_text(cov) -> str:
    if cov.order is INFINITE:
        return f"{cov.homology}, infinite, torsion order {cov.torsion_order}"
    return f"{cov.homology}, order {cov.order}"


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError(f"{args.command} needs -n N")
    return args.n


def _cmd_homology(k, args):
    return {"exterior": validate(k).to_json()}, [], True


def _cmd_monodromy(k, args):
    return {"monodromy": strongly_cyclic_monodromy(k, _need_n(args)).to_json()}, [], True


def _cmd_lift(k, args):
    cp = lift_presentation(k, _need_n(args))
    return {"n": cp.n, "word": str(cp.w), "abelianization": str(cp.abelianization()),
            "gamma": associated_polynomial(cp).to_json()}, [], True


def _cmd_gamma(k, args):
    cp = lift_presentation(k, _need_n(args))
    return {"gamma": associated_polynomial(cp).to_json()}, [], True


def _cmd_alexander(k, args):
    alex = alexander_polynomial(k)
    result = alex.to_json()
    result["torsion"] = reduced_torsion(k).to_json()
    return result, [], True


def _cmd_cover(k, args):
    n = _need_n(args)
    cov = check_cover(k, n)
    g = covering_polynomial(k, n)
    result = {"summary": {"text": _cover_text(cov)}, "covering_polynomial": g.to_json(),
              "presentation_matrix": circulant(g.coeffs).to_json(), **cov.to_json()}
    return result, [], cov.ok


def _verify_degrees(k, args):
    if args.n is not None:
        strongly_cyclic_monodromy(k, args.n)
        return [args.n]
    return coprime_degrees(k.p, args.n_max)


def verification_result(k: OneOneKnot, n_values, expected=None):
    """(result, witnesses, ok) for the full verification suite."""
    v = verify_knot(k, n_values)
    failures = list(v.failures)
    if expected is not None:
        if v.alexander.delta != expected.delta:
            failures.append(f"Delta = {v.alexander.delta}, golden {expected.delta}")
        if v.exterior.d != expected.d:
            failures.append(f"d = {v.exterior.d}, golden {expected.d}")
        for n, g in v.gammas.items():
            if n in expected.gamma and g != expected.gamma[n]:
                failures.append(f"n={n}: Gamma = {g}, golden {expected.gamma[n]}")
    result = {
        "exterior": v.exterior.to_json(),
        "delta": v.alexander.delta.to_json(),
        "delta_at_1": str(v.alexander.delta(1)),
        "coverings": [
            {"n": n, "gamma": v.gammas[n].to_json(), "theorem": th.to_json(), "homology": cov.to_json()}
            for n, th, cov in zip(n_values, v.theorem, v.covers)
        ],
        "golden_checked": expected is not None,
        "failures": failures,
    }
    witnesses = [{"n": th.n, "sign": th.witness[0], "shift": th.witness[1]}
                 for th in v.theorem if th.witness is not None]
    return result, witnesses, not failures


def _cmd_verify(k, args):
    return verification_result(k, _verify_degrees(k, args), getattr(args, "golden", None))


COMMANDS = {
    "homology": _cmd_homology,
    "monodromy": _cmd_monodromy,
    "lift": _cmd_lift,
    "gamma": _cmd_gamma,
    "alexander": _cmd_alexander,
    "cover": _cmd_cover,
    "verify": _cmd_verify,
}


def knot_from_args(args) -> OneOneKnot:
    if args.catalog:
        if any(v is not None for v in (args.p, args.q, args.relator)):
            raise UsageError("give either --catalog or --p/--q/--relator, not both")
        try:
            entry = catalog.lookup(args.catalog)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        args.golden = entry
        return entry.knot
    if args.p is None or args.relator is None:
        raise UsageError("a knot needs --catalog NAME or --p P --q Q --relator WORD")
    q = args.q if args.q is not None else (0 if args.p == 1 else None)
    if q is None:
        raise UsageError("--q is required when p > 1")
    return OneOneKnot.from_text(args.p, q, args.relator, args.name)


def run_command(args) -> Report:
    start = time.perf_counter()
    knot = knot_from_args(args)
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.command == "verify" and args.n is None:
        params["n_max"] = args.n_max
    result, witnesses, ok = COMMANDS[args.command](knot, args)
    return Report(args.command, knot.to_json(), params, result, witnesses, ok,
                  None, round((time.perf_counter() - start) * 1000, 3))


def _batch_line(job):
    lineno, line, n_max = job
    start = time.perf_counter()
    try:
        data = json.loads(line)
        if not isinstance(data, dict):
            raise UsageError("each line must be a JSON object")
        knot = OneOneKnot.from_json(data)
        validate(knot)
        n_values = data.get("n_values")
        if n_values is None:
            n_values = coprime_degrees(knot.p, n_max)
        for n in n_values:
            strongly_cyclic_monodromy(knot, int(n))
        result, witnesses, ok = verification_result(knot, [int(n) for n in n_values])
        rep = Report("verify", knot.to_json(), {"line": lineno, "n_values": list(n_values)},
                     result, witnesses, ok)
        kind = "ok" if ok else "failed"
    except (json.JSONDecodeError, UsageError, KnotError, RelatorSyntaxError, TypeError) as exc:
        rep = Report("verify", None, {"line": lineno}, {}, [], False, str(exc))
        kind = "invalid"
    except (VerificationError, NotDivisible) as exc:
        rep = Report("verify", None, {"line": lineno}, {}, [], False, str(exc))
        kind = "failed"
    rep.timing_ms = round((time.perf_counter() - start) * 1000, 3)
    return rep, kind


def run_batch(path: str, n_max: int = 12, jobs: int = 1):
    """Reports for each nonblank line of an NDJSON file, in input order,
    plus a summary dict."""
    with open(path, encoding="utf-8") as fh:
        todo = [(i, line, n_max) for i, line in enumerate(fh, 1) if line.strip()]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_batch_line, todo))
    else:
        outcomes = [_batch_line(job) for job in todo]
    counts = {"ok": 0, "failed": 0, "invalid": 0}
    for _, kind in outcomes:
        counts[kind] += 1
    summary = {"schema": SCHEMA, "summary": True, "total": len(outcomes), "passed": counts["ok"],
               "failed": counts["failed"], "invalid": counts["invalid"]}
    return [rep for rep, _ in outcomes], summary


def _emit(report: Report, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(report.to_json(), ensure_ascii=False) + "\n")
    else:
        out.write(report.to_text() + "\n\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    knot_opts = argparse.ArgumentParser(add_help=False)
    knot_opts.add_argument("--catalog", metavar="NAME", help="built-in knot, e.g. km3, trivial5_2")
    knot_opts.add_argument("--p", type=int)
    knot_opts.add_argument("--q", type=int)
    knot_opts.add_argument("--relator", help="relator in a, g (uppercase inverse), e.g. agagAg")
    knot_opts.add_argument("--name")
    knot_opts.add_argument("-n", type=int, help="covering degree")
    knot_opts.add_argument("--n-max", type=int, default=12,
                           help="verify: all n in 2..N_MAX coprime to p (default 12)")

    parser = argparse.ArgumentParser(prog="onebridge", description=__doc__.split("\n\n")[0].strip(),
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "homology": "H_1 of the knot exterior",
        "monodromy": "monodromy of the n-fold strongly-cyclic covering",
        "lift": "cyclic presentation of the n-fold covering",
        "gamma": "n-cyclic polynomial",
        "alexander": "Alexander polynomial and reduced torsion",
        "cover": "H_1 of the n-fold covering, by Smith form and by resultants",
        "verify": "check the main theorem and its corollaries",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common, knot_opts], help=text)
    b = sub.add_parser("batch", parents=[common], help="verify every knot in an NDJSON file")
    b.add_argument("path")
    b.add_argument("--n-max", type=int, default=12)
    b.add_argument("--jobs", type=int, default=1)
    sub.add_parser("catalog", parents=[common], help="list built-in knots")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog":
        entries = catalog.builtin()
        if args.format == "json":
            for e in entries:
                out.write(json.dumps(e.to_json()) + "\n")
        else:
            for e in entries:
                k = e.knot
                out.write(f"{e.name:14s} L({k.p},{k.q})  <a,g | {k.relator.relator_text()}>  "
                          f"Delta = {e.delta}  d = {e.d}\n")
        return 0
    if args.command == "batch":
        try:
            reports, summary = run_batch(args.path, args.n_max, args.jobs)
        except OSError as exc:
            print(f"onebridge: {exc}", file=sys.stderr)
            return 2
        for rep in reports:
            _emit(rep, args.format, out)
        if args.format == "json":
            out.write(json.dumps(summary) + "\n")
        else:
            out.write(f"summary: {summary['total']} knots, {summary['passed']} passed, "
                      f"{summary['failed']} failed, {summary['invalid']} invalid\n")
        if summary["invalid"]:
            return 2
        return 1 if summary["failed"] else 0
    args.golden = None
    try:
        report = run_command(args)
    except (UsageError, KnotError, RelatorSyntaxError) as exc:
        print(f"onebridge: {exc}", file=sys.stderr)
        return 2
    except (VerificationError, NotDivisible) as exc:
        print(f"onebridge: verification failed: {exc}", file=sys.stderr)
        return 1
    _emit(report, args.format, out)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
