"""Command-line entry point: ``python -m bressoud <command> ...``.

Parameters follow the tuple order (alpha; eta, k, r).  Exit status is 0 on
success, 1 when a verification fails, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from typing import Sequence

from .bands import (
    Window,
    band_in_window,
    band_parity,
    band_type,
    find_bands,
)
from .bijection import phi, psi
from .errors import BressoudError, InvariantViolation, NoBandInWindow
from .params import Family, FamilyParams
from .parts import parse_overpartition, parse_partition
from .verify import Identity, family_counts, roundtrip_check, verify_identity

IDENTITY_ALIASES = {
    "main": Identity.A0bar_eq_B0bar,
    "gfA0bar": Identity.gfA0bar,
    "gfBj": Identity.gfBj,
    "factor": Identity.B0bar_eq_product,
    "classical": Identity.Aj_eq_Bj,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse already exits 2; keep the message on stderr
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _alphas(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --alpha list {text!r}")


def _add_params(sp: argparse.ArgumentParser, *, max_n: int | None = None, fmt: bool = True) -> None:
    g = sp.add_argument_group("parameters (alpha_1..alpha_lambda; eta, k, r)")
    g.add_argument("--alpha", type=_alphas, required=True, help="comma-separated alphas, e.g. 3,7")
    g.add_argument("--eta", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--j", type=int, choices=(0, 1), default=0)
    if max_n is not None:
        sp.add_argument("--max-n", type=int, default=max_n)
        sp.add_argument("--threads", type=int, default=None, help="worker processes (default: cores)")
    if fmt:
        sp.add_argument("--format", choices=("plain", "json", "csv"), default="plain")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bressoud", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("count", help="per-n member counts of a family")
    sp.add_argument("--family", required=True, choices=[f.value for f in Family if f is not Family.Deta])
    _add_params(sp, max_n=60)

    sp = sub.add_parser("verify", help="compare both sides of an identity for n <= max-n")
    sp.add_argument("--identity", required=True, choices=sorted(IDENTITY_ALIASES))
    _add_params(sp, max_n=60)

    sp = sub.add_parser("bands", help="list m-bands with parity or type")
    sp.add_argument("--pi", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--t", type=int, default=None, help="window index for (k-2)-band types")
    sp.add_argument("--windows", action="store_true", help="list the windows each band belongs to")
    _add_params(sp)

    sp = sub.add_parser("phi", help="map pi in B0bar to (tau, mu)")
    sp.add_argument("--pi", required=True)
    sp.add_argument("--trace", action="store_true")
    _add_params(sp)

    sp = sub.add_parser("psi", help="map (tau, mu) back to pi")
    sp.add_argument("--tau", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--trace", action="store_true")
    _add_params(sp)

    sp = sub.add_parser("roundtrip", help="exhaustive phi/psi round trip up to max-n")
    _add_params(sp, max_n=50)
    return ap


def _params(ns) -> FamilyParams:
    p = FamilyParams(ns.alpha, ns.eta, ns.k, ns.r, ns.j)
    p.check_base()
    return p


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _cmd_count(ns) -> tuple[int, str]:
    p = _params(ns).check(ns.family)
    counts = family_counts(ns.family, p, ns.max_n, ns.threads)
    if ns.format == "json":
        out = json.dumps(
            {"family": ns.family, "params": str(p), "j": p.j, "counts": [[n, c] for n, c in enumerate(counts)]}
        )
    elif ns.format == "csv":
        out = _csv([("n", "count")] + list(enumerate(counts)))
    else:
        out = "\n".join([f"{ns.family}{p} j={p.j}", f"{'n':>4} {'count':>10}"] + [f"{n:>4} {c:>10}" for n, c in enumerate(counts)])
    return 0, out


def _report_out(rep, fmt: str) -> tuple[int, str]:
    out = rep.dumps() if fmt == "json" else rep.to_csv().rstrip("\n") if fmt == "csv" else rep.render()
    return (0 if rep.overall else 1), out


def _cmd_verify(ns) -> tuple[int, str]:
    rep = verify_identity(IDENTITY_ALIASES[ns.identity], _params(ns), ns.max_n, j=ns.j, threads=ns.threads)
    return _report_out(rep, ns.format)


def _cmd_roundtrip(ns) -> tuple[int, str]:
    return _report_out(roundtrip_check(_params(ns), ns.max_n, ns.threads), ns.format)


def _cmd_bands(ns) -> tuple[int, str]:
    p = _params(ns)
    pi = parse_overpartition(ns.pi)
    rows = []
    top = max((x.size for x in pi), default=0) // p.eta + 1
    for b in find_bands(pi, ns.m, p.eta):
        row = {"start": b.start, "width": b.width, "parts": b.render(pi)}
        if ns.m == p.k - 1:
            row["parity"] = band_parity(pi, b, p).value
        if ns.m == p.k - 2 and ns.t is not None:
            try:
                row["type"] = band_type(pi, b, ns.t, p).value
            except NoBandInWindow:
                row["type"] = None
        if ns.windows:
            row["closed_windows"] = [t for t in range(1, top + 1) if band_in_window(pi, b, Window(t), p.eta)]
            row["open_windows"] = [t for t in range(1, top + 1) if band_in_window(pi, b, Window(t, True), p.eta)]
        rows.append(row)
    if ns.format == "json":
        return 0, json.dumps({"pi": pi.render(), "m": ns.m, "bands": rows})
    keys = list(rows[0]) if rows else ["start", "width", "parts"]
    if ns.format == "csv":
        return 0, _csv([keys] + [[_cell(r.get(k)) for k in keys] for r in rows])
    lines = [f"{len(rows)} {ns.m}-band(s) of ({pi.render()})"]
    lines += ["  " + "  ".join(f"{k}={_cell(r.get(k))}" for k in keys) for r in rows]
    return 0, "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, list):
        return " ".join(map(str, v))
    return "" if v is None else str(v)


def _trace_lines(trace) -> list[str]:
    return [
        f"  t={s.t} {s.action.value} {s.part.token()} s={s.s_before.token()} g={s.g_before.token()}"
        + (f" witness={s.evidence.indices()}" if s.evidence else "")
        for s in trace
    ]


def _cmd_phi(ns) -> tuple[int, str]:
    p = _params(ns)
    res = phi(parse_overpartition(ns.pi), p)
    if ns.format == "json":
        data = res.to_json()
        if not ns.trace:
            data.pop("trace")
        return 0, json.dumps(data)
    tau = ",".join(map(str, res.tau))
    if ns.format == "csv":
        return 0, _csv([("tau", "mu"), (tau, res.mu.render())])
    lines = [f"tau = ({tau})", f"mu  = ({res.mu.render()})"]
    if ns.trace:
        lines += ["trace:"] + _trace_lines(res.trace)
    return 0, "\n".join(lines)


def _cmd_psi(ns) -> tuple[int, str]:
    p = _params(ns)
    res = psi(parse_partition(ns.tau), parse_overpartition(ns.mu), p)
    if ns.format == "json":
        data = res.to_json()
        if not ns.trace:
            data.pop("trace")
        return 0, json.dumps(data)
    if ns.format == "csv":
        return 0, _csv([("pi",), (res.pi.render(),)])
    lines = [f"pi = ({res.pi.render()})"]
    if ns.trace:
        lines += ["trace:"] + _trace_lines(res.trace)
    return 0, "\n".join(lines)


COMMANDS = {
    "count": _cmd_count,
    "verify": _cmd_verify,
    "bands": _cmd_bands,
    "phi": _cmd_phi,
    "psi": _cmd_psi,
    "roundtrip": _cmd_roundtrip,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, out = COMMANDS[ns.command](ns)
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=stderr)
        return 1
    except BressoudError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(out, file=stdout)
    return code


def main() -> None:
    sys.exit(run())
