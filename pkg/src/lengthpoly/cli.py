"""Command-line front end.

Input is UTF-8 JSON, one of ``{"ascent": [...]}``, ``{"intervals": [[l, r], ...]}``
or ``{"n": k, "relations": [[x, y], ...]}``, read from ``--input`` or stdin.
Exit status is 0 on success, 1 on a domain error (JSON on stderr) and 2 when
a budget is exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import formats
from .cycles import DEFAULT_CYCLE_BUDGET, build_weak_list, cycle_weight, enumerate_cycles
from .errors import BudgetExceeded, InvalidOrder, LengthPolyError
from .keygraph import arcs_to_json, build_key_graph, export_dot
from .order import (
    IntervalOrder,
    canonical_representation,
    from_ascent_sequence,
    from_intervals,
    from_relations,
    generate_pm,
)
from .schrijver import minimality_audit, schrijver_system

COMMANDS = ("canonical", "keygraph", "cycles", "weaklist", "schrijver", "verify", "pm", "bench")
FORMATS = ("json", "markdown", "csv", "dot")
BUDGET_ENV = "SCHRIJVER_CYCLE_BUDGET"


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str = "json"
    cycle_budget: int = DEFAULT_CYCLE_BUDGET
    witnesses: bool = False
    max_n: int = 5
    m: int | None = None
    input_path: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.cycle_budget < 1:
            raise ValueError("cycle budget must be a positive integer")


class UsageError(LengthPolyError):
    code = "usage_error"


def parse_order(data: bytes | str) -> IntervalOrder:
    try:
        obj = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InvalidOrder(f"input is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InvalidOrder("input must be a JSON object")
    if "ascent" in obj:
        return from_ascent_sequence(obj["ascent"])
    if "intervals" in obj:
        return from_intervals(obj["intervals"])
    if "relations" in obj:
        if "n" not in obj:
            raise InvalidOrder('relation input needs "n"')
        return from_relations(int(obj["n"]), obj["relations"])
    raise InvalidOrder('expected one of "ascent", "intervals" or "relations"')


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=False) + "\n"


def _unsupported(cfg: RunConfig):
    raise UsageError(f"format {cfg.fmt!r} is not available for {cfg.command!r}")


def _cmd_canonical(cfg, P):
    rep, m = canonical_representation(P)
    if cfg.fmt == "json":
        return _dump({"n": P.n, "magnitude": m, "canonical": rep.as_lists()})
    rows = [(x, l, r) for x, (l, r) in enumerate(rep.endpoints, 1)]
    if cfg.fmt == "markdown":
        return formats.markdown_table(["x", "l", "r"], rows)
    if cfg.fmt == "csv":
        return formats.csv_table(["x", "l", "r"], rows)
    _unsupported(cfg)


def _cmd_keygraph(cfg, P):
    G = build_key_graph(P)
    if cfg.fmt == "dot":
        return export_dot(G)
    if cfg.fmt == "json":
        return _dump(arcs_to_json(G))
    rows = [(a.tail, a.head, a.color.value) for a in G.arcs]
    if cfg.fmt == "markdown":
        return formats.markdown_table(["tail", "head", "color"], rows)
    return formats.csv_table(["tail", "head", "color"], rows)


def _cmd_cycles(cfg, P):
    G = build_key_graph(P)
    cycles = enumerate_cycles(G, cfg.cycle_budget)
    weights = [cycle_weight(G, C) for C in cycles]
    if cfg.fmt == "json":
        return _dump({
            "count": len(cycles),
            "loops": sum(1 for C in cycles if len(C) == 1),
            "distinct": len(set(weights)),
            "cycles": [{"cycle": list(C.vertices), "inequality": W.to_json()} for C, W in zip(cycles, weights)],
        })
    rows = [(i, formats.colored_cycle(G, C), str(W)) for i, (C, W) in enumerate(zip(cycles, weights), 1)]
    if cfg.fmt == "markdown":
        return formats.markdown_table(["#", "cycle", "inequality"], rows)
    if cfg.fmt == "csv":
        return formats.csv_table(["cycle", "gamma", "A", "B"],
                                 [(" ".join(map(str, C.vertices)), W.gamma,
                                   " ".join(map(str, sorted(W.A))), " ".join(map(str, sorted(W.B))))
                                  for C, W in zip(cycles, weights)])
    _unsupported(cfg)


def _cmd_weaklist(cfg, P):
    G = build_key_graph(P)
    entries = build_weak_list(G, cfg.cycle_budget)
    if cfg.fmt == "json":
        return _dump([formats.inequality_json(e.inequality, e.cycles) for e in entries])
    if cfg.fmt == "markdown":
        return formats.entries_markdown(G, entries)
    if cfg.fmt == "csv":
        return formats.entries_csv(entries)
    _unsupported(cfg)


def _cmd_schrijver(cfg, P):
    S = schrijver_system(P, with_witnesses=cfg.witnesses, budget=cfg.cycle_budget)
    if cfg.fmt == "json":
        return _dump(formats.schrijver_json(S))
    if cfg.fmt == "markdown":
        return formats.entries_markdown(S.G, S.kept)
    if cfg.fmt == "csv":
        return formats.entries_csv(S.kept)
    _unsupported(cfg)


def _cmd_pm(cfg, _):
    if cfg.m is None or cfg.m < 1:
        raise UsageError("pm needs --m with a positive integer")
    m = cfg.m
    S = schrijver_system(generate_pm(m), budget=cfg.cycle_budget)
    report = {
        "m": m,
        "n": S.n,
        "cycles": S.cycle_count,
        "distinct": len(S.weak_list),
        "irredundant": len(S),
        "expected_cycles": 5**m + 4 * m + 2,
        "expected_irredundant": 3**m + 4 * m + 2,
    }
    if cfg.fmt == "json":
        return _dump(report)
    rows = list(report.items())
    if cfg.fmt == "markdown":
        return formats.markdown_table(["quantity", "value"], rows)
    if cfg.fmt == "csv":
        return formats.csv_table(["quantity", "value"], rows)
    _unsupported(cfg)


def _verify_one(seq, P) -> dict:
    from .oracle import apex_check, build_endpoint_system, fme_eliminate, polyhedral_equivalence, tu_check

    G = build_key_graph(P)
    entries = build_weak_list(G)
    ineqs = [e.inequality for e in entries]
    system = build_endpoint_system(P)
    S = schrijver_system(P)
    rec = {
        "ascent": list(seq),
        "n": P.n,
        "equivalence": polyhedral_equivalence(fme_eliminate(system), ineqs, P.n),
        "tu": not tu_check(system, 5),
        "apex": apex_check(P),
        "minimal": not minimality_audit(S),
        "irredundant": len(S),
    }
    rec["pass"] = rec["equivalence"] and rec["tu"] and rec["apex"] and rec["minimal"]
    return rec


def _cmd_verify(cfg, _):
    from .oracle import corpus

    if cfg.fmt != "json":
        _unsupported(cfg)
    lines = []
    failed = 0
    for seq, P in corpus(cfg.max_n):
        rec = _verify_one(seq, P)
        failed += not rec["pass"]
        lines.append(json.dumps(rec))
    out = "\n".join(lines) + "\n"
    if failed:
        raise VerificationFailed(out, failed)
    return out


class VerificationFailed(LengthPolyError):
    code = "verification_failed"

    def __init__(self, report: str, failed: int):
        super().__init__(f"{failed} corpus orders failed verification")
        self.report = report


def _cmd_bench(cfg, _):
    from .oracle import corpus

    rows = []
    by_n: dict[int, list] = {}
    for seq, P in corpus(cfg.max_n):
        t0 = time.perf_counter()
        S = schrijver_system(P, budget=cfg.cycle_budget)
        by_n.setdefault(P.n, []).append((time.perf_counter() - t0, S.cycle_count, len(S)))
    for n, items in sorted(by_n.items()):
        total = sum(t for t, _, _ in items)
        rows.append((n, len(items), sum(c for _, c, _ in items), sum(k for _, _, k in items),
                     f"{total:.3f}", f"{1000 * total / len(items):.2f}"))
    header = ["n", "orders", "cycles", "irredundant", "seconds", "ms_per_order"]
    if cfg.fmt == "json":
        return _dump([dict(zip(header, r)) for r in rows])
    if cfg.fmt == "markdown":
        return formats.markdown_table(header, rows)
    if cfg.fmt == "csv":
        return formats.csv_table(header, rows)
    _unsupported(cfg)


_HANDLERS = {
    "canonical": _cmd_canonical,
    "keygraph": _cmd_keygraph,
    "cycles": _cmd_cycles,
    "weaklist": _cmd_weaklist,
    "schrijver": _cmd_schrijver,
    "pm": _cmd_pm,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}
_NEEDS_INPUT = {"canonical", "keygraph", "cycles", "weaklist", "schrijver"}


def run(cfg: RunConfig, data: bytes | str | None = None) -> tuple[int, str, str]:
    """Execute one command; returns ``(exit code, stdout text, stderr text)``."""
    try:
        P = parse_order(data if data is not None else "") if cfg.command in _NEEDS_INPUT else None
        return 0, _HANDLERS[cfg.command](cfg, P), ""
    except VerificationFailed as exc:
        return 1, exc.report, _dump(exc.to_dict())
    except BudgetExceeded as exc:
        return 2, "", _dump(exc.to_dict())
    except LengthPolyError as exc:
        return 1, "", _dump(exc.to_dict())


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_CYCLE_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{BUDGET_ENV} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON input file (default: stdin)")
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--cycle-budget", type=int, default=None,
                        help=f"maximum number of cycles to enumerate (default: ${BUDGET_ENV} or {DEFAULT_CYCLE_BUDGET})")
    parser = argparse.ArgumentParser(prog="lengthpoly", description="Length polyhedra of interval orders.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("canonical", parents=[common], help="canonical representation and magnitude")
    sub.add_parser("keygraph", parents=[common], help="colored key graph (arc list or DOT)")
    sub.add_parser("cycles", parents=[common], help="directed cycles and their inequalities")
    sub.add_parser("weaklist", parents=[common], help="distinct cycle inequalities in weak order")
    p = sub.add_parser("schrijver", parents=[common], help="irredundant system")
    p.add_argument("--witnesses", action="store_true", help="integral decompositions of redundant rows")
    p = sub.add_parser("verify", parents=[common], help="oracle checks over all orders up to --max-n")
    p.add_argument("--max-n", type=int, default=5)
    p = sub.add_parser("pm", parents=[common], help="the exponential family P_m")
    p.add_argument("--m", type=int, required=True)
    p = sub.add_parser("bench", parents=[common], help="timing table over the corpus")
    p.add_argument("--max-n", type=int, default=5)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    budget = args.cycle_budget if args.cycle_budget is not None else _default_budget()
    if budget < 1:
        print(_dump({"error": "usage_error", "message": "cycle budget must be positive"}), end="", file=sys.stderr)
        return 1
    cfg = RunConfig(
        command=args.command,
        fmt=args.format,
        cycle_budget=budget,
        witnesses=getattr(args, "witnesses", False),
        max_n=getattr(args, "max_n", 5),
        m=getattr(args, "m", None),
        input_path=args.input,
    )
    data = None
    if args.command in _NEEDS_INPUT:
        if args.input:
            with open(args.input, "rb") as fh:
                data = fh.read()
        else:
            data = sys.stdin.buffer.read()
    code, out, err = run(cfg, data)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
