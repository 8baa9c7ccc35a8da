"""JSON, Markdown and CSV renderings shared by the command-line interface."""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Iterable, Sequence

from .circulation import Decomposition
from .cycles import CycleInequality, DirectedCycle, WeakEntry
from .keygraph import KeyGraph
from .schrijver import SchrijverSystem


def rational(v: Fraction | int) -> int | str:
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def colored_cycle(G: KeyGraph, C: DirectedCycle) -> str:
    """``->c0 ρv1 ->c1 ρv2 ... ρvk ->ck`` where ``c0`` colors the arc entering ``v1``."""
    arcs = C.arcs(G)
    parts = [f"->{arcs[-1].color.short}"]
    for v, a in zip(C.vertices, arcs):
        parts.append(f"ρ{v}")
        parts.append(f"->{a.color.short}")
    return " ".join(parts)


def inequality_json(W: CycleInequality, cycles: Iterable[DirectedCycle] = ()) -> dict:
    d = W.to_json()
    cs = [list(C.vertices) for C in cycles]
    if cs:
        d["cycles"] = cs
    return d


def decomposition_json(target: CycleInequality, dec: Decomposition, G: KeyGraph) -> dict:
    return {"target": target.to_json(), "terms": dec.to_json(G)}


def markdown_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    for r in rows:
        lines.append("| " + " | ".join(str(c) for c in r) + " |")
    return "\n".join(lines) + "\n"


def csv_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _ids(s: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(s))


def inequality_rows(G: KeyGraph, entries: Sequence[WeakEntry]) -> list[tuple]:
    return [(i, str(e.inequality), colored_cycle(G, e.representative)) for i, e in enumerate(entries, 1)]


def entries_markdown(G: KeyGraph, entries: Sequence[WeakEntry]) -> str:
    return markdown_table(["#", "inequality", "cycle"], inequality_rows(G, entries))


def entries_csv(entries: Sequence[WeakEntry]) -> str:
    return csv_table(["gamma", "A", "B"],
                     [(e.inequality.gamma, _ids(e.inequality.A), _ids(e.inequality.B)) for e in entries])


def schrijver_json(S: SchrijverSystem) -> dict:
    G = S.G
    out = {
        "n": S.n,
        "counts": {
            "cycles": S.cycle_count,
            "distinct": len(S.weak_list),
            "irredundant": len(S.kept),
            "redundant": len(S.discarded),
        },
        "inequalities": [inequality_json(e.inequality, e.cycles) for e in S.kept],
        "redundant": [],
    }
    for d in S.discarded:
        item = {
            "inequality": d.inequality.to_json(),
            "certificate": [{"coeff": rational(a), "inequality": V.to_json()} for a, V in d.certificate],
        }
        if d.witness is not None:
            item["witness"] = decomposition_json(d.inequality, d.witness, G)
        out["redundant"].append(item)
    return out
