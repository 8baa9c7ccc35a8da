"""Slacks, slack-zero pairs and the colored key graph of an interval order."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import InvalidOrder, UndefinedSlack
from .order import IntervalOrder, IntervalRepresentation, canonical_representation, from_intervals

__all__ = [
    "Color",
    "Arc",
    "KeyGraph",
    "slack",
    "build_key_graph",
    "check_diamond_closure",
    "DiamondViolation",
    "export_dot",
    "arcs_to_json",
    "arc_weight",
]


class Color(str, Enum):
    BLUE = "blue"
    RED = "red"

    @property
    def short(self) -> str:
        return self.value[0]


BLUE, RED = Color.BLUE, Color.RED


@dataclass(frozen=True, order=True)
class Arc:
    tail: int
    head: int
    color: Color

    def __post_init__(self):
        if self.tail == self.head and self.color is not RED:
            raise ValueError("only red loops are allowed")

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def __str__(self) -> str:
        return f"{self.tail}-{self.color.short}->{self.head}"


def arc_weight(arc: Arc) -> tuple[int, int, int]:
    """Length-variable part of an arc weight as ``(gamma, variable, coefficient)``.

    Weights are read as ``gamma + coefficient * rho_variable <= 0`` once the
    left-endpoint terms (which cancel around any cycle) are dropped: a blue
    arc ``x -> y`` contributes ``1 + rho_x``, a red arc ``x -> y`` (or red
    loop) contributes ``-rho_y``.
    """
    if arc.color is BLUE:
        return 1, arc.tail, 1
    return 0, arc.head, -1


@dataclass(frozen=True)
class KeyGraph:
    """Directed graph on vertices ``1..n`` with blue arcs, red arcs and red loops.

    ``canonical`` is set when the graph was built from an interval order.
    """

    n: int
    arcs: tuple[Arc, ...]
    canonical: IntervalRepresentation | None = field(default=None, compare=False)
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        arcs = tuple(sorted(set(self.arcs)))
        index: dict[tuple[int, int], Arc] = {}
        for a in arcs:
            if not (1 <= a.tail <= self.n and 1 <= a.head <= self.n):
                raise ValueError(f"arc {a} outside 1..{self.n}")
            if (a.tail, a.head) in index:
                raise ValueError(f"parallel arcs between {a.tail} and {a.head}")
            index[(a.tail, a.head)] = a
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[tuple[int, int, str]]) -> "KeyGraph":
        return cls(n, tuple(Arc(t, h, Color(c)) for t, h, c in triples))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arc(self, tail: int, head: int) -> Arc | None:
        return self._index.get((tail, head))

    def has_arc(self, tail: int, head: int, color: Color | None = None) -> bool:
        a = self._index.get((tail, head))
        return a is not None and (color is None or a.color is color)

    def out_arcs(self, v: int) -> list[Arc]:
        return [a for a in self.arcs if a.tail == v]

    def in_arcs(self, v: int) -> list[Arc]:
        return [a for a in self.arcs if a.head == v]

    def successors(self) -> dict[int, list[int]]:
        succ: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a in self.arcs:
            succ[a.tail].append(a.head)
        return succ

    def loops(self) -> list[int]:
        return [a.tail for a in self.arcs if a.is_loop]

    def blue_arcs(self) -> list[Arc]:
        return [a for a in self.arcs if a.color is BLUE]

    def red_arcs(self) -> list[Arc]:
        return [a for a in self.arcs if a.color is RED and not a.is_loop]


def slack(rep: IntervalRepresentation, x: int, y: int) -> int:
    """Slack of the pair ``(x, y)`` in ``rep``; undefined when ``y`` precedes ``x``."""
    lx, rx = rep.endpoints[x - 1]
    ly, ry = rep.endpoints[y - 1]
    if x == y:
        return rx - lx
    if ry + 1 <= lx:
        raise UndefinedSlack(f"{y} precedes {x}")
    if rx + 1 <= ly:
        return ly - rx - 1
    return ry - lx


def build_key_graph(P: IntervalOrder) -> KeyGraph:
    """Key graph of ``P``: one arc per slack-zero pair of the canonical representation."""
    if P.n < 1:
        raise InvalidOrder("empty order")
    rep, _ = canonical_representation(P)
    arcs = []
    for x in P.elements:
        for y in P.elements:
            if P.precedes(y, x) or slack(rep, x, y) != 0:
                continue
            arcs.append(Arc(x, y, BLUE if P.precedes(x, y) else RED))
    return KeyGraph(P.n, tuple(arcs), canonical=rep)


def key_graph_of_intervals(pairs) -> KeyGraph:
    return build_key_graph(from_intervals(pairs))


@dataclass(frozen=True, order=True)
class DiamondViolation:
    rule: str
    w: int
    x: int
    y: int
    z: int
    missing: tuple[int, int, str]

    def __str__(self) -> str:
        t, h, c = self.missing
        return (f"({self.rule}) w={self.w} x={self.x} y={self.y} z={self.z}: "
                f"missing {t}-{c[0]}->{h}")


def check_diamond_closure(G: KeyGraph) -> list[DiamondViolation]:
    """Completion rules of the diamond lemma; an empty list means all hold.

    Vertices need not be distinct: a red arc whose endpoints coincide is the
    red loop at that vertex.  Premises forcing a blue loop are impossible in a
    key graph, so they are reported as violations.
    """
    out: dict[int, list[Arc]] = {v: [] for v in G.vertices}
    inc: dict[int, list[Arc]] = {v: [] for v in G.vertices}
    for a in G.arcs:
        out[a.tail].append(a)
        inc[a.head].append(a)

    found = set()
    for w in G.vertices:
        for a1 in out[w]:
            for a2 in out[w]:
                if a1.head == a2.head or a1.color is not a2.color:
                    continue
                x, y, c = a1.head, a2.head, a1.color
                # (I)/(II): x -> z of the opposite color forces y -> z
                for b in out[x]:
                    if b.color is c:
                        continue
                    z = b.head
                    if not G.has_arc(y, z, b.color):
                        rule = "I" if c is BLUE else "II"
                        found.add(DiamondViolation(rule, w, x, y, z, (y, z, b.color.value)))
                # (III)/(IV): z -> x of the same color forces z -> y
                for b in inc[x]:
                    if b.color is not c:
                        continue
                    z = b.tail
                    if not G.has_arc(z, y, c):
                        rule = "III" if c is RED else "IV"
                        found.add(DiamondViolation(rule, w, x, y, z, (z, y, c.value)))
    return sorted(found)


def export_dot(G: KeyGraph) -> str:
    """Deterministic Graphviz rendering; vertices are labeled ``rho_i``."""
    if G.n < 1:
        raise InvalidOrder("empty key graph")
    lines = ["digraph keygraph {"]
    for v in G.vertices:
        lines.append(f'  {v} [label="rho_{v}"];')
    for a in G.arcs:
        lines.append(f'  {a.tail} -> {a.head} [color="{a.color.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def arcs_to_json(G: KeyGraph) -> dict:
    return {
        "n": G.n,
        "arcs": [{"tail": a.tail, "head": a.head, "color": a.color.value} for a in G.arcs],
    }
