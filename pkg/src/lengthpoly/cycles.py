"""Directed cycles of a key graph and the inequalities they induce."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import CycleBudgetExceeded, InternalInvariantViolation, NotACycle
from .keygraph import BLUE, RED, Arc, KeyGraph, arc_weight

__all__ = [
    "DEFAULT_CYCLE_BUDGET",
    "DirectedCycle",
    "CycleInequality",
    "WeakOrder",
    "WeakEntry",
    "simple_cycles",
    "enumerate_cycles",
    "cycle_weight",
    "weak_compare",
    "build_weak_list",
]

DEFAULT_CYCLE_BUDGET = 10**6


@dataclass(frozen=True, order=True)
class DirectedCycle:
    """A simple directed cycle, stored with its smallest vertex first.

    A singleton ``(v,)`` denotes the loop at ``v``.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if not vs:
            raise NotACycle("empty cycle")
        if len(set(vs)) != len(vs):
            raise NotACycle(f"repeated vertex in {vs}")
        i = vs.index(min(vs))
        object.__setattr__(self, "vertices", vs[i:] + vs[:i])

    @classmethod
    def of(cls, *vertices: int) -> "DirectedCycle":
        if len(vertices) == 1 and not isinstance(vertices[0], int):
            vertices = tuple(vertices[0])
        return cls(tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def arcs(self, G: KeyGraph) -> list[Arc]:
        out = []
        for t, h in self.pairs():
            a = G.arc(t, h)
            if a is None:
                raise NotACycle(f"{t}->{h} is not an arc of the key graph")
            out.append(a)
        return out

    def successor(self, v: int) -> int:
        vs = self.vertices
        return vs[(vs.index(v) + 1) % len(vs)]

    def predecessor(self, v: int) -> int:
        vs = self.vertices
        return vs[vs.index(v) - 1]

    def __str__(self) -> str:
        return "(" + ",".join(f"rho{v}" for v in self.vertices) + ")"


@dataclass(frozen=True)
class CycleInequality:
    """``gamma + sum(rho_i for i in A) <= sum(rho_j for j in B)``."""

    gamma: int
    A: frozenset[int]
    B: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        if self.A & self.B:
            raise ValueError("A and B must be disjoint")

    @classmethod
    def of(cls, gamma: int, A: Iterable[int] = (), B: Iterable[int] = ()) -> "CycleInequality":
        return cls(gamma, frozenset(A), frozenset(B))

    def vector(self, n: int) -> tuple[int, ...]:
        """``(gamma, z_1, ..., z_n)`` with ``z = +1`` on ``A`` and ``-1`` on ``B``.

        The inequality reads ``gamma + z . rho <= 0``.
        """
        z = [0] * n
        for i in self.A:
            z[i - 1] = 1
        for j in self.B:
            z[j - 1] = -1
        return (self.gamma, *z)

    @classmethod
    def from_vector(cls, vec: Sequence) -> "CycleInequality":
        gamma, *z = vec
        if gamma != int(gamma) or any(c not in (-1, 0, 1) for c in z):
            raise ValueError(f"{tuple(vec)} is not in cycle-inequality form")
        return cls(int(gamma),
                   frozenset(i for i, c in enumerate(z, 1) if c == 1),
                   frozenset(i for i, c in enumerate(z, 1) if c == -1))

    def key(self) -> tuple[int, int, int]:
        """Rank in the weak order (smaller tuple = smaller inequality)."""
        return (self.gamma, -len(self.A), len(self.B))

    def sort_key(self):
        return (*self.key(), tuple(sorted(self.A)), tuple(sorted(self.B)))

    def value_at(self, lengths: Sequence[int]) -> tuple[int, int]:
        """Left- and right-hand side evaluated at a length vector."""
        lhs = self.gamma + sum(lengths[i - 1] for i in self.A)
        rhs = sum(lengths[j - 1] for j in self.B)
        return lhs, rhs

    def __str__(self) -> str:
        lhs = [str(self.gamma)] + [f"ρ{i}" for i in sorted(self.A)]
        rhs = [f"ρ{j}" for j in sorted(self.B)] or ["0"]
        return " + ".join(lhs) + " ≤ " + " + ".join(rhs)

    def to_json(self) -> dict:
        return {"gamma": self.gamma, "A": sorted(self.A), "B": sorted(self.B)}

    @classmethod
    def from_json(cls, d: dict) -> "CycleInequality":
        return cls.of(int(d["gamma"]), d.get("A", ()), d.get("B", ()))


class WeakOrder(Enum):
    LESS = "less"
    TIE = "tie"
    GREATER = "greater"


def weak_compare(W1: CycleInequality, W2: CycleInequality) -> WeakOrder:
    """Compare by ``gamma`` ascending, ``|A|`` descending, ``|B|`` ascending."""
    k1, k2 = W1.key(), W2.key()
    if k1 < k2:
        return WeakOrder.LESS
    if k1 > k2:
        return WeakOrder.GREATER
    return WeakOrder.TIE


def _scc_of(s: int, succ: dict[int, list[int]], allowed: set[int]) -> set[int]:
    pred: dict[int, list[int]] = defaultdict(list)
    for v in allowed:
        for w in succ[v]:
            if w in allowed:
                pred[w].append(v)

    def reach(adj):
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    return reach(succ) & reach(pred)


def simple_cycles(vertices: Iterable[int], succ: dict[int, list[int]],
                  budget: int = DEFAULT_CYCLE_BUDGET,
                  error: type[CycleBudgetExceeded] = CycleBudgetExceeded) -> list[DirectedCycle]:
    """Johnson's algorithm on an adjacency map (self-loops allowed).

    Cycles are produced grouped by their smallest vertex, in increasing order,
    and each cycle starts at that vertex.
    """
    order = sorted(vertices)
    succ = {v: sorted(set(succ.get(v, ()))) for v in order}
    found: list[DirectedCycle] = []

    def emit(path):
        if len(found) >= budget:
            raise error(f"more than {budget} cycles")
        found.append(DirectedCycle(tuple(path)))

    for idx, s in enumerate(order):
        if s in succ[s]:
            emit([s])
        allowed = set(order[idx:])
        comp = _scc_of(s, succ, allowed)
        if len(comp) < 2:
            continue
        adj = {v: [w for w in succ[v] if w in comp and w != v] for v in comp}
        blocked: set[int] = set()
        B: dict[int, set[int]] = defaultdict(set)
        path = [s]
        blocked.add(s)
        # iterative circuit search: frames hold (vertex, neighbour iterator, found flag)
        stack = [[s, iter(adj[s]), False]]
        while stack:
            frame = stack[-1]
            v, it, _ = frame
            w = next(it, None)
            if w is not None:
                if w == s:
                    emit(path)
                    frame[2] = True
                elif w not in blocked:
                    path.append(w)
                    blocked.add(w)
                    stack.append([w, iter(adj[w]), False])
                continue
            stack.pop()
            path.pop()
            if frame[2]:
                todo = [v]
                while todo:
                    u = todo.pop()
                    if u in blocked:
                        blocked.discard(u)
                        todo.extend(B[u])
                        B[u].clear()
            else:
                for w in adj[v]:
                    B[w].add(v)
            if stack and frame[2]:
                stack[-1][2] = True
    return found


def enumerate_cycles(G: KeyGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> list[DirectedCycle]:
    """Every simple directed cycle of ``G`` exactly once, loops first."""
    cycles = simple_cycles(G.vertices, G.successors(), budget)
    return [C for C in cycles if len(C) == 1] + [C for C in cycles if len(C) > 1]


def cycle_weight(G: KeyGraph, C: DirectedCycle) -> CycleInequality:
    """The inequality obtained by summing the arc weights along ``C``."""
    arcs = C.arcs(G)
    k = len(arcs)
    gamma = sum(1 for a in arcs if a.color is BLUE)
    A, B = set(), set()
    for i in range(k):
        into, outof = arcs[i - 1], arcs[i]
        y = outof.tail
        if into.color is BLUE and outof.color is BLUE:
            A.add(y)
        elif into.color is RED and outof.color is RED:
            B.add(y)
    W = CycleInequality(gamma, frozenset(A), frozenset(B))

    # the 3-path rule must agree with the plain sum of arc weights
    total = defaultdict(int)
    g = 0
    for a in arcs:
        dg, var, coef = arc_weight(a)
        g += dg
        total[var] += coef
    if (g, *[total.get(i, 0) for i in range(1, G.n + 1)]) != W.vector(G.n):
        raise InternalInvariantViolation("cycles", "3-path rule equals summed arc weights", str(C))
    return W


@dataclass(frozen=True)
class WeakEntry:
    inequality: CycleInequality
    cycles: tuple[DirectedCycle, ...]

    @property
    def representative(self) -> DirectedCycle:
        return self.cycles[0]


def build_weak_list(G: KeyGraph, budget: int = DEFAULT_CYCLE_BUDGET,
                    cycles: list[DirectedCycle] | None = None) -> list[WeakEntry]:
    """Distinct cycle inequalities sorted by the weak order.

    Ties are broken lexicographically on ``(sorted A, sorted B)``.  Each entry
    keeps all generating cycles, lexicographically least first.
    """
    if cycles is None:
        cycles = enumerate_cycles(G, budget)
    lengths = G.canonical.lengths() if G.canonical is not None else None
    groups: dict[CycleInequality, list[DirectedCycle]] = defaultdict(list)
    for C in cycles:
        W = cycle_weight(G, C)
        if not W.B:
            raise InternalInvariantViolation("cycles", "every cycle inequality has a right-hand variable", str(C))
        if lengths is not None:
            lhs, rhs = W.value_at(lengths)
            if lhs != rhs:
                raise InternalInvariantViolation("cycles", "cycle inequalities are tight at the canonical lengths", str(C))
        groups[W].append(C)
    entries = [WeakEntry(W, tuple(sorted(cs))) for W, cs in groups.items()]
    entries.sort(key=lambda e: e.inequality.sort_key())
    return entries
