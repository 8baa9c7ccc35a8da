"""Circulations on a key graph and integral decompositions of redundant cycle inequalities.

A redundant cycle inequality ``W = sum alpha_i W_i`` is turned into a
circulation ``f`` whose weight is ``W``.  The sublimation loop then shrinks
``f`` until an integral decomposition into cycles with inequalities other than
``W`` appears; when only concordant cycles remain, the problem is reduced to a
pair of cycles and resolved by local arc exchanges (the 2-cycle loop).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cycles import (
    DEFAULT_CYCLE_BUDGET,
    CycleInequality,
    DirectedCycle,
    WeakOrder,
    build_weak_list,
    cycle_weight,
    simple_cycles,
    weak_compare,
)
from .errors import (
    InfeasibleWeight,
    IntegralityViolation,
    InternalInvariantViolation,
    NoDivergence,
    NotACirculation,
    NotRedundant,
    PreconditionViolated,
    SupportCycleBudgetExceeded,
)
from .keygraph import RED, Arc, Color, KeyGraph, arc_weight
from .ratlp import RationalMatrixSystem, basic_feasible_point, nonneg_integer_combination

__all__ = [
    "Circulation",
    "Weight",
    "Decomposition",
    "Classification",
    "weight",
    "rational_decomposition",
    "classify_cycles",
    "integral_decomposition",
    "sublimation_step",
    "two_cycle_resolve",
    "resolve_circulation",
    "smaller_combination",
    "witness",
    "check_witness",
    "ResolveStep",
]


def _frac(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("flows must be exact (int, Fraction or str)")
    return Fraction(v)


@dataclass(frozen=True)
class Circulation:
    """Non-negative flow-conserving arc function on a key graph.

    ``flow`` maps ``(tail, head)`` to a positive ``Fraction``; zero-flow arcs
    are dropped on construction.
    """

    G: KeyGraph
    flow: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, int], Fraction] = {}
        for (t, h), v in self.flow.items():
            v = _frac(v)
            if v < 0:
                raise NotACirculation(f"negative flow {v} on {t}->{h}")
            if v == 0:
                continue
            if self.G.arc(t, h) is None:
                raise NotACirculation(f"{t}->{h} is not an arc of the key graph")
            clean[(t, h)] = v
        balance: dict[int, Fraction] = defaultdict(Fraction)
        for (t, h), v in clean.items():
            balance[t] -= v
            balance[h] += v
        bad = sorted(v for v, b in balance.items() if b != 0)
        if bad:
            raise NotACirculation(f"flow is not conserved at vertices {bad}")
        object.__setattr__(self, "flow", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, G: KeyGraph) -> "Circulation":
        return cls(G, {})

    @classmethod
    def of_cycle(cls, G: KeyGraph, C: DirectedCycle, coeff=1) -> "Circulation":
        return cls.from_cycles(G, [(coeff, C)])

    @classmethod
    def from_cycles(cls, G: KeyGraph, terms: Iterable[tuple[object, DirectedCycle]]) -> "Circulation":
        flow: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for coeff, C in terms:
            C.arcs(G)  # raises NotACycle if C leaves the graph
            for pair in C.pairs():
                flow[pair] += _frac(coeff)
        return cls(G, dict(flow))

    def __getitem__(self, pair: tuple[int, int]) -> Fraction:
        return self.flow.get(pair, Fraction(0))

    @property
    def support(self) -> list[Arc]:
        return [self.G.arc(t, h) for (t, h) in self.flow]

    @property
    def arc_count(self) -> int:
        return len(self.flow)

    def is_zero(self) -> bool:
        return not self.flow

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.flow.values())

    def support_vertices(self) -> list[int]:
        return sorted({v for pair in self.flow for v in pair})

    def contains(self, C: DirectedCycle) -> bool:
        return all(pair in self.flow for pair in C.pairs())

    def f_min(self, C: DirectedCycle) -> Fraction:
        return min(self[pair] for pair in C.pairs())

    def minus_cycle(self, C: DirectedCycle, alpha) -> "Circulation":
        alpha = _frac(alpha)
        flow = dict(self.flow)
        for pair in C.pairs():
            flow[pair] = flow.get(pair, Fraction(0)) - alpha
        return Circulation(self.G, flow)

    def scaled(self, factor) -> "Circulation":
        factor = _frac(factor)
        return Circulation(self.G, {p: v * factor for p, v in self.flow.items()})

    def to_json(self) -> dict:
        return {"flow": [{"tail": t, "head": h, "value": _fmt(v)} for (t, h), v in self.flow.items()]}


def _fmt(v: Fraction) -> str | int:
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class Weight:
    """``gamma + sum_i z_i rho_i <= 0`` with rational coefficients."""

    gamma: Fraction
    z: tuple[Fraction, ...]

    @property
    def vector(self) -> tuple[Fraction, ...]:
        return (self.gamma, *self.z)

    def is_cycle_inequality(self) -> bool:
        return self.gamma.denominator == 1 and all(c in (-1, 0, 1) for c in self.z)

    def to_inequality(self) -> CycleInequality:
        if not self.is_cycle_inequality():
            raise InfeasibleWeight(f"weight {self} is not a cycle inequality")
        return CycleInequality.from_vector(self.vector)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.gamma - other.gamma, tuple(a - b for a, b in zip(self.z, other.z)))

    def scaled(self, c) -> "Weight":
        c = _frac(c)
        return Weight(self.gamma * c, tuple(v * c for v in self.z))

    @classmethod
    def of(cls, W: CycleInequality, n: int) -> "Weight":
        g, *z = W.vector(n)
        return cls(Fraction(g), tuple(Fraction(v) for v in z))

    def __str__(self) -> str:
        lhs = [_fmt(self.gamma)]
        rhs = []
        for i, c in enumerate(self.z, 1):
            if c > 0:
                lhs.append(f"ρ{i}" if c == 1 else f"{_fmt(c)}ρ{i}")
            elif c < 0:
                rhs.append(f"ρ{i}" if c == -1 else f"{_fmt(-c)}ρ{i}")
        return " + ".join(str(t) for t in lhs) + " ≤ " + (" + ".join(rhs) or "0")


def weight(f: Circulation, G: KeyGraph | None = None) -> Weight:
    """Sum of ``f(a) * w(a)`` over the support, left-endpoint terms cancelled."""
    G = G or f.G
    gamma = Fraction(0)
    z = [Fraction(0)] * G.n
    for (t, h), v in f.flow.items():
        dg, var, coef = arc_weight(G.arc(t, h))
        gamma += dg * v
        z[var - 1] += coef * v
    return Weight(gamma, tuple(z))


@dataclass(frozen=True)
class Decomposition:
    """``sum coeff_i * (cycle circulation of C_i)`` over distinct cycles, in construction order."""

    terms: tuple[tuple[Fraction, DirectedCycle], ...]

    @classmethod
    def of(cls, terms: Iterable[tuple[object, DirectedCycle]]) -> "Decomposition":
        acc: dict[DirectedCycle, Fraction] = defaultdict(Fraction)
        for c, C in terms:
            acc[C] += _frac(c)
        return cls(tuple((c, C) for C, c in acc.items() if c != 0))

    def sorted(self) -> "Decomposition":
        return Decomposition(tuple(sorted(self.terms, key=lambda t: t[1])))

    def circulation(self, G: KeyGraph) -> Circulation:
        return Circulation.from_cycles(G, self.terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c, _ in self.terms)

    def cycles(self) -> list[DirectedCycle]:
        return [C for _, C in self.terms]

    def weight(self, G: KeyGraph) -> Weight:
        return weight(self.circulation(G), G)

    def inequality_terms(self, G: KeyGraph) -> list[tuple[Fraction, CycleInequality]]:
        return [(c, cycle_weight(G, C)) for c, C in self.terms]

    def to_json(self, G: KeyGraph) -> list[dict]:
        return [{"coeff": _fmt(c), "cycle": list(C.vertices), "inequality": cycle_weight(G, C).to_json()}
                for c, C in self.terms]


def _check_linearity(before: Weight, after: Weight, C_weight: Weight, alpha: Fraction) -> None:
    if after != before - C_weight.scaled(alpha):
        raise InternalInvariantViolation(
            "circulation", "weight is linear under cycle reduction")


def _support_cycle(f: Circulation) -> DirectedCycle:
    """A cycle of ``supp(f)`` found by following least out-arcs from the least tail."""
    succ: dict[int, list[int]] = defaultdict(list)
    for t, h in f.flow:
        succ[t].append(h)
    v = min(succ)
    path: list[int] = []
    pos: dict[int, int] = {}
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        v = min(succ[v])
    return DirectedCycle(tuple(path[pos[v]:]))


def rational_decomposition(f: Circulation,
                           preferred_first: Sequence[DirectedCycle] = ()) -> Decomposition:
    """Greedy cycle decomposition; preferred cycles are reduced first while they fit."""
    if f.is_zero():
        raise NotACirculation("cannot decompose the zero circulation")
    G = f.G
    g = f
    terms: list[tuple[Fraction, DirectedCycle]] = []
    pending = list(preferred_first)
    while not g.is_zero():
        C = None
        while pending:
            cand = pending.pop(0)
            if g.contains(cand):
                C = cand
                break
        if C is None:
            C = _support_cycle(g)
        alpha = g.f_min(C)
        before = weight(g)
        nxt = g.minus_cycle(C, alpha)
        _check_linearity(before, weight(nxt), weight(Circulation.of_cycle(G, C)), alpha)
        if nxt.arc_count >= g.arc_count:
            raise InternalInvariantViolation("circulation", "each reduction removes a support arc")
        terms.append((alpha, C))
        g = nxt
    dec = Decomposition.of(terms)
    if dec.circulation(G) != f:
        raise InternalInvariantViolation("circulation", "decomposition reconstructs the circulation")
    return dec


def _support_cycles(f: Circulation, budget: int) -> list[DirectedCycle]:
    succ: dict[int, list[int]] = defaultdict(list)
    for t, h in f.flow:
        succ[t].append(h)
    return simple_cycles(f.support_vertices(), succ, budget, error=SupportCycleBudgetExceeded)


def _mixed_vertices(arcs: Iterable[Arc]) -> list[int]:
    ins: dict[int, set[Color]] = defaultdict(set)
    outs: dict[int, set[Color]] = defaultdict(set)
    for a in arcs:
        outs[a.tail].add(a.color)
        ins[a.head].add(a.color)
    return sorted(v for v in set(ins) | set(outs) if len(ins[v]) > 1 or len(outs[v]) > 1)


@dataclass(frozen=True)
class Classification:
    weight: CycleInequality
    concordant: tuple[DirectedCycle, ...]
    discordant: tuple[DirectedCycle, ...]
    mixed_vertices: tuple[int, ...]
    # vertices that are mixed in the union of some pair of concordant cycles
    concordant_mixed: tuple[int, ...] = ()


def classify_cycles(f: Circulation, G: KeyGraph | None = None,
                    budget: int = DEFAULT_CYCLE_BUDGET) -> Classification:
    """Label every simple cycle of ``supp(f)`` as concordant or discordant."""
    G = G or f.G
    W = weight(f, G).to_inequality()
    conc, disc = [], []
    for C in _support_cycles(f, budget):
        (conc if cycle_weight(G, C) == W else disc).append(C)
    paired: set[int] = set()
    for i in range(len(conc)):
        for j in range(i + 1, len(conc)):
            paired.update(_mixed_vertices(set(conc[i].arcs(G)) | set(conc[j].arcs(G))))
    return Classification(W, tuple(conc), tuple(disc), tuple(_mixed_vertices(f.support)),
                          tuple(sorted(paired)))


def integral_decomposition(f: Circulation, G: KeyGraph | None = None) -> Decomposition:
    """Integral cycle decomposition of an ``f``-equivalent circulation on ``supp(f)``.

    Solves for a vertex of ``{y >= 0 : y is a circulation on supp(f), W(y) = W(f)}``,
    which is integral because the constraint matrix is totally unimodular.
    """
    G = G or f.G
    W = weight(f, G)
    if any(v.denominator != 1 for v in W.vector):
        raise InfeasibleWeight(f"weight {W} is not integral")
    arcs = list(f.flow)
    n = G.n
    columns = []
    for t, h in arcs:
        col = [Fraction(0)] * (2 * n + 1)
        if t != h:
            col[t - 1] -= 1
            col[h - 1] += 1
        dg, var, coef = arc_weight(G.arc(t, h))
        col[n] = Fraction(dg)
        col[n + var] += coef
        columns.append(col)
    target = [Fraction(0)] * n + list(W.vector)
    y = basic_feasible_point(RationalMatrixSystem.of(columns, target))
    if y is None:
        raise InfeasibleWeight(f"no circulation on supp(f) has weight {W}")
    if any(v.denominator != 1 for v in y):
        raise IntegralityViolation(f"vertex {[str(v) for v in y]}")
    g = Circulation(G, {a: v for a, v in zip(arcs, y)})
    return rational_decomposition(g)


def sublimation_step(f: Circulation, concordant: DirectedCycle, discordant: DirectedCycle,
                     G: KeyGraph | None = None) -> Circulation:
    """Remove ``alpha = f_min(concordant)`` of the concordant cycle and rescale by ``1/(1-alpha)``.

    The discordant cycle must survive the reduction, which is the case whenever
    it appears in a greedy decomposition that starts with the concordant cycle.
    """
    G = G or f.G
    W = weight(f, G)
    if not (f.contains(concordant) and f.contains(discordant)):
        raise PreconditionViolated("both cycles must lie in supp(f)")
    Wc = Weight.of(cycle_weight(G, concordant), G.n)
    if Wc != W:
        raise PreconditionViolated(f"{concordant} is not concordant")
    alpha = f.f_min(concordant)
    if not (0 < alpha < 1):
        raise PreconditionViolated(f"expected 0 < alpha < 1, got alpha = {alpha}")
    if Weight.of(cycle_weight(G, discordant), G.n) == W:
        raise PreconditionViolated(f"{discordant} is not discordant")
    g = f.minus_cycle(concordant, alpha)
    if not g.contains(discordant):
        raise PreconditionViolated(f"removing {concordant} destroys {discordant}")
    _check_linearity(W, weight(g, G), Wc, alpha)
    h = g.scaled(1 / (1 - alpha))
    if weight(h, G) != W or h.arc_count >= f.arc_count:
        raise InternalInvariantViolation("circulation", "sublimation preserves weight and shrinks support")
    return h


def _closed_walk_cycles(walk: Sequence[int]) -> list[DirectedCycle]:
    """Cycles of a closed walk ``w_0 -> w_1 -> ... -> w_{k-1} -> w_0``."""
    cycles: list[DirectedCycle] = []
    stack: list[int] = []
    seq = list(walk) + [walk[0]]
    for v in seq:
        if v in stack:
            i = stack.index(v)
            cycles.append(DirectedCycle(tuple(stack[i:])))
            del stack[i + 1:]
        else:
            stack.append(v)
    return cycles


def _divergence(C1: DirectedCycle, C2: DirectedCycle) -> tuple[int, int, int]:
    common = sorted(set(C1.vertices) & set(C2.vertices))
    for w in common:
        x, y = C1.successor(w), C2.successor(w)
        if x != y:
            return w, x, y
    raise NoDivergence(f"{C1} and {C2}")


@dataclass(frozen=True)
class ResolveStep:
    case: str
    w: int
    x: int | None = None
    y: int | None = None
    other: int | None = None  # v in Case 1, z in Case 2


def two_cycle_resolve(C1: DirectedCycle, C2: DirectedCycle, G: KeyGraph,
                      trace: list | None = None) -> Decomposition:
    """Integral decomposition of ``1/2 C1 + 1/2 C2`` into discordant cycles.

    Both cycles must be concordant for ``g = 1/2 C1 + 1/2 C2`` and ``supp(g)``
    must contain a discordant cycle.  ``trace`` (if given) collects the case
    taken in each round.
    """
    if C1 == C2:
        raise PreconditionViolated("the two cycles must be distinct")
    g = Circulation.from_cycles(G, [(Fraction(1, 2), C1), (Fraction(1, 2), C2)])
    W = weight(g, G)
    if not W.is_cycle_inequality():
        raise PreconditionViolated(f"weight {W} is not a cycle inequality")
    Wi = W.to_inequality()
    if cycle_weight(G, C1) != Wi or cycle_weight(G, C2) != Wi:
        raise PreconditionViolated("both cycles must be concordant")
    if not any(cycle_weight(G, D) != Wi for D in _support_cycles(g, DEFAULT_CYCLE_BUDGET)):
        raise PreconditionViolated("supp(g) contains no discordant cycle")
    mixed = _mixed_vertices(set(C1.arcs(G)) | set(C2.arcs(G)))
    if mixed:
        # the diamond exchanges below assume monochromatic entering and leaving arcs
        if trace is not None:
            trace.append(ResolveStep("mixed", mixed[0]))
        return smaller_combination(Wi, G)

    while True:
        w, x, y = _divergence(C1, C2)
        a_wx, a_wy = G.arc(w, x), G.arc(w, y)
        if a_wx.color is not a_wy.color:
            raise InternalInvariantViolation("circulation", "divergent arcs share a color", f"w={w}")
        if x in C2.vertices:
            # Case 1: exchange w->y, v->x for w->x, v->y inside C2
            v = C2.predecessor(x)
            color = G.arc(v, x).color
            if not G.has_arc(v, y, RED if v == y else color):
                raise InternalInvariantViolation("keygraph", "diamond closure", f"missing {v}->{y}")
            seq = list(C2.vertices)
            i = seq.index(y)
            seq = seq[i:] + seq[:i]  # y ... v x ... w
            j = seq.index(x)
            part_y, part_x = seq[:j], seq[j:]  # y..v and x..w
            out = [DirectedCycle(tuple(part_x)), DirectedCycle(tuple(part_y))]
            if trace is not None:
                trace.append(ResolveStep("1", w, x, y, v))
            return _finish(out, Wi, G)
        # Case 2: shrink the diamond w->x->z into w->y->z in C1
        z = C1.successor(x)
        cz = G.arc(x, z).color
        if cz is a_wx.color:
            raise InternalInvariantViolation("circulation", "non-shared vertex is not basic", f"x={x}")
        if not G.has_arc(y, z, RED if y == z else cz):
            raise InternalInvariantViolation("keygraph", "diamond closure", f"missing {y}->{z}")
        seq = list(C1.vertices)
        xi = seq.index(x)
        walk = seq[:xi] + [y] + seq[xi + 1:]
        if y in C1.vertices:
            if trace is not None:
                trace.append(ResolveStep("2A", w, x, y, z))
            return _finish(_closed_walk_cycles(walk), Wi, G)
        if trace is not None:
            trace.append(ResolveStep("2B", w, x, y, z))
        C1_new = DirectedCycle(tuple(walk))
        g_new = Circulation.from_cycles(G, [(Fraction(1, 2), C1_new), (Fraction(1, 2), C2)])
        if g_new.arc_count >= g.arc_count or weight(g_new, G) != W:
            raise InternalInvariantViolation("circulation", "shrinking preserves weight and removes arcs")
        if C1_new == C2:
            raise InternalInvariantViolation("circulation", "shrinking keeps a discordant cycle")
        C1, g = C1_new, g_new


def _finish(cycles: list[DirectedCycle], W: CycleInequality, G: KeyGraph) -> Decomposition:
    dec = Decomposition.of((1, C) for C in cycles).sorted()
    total = dec.weight(G)
    if total != Weight.of(W, G.n):
        raise InternalInvariantViolation("circulation", "resolution preserves the weight", str(total))
    if any(cycle_weight(G, C) == W for C in dec.cycles()):
        raise InternalInvariantViolation("circulation", "resolution yields discordant cycles")
    return dec


def resolve_circulation(f: Circulation, G: KeyGraph | None = None,
                        budget: int = DEFAULT_CYCLE_BUDGET,
                        trace: list | None = None) -> Decomposition:
    """Sublimation loop followed, when needed, by the 2-cycle loop.

    ``W(f)`` must be a cycle inequality and ``supp(f)`` must contain a
    discordant cycle.  The result is an integral decomposition of an
    equivalent circulation using discordant cycles only.
    """
    G = G or f.G
    W = weight(f, G).to_inequality()

    def concordant(C):
        return cycle_weight(G, C) == W

    while True:
        dec = integral_decomposition(f, G)
        if trace is not None:
            trace.append(("integral", dec))
        conc = [C for C in dec.cycles() if concordant(C)]
        if not conc:
            return dec
        rd = rational_decomposition(f, preferred_first=[conc[0]])
        if trace is not None:
            trace.append(("rational", rd))
        c_terms = sorted(C for C in rd.cycles() if concordant(C))
        d_terms = [C for C in rd.cycles() if not concordant(C)]
        if d_terms:
            first = conc[0]
            if rd.cycles() and first not in rd.cycles():
                raise InternalInvariantViolation("circulation", "preferred cycle starts the decomposition")
            # the discordant cycle must come from later in the greedy order
            survivor = next(D for D in d_terms if f.minus_cycle(first, f.f_min(first)).contains(D))
            f = sublimation_step(f, first, survivor, G)
            if trace is not None:
                trace.append(("sublimation", f))
            continue
        for i in range(len(c_terms)):
            for j in range(i + 1, len(c_terms)):
                g = Circulation.from_cycles(G, [(Fraction(1, 2), c_terms[i]), (Fraction(1, 2), c_terms[j])])
                if any(not concordant(D) for D in _support_cycles(g, budget)):
                    if trace is not None:
                        trace.append(("two-cycle", (c_terms[i], c_terms[j])))
                    steps: list = []
                    out = two_cycle_resolve(c_terms[i], c_terms[j], G, trace=steps)
                    if trace is not None:
                        trace.extend(("resolve", s) for s in steps)
                    return out
        raise InternalInvariantViolation(
            "circulation", "some pair of concordant cycles carries a discordant cycle")


def smaller_combination(W: CycleInequality, G: KeyGraph,
                        budget: int = DEFAULT_CYCLE_BUDGET) -> Decomposition:
    """Nonnegative integer combination of strictly smaller cycle inequalities equal to ``W``.

    Searched directly by exact branch and bound over every cycle of ``G``
    whose inequality precedes ``W``; each inequality is realized by its
    lexicographically least cycle.
    """
    pool = [e for e in build_weak_list(G, budget)
            if weak_compare(e.inequality, W) is WeakOrder.LESS]
    n = G.n
    alpha = nonneg_integer_combination([e.inequality.vector(n) for e in pool], W.vector(n))
    if alpha is None:
        raise InternalInvariantViolation(
            "circulation", "an integral combination of smaller cycle inequalities exists", str(W))
    dec = Decomposition.of((a, e.representative) for a, e in zip(alpha, pool) if a).sorted()
    if dec.weight(G) != Weight.of(W, n):
        raise InternalInvariantViolation("circulation", "integer search sums to the target")
    return dec


def witness(W: CycleInequality, combination: Sequence[tuple[object, CycleInequality]], G: KeyGraph,
            representatives: Mapping[CycleInequality, DirectedCycle] | None = None,
            budget: int = DEFAULT_CYCLE_BUDGET) -> Decomposition:
    """Integral decomposition of a redundant ``W`` into strictly smaller cycle inequalities.

    ``combination`` lists ``(alpha_i, W_i)`` with ``W = sum alpha_i W_i`` and
    ``alpha_i > 0``.  Each ``W_i`` is realized by its lexicographically least
    generating cycle unless ``representatives`` says otherwise.
    """
    n = G.n
    combo = [(_frac(a), Wi) for a, Wi in combination if _frac(a) != 0]
    if any(a < 0 for a, _ in combo):
        raise NotRedundant("certificate has a negative coefficient")
    total = [Fraction(0)] * (n + 1)
    for a, Wi in combo:
        for k, v in enumerate(Wi.vector(n)):
            total[k] += a * v
    if tuple(total) != tuple(Fraction(v) for v in W.vector(n)):
        raise NotRedundant(f"certificate does not sum to {W}")
    if representatives is None:
        representatives = {e.inequality: e.representative for e in build_weak_list(G, budget)}
    f = Circulation.from_cycles(G, [(a, representatives[Wi]) for a, Wi in combo])
    if weight(f, G).to_inequality() != W:
        raise InternalInvariantViolation("circulation", "certificate circulation has the target weight")

    dec = resolve_circulation(f, G, budget).sorted()
    check_witness(W, dec, G)
    return dec


def check_witness(W: CycleInequality, dec: Decomposition, G: KeyGraph) -> None:
    """Positive integer coefficients, strictly smaller components, exact sum."""
    if not dec.terms or not all(c.denominator == 1 and c > 0 for c, _ in dec.terms):
        raise IntegralityViolation(f"witness coefficients {[str(c) for c, _ in dec.terms]}")
    for _, C in dec.terms:
        if weak_compare(cycle_weight(G, C), W) is not WeakOrder.LESS:
            raise InternalInvariantViolation(
                "circulation", "witness components are strictly smaller", str(cycle_weight(G, C)))
    if dec.weight(G) != Weight.of(W, G.n):
        raise InternalInvariantViolation("circulation", "witness sums to the target")
