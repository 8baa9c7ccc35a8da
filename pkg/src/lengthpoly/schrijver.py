"""Redundancy elimination over the weak-ordered cycle inequalities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import Sequence

from .circulation import Decomposition, witness
from .cycles import (
    DEFAULT_CYCLE_BUDGET,
    CycleInequality,
    WeakEntry,
    WeakOrder,
    build_weak_list,
    enumerate_cycles,
    weak_compare,
)
from .errors import InternalInvariantViolation, OrderingViolation
from .keygraph import KeyGraph, build_key_graph
from .order import IntervalOrder
from .ratlp import nonneg_combination

__all__ = [
    "SchrijverSystem",
    "Discarded",
    "is_redundant",
    "schrijver_system",
    "minimality_audit",
    "AuditViolation",
]


def _combination(W: CycleInequality, others: Sequence[CycleInequality], n: int):
    alpha = nonneg_combination([V.vector(n) for V in others], W.vector(n))
    if alpha is None:
        return None
    return tuple(alpha)


def is_redundant(W: CycleInequality, smaller: Sequence[CycleInequality],
                 n: int) -> tuple[Fraction, ...] | None:
    """Nonnegative coefficients over ``smaller`` summing exactly to ``W``, or ``None``."""
    for V in smaller:
        if weak_compare(V, W) is not WeakOrder.LESS:
            raise OrderingViolation(f"{V} is not strictly smaller than {W}")
    if not smaller:
        return None
    return _combination(W, smaller, n)


@dataclass(frozen=True)
class Discarded:
    entry: WeakEntry
    certificate: tuple[tuple[Fraction, CycleInequality], ...]
    witness: Decomposition | None = None

    @property
    def inequality(self) -> CycleInequality:
        return self.entry.inequality


@dataclass(frozen=True)
class SchrijverSystem:
    G: KeyGraph
    kept: tuple[WeakEntry, ...]
    discarded: tuple[Discarded, ...]
    cycle_count: int = 0
    weak_list: tuple[WeakEntry, ...] = field(default=(), repr=False)

    @property
    def n(self) -> int:
        return self.G.n

    @property
    def inequalities(self) -> list[CycleInequality]:
        return [e.inequality for e in self.kept]

    @property
    def witnesses(self) -> dict[CycleInequality, Decomposition]:
        return {d.inequality: d.witness for d in self.discarded if d.witness is not None}

    def __len__(self) -> int:
        return len(self.kept)


def schrijver_system(P: IntervalOrder, with_witnesses: bool = False,
                     budget: int = DEFAULT_CYCLE_BUDGET) -> SchrijverSystem:
    """Irredundant cycle inequalities of ``P`` in weak order.

    Every inequality is tested against the irredundant inequalities accepted
    from strictly smaller rank groups.  Members of one rank group share that
    set, so the result does not depend on how ties are broken.  Loop
    inequalities form the smallest rank group and are always kept.
    """
    G = build_key_graph(P)
    cycles = enumerate_cycles(G, budget)
    weak = build_weak_list(G, cycles=cycles)
    n = G.n
    reps = {e.inequality: e.representative for e in weak}
    kept: list[WeakEntry] = []
    discarded: list[Discarded] = []
    for _, group in groupby(weak, key=lambda e: e.inequality.key()):
        smaller = [e.inequality for e in kept]
        for e in group:
            alpha = is_redundant(e.inequality, smaller, n)
            if alpha is None:
                kept.append(e)
                continue
            cert = tuple((a, V) for a, V in zip(alpha, smaller) if a != 0)
            wit = witness(e.inequality, cert, G, reps, budget) if with_witnesses else None
            discarded.append(Discarded(e, cert, wit))
    lengths = G.canonical.lengths()
    for e in kept:
        lhs, rhs = e.inequality.value_at(lengths)
        if lhs != rhs:
            raise InternalInvariantViolation("schrijver", "kept inequalities are tight at the apex")
    return SchrijverSystem(G, tuple(kept), tuple(discarded), len(cycles), tuple(weak))


@dataclass(frozen=True)
class AuditViolation:
    inequality: CycleInequality
    certificate: tuple[tuple[Fraction, CycleInequality], ...]


def minimality_audit(S: SchrijverSystem | Sequence[CycleInequality], n: int | None = None) -> list[AuditViolation]:
    """Members expressible as a nonnegative combination of all the other members."""
    if isinstance(S, SchrijverSystem):
        members, n = S.inequalities, S.n
    else:
        members = list(S)
        if n is None:
            raise ValueError("n is required for a plain inequality list")
    out = []
    for i, W in enumerate(members):
        others = members[:i] + members[i + 1:]
        if not others:
            continue
        alpha = _combination(W, others, n)
        if alpha is not None:
            out.append(AuditViolation(W, tuple((a, V) for a, V in zip(alpha, others) if a != 0)))
    return out
