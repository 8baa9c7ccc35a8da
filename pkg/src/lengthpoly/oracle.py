"""Independent checks: the endpoint system, Fourier-Motzkin projection, total unimodularity.

These verifiers work from the endpoint-and-length description of an interval
order rather than from the key graph's cycles, so agreement between the two
is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, Iterator, Sequence

import numpy as np

from .cycles import CycleInequality, build_weak_list, cycle_weight, enumerate_cycles
from .errors import BlowupBudgetExceeded, DimensionMismatch
from .keygraph import BLUE, build_key_graph
from .order import IntervalOrder, ascent_sequences, canonical_representation, from_ascent_sequence
from .ratlp import nonneg_combination

__all__ = [
    "EndpointSystem",
    "RhoInequality",
    "build_endpoint_system",
    "fme_eliminate",
    "tu_check",
    "TUViolation",
    "implies",
    "polyhedral_equivalence",
    "apex_check",
    "tdi_spot_check",
    "corpus",
    "DEFAULT_FME_ROW_CAP",
]

DEFAULT_FME_ROW_CAP = 200_000


@dataclass(frozen=True)
class EndpointSystem:
    """Rows ``coeffs . (l_1..l_n, rho_1..rho_n) <= rhs``."""

    n: int
    rows: tuple[tuple[tuple[int, ...], int], ...]
    labels: tuple[str, ...] = ()

    def matrix(self) -> np.ndarray:
        return np.array([c for c, _ in self.rows], dtype=np.int64).reshape(len(self.rows), 2 * self.n)

    def rhs(self) -> list[int]:
        return [b for _, b in self.rows]


def build_endpoint_system(P: IntervalOrder) -> EndpointSystem:
    """One row per slack-zero pair (arcs and loops of the key graph), then ``-l_x <= 0``."""
    G = build_key_graph(P)
    n = G.n
    rows, labels = [], []
    for a in G.arcs:
        c = [0] * (2 * n)
        x, y = a.tail, a.head
        if a.is_loop:
            c[n + x - 1] = -1
            rows.append((tuple(c), 0))
            labels.append(f"loop {x}")
        elif a.color is BLUE:
            c[x - 1] += 1
            c[n + x - 1] += 1
            c[y - 1] -= 1
            rows.append((tuple(c), -1))
            labels.append(f"cover {x}<{y}")
        else:
            c[x - 1] += 1
            c[y - 1] -= 1
            c[n + y - 1] -= 1
            rows.append((tuple(c), 0))
            labels.append(f"sharp {x}|{y}")
    for x in range(1, n + 1):
        c = [0] * (2 * n)
        c[x - 1] = -1
        rows.append((tuple(c), 0))
        labels.append(f"nonneg l{x}")
    return EndpointSystem(n, tuple(rows), tuple(labels))


@dataclass(frozen=True, order=True)
class RhoInequality:
    """``coeffs . rho <= rhs`` with rational data."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    @classmethod
    def of(cls, coeffs: Sequence, rhs) -> "RhoInequality":
        return cls(tuple(Fraction(c) for c in coeffs), Fraction(rhs))

    @classmethod
    def from_cycle(cls, W: CycleInequality, n: int) -> "RhoInequality":
        g, *z = W.vector(n)
        return cls.of(z, -g)

    def as_cycle_inequality(self) -> CycleInequality | None:
        """The equivalent cycle inequality if the row has that shape, else ``None``."""
        if self.rhs.denominator != 1 or any(c not in (-1, 0, 1) for c in self.coeffs):
            return None
        return CycleInequality.from_vector((-int(self.rhs), *self.coeffs))

    def __str__(self) -> str:
        terms = [f"{c}*rho{i}" for i, c in enumerate(self.coeffs, 1) if c]
        return (" + ".join(terms) or "0") + f" <= {self.rhs}"


def _primitive(coeffs: list[Fraction], rhs: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    """Scale a row by a positive factor to coprime integer coefficients."""
    dens = 1
    for v in (*coeffs, rhs):
        dens = dens * v.denominator // gcd(dens, v.denominator)
    ints = [int(v * dens) for v in coeffs]
    r = int(rhs * dens)
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        g = 1
    return tuple(Fraction(v, g) for v in ints), Fraction(r, g)


def fme_eliminate(system: EndpointSystem, row_cap: int = DEFAULT_FME_ROW_CAP) -> list[RhoInequality]:
    """Project onto the length variables by eliminating ``l_1, ..., l_n`` in order.

    Rows are kept primitive and deduplicated (for equal left-hand sides only the
    tightest right-hand side survives); rows ``0 <= c`` with ``c >= 0`` are dropped.
    """
    n = system.n
    rows: dict[tuple[Fraction, ...], Fraction] = {}

    def add(coeffs, rhs, store):
        c, r = _primitive(list(coeffs), rhs)
        if not any(c):
            if r < 0:
                # an infeasible system projects to the empty set; keep the witness row
                store[c] = min(r, store.get(c, r))
            return
        if c not in store or r < store[c]:
            store[c] = r

    for coeffs, b in system.rows:
        add((Fraction(v) for v in coeffs), Fraction(b), rows)

    for k in range(n):
        pos, neg, rest = [], [], {}
        for c, r in rows.items():
            if c[k] > 0:
                pos.append((c, r))
            elif c[k] < 0:
                neg.append((c, r))
            else:
                rest[c] = r
        for (cp, rp), (cn, rn) in product(pos, neg):
            sp, sn = -cn[k], cp[k]
            add((sp * a + sn * b for a, b in zip(cp, cn)), sp * rp + sn * rn, rest)
            if len(rest) > row_cap:
                raise BlowupBudgetExceeded(f"more than {row_cap} rows while eliminating l{k + 1}")
        rows = rest

    out = [RhoInequality(c[n:], r) for c, r in rows.items()]
    return sorted(out)


def _as_rho(sys_: Iterable, n: int | None) -> tuple[list[RhoInequality], int | None]:
    out = []
    for row in sys_:
        if isinstance(row, CycleInequality):
            if n is None:
                raise ValueError("n is required to compare cycle inequalities")
            out.append(RhoInequality.from_cycle(row, n))
        else:
            out.append(row)
    if out:
        dims = {len(r.coeffs) for r in out}
        if len(dims) != 1 or (n is not None and dims != {n}):
            raise DimensionMismatch(f"inequalities over different dimensions {sorted(dims)}")
        n = dims.pop()
    return out, n


def implies(system: Sequence[RhoInequality], target: RhoInequality) -> bool:
    """Whether a feasible ``system`` implies ``target`` (affine Farkas lemma).

    ``c . rho <= d`` follows from ``A rho <= b`` iff ``y A = c`` and
    ``y b <= d`` for some ``y >= 0``; the slack column absorbs ``d - y b``.
    """
    n = len(target.coeffs)
    if all(c == 0 for c in target.coeffs) and target.rhs >= 0:
        return True
    columns = [(*r.coeffs, r.rhs) for r in system]
    columns.append((*([0] * n), 1))
    return nonneg_combination(columns, (*target.coeffs, target.rhs)) is not None


def polyhedral_equivalence(sysA: Iterable, sysB: Iterable, n: int | None = None) -> bool:
    """Whether two feasible systems over ``rho_1..rho_n`` define the same polyhedron."""
    A, n = _as_rho(sysA, n)
    B, n = _as_rho(sysB, n)
    return all(implies(B, r) for r in A) and all(implies(A, r) for r in B)


@dataclass(frozen=True)
class TUViolation:
    kind: str  # "determinant" or "bicoloring"
    rows: tuple[int, ...]
    columns: tuple[int, ...]
    value: int


def _no_singleton_lines(sub: np.ndarray) -> bool:
    nz = sub != 0
    return bool(nz.sum(axis=0).min() >= 2 and nz.sum(axis=1).min() >= 2)


def tu_check(system: EndpointSystem | np.ndarray, max_order: int = 5,
             samples: int = 200, seed: int = 0) -> list[TUViolation]:
    """Subdeterminants up to ``max_order`` and Ghouila-Houri bicolorings on sampled submatrices.

    A square submatrix of a ``{0, +-1}`` matrix with a line holding a single
    nonzero has determinant equal to plus or minus a smaller minor, so once
    all smaller orders pass only submatrices with at least two nonzeros in
    every row and column need an explicit determinant.  Determinants are
    evaluated in floating point in batches and rounded; with entries in
    ``{0, +-1}`` and order at most 5 the rounding is exact.
    """
    M = system.matrix() if isinstance(system, EndpointSystem) else np.asarray(system, dtype=np.int64)
    rows_count, cols_count = M.shape
    out: list[TUViolation] = []
    for i, j in zip(*np.nonzero(np.abs(M) > 1)):
        out.append(TUViolation("determinant", (int(i),), (int(j),), int(M[i, j])))
    if out:
        return out

    multi = [i for i in range(rows_count) if np.count_nonzero(M[i]) >= 2]
    for k in range(2, max_order + 1):
        subs, where = [], []
        for R in combinations(multi, k):
            block = M[list(R)]
            cand = [j for j in range(cols_count) if np.count_nonzero(block[:, j]) >= 2]
            if len(cand) < k:
                continue
            for Cc in combinations(cand, k):
                sub = block[:, Cc]
                if _no_singleton_lines(sub):
                    subs.append(sub)
                    where.append((R, Cc))
        if not subs:
            continue
        dets = np.rint(np.linalg.det(np.array(subs, dtype=float))).astype(np.int64)
        for d, (R, Cc) in zip(dets, where):
            if d not in (-1, 0, 1):
                out.append(TUViolation("determinant", tuple(int(r) for r in R),
                                       tuple(int(c) for c in Cc), int(d)))

    if isinstance(system, EndpointSystem) and rows_count and samples:
        out.extend(_bicoloring_check(system.n, M, samples, seed))
    return out


def _bicoloring_check(n: int, M: np.ndarray, samples: int, seed: int) -> list[TUViolation]:
    """Blue/red split: a length column is red exactly when its location column is also selected."""
    rng = np.random.default_rng(seed)
    rows_count, cols_count = M.shape
    out = []
    for _ in range(samples):
        R = np.flatnonzero(rng.random(rows_count) < 0.5)
        C = np.flatnonzero(rng.random(cols_count) < 0.5)
        if len(R) == 0 or len(C) == 0:
            continue
        chosen = set(int(c) for c in C)
        sign = np.array([-1 if (c >= n and (c - n) in chosen) else 1 for c in C])
        sums = M[np.ix_(R, C)] @ sign
        bad = np.flatnonzero(np.abs(sums) > 1)
        if len(bad):
            out.append(TUViolation("bicoloring", tuple(int(r) for r in R), tuple(int(c) for c in C),
                                   int(sums[bad[0]])))
    return out


def apex_check(P: IntervalOrder) -> bool:
    """Every cycle inequality holds with equality at the canonical length vector."""
    G = build_key_graph(P)
    lengths = canonical_representation(P)[0].lengths()
    for C in enumerate_cycles(G):
        lhs, rhs = cycle_weight(G, C).value_at(lengths)
        if lhs != rhs:
            return False
    return True


def tdi_spot_check(P: IntervalOrder, coeff_range: int = 2, max_terms: int | None = None,
                   limit: int | None = None) -> list[tuple[int, ...]]:
    """Objectives ``c`` in ``{-r..r}^n`` with a finite optimum but no integral dual optimum found.

    All cycle inequalities are tight at the apex, so every nonnegative ``y``
    with ``y A = c`` is dual optimal; an integral dual optimum is therefore an
    integral nonnegative combination of the rows equal to ``c``, searched
    breadth-first up to ``max_terms`` rows.
    """
    G = build_key_graph(P)
    n = G.n
    # the rows of A are the z-vectors of z . rho <= -gamma
    rows = sorted({e.inequality.vector(n)[1:] for e in build_weak_list(G)})
    if max_terms is None:
        max_terms = 2 * n + 2
    bound = max_terms
    reach = {tuple([0] * n)}
    frontier = set(reach)
    for _ in range(max_terms):
        nxt = set()
        for v in frontier:
            for r in rows:
                w = tuple(a + b for a, b in zip(v, r))
                if w not in reach and all(abs(c) <= bound for c in w):
                    nxt.add(w)
        reach |= nxt
        frontier = nxt
        if not frontier:
            break
    failures = []
    objectives = list(product(range(-coeff_range, coeff_range + 1), repeat=n))
    if limit is not None:
        objectives = objectives[:limit]
    for c in objectives:
        if c in reach:
            continue
        if nonneg_combination(rows, c) is not None:
            failures.append(c)
    return failures


def corpus(max_n: int) -> Iterator[tuple[tuple[int, ...], IntervalOrder]]:
    """Every interval order with at most ``max_n`` elements, once per ascent sequence."""
    for n in range(1, max_n + 1):
        for seq in ascent_sequences(n):
            yield seq, from_ascent_sequence(seq)
