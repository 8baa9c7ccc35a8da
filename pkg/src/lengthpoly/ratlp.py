"""Exact rational feasibility: phase-1 simplex with Bland's rule over ``Fraction``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch, InternalInvariantViolation

__all__ = [
    "RationalMatrixSystem",
    "basic_feasible_point",
    "nonneg_combination",
    "nonneg_integer_combination",
    "as_fraction",
]


def as_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("floating-point input is not accepted; pass int, Fraction or str")
    return Fraction(v)


@dataclass(frozen=True)
class RationalMatrixSystem:
    """The system ``sum_i y_i * columns[i] = target`` with ``y >= 0``."""

    columns: tuple[tuple[Fraction, ...], ...]
    target: tuple[Fraction, ...]

    @classmethod
    def of(cls, columns: Sequence[Sequence], target: Sequence) -> "RationalMatrixSystem":
        tgt = tuple(as_fraction(v) for v in target)
        cols = tuple(tuple(as_fraction(v) for v in c) for c in columns)
        for j, c in enumerate(cols):
            if len(c) != len(tgt):
                raise DimensionMismatch(f"column {j} has length {len(c)}, target has {len(tgt)}")
        return cls(cols, tgt)

    @property
    def dim(self) -> int:
        return len(self.target)

    def combine(self, y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.dim
        for coef, col in zip(y, self.columns):
            if coef:
                for r, v in enumerate(col):
                    if v:
                        out[r] += coef * v
        return tuple(out)


def _reduce(row: list[int]) -> None:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        row[:] = [v // g for v in row]


def _pivot(T: list[list[int]], obj: list[int], r: int, c: int) -> None:
    """Eliminate column ``c`` from every other row using row ``r``.

    Rows are integer lists, each a positive multiple of the true tableau row,
    so signs and ratios are unaffected by the scaling.
    """
    row = T[r]
    if row[c] < 0:
        row[:] = [-v for v in row]
    p = row[c]
    nz = [j for j, v in enumerate(row) if v]
    for other in (*T, obj):
        if other is row:
            continue
        f = other[c]
        if f:
            if p != 1:
                other[:] = [v * p for v in other]
            for j in nz:
                other[j] -= f * row[j]
            _reduce(other)


def _integer_rows(system: RationalMatrixSystem) -> list[list[int]]:
    """Row ``r`` of ``[columns | target]`` scaled to integers, sign chosen so the target entry is ``>= 0``."""
    rows = []
    for r in range(system.dim):
        vals = [system.columns[j][r] for j in range(len(system.columns))] + [system.target[r]]
        den = 1
        for v in vals:
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [int(v * den) for v in vals]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        rows.append(ints)
    return rows


def basic_feasible_point(system: RationalMatrixSystem) -> tuple[Fraction, ...] | None:
    """A vertex of ``{y >= 0 : sum_i y_i columns[i] = target}``, or ``None``.

    The returned point has at most ``rank`` nonzero entries and is verified by
    exact substitution before it is returned.
    """
    k, d = len(system.columns), system.dim
    if d == 0:
        return tuple(Fraction(0) for _ in range(k))
    # tableau rows: [a_1..a_k | artificial_1..artificial_d | rhs]
    T: list[list[int]] = []
    for r, ints in enumerate(_integer_rows(system)):
        T.append(ints[:k] + [1 if i == r else 0 for i in range(d)] + [ints[-1]])
    width = k + d + 1
    basis = [k + r for r in range(d)]
    # phase-1 objective: minimize the sum of artificials, stored as reduced costs
    obj = [0] * width
    for row in T:
        for c in range(width):
            if c < k or c == width - 1:
                obj[c] -= row[c]

    while True:
        entering = next((c for c in range(k + d) if obj[c] < 0), None)
        if entering is None:
            break
        best = None
        for r, row in enumerate(T):
            a = row[entering]
            if a > 0:
                cand = (Fraction(row[-1], a), basis[r])
                if best is None or cand < best[0]:
                    best = (cand, r)
        if best is None:
            raise InternalInvariantViolation("ratlp", "phase-1 objective is bounded below")
        r = best[1]
        _pivot(T, obj, r, entering)
        basis[r] = entering

    if obj[-1] != 0:
        return None

    # drive remaining artificials out of the basis where possible
    for r in range(d):
        if basis[r] >= k:
            c = next((c for c in range(k) if T[r][c] != 0), None)
            if c is not None:
                _pivot(T, obj, r, c)
                basis[r] = c

    y = [Fraction(0)] * k
    for r, b in enumerate(basis):
        if b < k:
            y[b] = Fraction(T[r][-1], T[r][b])
    if any(v < 0 for v in y) or system.combine(y) != system.target:
        raise InternalInvariantViolation("ratlp", "returned point satisfies the system exactly")
    return tuple(y)


def nonneg_combination(columns: Sequence[Sequence], target: Sequence) -> tuple[Fraction, ...] | None:
    """Coefficients ``alpha >= 0`` with ``sum alpha_i columns[i] = target``, or ``None``."""
    return basic_feasible_point(RationalMatrixSystem.of(columns, target))


def nonneg_integer_combination(columns: Sequence[Sequence], target: Sequence,
                               node_limit: int = 20_000) -> tuple[int, ...] | None:
    """Integers ``alpha >= 0`` with ``sum alpha_i columns[i] = target``, or ``None``.

    Depth-first branch and bound on the exact relaxation: a fractional
    coordinate ``y_j = v`` splits the node into ``y_j <= floor(v)`` and
    ``y_j >= ceil(v)``, each bound added as an equality row with its own slack.
    """
    base = RationalMatrixSystem.of(columns, target)
    k = len(base.columns)
    stack: list[tuple[tuple[int, str, int], ...]] = [()]
    nodes = 0
    while stack:
        bounds = stack.pop()
        nodes += 1
        if nodes > node_limit:
            raise InternalInvariantViolation("ratlp", "integer search finishes within its node limit")
        m = len(bounds)
        cols = []
        for j, col in enumerate(base.columns):
            extra = [Fraction(1) if b[0] == j else Fraction(0) for b in bounds]
            cols.append(tuple(col) + tuple(extra))
        for i, (_, kind, _) in enumerate(bounds):
            slack_col = [Fraction(0)] * (base.dim + m)
            slack_col[base.dim + i] = Fraction(1 if kind == "le" else -1)
            cols.append(tuple(slack_col))
        tgt = base.target + tuple(Fraction(b[2]) for b in bounds)
        y = basic_feasible_point(RationalMatrixSystem(tuple(cols), tgt))
        if y is None:
            continue
        y = y[:k]
        frac = next((j for j, v in enumerate(y) if v.denominator != 1), None)
        if frac is None:
            return tuple(int(v) for v in y)
        v = y[frac]
        fl = v.numerator // v.denominator
        stack.append(bounds + ((frac, "ge", fl + 1),))
        stack.append(bounds + ((frac, "le", fl),))
    return None
