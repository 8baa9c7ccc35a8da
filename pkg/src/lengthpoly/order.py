"""Interval orders, their integral representations and input decoding.

Elements are the integers ``1..n``.  An interval representation assigns each
element an integer interval ``[l, r]``; ``x`` precedes ``y`` exactly when
``r_x + 1 <= l_y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleInRelation,
    InternalInvariantViolation,
    InvalidAscentSequence,
    InvalidOrder,
    MalformedInterval,
    NotAnIntervalOrder,
)

__all__ = [
    "IntervalOrder",
    "IntervalRepresentation",
    "from_relations",
    "from_intervals",
    "from_ascent_sequence",
    "canonical_representation",
    "generate_pm",
    "ascent_sequences",
    "find_2plus2",
]


@dataclass(frozen=True)
class IntervalOrder:
    """A strict interval order on ``{1..n}``.

    ``down[x]`` is the set of predecessors of ``x`` and ``up[x]`` the set of
    successors.  Index 0 of both tuples is an unused placeholder so that
    elements can be addressed directly.
    """

    n: int
    down: tuple[frozenset[int], ...]
    up: tuple[frozenset[int], ...]

    @classmethod
    def _from_down_sets(cls, n: int, down: Sequence[Iterable[int]]) -> "IntervalOrder":
        downs = [frozenset()] + [frozenset(down[x]) for x in range(1, n + 1)]
        ups: list[set[int]] = [set() for _ in range(n + 1)]
        for y in range(1, n + 1):
            for x in downs[y]:
                ups[x].add(y)
        return cls(n, tuple(downs), tuple(frozenset(u) for u in ups))

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def precedes(self, x: int, y: int) -> bool:
        return x in self.down[y]

    def incomparable(self, x: int, y: int) -> bool:
        return x != y and x not in self.down[y] and y not in self.down[x]

    def relations(self) -> list[tuple[int, int]]:
        """All pairs ``(x, y)`` with ``x`` preceding ``y``, sorted."""
        return sorted((x, y) for y in self.elements for x in self.down[y])

    def restrict(self, k: int) -> "IntervalOrder":
        """The suborder induced on ``{1..k}``."""
        return IntervalOrder._from_down_sets(
            k, [()] + [[x for x in self.down[y] if x <= k] for y in range(1, k + 1)])

    def __repr__(self) -> str:
        return f"IntervalOrder(n={self.n}, relations={self.relations()})"


@dataclass(frozen=True)
class IntervalRepresentation:
    """Integer endpoint pairs ``(l_x, r_x)``; ``endpoints[x - 1]`` belongs to ``x``."""

    endpoints: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, (l, r) in enumerate(self.endpoints, start=1):
            if not (isinstance(l, int) and isinstance(r, int)):
                raise MalformedInterval(f"element {i}: endpoints must be integers")
            if l > r:
                raise MalformedInterval(f"element {i}: left endpoint {l} exceeds right endpoint {r}")
            if l < 0:
                raise MalformedInterval(f"element {i}: negative endpoint {l}")

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> "IntervalRepresentation":
        return cls(tuple((int(l), int(r)) for l, r in pairs))

    @property
    def n(self) -> int:
        return len(self.endpoints)

    def left(self, x: int) -> int:
        return self.endpoints[x - 1][0]

    def right(self, x: int) -> int:
        return self.endpoints[x - 1][1]

    def length(self, x: int) -> int:
        l, r = self.endpoints[x - 1]
        return r - l

    def lengths(self) -> tuple[int, ...]:
        return tuple(r - l for l, r in self.endpoints)

    def realizes(self, P: IntervalOrder) -> bool:
        if P.n != self.n:
            return False
        return all(
            (self.right(x) + 1 <= self.left(y)) == P.precedes(x, y)
            for x in P.elements for y in P.elements)

    def as_lists(self) -> list[list[int]]:
        return [[l, r] for l, r in self.endpoints]


def find_2plus2(n: int, down: Sequence[frozenset[int]]):
    """Return a quadruple ``(a, b, c, d)`` forming a 2+2, or ``None``.

    Uses the fact that an order is an interval order iff its down-sets are
    totally ordered by inclusion.
    """
    for b in range(1, n + 1):
        for d in range(b + 1, n + 1):
            only_b = down[b] - down[d]
            only_d = down[d] - down[b]
            if only_b and only_d:
                return (min(only_b), b, min(only_d), d)
    return None


def from_relations(n: int, pairs: Iterable[Sequence[int]]) -> IntervalOrder:
    """Build the interval order generated by ``pairs`` (cover pairs suffice)."""
    if n < 1:
        raise InvalidOrder("an interval order needs at least one element")
    succ: list[set[int]] = [set() for _ in range(n + 1)]
    for pair in pairs:
        x, y = (int(v) for v in pair)
        if not (1 <= x <= n and 1 <= y <= n):
            raise InvalidOrder(f"pair ({x}, {y}) outside 1..{n}")
        succ[x].add(y)
    # reachability by DFS from every element
    reach: list[set[int]] = [set() for _ in range(n + 1)]
    for s in range(1, n + 1):
        stack = list(succ[s])
        seen = reach[s]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ[v])
        if s in seen:
            raise CycleInRelation(f"element {s} precedes itself in the transitive closure")
    down: list[set[int]] = [set() for _ in range(n + 1)]
    for x in range(1, n + 1):
        for y in reach[x]:
            down[y].add(x)
    downs = [frozenset(d) for d in down]
    witness = find_2plus2(n, downs)
    if witness is not None:
        raise NotAnIntervalOrder(witness)
    return IntervalOrder._from_down_sets(n, downs)


def from_intervals(rep: IntervalRepresentation | Iterable[Sequence[int]]) -> IntervalOrder:
    if not isinstance(rep, IntervalRepresentation):
        rep = IntervalRepresentation.of(rep)
    n = rep.n
    if n < 1:
        raise InvalidOrder("an interval order needs at least one element")
    down = [()] + [
        [x for x in range(1, n + 1) if rep.right(x) + 1 <= rep.left(y)]
        for y in range(1, n + 1)]
    return IntervalOrder._from_down_sets(n, down)


def _validate_ascent_sequence(seq: Sequence[int]) -> None:
    if len(seq) == 0:
        raise InvalidAscentSequence(0, "empty sequence")
    ascents = 0
    for i, v in enumerate(seq):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidAscentSequence(i, f"entry {v!r} is not a non-negative integer")
        if i == 0:
            if v != 0:
                raise InvalidAscentSequence(0, "first entry must be 0")
            continue
        if v > ascents + 1:
            raise InvalidAscentSequence(i, f"entry {v} exceeds 1 + {ascents} ascents")
        if v > seq[i - 1]:
            ascents += 1


def _levels(down: list[set[int]]) -> list[frozenset[int]]:
    return sorted({frozenset(d) for d in down[1:]}, key=len)


def from_ascent_sequence(seq: Sequence[int]) -> IntervalOrder:
    """Decode an ascent sequence into its (2+2)-free poset.

    Element ``k`` is inserted at step ``k``.  With ``D_0 < ... < D_{L-1}``
    the distinct down-sets of the current order and ``D_L`` the set of all
    current elements, a value ``i`` that is not an ascent adds a new maximal
    element with down-set ``D_i``.  An ascent ``i`` first puts every element
    of level ``>= i`` above all maximal elements of level ``< i``, then adds
    the new maximal element with the old down-set ``D_i``.
    """
    seq = list(seq)
    _validate_ascent_sequence(seq)
    down: list[set[int]] = [set(), set()]
    for k in range(2, len(seq) + 1):
        i, prev = seq[k - 1], seq[k - 2]
        levels = _levels(down)
        everything = set(range(1, k))
        target = set(levels[i]) if i < len(levels) else everything
        if i > prev:
            maximal = everything - set().union(*down[1:])
            level_of = {x: levels.index(frozenset(down[x])) for x in range(1, k)}
            lifted = {x for x in maximal if level_of[x] < i}
            for y in range(1, k):
                if level_of[y] >= i:
                    down[y] |= lifted
        down.append(target)
    n = len(seq)
    downs = [frozenset(d) for d in down]
    if find_2plus2(n, downs) is not None:
        raise InternalInvariantViolation("order", "ascent decoding yields a (2+2)-free order")
    return IntervalOrder._from_down_sets(n, downs)


def ascent_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All ascent sequences of length ``n`` in lexicographic order."""
    if n < 1:
        return

    def extend(prefix, ascents):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(ascents + 2):
            prefix.append(v)
            yield from extend(prefix, ascents + (v > prefix[-2]))
            prefix.pop()

    yield from extend([0], 0)


def canonical_representation(P: IntervalOrder) -> tuple[IntervalRepresentation, int]:
    """The minimal-endpoint representation on ``0..m-1`` and the magnitude ``m``.

    ``l_x`` is the rank of ``D(x)`` in the chain of distinct down-sets and
    ``r_x`` is ``m - 1`` minus the rank of ``U(x)`` in the chain of distinct
    up-sets.
    """
    downs = sorted({P.down[x] for x in P.elements}, key=len)
    ups = sorted({P.up[x] for x in P.elements}, key=len)
    if len(downs) != len(ups):
        raise InternalInvariantViolation(
            "order", "distinct down-sets and up-sets are equinumerous",
            f"{len(downs)} vs {len(ups)}")
    m = len(downs)
    down_rank = {d: i for i, d in enumerate(downs)}
    up_rank = {u: i for i, u in enumerate(ups)}
    rep = IntervalRepresentation(tuple(
        (down_rank[P.down[x]], m - 1 - up_rank[P.up[x]]) for x in P.elements))
    if not rep.realizes(P):
        raise InternalInvariantViolation("order", "canonical representation realizes the order")
    return rep, m


def generate_pm(m: int) -> IntervalOrder:
    """The family ``P_m`` on ``4m + 3`` elements with exponentially many cycles."""
    if m < 1:
        raise InvalidOrder("m must be a positive integer")
    n = 4 * m + 3
    ivs: list[tuple[int, int] | None] = [None] * (n + 1)
    ivs[1] = (0, 0)
    for i in range(1, m + 1):
        ivs[4 * i - 2] = (3 * i - 2, 3 * i - 2)
        ivs[4 * i - 1] = (3 * i, 3 * i)
        ivs[4 * i] = (3 * i - 2, 3 * i - 1)
        ivs[4 * i + 1] = (3 * i - 1, 3 * i)
    ivs[4 * m + 2] = (3 * m + 1, 3 * m + 1)
    ivs[4 * m + 3] = (0, 3 * m + 1)
    return from_intervals(IntervalRepresentation(tuple(ivs[1:])))


def all_quadruples_2plus2_free(P: IntervalOrder) -> bool:
    """Brute-force 2+2 scan over all quadruples (test oracle, O(n^4))."""
    E = list(P.elements)
    for a, b, c, d in product(E, repeat=4):
        if (P.precedes(a, b) and P.precedes(c, d)
                and not P.precedes(a, d) and not P.precedes(c, b)):
            return False
    return True
