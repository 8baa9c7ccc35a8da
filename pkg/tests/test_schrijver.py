from fractions import Fraction as F

import pytest

from lengthpoly.cycles import CycleInequality, WeakOrder, cycle_weight, weak_compare
from lengthpoly.errors import OrderingViolation
from lengthpoly.order import from_ascent_sequence, generate_pm
from lengthpoly.schrijver import is_redundant, minimality_audit, schrijver_system

from conftest import EIGHT_ROWS

W = CycleInequality.of
ROWS = [W(*t) for t in EIGHT_ROWS]
# inside the tie group {1 <= rho6, 1 <= rho7, 1 <= rho8} the deterministic tie-break sorts by B
OURS = ROWS[:4] + [ROWS[5], ROWS[6], ROWS[4]] + ROWS[7:]


def test_loop_against_nothing():
    assert is_redundant(W(0, (), (1,)), [], 8) is None


def test_two_cycle_from_loops():
    assert is_redundant(W(0, (), (3, 4)), ROWS[:4], 8) == (0, 0, 1, 1)


def test_sum_with_row_nine():
    alpha = is_redundant(W(3, (2, 6), (3, 5, 7, 8)), ROWS[:9], 8)
    assert alpha is not None
    support = {i for i, a in enumerate(alpha) if a}
    assert support == {2, 8}
    assert alpha[2] == 1 and alpha[8] == 1


def test_ordering_violation():
    with pytest.raises(OrderingViolation):
        is_redundant(W(1, (), (8,)), [W(1, (), (6,))], 8)
    with pytest.raises(OrderingViolation):
        is_redundant(W(0, (), (1,)), [W(1, (), (6,))], 8)


def test_eight_element_schrijver_system(eight):
    S = schrijver_system(eight)
    assert set(S.inequalities) == set(ROWS)
    assert S.inequalities == OURS
    assert len(S) == 10 and len(S.discarded) == 7
    assert S.cycle_count == 25 and len(S.weak_list) == 17
    keys = [V.key() for V in S.inequalities]
    assert keys == sorted(keys)
    # rows in a tie group may appear in either order; the reference order differs only there
    for a, b in zip(ROWS, ROWS[1:]):
        assert weak_compare(a, b) in (WeakOrder.LESS, WeakOrder.TIE)


def test_discarded_inequalities_have_exact_certificates(eight):
    S = schrijver_system(eight)
    n = S.n
    kept = set(S.inequalities)
    for d in S.discarded:
        total = [F(0)] * (n + 1)
        for a, V in d.certificate:
            assert a > 0 and V in kept
            assert weak_compare(V, d.inequality) is WeakOrder.LESS
            for k, v in enumerate(V.vector(n)):
                total[k] += a * v
        assert tuple(total) == d.inequality.vector(n)


def test_witnesses_requested(eight):
    S = schrijver_system(eight, with_witnesses=True)
    assert len(S.witnesses) == 7
    for V, dec in S.witnesses.items():
        assert dec.is_integral()
        assert dec.weight(S.G).to_inequality() == V
        for c, C in dec.terms:
            assert c > 0
            assert weak_compare(cycle_weight(S.G, C), V) is WeakOrder.LESS


def test_single_element():
    S = schrijver_system(from_ascent_sequence([0]))
    assert S.inequalities == [W(0, (), (1,))]


@pytest.mark.parametrize("m,expected", [(1, 9), (2, 19)])
def test_exponential_family(m, expected):
    assert len(schrijver_system(generate_pm(m))) == expected == 3 ** m + 4 * m + 2


def test_deterministic(eight):
    a, b = schrijver_system(eight), schrijver_system(eight)
    assert a.inequalities == b.inequalities
    assert [d.certificate for d in a.discarded] == [d.certificate for d in b.discarded]


def test_kept_inequalities_are_tight(eight):
    S = schrijver_system(eight)
    lengths = S.G.canonical.lengths()
    for V in S.inequalities:
        lhs, rhs = V.value_at(lengths)
        assert lhs == rhs


def test_minimality_audit(eight):
    S = schrijver_system(eight)
    assert minimality_audit(S) == []
    injected = ROWS + [W(0, (), (3, 4))]
    v = minimality_audit(injected, 8)
    assert len(v) == 1
    assert v[0].inequality == W(0, (), (3, 4))
    assert {V for _, V in v[0].certificate} == {W(0, (), (3,)), W(0, (), (4,))}
    assert minimality_audit([W(0, (), (1,))], 1) == []
    with pytest.raises(ValueError):
        minimality_audit(ROWS)
