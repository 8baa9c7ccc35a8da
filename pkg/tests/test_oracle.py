import numpy as np
import pytest

from lengthpoly.cycles import CycleInequality, build_weak_list, enumerate_cycles
from lengthpoly.errors import BlowupBudgetExceeded, DimensionMismatch
from lengthpoly.keygraph import build_key_graph
from lengthpoly.oracle import (
    EndpointSystem,
    RhoInequality,
    apex_check,
    build_endpoint_system,
    corpus,
    fme_eliminate,
    implies,
    polyhedral_equivalence,
    tdi_spot_check,
    tu_check,
)
from lengthpoly.order import from_ascent_sequence, from_relations

from conftest import EIGHT_ROWS

W = CycleInequality.of
ROWS = [W(*t) for t in EIGHT_ROWS]


def rho(*coeffs, rhs=0):
    return RhoInequality.of(coeffs, rhs)


def test_single_element_rows():
    S = build_endpoint_system(from_ascent_sequence([0]))
    assert S.rows == (((0, -1), 0), ((-1, 0), 0))


def test_two_element_chain_rows():
    S = build_endpoint_system(from_relations(2, [(1, 2)]))
    # loops at both elements and the cover row l1 + rho1 - l2 <= -1, then l >= 0
    assert set(S.rows) == {
        ((0, 0, -1, 0), 0),
        ((0, 0, 0, -1), 0),
        ((1, -1, 1, 0), -1),
        ((-1, 0, 0, 0), 0),
        ((0, -1, 0, 0), 0),
    }
    assert fme_eliminate(S) == sorted([rho(-1, 0), rho(0, -1)])


def test_eight_element_rows(eight):
    S = build_endpoint_system(eight)
    arc_rows = [lab for lab in S.labels if not lab.startswith("nonneg")]
    assert len(arc_rows) == 21
    assert sum(1 for lab in arc_rows if not lab.startswith("loop")) == 17
    assert len(S.rows) - len(arc_rows) == 8
    assert set(np.unique(S.matrix())) <= {-1, 0, 1}


def test_fme_eight_element_matches_cycles(eight):
    fme = fme_eliminate(build_endpoint_system(eight))
    cycles = [e.inequality for e in build_weak_list(build_key_graph(eight))]
    assert polyhedral_equivalence(fme, cycles, 8)
    assert polyhedral_equivalence(fme, ROWS, 8)


def test_fme_without_location_variables():
    S = EndpointSystem(0, ())
    assert fme_eliminate(S) == []


def test_fme_row_cap(eight):
    with pytest.raises(BlowupBudgetExceeded):
        fme_eliminate(build_endpoint_system(eight), row_cap=5)


def test_equivalence_examples():
    assert polyhedral_equivalence(ROWS, ROWS, 8)
    assert not polyhedral_equivalence(ROWS, ROWS[:-1], 8)
    assert implies([rho(-1, 0), rho(0, -1)], rho(-1, -1))
    assert not implies([rho(-1, 0)], rho(0, -1))
    with pytest.raises(DimensionMismatch):
        polyhedral_equivalence([rho(-1, 0)], [rho(-1)])


def test_tu_small_examples():
    chain = build_endpoint_system(from_relations(2, [(1, 2)]))
    assert tu_check(chain, max_order=4) == []
    bad = tu_check(np.array([[1, 1], [-1, 1]]), max_order=2)
    assert [(v.kind, v.value) for v in bad] == [("determinant", 2)]
    odd = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert [abs(v.value) for v in tu_check(odd, max_order=3)] == [2]
    assert tu_check(np.array([[2]]), max_order=1)[0].value == 2


def test_tu_eight_element(eight):
    assert tu_check(build_endpoint_system(eight), max_order=5) == []


def test_apex(eight):
    assert apex_check(eight)
    G = build_key_graph(eight)
    lengths = G.canonical.lengths()
    assert tuple(lengths) == (0, 0, 0, 0, 2, 1, 1, 1)
    assert ROWS[-1].value_at(lengths) == (4, 4)
    assert len(enumerate_cycles(G)) == 25


def test_tdi_small_corpus():
    for seq, P in corpus(4):
        assert tdi_spot_check(P) == [], seq


def test_tdi_two_element_chain():
    # the rows are -rho1 and -rho2, so only objectives with both coordinates <= 0 are bounded
    P = from_relations(2, [(1, 2)])
    assert tdi_spot_check(P, coeff_range=2) == []


def test_corpus_sizes():
    # cumulative counts of ascent sequences 1, 2, 5, 15, 53
    assert [sum(1 for _ in corpus(n)) for n in range(1, 6)] == [1, 3, 8, 23, 76]
