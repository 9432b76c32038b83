import pytest

from linbwm import (
    BEST_SIDE,
    CONSISTENT,
    DEGENERATE,
    MIXED,
    WORST_SIDE,
    Pivot,
    compute_epsilons,
)

from conftest import make_pcs


def test_example1_table(example1):
    t = compute_epsilons(example1)
    assert t.d1 == (1,) and t.d2 == (2, 3) and t.d3 == ()
    assert t.eps_single[1] == pytest.approx(0.75, abs=1e-12)
    assert t.eps_single[2] == pytest.approx(0.4, abs=1e-12)
    assert t.eps_single[3] == pytest.approx(1 / 6, abs=1e-12)
    assert t.eps_pair[(1, 2)] == pytest.approx(5 / 7, abs=1e-12)
    assert t.eps_pair[(1, 3)] == pytest.approx(0.5, abs=1e-12)
    assert t.eta == pytest.approx(0.75, abs=1e-12)
    assert t.pivot == Pivot(BEST_SIDE, i=1)


def test_example3_table(example3):
    t = compute_epsilons(example3)
    assert t.eta == pytest.approx(18 / 7, abs=1e-12)
    assert t.pivot == Pivot(MIXED, i=1, j=2)


def test_example5_partition_has_d3(example5):
    t = compute_epsilons(example5)
    assert t.d1 == (3,) and t.d2 == (1,) and t.d3 == (2,)
    assert t.eps_single[2] == 0.0
    assert t.pivot == Pivot(WORST_SIDE, j=1)


def test_consistent_products(consistent_pcs):
    t = compute_epsilons(consistent_pcs)
    assert t.d3 == (1, 2)
    assert t.eta == 0.0
    assert t.pivot.kind == CONSISTENT


def test_pairs_stored_only_across_partition(example2):
    t = compute_epsilons(example2)
    assert set(t.eps_pair) == {(1, 2), (1, 3)}
    for (i, j) in t.eps_pair:
        assert i in t.d1 and j in t.d2


def test_zero_epsilon_iff_exact_product():
    pcs = make_pcs([1, 2, 3, 6], [6, 3, 1, 1])
    t = compute_epsilons(pcs)
    # c2 product 6 == a_bw exactly; c3 product 3 < 6
    assert 1 in t.d3 and t.eps_single[1] == 0.0
    assert 2 in t.d1 and t.eps_single[2] > 0.0


def test_two_criteria_degenerate():
    t = compute_epsilons(make_pcs([1, 5], [5, 1]))
    assert t.pivot.kind == DEGENERATE
    assert t.eta == 0.0
    assert t.eps_single == {} and t.eps_pair == {}


def test_tie_break_scans_d1_then_d2_then_pairs():
    # symmetric construction: both middle criteria undershoot identically
    pcs = make_pcs([1, 2, 2, 9], [9, 2, 2, 1])
    t = compute_epsilons(pcs)
    assert t.eps_single[1] == t.eps_single[2] == t.eta
    assert t.pivot == Pivot(BEST_SIDE, i=1)


def test_eta_positive_iff_inconsistent(example1, consistent_pcs):
    assert compute_epsilons(example1).eta > 0
    assert compute_epsilons(consistent_pcs).eta == 0
