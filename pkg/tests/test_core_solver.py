import pytest

from linbwm import (
    BEST_SIDE,
    DEGENERATE,
    MIXED,
    WORST_SIDE,
    InputError,
    compute_epsilons,
    objective_value,
    solve_analytical,
    solve_with_pivot,
)

from conftest import make_pcs

PUBLISHED_WEIGHTS = {
    "example1": (0.4438, 0.1953, 0.1657, 0.1243, 0.0710),
    "example2": (0.4323, 0.1213, 0.1617, 0.2425, 0.0422),
    "example3": (0.2783, 0.1781, 0.0946, 0.1262, 0.1892, 0.0946, 0.0390),
    "example4": (0.6182, 0.1455, 0.1727, 0.0636),
    "example5": (0.4671, 0.1078, 0.2156, 0.1617, 0.0479),
}


def assert_close_vec(got, expected, tol):
    assert len(got) == len(expected)
    for g, e in zip(got, expected):
        assert g == pytest.approx(e, abs=tol)


def test_example1(example1):
    s = solve_analytical(example1)
    assert_close_vec(s.weights, PUBLISHED_WEIGHTS["example1"], 1e-4)
    assert s.sigma == pytest.approx(14.0833, abs=1e-4)
    assert s.epsilon_star == pytest.approx(0.0533, abs=1e-4)
    assert s.pivot.kind == BEST_SIDE and s.pivot.i == 1


def test_example2(example2):
    s = solve_analytical(example2)
    assert_close_vec(s.weights, PUBLISHED_WEIGHTS["example2"], 1e-4)
    assert s.epsilon_star == pytest.approx(0.0527, abs=1e-4)
    assert s.pivot.kind == WORST_SIDE and s.pivot.j == 3


def test_example3(example3):
    s = solve_analytical(example3)
    assert_close_vec(s.weights, PUBLISHED_WEIGHTS["example3"], 1e-4)
    assert s.sigma == pytest.approx(25.6667, abs=1e-3)
    assert s.epsilon_star == pytest.approx(0.1002, abs=1e-4)
    assert s.pivot.kind == MIXED and (s.pivot.i, s.pivot.j) == (1, 2)


def test_example4(example4):
    s = solve_analytical(example4)
    assert_close_vec(s.weights, PUBLISHED_WEIGHTS["example4"], 1e-4)
    assert s.epsilon_star == pytest.approx(0.1091, abs=1e-4)
    assert s.pivot.kind == WORST_SIDE and s.pivot.j == 1


def test_example5(example5):
    s = solve_analytical(example5)
    assert_close_vec(s.weights, PUBLISHED_WEIGHTS["example5"], 1e-4)
    assert s.epsilon_star == pytest.approx(0.1796, abs=1e-4)


def test_consistent_ratio_weights(consistent_pcs):
    s = solve_analytical(consistent_pcs)
    assert_close_vec(s.weights, (8 / 15, 4 / 15, 2 / 15, 1 / 15), 1e-12)
    assert s.epsilon_star == 0.0
    # the equivalent reciprocal form of the exact-ratio weights
    inv_sum = sum(1 / a for a in consistent_pcs.best_to_others)
    alt = [1 / (a * inv_sum) for a in consistent_pcs.best_to_others]
    assert_close_vec(s.weights, alt, 1e-12)


def test_two_criteria_degenerate_case():
    s = solve_analytical(make_pcs([1, 4], [4, 1]))
    assert s.pivot.kind == DEGENERATE
    assert s.weights == pytest.approx((0.8, 0.2), abs=1e-12)
    assert s.epsilon_star == 0.0
    assert s.ci == 0.0 and s.cr == 0.0


def test_weights_normalized_and_positive(example1, example2, example3, example4, example5):
    for pcs in (example1, example2, example3, example4, example5):
        s = solve_analytical(pcs)
        assert abs(sum(s.weights) - 1) <= 1e-12
        assert min(s.weights) > 0
        assert s.weights[pcs.worst] == pytest.approx(1 / s.sigma, abs=1e-15)


def test_objective_identity(example1, example3, example5):
    for pcs in (example1, example3, example5):
        s = solve_analytical(pcs)
        assert objective_value(pcs, s.weights) == pytest.approx(s.epsilon_star, abs=1e-10)


def test_objective_example1_published_value(example1):
    s = solve_analytical(example1)
    assert objective_value(example1, s.weights) == pytest.approx(0.0533, abs=1e-4)


def test_objective_zero_for_consistent(consistent_pcs):
    s = solve_analytical(consistent_pcs)
    assert objective_value(consistent_pcs, s.weights) <= 1e-12


def test_objective_of_published_spreadsheet_weights(example5):
    # Third-party spreadsheet output for this input, published rounded to
    # four decimals; its true deviation far exceeds the optimum 0.1796.
    spreadsheet = (0.4706, 0.1176, 0.2353, 0.0588, 0.1176)
    value = objective_value(example5, spreadsheet, norm_tol=1e-3)
    assert value == pytest.approx(0.5880, abs=1e-4)
    assert value > 0.1796


def test_objective_rejects_unnormalized(example1):
    with pytest.raises(InputError) as exc:
        objective_value(example1, (0.4, 0.2, 0.2, 0.1, 0.2))
    assert exc.value.code == "NotNormalized"
    with pytest.raises(InputError):
        objective_value(example1, (0.6, 0.4, 0.2, -0.1, -0.1))


def test_solve_with_each_tied_pivot_agrees():
    pcs = make_pcs([1, 2, 2, 9], [9, 2, 2, 1])
    table = compute_epsilons(pcs)
    w1, s1, e1 = solve_with_pivot(pcs, table.pivot)
    from linbwm import Pivot

    w2, s2, e2 = solve_with_pivot(pcs, Pivot(BEST_SIDE, i=2))
    assert e1 == e2
    for a, b in zip(w1, w2):
        assert a == pytest.approx(b, abs=1e-9)
