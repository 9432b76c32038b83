import pytest

from linbwm import build_lp, simplex_solve, solve_analytical, verify
from linbwm.lp_oracle import OPTIMAL, residuals

from conftest import make_pcs


def test_row_counts_example1(example1):
    lp = build_lp(example1)
    assert lp.num_vars == 6
    assert len(lp.inequalities) == 14  # 4 * |middle| + 2
    assert lp.equality[1] == 1.0


def test_row_counts_two_criteria():
    lp = build_lp(make_pcs([1, 5], [5, 1]))
    assert len(lp.inequalities) == 2
    assert lp.num_vars == 3


def test_row_counts_example3(example3):
    assert len(build_lp(example3).inequalities) == 22


def test_rows_reference_epsilon_with_minus_one(example2):
    lp = build_lp(example2)
    for coeffs, rhs in lp.inequalities:
        assert coeffs[-1] == -1.0
        assert rhs == 0.0
    assert lp.equality[0][-1] == 0.0


def test_example5_oracle_contradicts_published_spreadsheet(example5):
    result = simplex_solve(build_lp(example5))
    assert result.status == OPTIMAL
    assert result.objective == pytest.approx(0.1796, abs=1e-4)
    expected = (0.4671, 0.1078, 0.2156, 0.1617, 0.0479)
    for got, want in zip(result.solution, expected):
        assert got == pytest.approx(want, abs=1e-4)


def test_consistent_objective_zero(consistent_pcs):
    result = simplex_solve(build_lp(consistent_pcs))
    assert result.status == OPTIMAL
    assert result.objective == pytest.approx(0.0, abs=1e-12)


def test_example2_matches_analytical(example2):
    result = simplex_solve(build_lp(example2))
    analytical = solve_analytical(example2)
    assert result.objective == pytest.approx(analytical.epsilon_star, abs=1e-6)


def test_solution_satisfies_all_rows(example1, example3, example4):
    for pcs in (example1, example3, example4):
        lp = build_lp(pcs)
        result = simplex_solve(lp)
        worst_ineq, eq_gap = residuals(lp, result.solution)
        assert worst_ineq <= 1e-9
        assert eq_gap <= 1e-10


def test_verify_passes_on_examples(example1, example4, consistent_pcs):
    assert verify(example1, tol=1e-6).passed
    report = verify(example4, tol=1e-6)
    assert report.passed and report.delta_epsilon <= 1e-7
    report = verify(consistent_pcs, tol=1e-9)
    assert report.passed
    assert report.analytical.epsilon_star == 0.0
    assert report.oracle.objective == pytest.approx(0.0, abs=1e-12)


def test_objective_equals_epsilon_component(example2):
    lp = build_lp(example2)
    result = simplex_solve(lp)
    assert result.objective == result.solution[-1]
