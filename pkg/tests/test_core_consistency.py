import pytest

from linbwm import (
    InputError,
    consistency_index,
    consistency_ratio,
    solve_analytical,
    verify,
    worst_case_pcs,
)

from conftest import make_pcs

# Published consistency-index grid, n = 3..10 (rows) by a_bw = 2..9 (columns).
CI_TABLE = {
    3: (0.1, 0.1714, 0.2222, 0.2597, 0.2885, 0.3111, 0.3294, 0.3445),
    4: (0.0968, 0.1538, 0.1899, 0.2174, 0.2459, 0.2692, 0.2887, 0.3051),
    5: (0.0789, 0.1290, 0.1630, 0.1875, 0.2143, 0.2373, 0.2569, 0.2738),
    6: (0.0667, 0.1111, 0.1429, 0.1667, 0.1899, 0.2121, 0.2314, 0.2483),
    7: (0.0577, 0.0976, 0.1271, 0.15, 0.1705, 0.1918, 0.2105, 0.2271),
    8: (0.0508, 0.0870, 0.1145, 0.1364, 0.1546, 0.175, 0.1931, 0.2093),
    9: (0.0455, 0.0784, 0.1042, 0.125, 0.1423, 0.1609, 0.1783, 0.1941),
    10: (0.0411, 0.0714, 0.0955, 0.1154, 0.1321, 0.1489, 0.1657, 0.1809),
}


def test_published_values_spot():
    assert consistency_index(5, 7) == pytest.approx(0.2373, abs=5e-5)
    assert consistency_index(10, 9) == pytest.approx(0.1809, abs=5e-5)


def test_full_grid():
    for n, row in CI_TABLE.items():
        for a_bw, expected in zip(range(2, 10), row):
            assert consistency_index(n, a_bw) == pytest.approx(expected, abs=5e-5)


def test_unit_abw_gives_zero_index():
    for n in (3, 5, 8, 12):
        assert consistency_index(n, 1) == 0.0


def test_small_n_rejected():
    with pytest.raises(InputError) as exc:
        consistency_index(2, 5)
    assert exc.value.code == "UnsupportedN"


def test_grid_monotonicity():
    for n in range(3, 11):
        values = [consistency_index(n, a) for a in range(2, 10)]
        assert all(x < y for x, y in zip(values, values[1:]))
    for a_bw in range(2, 10):
        values = [consistency_index(n, a_bw) for n in range(3, 11)]
        assert all(x > y for x, y in zip(values, values[1:]))


def test_ratio_basic():
    assert consistency_ratio(0.0533, 0.2373) == pytest.approx(0.2246, abs=2e-3)
    assert consistency_ratio(0.1796, 0.2143) == pytest.approx(0.8381, abs=2e-3)
    assert consistency_ratio(0.0, 0.3) == 0.0
    assert consistency_ratio(5e-13, 0.0) == 0.0
    assert consistency_ratio(0.1, 0.0) is None


def test_undefined_ratio_reachable():
    # best-to-worst value 1 with inconsistent middle comparisons
    s = solve_analytical(make_pcs([1, 3, 1], [1, 2, 1]))
    assert s.epsilon_star > 0
    assert s.ci == 0.0
    assert s.cr is None


def test_worst_case_variant2_attains_table_entry():
    s = solve_analytical(worst_case_pcs(3, 2, 2))
    assert s.epsilon_star == pytest.approx(0.1, abs=1e-10)
    assert s.epsilon_star == pytest.approx(consistency_index(3, 2), abs=1e-12)
    s = solve_analytical(worst_case_pcs(4, 9, 2))
    assert s.epsilon_star == pytest.approx(0.3051, abs=5e-5)


def test_worst_case_variant1_value_and_oracle_agreement():
    pcs = worst_case_pcs(5, 7, 1)
    s = solve_analytical(pcs)
    assert s.epsilon_star == pytest.approx(6 / 33, abs=1e-12)
    report = verify(pcs, tol=1e-7)
    assert report.passed


def test_worst_case_attainment_over_grid():
    for n in range(3, 11):
        for a_bw in range(2, 10):
            variants = (1, 2) if n == 3 else (1, 2, 3)
            best = max(
                solve_analytical(worst_case_pcs(n, a_bw, v)).epsilon_star for v in variants
            )
            assert best == pytest.approx(consistency_index(n, a_bw), abs=1e-10)


def test_variant_unavailable():
    with pytest.raises(InputError) as exc:
        worst_case_pcs(3, 5, 3)
    assert exc.value.code == "VariantUnavailable"
    with pytest.raises(InputError):
        worst_case_pcs(2, 5, 1)
    with pytest.raises(InputError):
        worst_case_pcs(4, 5, 4)
