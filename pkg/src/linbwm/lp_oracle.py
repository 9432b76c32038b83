"""Independent LP reference solver for the linear BWM minimization.

The closed-form solver in :mod:`linbwm.core` is cross-checked against a
plain two-phase dense simplex on the equivalent linear program: minimize
the deviation bound ``eps`` subject to the absolute-deviation constraints,
the normalization equality and nonnegativity.  Keeping this path free of
the closed-form algebra makes the agreement tests meaningful, and the
vertex solutions it returns can be compared weight-by-weight because the
optimum is unique.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import AnalyticalSolution, PairwiseComparisonSystem, solve_analytical

PIVOT_TOL = 1e-10
FEASIBILITY_TOL = 1e-9
MAX_ITERATIONS = 10_000

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
ITERATION_LIMIT = "iteration_limit"


class OracleError(RuntimeError):
    """The simplex failed on a program that should always be solvable."""

    def __init__(self, result: "OracleResult"):
        super().__init__(f"simplex ended with status {result.status!r}")
        self.result = result


@dataclass(frozen=True)
class LinearProgram:
    """Dense minimize-eps program: variables are the weights plus eps.

    ``inequalities`` are (coefficients, rhs) rows encoding ``<=``; the
    deviation variable's coefficient is -1 in every row.  ``equality``
    is the normalization row (weights sum to one).
    """

    num_vars: int
    objective: tuple[float, ...]
    inequalities: tuple[tuple[tuple[float, ...], float], ...]
    equality: tuple[tuple[float, ...], float]


@dataclass(frozen=True)
class OracleResult:
    status: str
    objective: float | None
    solution: tuple[float, ...] | None
    iterations: int


@dataclass(frozen=True)
class VerificationReport:
    """Side-by-side comparison of the closed-form and simplex solutions."""

    analytical: AnalyticalSolution
    oracle: OracleResult
    delta_epsilon: float
    max_weight_delta: float
    tol: float
    passed: bool
    analytical_seconds: float
    oracle_seconds: float


def build_lp(pcs: PairwiseComparisonSystem) -> LinearProgram:
    """Encode a comparison system as the minimize-eps linear program.

    Rows are emitted in a fixed order: for each middle criterion ascending,
    the +/- best-row pair then the +/- worst-row pair; the +/- best-to-worst
    pair last; the normalization equality after all inequalities.
    """
    n = pcs.n
    num_vars = n + 1
    eps_col = n
    ab, aw = pcs.best_to_others, pcs.others_to_worst
    b, w = pcs.best, pcs.worst

    rows: list[tuple[tuple[float, ...], float]] = []

    def pair(plus: dict[int, float]) -> None:
        for sign in (1.0, -1.0):
            coeffs = [0.0] * num_vars
            for col, value in plus.items():
                coeffs[col] = sign * value
            coeffs[eps_col] = -1.0
            rows.append((tuple(coeffs), 0.0))

    for i in pcs.middle:
        pair({b: 1.0, i: -ab[i]})
        pair({i: 1.0, w: -aw[i]})
    pair({b: 1.0, w: -pcs.a_bw})

    eq = [1.0] * n + [0.0]
    objective = tuple(0.0 if k != eps_col else 1.0 for k in range(num_vars))
    return LinearProgram(num_vars, objective, tuple(rows), (tuple(eq), 1.0))


def _run_simplex(
    tableau: np.ndarray, basis: list[int], iterations: int, max_iterations: int
) -> tuple[str, int]:
    """Minimize the cost encoded in the bottom row; Bland's rule throughout."""
    m = tableau.shape[0] - 1
    while iterations < max_iterations:
        reduced = tableau[-1, :-1]
        entering = -1
        for j, value in enumerate(reduced):
            if value < -PIVOT_TOL:
                entering = j
                break
        if entering < 0:
            return OPTIMAL, iterations

        leaving = -1
        best_ratio = np.inf
        for r in range(m):
            coef = tableau[r, entering]
            if coef > PIVOT_TOL:
                ratio = tableau[r, -1] / coef
                # Bland tie-break: smallest basis index among minimal ratios.
                if ratio < best_ratio - PIVOT_TOL or (
                    abs(ratio - best_ratio) <= PIVOT_TOL
                    and (leaving < 0 or basis[r] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = r
        if leaving < 0:
            return UNBOUNDED, iterations

        pivot = tableau[leaving, entering]
        tableau[leaving] /= pivot
        for r in range(tableau.shape[0]):
            if r != leaving and tableau[r, entering] != 0.0:
                tableau[r] -= tableau[r, entering] * tableau[leaving]
        basis[leaving] = entering
        iterations += 1
    return ITERATION_LIMIT, iterations


def simplex_solve(lp: LinearProgram, max_iterations: int = MAX_ITERATIONS) -> OracleResult:
    """Two-phase dense simplex with Bland's anti-cycling rule.

    Every program produced by :func:`build_lp` is feasible (any normalized
    positive weight vector with a large enough deviation satisfies all
    rows), so a non-optimal status signals a numerical pathology.
    """
    n = lp.num_vars
    m_ineq = len(lp.inequalities)
    num_slack = m_ineq
    num_art = 1
    total = n + num_slack + num_art
    m = m_ineq + 1

    tableau = np.zeros((m + 1, total + 1))
    basis: list[int] = []
    for r, (coeffs, rhs) in enumerate(lp.inequalities):
        tableau[r, :n] = coeffs
        tableau[r, n + r] = 1.0
        tableau[r, -1] = rhs
        basis.append(n + r)
    eq_coeffs, eq_rhs = lp.equality
    tableau[m_ineq, :n] = eq_coeffs
    tableau[m_ineq, n + num_slack] = 1.0
    tableau[m_ineq, -1] = eq_rhs
    basis.append(n + num_slack)

    # Phase 1: minimize the artificial variable.
    tableau[-1, n + num_slack] = 1.0
    tableau[-1] -= tableau[m_ineq]
    status, iterations = _run_simplex(tableau, basis, 0, max_iterations)
    if status != OPTIMAL:
        return OracleResult(status, None, None, iterations)
    if -tableau[-1, -1] > FEASIBILITY_TOL:
        return OracleResult(INFEASIBLE, None, None, iterations)

    art_col = n + num_slack
    if art_col in basis:
        # Degenerate artificial at zero: pivot it out on any usable column.
        r = basis.index(art_col)
        for j in range(total):
            if j != art_col and abs(tableau[r, j]) > PIVOT_TOL:
                pivot = tableau[r, j]
                tableau[r] /= pivot
                for rr in range(tableau.shape[0]):
                    if rr != r and tableau[rr, j] != 0.0:
                        tableau[rr] -= tableau[rr, j] * tableau[r]
                basis[r] = j
                break

    # Phase 2: swap in the real objective, zero it on the basis.
    tableau[:, art_col] = 0.0
    tableau[-1, :] = 0.0
    tableau[-1, :n] = lp.objective
    for r, col in enumerate(basis):
        if col < n and lp.objective[col] != 0.0:
            tableau[-1] -= lp.objective[col] * tableau[r]
    status, iterations = _run_simplex(tableau, basis, iterations, max_iterations)
    if status != OPTIMAL:
        return OracleResult(status, None, None, iterations)

    x = np.zeros(total)
    for r, col in enumerate(basis):
        x[col] = tableau[r, -1]
    solution = tuple(float(v) for v in x[:n])
    objective = float(np.dot(lp.objective, solution))
    return OracleResult(OPTIMAL, objective, solution, iterations)


def residuals(lp: LinearProgram, solution) -> tuple[float, float]:
    """(worst inequality violation, equality violation) of a solution."""
    x = np.asarray(solution, dtype=float)
    worst_ineq = 0.0
    for coeffs, rhs in lp.inequalities:
        worst_ineq = max(worst_ineq, float(np.dot(coeffs, x) - rhs))
    eq_coeffs, eq_rhs = lp.equality
    return worst_ineq, abs(float(np.dot(eq_coeffs, x) - eq_rhs))


def verify(pcs: PairwiseComparisonSystem, tol: float = 1e-6) -> VerificationReport:
    """Solve with both paths and report their disagreement.

    ``passed`` requires both the objective gap and the largest per-weight
    gap to stay within ``tol``.  Wall times of the two paths are recorded
    so the closed form's speedup is visible.
    """
    t0 = time.perf_counter()
    analytical = solve_analytical(pcs)
    t1 = time.perf_counter()
    oracle = simplex_solve(build_lp(pcs))
    t2 = time.perf_counter()
    if oracle.status != OPTIMAL:
        raise OracleError(oracle)

    delta_eps = abs(analytical.epsilon_star - oracle.objective)
    max_weight_delta = max(
        abs(a - o) for a, o in zip(analytical.weights, oracle.solution[: pcs.n])
    )
    return VerificationReport(
        analytical=analytical,
        oracle=oracle,
        delta_epsilon=delta_eps,
        max_weight_delta=max_weight_delta,
        tol=tol,
        passed=delta_eps <= tol and max_weight_delta <= tol,
        analytical_seconds=t1 - t0,
        oracle_seconds=t2 - t1,
    )
