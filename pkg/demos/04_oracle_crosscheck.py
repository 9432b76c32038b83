# Every closed-form solution can be re-derived by a plain two-phase
# simplex on the equivalent linear program.  This script cross-checks the
# two paths and measures the speed difference.

import statistics
import time
import warnings

import numpy as np

from linbwm import DominanceWarning, build_lp, simplex_solve, solve_analytical, validate_pcs, verify
from linbwm import io as bwmio

# deliberately unconstrained random inputs; dominance violations are fine here
warnings.simplefilter("ignore", DominanceWarning)

for name in ("example1", "example2", "example3", "example4", "example5"):
    pcs = bwmio.parse_pcs(bwmio.load_fixture_text(f"{name}.json"))
    report = verify(pcs, tol=1e-6)
    print(
        f"{name}: epsilon* analytical {report.analytical.epsilon_star:.6f} "
        f"vs simplex {report.oracle.objective:.6f} "
        f"(gap {report.delta_epsilon:.1e}, {report.oracle.iterations} pivots) "
        f"-> {'agree' if report.passed else 'DISAGREE'}"
    )

rng = np.random.default_rng(5)
systems = []
for _ in range(300):
    n = int(rng.integers(3, 10))
    best, worst = map(int, rng.choice(n, size=2, replace=False))
    ab = [int(v) for v in rng.integers(1, 10, size=n)]
    aw = [int(v) for v in rng.integers(1, 10, size=n)]
    ab[best] = 1
    aw[worst] = 1
    ab[worst] = aw[best] = int(rng.integers(1, 10))
    systems.append(
        validate_pcs({"best": best, "worst": worst, "best_to_others": ab, "others_to_worst": aw})
    )

analytical_times, simplex_times, worst_gap = [], [], 0.0
for pcs in systems:
    t0 = time.perf_counter()
    sol = solve_analytical(pcs)
    t1 = time.perf_counter()
    oracle = simplex_solve(build_lp(pcs))
    t2 = time.perf_counter()
    analytical_times.append(t1 - t0)
    simplex_times.append(t2 - t1)
    worst_gap = max(worst_gap, abs(sol.epsilon_star - oracle.objective))

print(f"\n300 random systems: worst objective gap {worst_gap:.2e}")
print(
    f"median solve time: closed form {statistics.median(analytical_times) * 1e6:.0f} us, "
    f"simplex {statistics.median(simplex_times) * 1e6:.0f} us "
    f"({statistics.median(simplex_times) / statistics.median(analytical_times):.0f}x slower)"
)
