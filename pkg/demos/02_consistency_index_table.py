# The consistency index is the largest optimal deviation any comparison
# system of a given size and best-to-worst value can produce.  This script
# prints the grid and shows the extremal systems that actually attain it.

from linbwm import consistency_index, solve_analytical, worst_case_pcs

print("consistency index by n (rows) and best-to-worst value (columns)")
abws = range(2, 10)
print("n\\a_bw" + "".join(f"{a:>9}" for a in abws))
for n in range(3, 11):
    print(f"{n:<6}" + "".join(f"{consistency_index(n, a):>9.4f}" for a in abws))

print("\nextremal systems attaining the entry (n=5, a_bw=7)")
for variant in (1, 2, 3):
    pcs = worst_case_pcs(5, 7, variant)
    sol = solve_analytical(pcs)
    print(
        f"  variant {variant}: best-to-others {tuple(map(int, pcs.best_to_others))}, "
        f"others-to-worst {tuple(map(int, pcs.others_to_worst))}, "
        f"epsilon* = {sol.epsilon_star:.4f}"
    )
print(f"  max of the three = CI(5, 7) = {consistency_index(5, 7):.4f}")

# A deviation is only meaningful relative to this ceiling: CR = epsilon*/CI.
from linbwm import validate_pcs

pcs = validate_pcs(
    {
        "best": 0,
        "worst": 4,
        "best_to_others": [1, 6, 3, 4, 6],
        "others_to_worst": [6, 6, 2, 1, 1],
    }
)
sol = solve_analytical(pcs)
print(f"\na heavily inconsistent input: epsilon* = {sol.epsilon_star:.4f}, CR = {sol.cr:.4f}")
