# Walk through one weighting session: elicit the two comparison vectors,
# inspect the deviation bounds, and read off the closed-form weights.

from linbwm import compute_epsilons, solve_analytical, validate_pcs

# Five criteria; "price" is the most important, "brand" the least.
pcs = validate_pcs(
    {
        "criteria": ["price", "quality", "comfort", "safety", "brand"],
        "best": "price",
        "worst": "brand",
        "best_to_others": [1, 2, 3, 4, 7],
        "others_to_worst": [7, 2, 3, 2, 1],
    }
)

table = compute_epsilons(pcs)
print("partition of the middle criteria")
print("  products below best-to-worst:", [pcs.criteria[i] for i in table.d1])
print("  products above best-to-worst:", [pcs.criteria[i] for i in table.d2])
print("  exact products:              ", [pcs.criteria[i] for i in table.d3])
print("per-criterion deviation bounds")
for i, value in sorted(table.eps_single.items()):
    print(f"  {pcs.criteria[i]:<8} {value:.4f}")
for (i, j), value in sorted(table.eps_pair.items()):
    print(f"  {pcs.criteria[i]}/{pcs.criteria[j]:<6} {value:.4f}")
print(f"eta = {table.eta:.4f}, pivot = {table.pivot.describe(pcs.criteria)}")

solution = solve_analytical(pcs)
print("\noptimal weights (no LP solver involved)")
for label, weight in zip(solution.criteria, solution.weights):
    print(f"  {label:<8} {weight:.4f}")
print(f"sigma = {solution.sigma:.4f}")
print(f"epsilon* = {solution.epsilon_star:.4f}  (smallest achievable max deviation)")
print(f"CI = {solution.ci:.4f}, CR = {solution.cr:.4f}")
