# The optimal weights often survive integer perturbations of the
# non-pivot comparisons.  This script enumerates the certified family of a
# system and confirms every member really solves to the same weights.

from linbwm import EquivalenceQuery, enumerate_equivalent, solve_analytical
from linbwm import io as bwmio

pcs = bwmio.parse_pcs(bwmio.load_fixture_text("example5.json"))
base = solve_analytical(pcs)
print("base others-to-worst:", tuple(map(int, pcs.others_to_worst)))
print("base weights:", tuple(round(w, 4) for w in base.weights))
print(f"base epsilon* = {base.epsilon_star:.4f}")

family = enumerate_equivalent(EquivalenceQuery(base=pcs, mode="worst"))
print(f"\n{family.count} systems share these weights when only the worst-side")
print("comparisons of the free criteria move (pivot entries stay fixed):")
for member in family.members[:8]:
    print("  others-to-worst =", tuple(map(int, member.others_to_worst)))
print(f"  ... {family.count} members in total")

drift = 0.0
for member in family.members:
    sol = solve_analytical(member)
    drift = max(drift, max(abs(a - b) for a, b in zip(sol.weights, base.weights)))
print(f"\nlargest weight drift across the family: {drift:.2e} (identical solutions)")

# The certificate is sufficient, not necessary; a diagnostic pass can list
# perturbations that happen to share the solution without being certified.
family = enumerate_equivalent(EquivalenceQuery(base=pcs, mode="worst"), diagnose=True)
print(f"uncertified but solution-equal perturbations: {len(family.uncertified)}")
