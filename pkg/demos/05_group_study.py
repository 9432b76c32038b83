# Multi-expert studies: category weights times local driver weights give
# per-expert global weights; averaging across experts ranks the drivers.

from linbwm import GroupStudy, solve_study, validate_pcs
from linbwm import io as bwmio

# The bundled case study feeds published per-expert weight tables through
# the aggregation pipeline.
study = bwmio.parse_study(bwmio.load_fixture_text("case_study.json"))
result = solve_study(study)
print("driver ranking from the bundled agri-food case study")
for position, driver in enumerate(result.ranking, start=1):
    print(f"  {position:>2}. {driver}  {result.final_weights[driver]:.4f}")

# New studies can supply raw comparison systems instead; every block is
# solved in closed form and its consistency ratio recorded.
cat = ["cost", "impact"]
pcs_categories = validate_pcs(
    {"criteria": cat, "best": "impact", "worst": "cost",
     "best_to_others": [3, 1], "others_to_worst": [1, 3]}
)
pcs_cost = validate_pcs(
    {"criteria": ["capex", "opex", "risk"], "best": "capex", "worst": "risk",
     "best_to_others": [1, 2, 6], "others_to_worst": [6, 2, 1]}
)
pcs_impact = validate_pcs(
    {"criteria": ["yield", "waste", "energy"], "best": "yield", "worst": "energy",
     "best_to_others": [1, 3, 5], "others_to_worst": [5, 2, 1]}
)
study = GroupStudy(
    categories=("cost", "impact"),
    drivers={"cost": ("capex", "opex", "risk"), "impact": ("yield", "waste", "energy")},
    experts=("analyst",),
    category_input={"analyst": pcs_categories},
    driver_input={"analyst": {"cost": pcs_cost, "impact": pcs_impact}},
)
result = solve_study(study)
print("\nsingle-expert study solved from raw comparisons")
for driver in study.driver_order():
    print(f"  {driver:<7} global {result.final_weights[driver]:.4f}")
for report in result.block_reports:
    block = report.category or "categories"
    cr = "undefined" if report.cr is None else f"{report.cr:.4f}"
    print(f"  block {block:<10} epsilon* {report.epsilon_star:.4f}  CR {cr}")
