"""Equivalence families of comparison systems under the closed-form solver.

Because the optimal weights depend on the input only through the pivot
entries, the maximal deviation bound eta and the per-criterion binding
minima, many distinct comparison systems provably share one solution.
This module certifies a candidate against a base system and exhaustively
enumerates the certified family over the integer scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .core import (
    CONSISTENT,
    DEGENERATE,
    EpsilonTable,
    InputError,
    PairwiseComparisonSystem,
    Pivot,
    compute_epsilons,
    free_weight_bound,
    solve_analytical,
)

VARY_WORST = "worst"
VARY_BEST = "best"
VARY_BOTH = "both"

MODES = (VARY_WORST, VARY_BEST, VARY_BOTH)

#: Certification tolerance.  All compared quantities are ratios of scale
#: integers, so genuinely distinct values differ by far more than this.
EQUIV_TOL = 1e-9

#: VaryBoth refuses beyond this many free coordinates rather than silently
#: truncating the scan.
MAX_FREE_COORDINATES = 10


@dataclass(frozen=True)
class EquivalenceQuery:
    base: PairwiseComparisonSystem
    mode: str
    scale_max: int | None = None

    def effective_scale_max(self) -> int:
        return self.scale_max if self.scale_max is not None else self.base.scale_max


@dataclass(frozen=True)
class EquivalenceClass:
    """Certified family (canonically ordered); the base is always a member.

    ``uncertified`` is populated only by a diagnostic enumeration pass: these
    candidates fail certification yet still solve to the base's weights.
    """

    mode: str
    members: tuple[PairwiseComparisonSystem, ...]
    count: int
    uncertified: tuple[PairwiseComparisonSystem, ...] = ()


def _pivot_indices(pivot: Pivot) -> tuple[int, ...]:
    return tuple(k for k in (pivot.i, pivot.j) if k is not None)


def _require_pivot_case(table: EpsilonTable) -> None:
    if table.pivot.kind in (CONSISTENT, DEGENERATE):
        raise InputError(
            "BaseConsistent",
            "the base system is consistent (eta = 0); its equivalence family is "
            "trivially itself and the perturbation analysis does not apply",
        )


def is_equivalent(
    base: PairwiseComparisonSystem,
    candidate: PairwiseComparisonSystem,
    tol: float = EQUIV_TOL,
) -> bool:
    """Certify that ``candidate`` provably shares ``base``'s optimal weights.

    Requires matching structure (criteria, best, worst, scale).  The
    certificate checks that the candidate (a) keeps every pivot entry of the
    base, (b) has the same eta attained at the same pivot, and (c) leaves
    every free criterion's binding minimum unchanged.  These conditions are
    sufficient, not necessary.
    """
    if (
        candidate.criteria != base.criteria
        or candidate.best != base.best
        or candidate.worst != base.worst
        or candidate.scale_max != base.scale_max
    ):
        raise InputError(
            "StructureMismatch",
            "candidate must share the base's criteria, best/worst designation and scale",
        )
    base_table = compute_epsilons(base)
    _require_pivot_case(base_table)

    pivot = base_table.pivot
    fixed = set(_pivot_indices(pivot))
    for k in fixed:
        if (
            candidate.best_to_others[k] != base.best_to_others[k]
            or candidate.others_to_worst[k] != base.others_to_worst[k]
        ):
            return False
    if candidate.a_bw != base.a_bw or candidate.others_to_worst[base.best] != base.others_to_worst[base.best]:
        return False

    cand_table = compute_epsilons(candidate)
    if abs(cand_table.eta - base_table.eta) > tol or cand_table.pivot != pivot:
        return False

    eta = base_table.eta
    for i in base.middle:
        if i in fixed:
            continue
        if abs(
            free_weight_bound(candidate, pivot, eta, i)
            - free_weight_bound(base, pivot, eta, i)
        ) > tol:
            return False
    return True


def _free_indices(base: PairwiseComparisonSystem, pivot: Pivot) -> tuple[int, ...]:
    fixed = set(_pivot_indices(pivot))
    return tuple(i for i in base.middle if i not in fixed)


def _allowed_values(base_value: float, cap: int) -> list[float]:
    # Substitutions stay dominance-coherent: no middle comparison may exceed
    # the best-to-worst value.  The base's own entry is always allowed so the
    # base belongs to its own family even on unusual inputs.
    values = {float(v) for v in range(1, cap + 1)}
    values.add(base_value)
    return sorted(values)


def _coordinate_options(
    base: PairwiseComparisonSystem, mode: str, scale_max: int, i: int
) -> list[tuple[float, float]]:
    """(best entry, worst entry) substitutions for one free criterion."""
    cap = min(scale_max, int(base.a_bw))
    best_values = (
        _allowed_values(base.best_to_others[i], cap)
        if mode in (VARY_BEST, VARY_BOTH)
        else [base.best_to_others[i]]
    )
    worst_values = (
        _allowed_values(base.others_to_worst[i], cap)
        if mode in (VARY_WORST, VARY_BOTH)
        else [base.others_to_worst[i]]
    )
    return [(bv, wv) for bv in best_values for wv in worst_values]


def _substitute(
    base: PairwiseComparisonSystem, assignment: dict[int, tuple[float, float]]
) -> PairwiseComparisonSystem:
    ab = list(base.best_to_others)
    aw = list(base.others_to_worst)
    for i, (bv, wv) in assignment.items():
        ab[i] = bv
        aw[i] = wv
    return replace(base, best_to_others=tuple(ab), others_to_worst=tuple(aw))


def _prepared_scan(query: EquivalenceQuery):
    base = query.base
    if query.mode not in MODES:
        raise InputError("SchemaViolation", f"unknown sensitivity mode {query.mode!r}", "mode")
    table = compute_epsilons(base)
    _require_pivot_case(table)
    free = _free_indices(base, table.pivot)
    if query.mode == VARY_BOTH and 2 * len(free) > MAX_FREE_COORDINATES:
        raise InputError(
            "SearchSpaceTooLarge",
            f"joint scan over {2 * len(free)} free coordinates exceeds the limit of "
            f"{MAX_FREE_COORDINATES}; vary one side at a time",
        )
    options = [
        _coordinate_options(base, query.mode, query.effective_scale_max(), i) for i in free
    ]
    return table, free, options


def grid_size(query: EquivalenceQuery) -> int:
    """Number of raw candidates the enumeration scans before filtering."""
    _, _, options = _prepared_scan(query)
    size = 1
    for opts in options:
        size *= len(opts)
    return size


def enumerate_equivalent(query: EquivalenceQuery, diagnose: bool = False) -> EquivalenceClass:
    """Exhaustively enumerate the certified family over the integer scale.

    Free coordinates (non-pivot middle criteria) are substituted with every
    integer from 1 up to the best-to-worst value (never beyond the scale);
    pivot entries stay fixed.  A per-criterion prefilter applies the
    certificate conditions that involve only one criterion, then surviving
    combinations get the full pairwise check.

    With ``diagnose`` the rejected candidates are re-solved and those whose
    weights and objective match the base's anyway are reported separately
    (the certificate is sufficient, not necessary).
    """
    base = query.base
    table, free, options = _prepared_scan(query)
    pivot, eta = table.pivot, table.eta

    feasible: list[list[tuple[float, float]]] = []
    for i, opts in zip(free, options):
        keep = []
        for bv, wv in opts:
            candidate = _substitute(base, {i: (bv, wv)})
            eps_i = abs(bv * wv - base.a_bw) / (bv + 2)
            if eps_i > eta + EQUIV_TOL:
                continue
            if abs(
                free_weight_bound(candidate, pivot, eta, i)
                - free_weight_bound(base, pivot, eta, i)
            ) > EQUIV_TOL:
                continue
            keep.append((bv, wv))
        feasible.append(keep)

    members = []
    for combo in itertools.product(*feasible):
        candidate = _substitute(base, dict(zip(free, combo)))
        if is_equivalent(base, candidate):
            members.append(candidate)

    uncertified = []
    if diagnose:
        base_solution = solve_analytical(base)
        member_keys = {(m.best_to_others, m.others_to_worst) for m in members}
        for combo in itertools.product(*options):
            candidate = _substitute(base, dict(zip(free, combo)))
            key = (candidate.best_to_others, candidate.others_to_worst)
            if key in member_keys:
                continue
            sol = solve_analytical(candidate)
            if abs(sol.epsilon_star - base_solution.epsilon_star) <= EQUIV_TOL and all(
                abs(a - b) <= EQUIV_TOL for a, b in zip(sol.weights, base_solution.weights)
            ):
                uncertified.append(candidate)

    sort_key = lambda p: (p.best_to_others, p.others_to_worst)
    members.sort(key=sort_key)
    uncertified.sort(key=sort_key)
    return EquivalenceClass(
        mode=query.mode,
        members=tuple(members),
        count=len(members),
        uncertified=tuple(uncertified),
    )
