"""Core types and the closed-form solver for the linear best-worst method.

The linear BWM elicits two comparison vectors on a bounded preference
scale: how strongly the best criterion beats every criterion, and how
strongly every criterion beats the worst.  The minimax weight problem
built from those vectors can be solved without an LP solver: the largest
of a small family of rational deviation bounds (eta) identifies a pivot
criterion (or pair of criteria), and the optimal weights then follow in
closed form from the pivot.

All functions here are pure; every returned object is immutable.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

SAATY_SCALE_MAX = 9

# Absolute tolerance for comparisons against eta.  Scale entries are small
# integers, so products are exact in doubles; quotients are the only
# rounding source.
ETA_TOL = 1e-12

# Pivot kinds
CONSISTENT = "consistent"
DEGENERATE = "degenerate"
BEST_SIDE = "best_side"
WORST_SIDE = "worst_side"
MIXED = "mixed"


class InputError(ValueError):
    """Structured rejection of bad input.

    ``code`` is a stable machine-readable identifier (e.g. ``"BwMismatch"``),
    ``field`` optionally names the offending field or entry.
    """

    def __init__(self, code: str, message: str, field: str | None = None):
        super().__init__(message)
        self.code = code
        self.field = field


class DominanceWarning(UserWarning):
    """A comparison exceeds the best-to-worst entry.

    Ordinally the best criterion should dominate every column and the worst
    should be dominated by every row; violating that is suspicious but does
    not break the solver, so it only warns.
    """


@dataclass(frozen=True)
class Pivot:
    """Case designator for a comparison system's solution.

    ``kind`` is one of ``consistent``, ``degenerate``, ``best_side``,
    ``worst_side``, ``mixed``.  ``i`` holds the pivot index on the
    under-approximating side (product below the best-to-worst entry),
    ``j`` the one on the over-approximating side; indices are 0-based
    positions in the criteria list.
    """

    kind: str
    i: int | None = None
    j: int | None = None

    def describe(self, criteria: Sequence[str]) -> str:
        if self.kind == BEST_SIDE:
            return f"BestSide({criteria[self.i]})"
        if self.kind == WORST_SIDE:
            return f"WorstSide({criteria[self.j]})"
        if self.kind == MIXED:
            return f"Mixed({criteria[self.i]}, {criteria[self.j]})"
        return self.kind.capitalize()


@dataclass(frozen=True)
class PairwiseComparisonSystem:
    """A validated pair of comparison vectors with best/worst designation.

    ``best_to_others[i]`` is the preference of the best criterion over
    criterion ``i``; ``others_to_worst[i]`` the preference of criterion
    ``i`` over the worst.  Both share the best-to-worst entry:
    ``best_to_others[worst] == others_to_worst[best]``.
    """

    criteria: tuple[str, ...]
    best: int
    worst: int
    best_to_others: tuple[float, ...]
    others_to_worst: tuple[float, ...]
    scale_max: int = SAATY_SCALE_MAX

    @property
    def n(self) -> int:
        return len(self.criteria)

    @property
    def a_bw(self) -> float:
        """The shared best-to-worst comparison value."""
        return self.best_to_others[self.worst]

    @property
    def middle(self) -> tuple[int, ...]:
        """Indices of criteria other than best and worst, ascending."""
        return tuple(i for i in range(self.n) if i not in (self.best, self.worst))


@dataclass(frozen=True)
class EpsilonTable:
    """Deviation bounds of a comparison system and the pivot they select.

    ``d1``/``d2``/``d3`` partition the middle criteria by whether the
    product best_to_others[i] * others_to_worst[i] falls below, above or
    exactly on the best-to-worst entry.  ``eps_single`` maps each middle
    criterion to its deviation bound, ``eps_pair`` each (d1, d2) pair to
    the cross bound.  ``eta`` is the maximum of all stored values; it is
    zero exactly when the system is consistent.
    """

    d1: tuple[int, ...]
    d2: tuple[int, ...]
    d3: tuple[int, ...]
    eps_single: Mapping[int, float]
    eps_pair: Mapping[tuple[int, int], float]
    eta: float
    pivot: Pivot


@dataclass(frozen=True)
class AnalyticalSolution:
    """Optimal weights of the linear BWM problem plus consistency figures.

    ``sigma`` is the normalization denominator (the worst criterion's
    weight is ``1/sigma``), ``epsilon_star`` the optimal objective value
    ``eta/sigma``.  ``cr`` is ``None`` when the consistency ratio is
    undefined (zero consistency index with a positive objective).
    """

    criteria: tuple[str, ...]
    weights: tuple[float, ...]
    sigma: float
    epsilon_star: float
    pivot: Pivot
    ci: float
    cr: float | None


def _as_float_vector(values, name: str, n: int) -> tuple[float, ...]:
    try:
        vec = tuple(float(v) for v in values)
    except (TypeError, ValueError):
        raise InputError("SchemaViolation", f"{name} must be a sequence of numbers", name)
    if len(vec) != n:
        raise InputError(
            "SchemaViolation",
            f"{name} has {len(vec)} entries, expected {n} (one per criterion)",
            name,
        )
    return vec


def _resolve_index(value, criteria: Sequence[str], name: str) -> int:
    if isinstance(value, str):
        if value not in criteria:
            raise InputError("SchemaViolation", f"{name} {value!r} is not a criterion", name)
        return criteria.index(value)
    idx = int(value)
    if not 0 <= idx < len(criteria):
        raise InputError("SchemaViolation", f"{name} index {idx} out of range", name)
    return idx


def validate_pcs(record) -> PairwiseComparisonSystem:
    """Validate a comparison-system record and return the frozen system.

    ``record`` is either an existing :class:`PairwiseComparisonSystem`
    (revalidated) or a mapping with keys ``best_to_others``,
    ``others_to_worst`` (sequences aligned with ``criteria``), ``best``,
    ``worst`` (index or label), optional ``criteria`` and ``scale_max``.

    Raises :class:`InputError` with codes ``TooFewCriteria``,
    ``DuplicateLabels``, ``BestEqualsWorst``, ``DiagonalNotOne``,
    ``BwMismatch`` or ``OutOfScale``.  Ordinal dominance violations
    (an entry exceeding the best-to-worst value) emit a
    :class:`DominanceWarning` instead of failing.
    """
    if isinstance(record, PairwiseComparisonSystem):
        record = {
            "criteria": record.criteria,
            "best": record.best,
            "worst": record.worst,
            "best_to_others": record.best_to_others,
            "others_to_worst": record.others_to_worst,
            "scale_max": record.scale_max,
        }

    try:
        raw_b = record["best_to_others"]
        raw_w = record["others_to_worst"]
        best_raw = record["best"]
        worst_raw = record["worst"]
    except KeyError as exc:
        raise InputError("SchemaViolation", f"missing field {exc.args[0]!r}", exc.args[0])

    try:
        n = len(raw_b)
    except TypeError:
        raise InputError("SchemaViolation", "best_to_others must be a sequence", "best_to_others")
    criteria = tuple(record.get("criteria") or (f"c{k + 1}" for k in range(n)))
    if len(criteria) < 2:
        raise InputError("TooFewCriteria", f"need at least 2 criteria, got {len(criteria)}", "criteria")
    if len(set(criteria)) != len(criteria):
        dupes = sorted({c for c in criteria if list(criteria).count(c) > 1})
        raise InputError("DuplicateLabels", f"duplicate criteria labels: {', '.join(dupes)}", "criteria")

    best_to_others = _as_float_vector(raw_b, "best_to_others", len(criteria))
    others_to_worst = _as_float_vector(raw_w, "others_to_worst", len(criteria))
    best = _resolve_index(best_raw, criteria, "best")
    worst = _resolve_index(worst_raw, criteria, "worst")
    scale_max = int(record.get("scale_max") or SAATY_SCALE_MAX)
    if scale_max < 1:
        raise InputError("SchemaViolation", f"scale_max must be >= 1, got {scale_max}", "scale_max")

    if best == worst:
        raise InputError(
            "BestEqualsWorst",
            f"best and worst both designate {criteria[best]!r}",
            "best",
        )
    if best_to_others[best] != 1:
        raise InputError(
            "DiagonalNotOne",
            f"best_to_others[{criteria[best]!r}] must be 1, got {best_to_others[best]:g}",
            f"best_to_others.{criteria[best]}",
        )
    if others_to_worst[worst] != 1:
        raise InputError(
            "DiagonalNotOne",
            f"others_to_worst[{criteria[worst]!r}] must be 1, got {others_to_worst[worst]:g}",
            f"others_to_worst.{criteria[worst]}",
        )
    if best_to_others[worst] != others_to_worst[best]:
        raise InputError(
            "BwMismatch",
            f"best_to_others[{criteria[worst]!r}] = {best_to_others[worst]:g} disagrees with "
            f"others_to_worst[{criteria[best]!r}] = {others_to_worst[best]:g}; both hold the "
            "best-to-worst comparison and must be equal",
            "best_to_others",
        )
    for name, vec in (("best_to_others", best_to_others), ("others_to_worst", others_to_worst)):
        for idx, value in enumerate(vec):
            if not (1 <= value <= scale_max) or value != value:
                raise InputError(
                    "OutOfScale",
                    f"{name}[{criteria[idx]!r}] = {value:g} outside [1, {scale_max}]",
                    f"{name}.{criteria[idx]}",
                )

    a_bw = best_to_others[worst]
    offenders = [
        criteria[i]
        for i in range(len(criteria))
        if i not in (best, worst) and (best_to_others[i] > a_bw or others_to_worst[i] > a_bw)
    ]
    if offenders:
        warnings.warn(
            "comparisons exceed the best-to-worst value for: " + ", ".join(offenders),
            DominanceWarning,
            stacklevel=2,
        )

    return PairwiseComparisonSystem(
        criteria=criteria,
        best=best,
        worst=worst,
        best_to_others=best_to_others,
        others_to_worst=others_to_worst,
        scale_max=scale_max,
    )


def compute_epsilons(pcs: PairwiseComparisonSystem) -> EpsilonTable:
    """Partition the middle criteria and compute all deviation bounds.

    For each middle criterion the bound is
    ``|best_to_others[i]*others_to_worst[i] - a_bw| / (best_to_others[i] + 2)``;
    for a pair with the product below and above ``a_bw`` respectively it is
    ``|prod_i - prod_j| / (best_to_others[i] + best_to_others[j] + 2)``.
    Pairs drawn from the same side of the partition are always dominated by
    one of their singles, so only cross pairs are stored.

    The pivot is the first entry attaining ``eta`` in a fixed scan order
    (d1 singles ascending, d2 singles ascending, then cross pairs in
    lexicographic order), which makes the choice deterministic; any
    attaining pivot yields the same weights.
    """
    ab, aw = pcs.best_to_others, pcs.others_to_worst
    a_bw = pcs.a_bw
    middle = pcs.middle
    if not middle:
        return EpsilonTable((), (), (), {}, {}, 0.0, Pivot(DEGENERATE))

    d1 = tuple(i for i in middle if ab[i] * aw[i] < a_bw)
    d2 = tuple(i for i in middle if ab[i] * aw[i] > a_bw)
    d3 = tuple(i for i in middle if ab[i] * aw[i] == a_bw)

    eps_single = {i: abs(ab[i] * aw[i] - a_bw) / (ab[i] + 2) for i in middle}
    eps_pair = {
        (i, j): abs(ab[i] * aw[i] - ab[j] * aw[j]) / (ab[i] + ab[j] + 2)
        for i in d1
        for j in d2
    }

    if not d1 and not d2:
        return EpsilonTable(d1, d2, d3, eps_single, eps_pair, 0.0, Pivot(CONSISTENT))

    scan: list[tuple[float, Pivot]] = []
    scan.extend((eps_single[i], Pivot(BEST_SIDE, i=i)) for i in d1)
    scan.extend((eps_single[j], Pivot(WORST_SIDE, j=j)) for j in d2)
    scan.extend((eps_pair[(i, j)], Pivot(MIXED, i=i, j=j)) for i in d1 for j in d2)

    eta = max(value for value, _ in scan)
    pivot = next(p for value, p in scan if value >= eta - ETA_TOL)
    return EpsilonTable(d1, d2, d3, eps_single, eps_pair, eta, pivot)


def pivot_epsilon(pcs: PairwiseComparisonSystem, pivot: Pivot) -> float:
    """Deviation bound belonging to ``pivot`` (zero for the trivial kinds)."""
    ab, aw, a_bw = pcs.best_to_others, pcs.others_to_worst, pcs.a_bw
    if pivot.kind == BEST_SIDE:
        return (a_bw - ab[pivot.i] * aw[pivot.i]) / (ab[pivot.i] + 2)
    if pivot.kind == WORST_SIDE:
        return (ab[pivot.j] * aw[pivot.j] - a_bw) / (ab[pivot.j] + 2)
    if pivot.kind == MIXED:
        return (ab[pivot.j] * aw[pivot.j] - ab[pivot.i] * aw[pivot.i]) / (
            ab[pivot.i] + ab[pivot.j] + 2
        )
    return 0.0


def free_weight_bound(pcs: PairwiseComparisonSystem, pivot: Pivot, eps: float, i: int) -> float:
    """Closed-form weight-to-worst ratio of a non-pivot middle criterion.

    This is the binding upper bound ``min{others_to_worst[i] + eps, R_i}``
    where the ratio ``R_i`` depends on the pivot kind.
    """
    ab, aw, a_bw = pcs.best_to_others, pcs.others_to_worst, pcs.a_bw
    if pivot.kind == BEST_SIDE:
        ratio = a_bw / ab[i]
    elif pivot.kind == WORST_SIDE:
        ratio = (a_bw + 2 * eps) / ab[i]
    elif pivot.kind == MIXED:
        prod = ab[pivot.i] * aw[pivot.i]
        ratio = (prod + (ab[pivot.i] + 2) * eps) / ab[i]
    else:
        raise ValueError(f"no free-weight bound for pivot kind {pivot.kind!r}")
    return min(aw[i] + eps, ratio)


def solve_with_pivot(
    pcs: PairwiseComparisonSystem, pivot: Pivot
) -> tuple[tuple[float, ...], float, float]:
    """Evaluate the closed-form weights for a given pivot.

    Returns ``(weights, sigma, eps)`` where ``eps`` is the pivot's own
    deviation bound.  Intended for diagnostics (e.g. confirming that tied
    pivots produce identical weights); :func:`solve_analytical` picks the
    pivot automatically.
    """
    ab, aw, a_bw = pcs.best_to_others, pcs.others_to_worst, pcs.a_bw
    b, w, n = pcs.best, pcs.worst, pcs.n
    weights = [0.0] * n

    if pivot.kind == DEGENERATE:
        sigma = 1 + a_bw
        weights[b] = a_bw / sigma
        weights[w] = 1 / sigma
        return tuple(weights), sigma, 0.0

    if pivot.kind == CONSISTENT:
        sigma = sum(aw)
        for k in range(n):
            weights[k] = aw[k] / sigma
        return tuple(weights), sigma, 0.0

    eps = pivot_epsilon(pcs, pivot)
    fixed = {k for k in (pivot.i, pivot.j) if k is not None}
    free = [k for k in pcs.middle if k not in fixed]
    bounds = {k: free_weight_bound(pcs, pivot, eps, k) for k in free}

    if pivot.kind == BEST_SIDE:
        sigma = 1 + a_bw + aw[pivot.i] + sum(bounds.values())
        weights[b] = (a_bw - eps) / sigma
        weights[pivot.i] = (aw[pivot.i] + eps) / sigma
    elif pivot.kind == WORST_SIDE:
        sigma = 1 + a_bw + aw[pivot.j] + sum(bounds.values())
        weights[b] = (a_bw + eps) / sigma
        weights[pivot.j] = (aw[pivot.j] - eps) / sigma
    else:  # MIXED
        best_num = ab[pivot.i] * aw[pivot.i] + (ab[pivot.i] + 1) * eps
        sigma = 1 + aw[pivot.i] + aw[pivot.j] + best_num + sum(bounds.values())
        weights[b] = best_num / sigma
        weights[pivot.i] = (aw[pivot.i] + eps) / sigma
        weights[pivot.j] = (aw[pivot.j] - eps) / sigma

    weights[w] = 1 / sigma
    for k in free:
        weights[k] = bounds[k] / sigma
    return tuple(weights), sigma, eps


def solve_analytical(pcs: PairwiseComparisonSystem) -> AnalyticalSolution:
    """Solve the linear BWM weight problem in closed form.

    The optimal weights sum to one, are strictly positive, and attain the
    smallest possible maximum deviation ``epsilon_star = eta / sigma``.
    A consistent system reproduces the exact ratio weights; a two-criterion
    system is satisfiable exactly and gets ``epsilon_star = 0``.
    """
    table = compute_epsilons(pcs)
    weights, sigma, eps = solve_with_pivot(pcs, table.pivot)
    epsilon_star = eps / sigma
    # The consistency index is defined from three criteria upward; a
    # two-criterion system is always exactly satisfiable, so its index is 0.
    ci = consistency_index(pcs.n, pcs.a_bw) if pcs.n >= 3 else 0.0
    cr = consistency_ratio(epsilon_star, ci)
    return AnalyticalSolution(
        criteria=pcs.criteria,
        weights=weights,
        sigma=sigma,
        epsilon_star=epsilon_star,
        pivot=table.pivot,
        ci=ci,
        cr=cr,
    )


def objective_value(
    pcs: PairwiseComparisonSystem, weights: Sequence[float], norm_tol: float = 1e-9
) -> float:
    """Maximum absolute deviation of a weight vector from the comparisons.

    Evaluates ``max{|w_b - best_to_others[i]*w_i|, |w_i - others_to_worst[i]*w_w|,
    |w_b - a_bw*w_w|}`` over the middle criteria.  The vector must be
    nonnegative and sum to one within ``norm_tol`` (raise the tolerance
    explicitly to score rounded, published weight vectors).
    """
    vec = [float(v) for v in weights]
    if len(vec) != pcs.n:
        raise InputError("NotNormalized", f"expected {pcs.n} weights, got {len(vec)}", "weights")
    if min(vec) < 0:
        raise InputError("NotNormalized", "weights must be nonnegative", "weights")
    if abs(sum(vec) - 1) > norm_tol:
        raise InputError(
            "NotNormalized",
            f"weights sum to {sum(vec):.12g}, not 1 within {norm_tol:g}",
            "weights",
        )
    ab, aw = pcs.best_to_others, pcs.others_to_worst
    wb, ww = vec[pcs.best], vec[pcs.worst]
    deviations = [abs(wb - pcs.a_bw * ww)]
    for i in pcs.middle:
        deviations.append(abs(wb - ab[i] * vec[i]))
        deviations.append(abs(vec[i] - aw[i] * ww))
    return max(deviations)


def consistency_index(n: int, a_bw: float) -> float:
    """Largest achievable optimal deviation for given size and best-to-worst value.

    Closed form: the maximum of two rational expressions (single-pivot and
    pair-pivot worst cases); for ``n == 3`` pair pivots cannot occur and the
    single-pivot expression alone applies.  Proven extremal for entries on
    the 1..9 scale; for other scales the same expressions are evaluated
    as-is at the given value.
    """
    if n < 3:
        raise InputError("UnsupportedN", f"consistency index needs n >= 3, got {n}", "n")
    if a_bw < 1:
        raise InputError("OutOfScale", f"a_bw must be >= 1, got {a_bw:g}", "a_bw")
    single = a_bw * (a_bw - 1) / (2 * a_bw**2 + (3 * n - 4) * a_bw + 2)
    if n == 3:
        return single
    paired = (a_bw**2 - 1) / (
        3 * a_bw**2 + 6 * a_bw + 7 + (n - 4) * min(a_bw**2 + a_bw + 2, 1 + 3 * a_bw)
    )
    return max(single, paired)


def consistency_ratio(epsilon_star: float, ci: float) -> float | None:
    """Ratio of achieved to worst-case deviation.

    Lands in [0, 1] whenever the comparisons respect best/worst dominance
    (no entry above the best-to-worst value); inputs that trip the
    dominance warning can exceed the index and hence 1.  A (numerically)
    zero deviation is perfectly consistent regardless of the index.  With a
    zero index and a positive deviation the ratio is undefined and ``None``
    is returned; this only occurs for best-to-worst value 1.
    """
    if epsilon_star <= 1e-12:
        return 0.0
    if ci == 0:
        return None
    return epsilon_star / ci


def worst_case_pcs(n: int, a_bw: int, variant: int) -> PairwiseComparisonSystem:
    """Extremal comparison system attaining the worst-case deviation.

    Three constructions, all with the first criterion best and the last
    worst: variant 1 puts the single under-approximating pivot at the
    second criterion, variant 2 the single over-approximating pivot there,
    and variant 3 (needs ``n >= 4``) combines both to force a pair pivot.
    The maximum of the available variants' optimal deviations equals
    :func:`consistency_index` at ``(n, a_bw)``.
    """
    if variant not in (1, 2, 3):
        raise InputError("VariantUnavailable", f"variant must be 1, 2 or 3, got {variant}", "variant")
    if n < 3 or (variant == 3 and n < 4):
        raise InputError(
            "VariantUnavailable",
            f"variant {variant} needs n >= {4 if variant == 3 else 3}, got {n}",
            "n",
        )
    ab = [float(a_bw)] * n
    aw = [1.0] * n
    ab[0] = 1.0
    aw[0] = float(a_bw)
    if variant == 1:
        ab[1] = 1.0
    elif variant == 2:
        ab[1] = float(a_bw)
        aw[1] = float(a_bw)
    else:
        ab[1] = 1.0
        ab[2] = float(a_bw)
        aw[2] = float(a_bw)
    return validate_pcs(
        {
            "criteria": [f"c{k + 1}" for k in range(n)],
            "best": 0,
            "worst": n - 1,
            "best_to_others": ab,
            "others_to_worst": aw,
            "scale_max": max(SAATY_SCALE_MAX, int(a_bw)),
        }
    )
