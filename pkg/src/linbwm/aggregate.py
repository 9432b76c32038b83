"""Hierarchical multi-expert aggregation of criteria weights.

A study ranks drivers grouped into categories.  Every expert supplies a
comparison system (solved in closed form) or an already computed weight
vector for the categories and for each category's drivers.  Global driver
weights are category weight times local weight per expert; final weights
are the arithmetic mean across experts; the ranking sorts final weights
descending with ties broken by input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .core import InputError, PairwiseComparisonSystem, solve_analytical

#: A study block: either a comparison system to solve or a precomputed
#: label-to-weight mapping passed through unchanged.
BlockInput = Union[PairwiseComparisonSystem, Mapping[str, float]]

WEIGHT_SUM_TOL = 1e-3  # published tables are 4-decimal roundings


@dataclass(frozen=True)
class GroupStudy:
    categories: tuple[str, ...]
    drivers: Mapping[str, tuple[str, ...]]
    experts: tuple[str, ...]
    category_input: Mapping[str, BlockInput]
    driver_input: Mapping[str, Mapping[str, BlockInput]]

    def driver_order(self) -> tuple[str, ...]:
        """All drivers in category order then per-category input order."""
        return tuple(d for cat in self.categories for d in self.drivers[cat])


@dataclass(frozen=True)
class BlockReport:
    """Solution figures for one solved comparison-system block.

    ``category`` is ``None`` for the category-level block.
    """

    expert: str
    category: str | None
    epsilon_star: float
    ci: float
    cr: float | None


@dataclass(frozen=True)
class AggregationResult:
    category_weights: Mapping[str, Mapping[str, float]]
    local_weights: Mapping[str, Mapping[str, float]]
    global_weights: Mapping[str, Mapping[str, float]]
    final_weights: Mapping[str, float]
    ranking: tuple[str, ...]
    block_reports: tuple[BlockReport, ...]


def rank(weights: Sequence[float]) -> tuple[int, ...]:
    """Indices sorted by descending weight; stable on ties."""
    return tuple(sorted(range(len(weights)), key=lambda k: -float(weights[k])))


def _resolve_block(
    block: BlockInput,
    expected: Sequence[str],
    where: str,
    reports: list[BlockReport],
    expert: str,
    category: str | None,
) -> dict[str, float]:
    if isinstance(block, PairwiseComparisonSystem):
        if set(block.criteria) != set(expected):
            raise InputError(
                "MissingBlock",
                f"{where}: comparison system covers {sorted(block.criteria)}, "
                f"expected exactly {sorted(expected)}",
                where,
            )
        solution = solve_analytical(block)
        reports.append(
            BlockReport(expert, category, solution.epsilon_star, solution.ci, solution.cr)
        )
        by_label = dict(zip(block.criteria, solution.weights))
        return {label: by_label[label] for label in expected}

    try:
        weights = {label: float(block[label]) for label in expected}
    except (KeyError, TypeError):
        missing = [label for label in expected if label not in block]
        raise InputError(
            "MissingBlock",
            f"{where}: weight vector lacks entries for {missing}",
            where,
        )
    extra = set(block) - set(expected)
    if extra:
        raise InputError(
            "MissingBlock",
            f"{where}: weight vector names unknown labels {sorted(extra)}",
            where,
        )
    if min(weights.values()) < 0:
        raise InputError("InvalidWeights", f"{where}: negative weight", where)
    total = sum(weights.values())
    if abs(total - 1) > WEIGHT_SUM_TOL:
        raise InputError(
            "InvalidWeights",
            f"{where}: weights sum to {total:.6g}, not 1 within {WEIGHT_SUM_TOL:g}",
            where,
        )
    return weights


def solve_study(study: GroupStudy) -> AggregationResult:
    """Aggregate a study into global, final weights and a ranking.

    Comparison-system blocks are solved (their deviation figures recorded
    per block); weight blocks pass through unchanged.
    """
    reports: list[BlockReport] = []

    category_weights: dict[str, dict[str, float]] = {}
    for expert in study.experts:
        if expert not in study.category_input:
            raise InputError(
                "MissingBlock", f"no category input for expert {expert!r}", f"category_input.{expert}"
            )
        category_weights[expert] = _resolve_block(
            study.category_input[expert],
            study.categories,
            f"category_input.{expert}",
            reports,
            expert,
            None,
        )

    local_weights: dict[str, dict[str, float]] = {}
    for expert in study.experts:
        blocks = study.driver_input.get(expert, {})
        local: dict[str, float] = {}
        for category in study.categories:
            if category not in blocks:
                raise InputError(
                    "MissingBlock",
                    f"no driver input for expert {expert!r}, category {category!r}",
                    f"driver_input.{expert}.{category}",
                )
            local.update(
                _resolve_block(
                    blocks[category],
                    study.drivers[category],
                    f"driver_input.{expert}.{category}",
                    reports,
                    expert,
                    category,
                )
            )
        local_weights[expert] = local

    order = study.driver_order()
    category_of = {d: cat for cat in study.categories for d in study.drivers[cat]}
    global_weights = {
        expert: {
            d: category_weights[expert][category_of[d]] * local_weights[expert][d]
            for d in order
        }
        for expert in study.experts
    }
    final_weights = {
        d: sum(global_weights[e][d] for e in study.experts) / len(study.experts)
        for d in order
    }
    ranking = tuple(order[k] for k in rank([final_weights[d] for d in order]))
    return AggregationResult(
        category_weights=category_weights,
        local_weights=local_weights,
        global_weights=global_weights,
        final_weights=final_weights,
        ranking=ranking,
        block_reports=tuple(reports),
    )
