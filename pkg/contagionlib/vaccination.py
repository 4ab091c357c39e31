"""Vaccination strategies: remove k vertices to push λ₁ (and so the epidemic) down.

The batch method ranks vertices once and removes the top k together; the
greedy method removes one top vertex at a time and re-ranks the remainder.
Both are generic over the centrality measure used for ranking.
"""

from __future__ import annotations

from concurrent.futures import Executor
from enum import Enum
from functools import partial
import logging

from attr import dataclass
import numpy as np

from .centrality import compute_measure
from .exceptions import InvalidParameterError
from .graph import Graph, delete_vertices
from .spectral import DEFAULT_SETTINGS, EigenSettings, largest_eigenvalue
from .util import map_ordered
from .vectors import TIE_TOLERANCE, Measure, rank

logger = logging.getLogger(__name__)


class Method(Enum):
    BATCH = "batch"
    GREEDY = "greedy"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class VaccinationReport:
    """Outcome of one vaccination run.

    ``removed`` holds original vertex labels in removal order and
    ``lambda1_trajectory[i]`` is λ₁ after the first ``i`` of them are gone, so
    the trajectory has ``k + 1`` entries starting with λ₁(G).
    """

    method: Method
    measure: Measure
    k: int
    removed: tuple[str, ...]
    lambda1_trajectory: tuple[float, ...]
    tie_seed: int | None

    @property
    def final_lambda1(self) -> float:
        return self.lambda1_trajectory[-1]


@dataclass(frozen=True)
class MethodSummary:
    mean: float
    std: float
    min: float
    max: float


@dataclass(frozen=True)
class ComparisonSummary:
    measure: Measure
    k: int
    trials: int
    master_seed: int
    tie_seeds: tuple[int, ...]
    batch: MethodSummary
    greedy: MethodSummary
    greedy_wins: int

    @classmethod
    def from_trials(
        cls, measure: Measure, k: int, master_seed: int, pairs: list[tuple[VaccinationReport, ...]]
    ) -> ComparisonSummary:
        def summarize(finals: np.ndarray) -> MethodSummary:
            return MethodSummary(
                float(finals.mean()), float(finals.std()), float(finals.min()), float(finals.max())
            )

        batch = np.array([b.final_lambda1 for b, _ in pairs])
        greedy = np.array([g.final_lambda1 for _, g in pairs])
        return cls(
            measure=measure,
            k=k,
            trials=len(pairs),
            master_seed=master_seed,
            tie_seeds=tuple(b.tie_seed for b, _ in pairs),
            batch=summarize(batch),
            greedy=summarize(greedy),
            greedy_wins=int(np.count_nonzero(greedy <= batch + TIE_TOLERANCE)),
        )


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k < g.n:
        raise InvalidParameterError(f"k must satisfy 1 <= k < {g.n}, got {k}")


def _lambda1(g: Graph, settings: EigenSettings) -> float:
    return largest_eigenvalue(g, settings).lambda1


def _tie_rng(tie_seed: int | None) -> np.random.Generator | None:
    return None if tie_seed is None else np.random.default_rng(tie_seed)


def vaccinate_batch(
    g: Graph,
    f: Measure,
    k: int,
    tie_seed: int | None = 0,
    settings: EigenSettings = DEFAULT_SETTINGS,
    executor: Executor | None = None,
) -> VaccinationReport:
    """Remove the k highest-ranked vertices of G at once.

    When the cut falls inside a group of tied vertices, the remaining slots
    are filled by a uniform random choice from that group only; vertices
    ranked strictly above the cut are always taken. With ``tie_seed=None``
    the lowest-numbered vertices of the group are taken instead. The
    trajectory reports λ₁ after each prefix of the chosen set in descending
    order of ``f``.

    Raises:
        InvalidParameterError: k is not in ``1..n-1``.
    """
    _check_k(g, k)
    rng = _tie_rng(tie_seed)
    ranking = rank(compute_measure(g, f, settings, strict=False, executor=executor))
    chosen: list[int] = []
    for group in ranking.groups:
        slots = k - len(chosen)
        if len(group) <= slots:
            chosen.extend(group)
        elif rng is None:
            lowest = set(sorted(group)[:slots])
            chosen.extend(v for v in group if v in lowest)
        else:
            picked = rng.choice(len(group), size=slots, replace=False)
            chosen.extend(group[i] for i in sorted(picked))
            logger.debug("Cut falls in a tie group of %d, picked %d at random", len(group), slots)
        if len(chosen) == k:
            break

    trajectory = [_lambda1(g, settings)]
    for i in range(1, k + 1):
        trajectory.append(_lambda1(delete_vertices(g, chosen[:i]), settings))
    report = VaccinationReport(
        Method.BATCH, f, k, tuple(g.labels[v] for v in chosen), tuple(trajectory), tie_seed
    )
    logger.debug("Batch %s removal of %s: λ₁ %s", f, report.removed, trajectory)
    return report


def vaccinate_greedy(
    g: Graph,
    f: Measure,
    k: int,
    tie_seed: int | None = 0,
    settings: EigenSettings = DEFAULT_SETTINGS,
    executor: Executor | None = None,
) -> VaccinationReport:
    """Remove one top-ranked vertex per round, recomputing ``f`` on what remains.

    Ties for the top spot are broken uniformly at random, or by taking the
    lowest-numbered vertex when ``tie_seed`` is None. Vertex numbering
    follows the input order throughout, since deletions keep the relative
    order. Once G - S is disconnected, closeness and eigenvector centrality
    fall back to their component-wise forms.

    Raises:
        InvalidParameterError: k is not in ``1..n-1``.
    """
    _check_k(g, k)
    rng = _tie_rng(tie_seed)
    current = g
    removed: list[str] = []
    trajectory = [_lambda1(g, settings)]
    for round_no in range(1, k + 1):
        top = rank(compute_measure(current, f, settings, strict=False, executor=executor))
        best = top.groups[0]
        if len(best) == 1:
            v = best[0]
        elif rng is None:
            v = min(best)
        else:
            v = best[int(rng.integers(len(best)))]
        removed.append(current.labels[v])
        current = delete_vertices(current, [v])
        trajectory.append(_lambda1(current, settings))
        logger.debug(
            "Greedy round %d: removed %s (%d tied), λ₁ = %.6f",
            round_no,
            removed[-1],
            len(best),
            trajectory[-1],
        )
    return VaccinationReport(Method.GREEDY, f, k, tuple(removed), tuple(trajectory), tie_seed)


def trial_seed(master_seed: int, trial: int) -> int:
    sequence = np.random.SeedSequence(master_seed, spawn_key=(trial,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def _run_trial(
    g: Graph, f: Measure, k: int, settings: EigenSettings, tie_seed: int
) -> tuple[VaccinationReport, VaccinationReport]:
    return (
        vaccinate_batch(g, f, k, tie_seed, settings),
        vaccinate_greedy(g, f, k, tie_seed, settings),
    )


def compare_methods(
    g: Graph,
    f: Measure,
    k: int,
    trials: int = 20,
    master_seed: int = 0,
    settings: EigenSettings = DEFAULT_SETTINGS,
    executor: Executor | None = None,
) -> ComparisonSummary:
    """Run both methods ``trials`` times with derived tie seeds and summarize final λ₁.

    Trial ``i`` uses the same tie seed for both methods. Trials are spread
    over ``executor`` when one is given; the summary does not depend on it.
    """
    if trials < 1:
        raise InvalidParameterError(f"trials must be at least 1, got {trials}")
    _check_k(g, k)
    seeds = [trial_seed(master_seed, i) for i in range(trials)]
    pairs = map_ordered(partial(_run_trial, g, f, k, settings), seeds, executor)
    summary = ComparisonSummary.from_trials(f, k, master_seed, pairs)
    logger.info(
        "%s, k=%d over %d trials: batch %.4f ± %.4f, greedy %.4f ± %.4f",
        f,
        k,
        trials,
        summary.batch.mean,
        summary.batch.std,
        summary.greedy.mean,
        summary.greedy.std,
    )
    return summary
