"""Discrete-time stochastic SIS simulation.

Every day is a synchronous update that reads only the previous day's states.
A susceptible vertex with i infected neighbors makes up to i independent
uniform draws and becomes infected on the first draw below p_b. An infected
vertex makes one draw and recovers if it is below p_d. Vertices are visited in
ascending order, so a run is fully determined by its draw stream.

For averaging, every (seed vertex v, repetition k) pair gets its own stream,
seeded with the 64-bit state that ``numpy.random.SeedSequence(master_seed,
spawn_key=(v, k))`` derives. Runs therefore do not depend on each other or
on the order in which workers execute them.
"""

from __future__ import annotations

from typing import Protocol, Sequence
from concurrent.futures import Executor
from functools import partial
import logging
import random

from attr import dataclass
import attr
import numpy as np

from .epidemic import EpidemicParams
from .exceptions import InvalidParameterError, VertexRangeError
from .graph import Graph
from .util import map_ordered

logger = logging.getLogger(__name__)

SUSCEPTIBLE = 0
INFECTED = 1
MAX_SEED = 2**64

StateVector = Sequence[int]


class DrawStream(Protocol):
    def random(self) -> float:
        """Return a uniform draw from [0, 1)."""


@dataclass(frozen=True)
class SimulationConfig:
    params: EpidemicParams
    repetitions: int = 200
    days: int = 100
    master_seed: int = 0
    seed_vertices: tuple[int, ...] | None = attr.ib(
        default=None, converter=attr.converters.optional(tuple)
    )
    record_per_seed: bool = False

    def __attrs_post_init__(self) -> None:
        if self.repetitions < 1:
            raise InvalidParameterError(f"repetitions must be at least 1, got {self.repetitions}")
        if self.days < 1:
            raise InvalidParameterError(f"days must be at least 1, got {self.days}")
        if not 0 <= self.master_seed < MAX_SEED:
            raise InvalidParameterError(f"master seed must fit in 64 bits, got {self.master_seed}")
        if self.seed_vertices is not None and not self.seed_vertices:
            raise InvalidParameterError("seed vertex list is empty")

    def seeds_for(self, g: Graph) -> tuple[int, ...]:
        if self.seed_vertices is None:
            return tuple(range(g.n))
        for v in self.seed_vertices:
            if not 0 <= v < g.n:
                raise VertexRangeError(v, g.n)
        return self.seed_vertices


@dataclass(frozen=True, eq=False)
class EpidemicCurve:
    """Averaged infection counts. Index 0 of every array is day 1."""

    config: SimulationConfig
    seeds: tuple[int, ...]
    s_t: np.ndarray
    per_seed: np.ndarray | None = None

    @property
    def days(self) -> np.ndarray:
        return np.arange(1, len(self.s_t) + 1)


def stream_seed(master_seed: int, v: int, k: int) -> int:
    """The 64-bit seed of the draw stream for seed vertex ``v``, repetition ``k``."""
    sequence = np.random.SeedSequence(master_seed, spawn_key=(v, k))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_stream(master_seed: int, v: int, k: int) -> random.Random:
    return random.Random(stream_seed(master_seed, v, k))


def step(g: Graph, prev: StateVector, p: EpidemicParams, rng: DrawStream) -> list[int]:
    """Advance the epidemic by one day."""
    if len(prev) != g.n:
        raise ValueError(f"state vector has length {len(prev)}, graph has {g.n} vertices")
    draw = rng.random
    p_b, p_d = p.p_b, p.p_d
    infected_at = prev.__getitem__
    nxt = [SUSCEPTIBLE] * g.n
    for w, nbrs in enumerate(g.adjacency):
        if prev[w]:
            nxt[w] = SUSCEPTIBLE if draw() < p_d else INFECTED
            continue
        for _ in range(sum(map(infected_at, nbrs))):
            if draw() < p_b:
                nxt[w] = INFECTED
                break
    return nxt


def run_single(
    g: Graph, seed_vertex: int, p: EpidemicParams, days: int, rng: DrawStream
) -> list[int]:
    """Infected count per day for one run started from ``seed_vertex`` alone.

    Extinction is absorbing: once nobody is infected no vertex makes a draw,
    so the remaining days are filled with zeros directly.
    """
    if not 0 <= seed_vertex < g.n:
        raise VertexRangeError(seed_vertex, g.n)
    if days < 1:
        raise InvalidParameterError(f"days must be at least 1, got {days}")
    state = [SUSCEPTIBLE] * g.n
    state[seed_vertex] = INFECTED
    series = [1]
    while len(series) < days:
        state = step(g, state, p, rng)
        count = sum(state)
        series.append(count)
        if count == 0:
            series.extend([0] * (days - len(series)))
    return series


def _seed_totals(g: Graph, cfg: SimulationConfig, v: int) -> np.ndarray:
    totals = np.zeros(cfg.days, dtype=np.int64)
    for k in range(cfg.repetitions):
        totals += run_single(g, v, cfg.params, cfg.days, make_stream(cfg.master_seed, v, k))
    logger.debug("Seed vertex %d: mean final count %.3f", v, totals[-1] / cfg.repetitions)
    return totals


def simulate(g: Graph, cfg: SimulationConfig, executor: Executor | None = None) -> EpidemicCurve:
    """Average ``cfg.repetitions`` runs from every seed vertex into S_t.

    S_t is the mean infected count on day t over all (seed, repetition) runs;
    with ``record_per_seed`` the per-seed means S_{t,v} are kept as well. The
    integer totals are summed per seed before any division, so the result is
    bit-identical however the seeds are spread over ``executor``.
    """
    seeds = cfg.seeds_for(g)
    logger.info(
        "Simulating p_b=%g p_d=%g on %r: %d seeds x %d runs x %d days",
        cfg.params.p_b,
        cfg.params.p_d,
        g,
        len(seeds),
        cfg.repetitions,
        cfg.days,
    )
    totals = np.vstack(map_ordered(partial(_seed_totals, g, cfg), seeds, executor))
    s_t = totals.sum(axis=0) / (len(seeds) * cfg.repetitions)
    per_seed = totals / cfg.repetitions if cfg.record_per_seed else None
    return EpidemicCurve(cfg, seeds, s_t, per_seed)


def tail_mean(curve: EpidemicCurve, days: int = 10) -> float:
    """Mean of S_t over the last ``days`` days."""
    return float(curve.s_t[-days:].mean())


def seed_deviation(curve: EpidemicCurve) -> float:
    """Largest mean absolute gap between a per-seed curve S_{t,v} and S_t.

    A small value means the choice of patient zero barely matters.
    """
    if curve.per_seed is None:
        raise ValueError("curve was simulated without record_per_seed")
    return float(np.abs(curve.per_seed - curve.s_t).mean(axis=1).max())
