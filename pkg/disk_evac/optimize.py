"""
Local search over cut parameters.

The objective is the certified worst case, which is piecewise smooth with
kinks wherever the maximizing candidate changes, so only function values are
used: a compass search polls +/- step on every coordinate and halves the
steps when nothing improves.

Search configuration is JSON, missing keys take the defaults:

    {"initial_step": {"p": 0.01, "alpha": 0.01, "d": 0.01},
     "shrink": 0.5, "min_step": 1e-7, "max_evals": 50000,
     "objective_grid": 10000, "final_grid": 1000000}
"""
from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .analysis import SpecialPointError, worst_case
from .meeting import MeetingError
from .strategy import InvalidParams, StrategyParams, validate

logger = logging.getLogger(__name__)

COORDINATES = ('p', 'alpha', 'd')


@dataclass(frozen=True)
class SearchConfig:

    initial_step: Tuple[float, ...] = (1e-2, 1e-2, 1e-2)
    shrink: float = 0.5
    min_step: float = 1e-7
    max_evals: int = 50000
    objective_grid: int = 10000
    final_grid: int = 1000000
    threads: int = 1

    def steps(self, k: int) -> List[float]:
        """Initial steps for all 3k coordinates."""
        step = list(self.initial_step)
        if len(step) == 3:
            return step * k
        if len(step) != 3 * k:
            raise ValueError('initial_step has {0} entries, expected 3 or {1}'.format(len(step), 3 * k))
        return step

    @classmethod
    def from_dict(cls, data: dict) -> 'SearchConfig':
        kwargs = {}
        for name in ('shrink', 'min_step'):
            if name in data:
                kwargs[name] = float(data[name])
        for name in ('max_evals', 'objective_grid', 'final_grid', 'threads'):
            if name in data:
                kwargs[name] = int(data[name])
        step = data.get('initial_step')
        if isinstance(step, dict):
            default = cls.initial_step
            kwargs['initial_step'] = tuple(
                float(step.get(name, default[i])) for i, name in enumerate(COORDINATES)
            )
        elif step is not None:
            kwargs['initial_step'] = tuple(float(s) for s in step)
        config = cls(**kwargs)
        if not 0.0 < config.shrink < 1.0:
            raise ValueError('shrink {0!r} not in (0, 1)'.format(config.shrink))
        if config.min_step <= 0.0 or any(s <= 0.0 for s in config.initial_step):
            raise ValueError('steps must be positive')
        return config


def load_config(fo) -> SearchConfig:
    return SearchConfig.from_dict(json.load(fo))


def objective(params: StrategyParams, grid: int = 10000, threads: int = 1) -> float:
    """Certified worst case, +inf for parameters outside the family."""
    if validate(params):
        return math.inf
    try:
        return worst_case(params, grid=grid, scan_grid=0, threads=threads).certified_max
    except (SpecialPointError, MeetingError, InvalidParams) as ex:
        logger.debug('objective undefined for %s: %s', params.vector(), ex)
        return math.inf


@dataclass(frozen=True)
class Evaluation:

    index: int
    vector: Tuple[float, ...]
    value: float


@dataclass
class SearchResult:

    params: StrategyParams
    value: float
    evals: int
    history: List[Evaluation] = field(default_factory=list)
    certified: Optional[float] = None

    def write_log(self, fo):
        """The run log as CSV: eval index, the 3k coordinates, objective."""
        k = self.params.k
        writer = csv.writer(fo, lineterminator='\n')
        writer.writerow(
            ['eval'] + ['{0}{1}'.format(c, i) for i in range(1, k + 1) for c in COORDINATES]
            + ['objective']
        )
        for e in self.history:
            writer.writerow([e.index] + ['%.17g' % v for v in e.vector] + ['%.17g' % e.value])


def _polls(vector: Sequence[float], steps: Sequence[float]) -> List[Tuple[float, ...]]:
    out = []
    for i, step in enumerate(steps):
        for sign in (1.0, -1.0):
            candidate = list(vector)
            candidate[i] += sign * step
            out.append(tuple(candidate))
    return out


def pattern_search(seed: StrategyParams, config: SearchConfig = SearchConfig()) -> SearchResult:
    """
    Compass search from `seed`. Polls are taken in coordinate order (submitted
    together when `config.threads` > 1) and the first one that strictly
    improves the incumbent is accepted, so serial and threaded runs agree. The
    incumbent never gets worse.
    """
    best = tuple(seed.vector())
    value = objective(seed, config.objective_grid, config.threads)
    history = [Evaluation(0, best, value)]
    evals = 1
    if not seed.k:
        logger.info('nothing to search for k=0, objective %s', value)
        return SearchResult(seed, value, evals, history, value)
    if not math.isfinite(value):
        raise InvalidParams(['seed objective is not finite'])
    steps = config.steps(seed.k)

    def evaluate(vector):
        return objective(StrategyParams.from_vector(vector), config.objective_grid)

    executor = ThreadPoolExecutor(max_workers=config.threads) if config.threads > 1 else None
    try:
        while max(steps) >= config.min_step and evals < config.max_evals:
            polls = [
                v for v, s in zip(_polls(best, steps), [s for s in steps for _ in (0, 1)])
                if s >= config.min_step
            ][:config.max_evals - evals]
            # polls after the first improvement are discarded, not counted
            values = executor.map(evaluate, polls) if executor else map(evaluate, polls)
            improved = None
            for vector, v in zip(polls, values):
                history.append(Evaluation(evals, vector, v))
                evals += 1
                if v < value:
                    improved = (vector, v)
                    break
            if improved:
                best, value = improved
                logger.info('eval %s: objective %s', evals, value)
            else:
                steps = [s * config.shrink for s in steps]
                logger.debug('no improvement, steps now %s', max(steps))
    finally:
        if executor:
            executor.shutdown()
    params = StrategyParams.from_vector(best)
    certified = worst_case(
        params, grid=config.final_grid, scan_grid=0, threads=config.threads,
    ).certified_max
    logger.info('search done after %s evals, certified %s', evals, certified)
    return SearchResult(params, value, evals, history, certified)
