"""Seeded Monte Carlo simulation of DD, CPN and greedy PPM receivers.

Every trial derives its own generator from (master_seed, trial_index), so the
result is bit-identical no matter how trials are chunked across workers.  Per
trial the draw order is fixed: the input symbol, then one uniform per slot,
then any tie-break draws required by the decision rule.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, List, Optional

import numpy as np

from .channel import ChannelParams, ClickModel
from .errors import ConfigError
from .greedy import (GreedyAction, PolicyTable, RATIO_MAX, RATIO_MIN,
                     clamp_ratio, lookup_index)


@dataclass(frozen=True)
class SimConfig:
    trials: int
    master_seed: int
    receiver: str  # 'dd' | 'cpn' | 'greedy'
    beta: Optional[float] = None       # CPN nulling displacement
    beta_in: Optional[float] = None    # greedy initial displacement
    table: Optional[PolicyTable] = None
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.master_seed < 0:
            raise ConfigError("master_seed must be a non-negative integer")
        if self.receiver not in ("dd", "cpn", "greedy"):
            raise ConfigError(f"unknown receiver {self.receiver!r}")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")


@dataclass(frozen=True)
class SimResult:
    p_error_hat: float
    sigma: float          # Bernoulli standard error sqrt(p(1-p)/T)
    sigma_sample: float   # sample-mean standard deviation (T-1 denominator)
    trials: int

    @property
    def errorbar(self) -> float:
        return 3.0 * self.sigma


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([master_seed, trial])


def dd_decide(click_pattern, rng: np.random.Generator) -> int:
    """DD rule: unique click wins; ties resolved uniformly among clicked
    slots; an all-silent frame guesses uniformly over all slots."""
    clicked = [i + 1 for i, c in enumerate(click_pattern) if c]
    if len(clicked) == 1:
        return clicked[0]
    if clicked:
        return clicked[int(rng.integers(len(clicked)))]
    return int(rng.integers(len(click_pattern))) + 1


def cpn_decide(m: int, beta: float, outcome: Callable[[int, float], bool],
               rng: np.random.Generator) -> int:
    """CPN rule: null slots until the first no-click at slot k, then direct
    detection of the rest; DD rule applies to post-switchover clicks."""
    if beta < 0.0:
        raise ValueError(f"beta must be >= 0, got {beta}")
    switchover = None
    for slot in range(1, m + 1):
        if not outcome(slot, beta):
            switchover = slot
            break
    if switchover is None:
        return int(rng.integers(m)) + 1
    post_clicked = [slot for slot in range(switchover + 1, m + 1)
                    if outcome(slot, 0.0)]
    if not post_clicked:
        return switchover
    if len(post_clicked) == 1:
        return post_clicked[0]
    return post_clicked[int(rng.integers(len(post_clicked)))]


def _dd_trial(m: int, pbar0: float, qbar0: float,
              rng: np.random.Generator) -> bool:
    x = int(rng.integers(1, m + 1))
    u = rng.random(m)
    pattern = [u[i] < (pbar0 if i + 1 == x else qbar0) for i in range(m)]
    return dd_decide(pattern, rng) != x


def _cpn_trial(m: int, beta: float, model: ClickModel,
               rng: np.random.Generator) -> bool:
    x = int(rng.integers(1, m + 1))
    u = rng.random(m)

    def outcome(slot: int, b: float) -> bool:
        no_click = model.p(b) if slot == x else model.q(b)
        return u[slot - 1] < 1.0 - no_click

    return cpn_decide(m, beta, outcome, rng) != x


class _GreedyEngine:
    """Policy table unpacked into flat arrays for the per-trial inner loop."""

    def __init__(self, m: int, beta_in: float, table: PolicyTable,
                 model: ClickModel):
        self.m = m
        self.log_lo = table.log_lo
        self.log_step = table.log_step
        self.count = len(table.ratio_grid)
        self.is_a = np.array([o == "A" for o in table.options])
        q = np.array([model.q(float(b)) for b in table.betas])
        p = np.array([model.p(float(b)) for b in table.betas])
        self.pulse_click = 1.0 - p
        self.empty_click = 1.0 - q
        self.ratio_on_update = np.array([
            clamp_ratio(1.0 - qi, 1.0 - pi) if a else clamp_ratio(qi, pi)
            for qi, pi, a in zip(q, p, self.is_a)])
        self.beta_in = beta_in
        q_in = model.q(beta_in)
        p_in = model.p(beta_in)
        self.in_pulse_click = 1.0 - p_in
        self.in_empty_click = 1.0 - q_in
        self.ratio_in_click = clamp_ratio(1.0 - q_in, 1.0 - p_in)
        self.ratio_in_noclick = clamp_ratio(q_in, p_in)

    def trial(self, rng: np.random.Generator) -> bool:
        m = self.m
        x = int(rng.integers(1, m + 1))
        u = rng.random(m)
        clicked = u[0] < (self.in_pulse_click if x == 1 else self.in_empty_click)
        estimate = 1
        ratio = self.ratio_in_click if clicked else self.ratio_in_noclick
        log_lo = self.log_lo
        log_step = self.log_step
        top = self.count - 1
        for slot in range(2, m + 1):
            i = math.ceil((math.log10(ratio) - log_lo) / log_step - 0.5)
            if i < 0:
                i = 0
            elif i > top:
                i = top
            click_prob = (self.pulse_click[i] if slot == x
                          else self.empty_click[i])
            clicked = u[slot - 1] < click_prob
            if clicked == self.is_a[i]:  # A updates on click, B on no-click
                estimate = slot
                ratio = self.ratio_on_update[i]
        return estimate != x


def _count_errors(params: ChannelParams, config: SimConfig,
                  start: int, stop: int) -> int:
    model = params.click_model()
    m = params.m
    errors = 0
    if config.receiver == "dd":
        pbar0 = 1.0 - model.p(0.0)
        qbar0 = 1.0 - model.q(0.0)
        for i in range(start, stop):
            errors += _dd_trial(m, pbar0, qbar0,
                                trial_rng(config.master_seed, i))
    elif config.receiver == "cpn":
        beta = params.alpha if config.beta is None else config.beta
        for i in range(start, stop):
            errors += _cpn_trial(m, beta, model,
                                 trial_rng(config.master_seed, i))
    else:
        engine = _GreedyEngine(m, config.beta_in, config.table, model)
        for i in range(start, stop):
            errors += engine.trial(trial_rng(config.master_seed, i))
    return errors


def simulate(params: ChannelParams, config: SimConfig) -> SimResult:
    """Run the configured receiver for ``config.trials`` frames."""
    if config.receiver == "greedy":
        if config.table is None:
            raise ConfigError("greedy simulation requires a PolicyTable")
        if config.beta_in is None:
            raise ConfigError("greedy simulation requires beta_in")
    trials = config.trials
    if config.workers > 1 and trials >= 4 * config.workers:
        bounds = np.linspace(0, trials, 4 * config.workers + 1, dtype=int)
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            counts = pool.map(_count_errors,
                              [params] * (len(bounds) - 1),
                              [config] * (len(bounds) - 1),
                              bounds[:-1], bounds[1:])
            errors = sum(counts)
    else:
        errors = _count_errors(params, config, 0, trials)
    p_hat = errors / trials
    var = p_hat * (1.0 - p_hat)
    sigma = math.sqrt(var / trials)
    sigma_sample = math.sqrt(var / (trials - 1)) if trials > 1 else 0.0
    return SimResult(p_error_hat=p_hat, sigma=sigma,
                     sigma_sample=sigma_sample, trials=trials)
