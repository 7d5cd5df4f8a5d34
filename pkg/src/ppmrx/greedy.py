"""Greedy receiver core: revision-ratio state, A/B options, policy table.

The receiver's entire memory is a slot estimate plus the revision ratio
r = w_future / w_est, the factor converting the current estimate's pulse
likelihood into an empty-slot likelihood.  Per slot the receiver picks one of
two rules -- option A keeps the estimate on a no-click and updates on a click,
option B the reverse -- together with the displacement maximizing the expected
gain of the correct-estimate probability.  Since the choice depends only on r,
it can be precomputed over a log-spaced ratio grid and replayed by lookup.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np

from .channel import ClickModel
from .optimize import GridConfig, ScalarSearchConfig, maximize_scalar, search_interval

RATIO_MIN = 1e-16
RATIO_MAX = 1e16


@dataclass(frozen=True)
class GreedyState:
    estimate: int
    ratio: float


@dataclass(frozen=True)
class GreedyAction:
    option: str  # 'A' or 'B'
    beta: float


def clamp_ratio(num: float, den: float) -> float:
    """num/den clamped to the lookup-table domain; degenerate branches pin
    to the bounds (those branches carry zero probability)."""
    if den <= 0.0:
        return RATIO_MAX
    if num <= 0.0:
        return RATIO_MIN
    return min(RATIO_MAX, max(RATIO_MIN, num / den))


def branch_multipliers(r: float, beta: float,
                       model: ClickModel) -> Tuple[float, float]:
    """Expected correct-probability multipliers (p_A, p_B) for both options.

    p_A = q_beta + r * pbar_beta (keep on no-click, update on click);
    p_B = r * p_beta + qbar_beta (update on no-click, keep on click).
    These are gains relative to the current correct probability and may
    exceed 1.
    """
    q = model.q(beta)
    p = model.p(beta)
    return q + r * (1.0 - p), r * p + (1.0 - q)


@lru_cache(maxsize=1 << 20)
def _choice_cached(r: float, model: ClickModel,
                   search: ScalarSearchConfig) -> GreedyAction:
    beta_a, val_a = maximize_scalar(
        lambda b: model.q(b) + r * (1.0 - model.p(b)), search)
    beta_b, val_b = maximize_scalar(
        lambda b: r * model.p(b) + (1.0 - model.q(b)), search)
    # beta -> inf asymptotes: p_A -> r, p_B -> 1 (clamped to the interval end)
    if r > val_a:
        beta_a, val_a = search.hi, r
    if 1.0 > val_b:
        beta_b, val_b = search.hi, 1.0
    if val_a > val_b:
        return GreedyAction("A", beta_a)
    if val_b > val_a:
        return GreedyAction("B", beta_b)
    # exact tie: lower displacement energy wins, then option A
    if beta_a <= beta_b:
        return GreedyAction("A", beta_a)
    return GreedyAction("B", beta_b)


def greedy_choice(r: float, model: ClickModel,
                  search: Optional[ScalarSearchConfig] = None) -> GreedyAction:
    """Locally optimal (option, displacement) for revision ratio ``r``.

    Depends only on (r, model, search) -- never on the slot index or the
    modulation order -- hence cacheable across frames and PPM orders.
    """
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError(f"revision ratio must be finite and positive, got {r}")
    if search is None:
        search = search_interval(getattr(model, "alpha", 0.0))
    return _choice_cached(r, model, search)


def initial_state(beta_in: float, clicked: bool, model: ClickModel) -> GreedyState:
    """State after the first slot, measured with the input displacement."""
    if beta_in < 0.0:
        raise ValueError(f"beta_in must be >= 0, got {beta_in}")
    q = model.q(beta_in)
    p = model.p(beta_in)
    if clicked:
        ratio = clamp_ratio(1.0 - q, 1.0 - p)
    else:
        ratio = clamp_ratio(q, p)
    return GreedyState(estimate=1, ratio=ratio)


def update_state(state: GreedyState, action: GreedyAction, clicked: bool,
                 slot: int, model: ClickModel) -> GreedyState:
    """Advance the receiver state after measuring ``slot``."""
    q = model.q(action.beta)
    p = model.p(action.beta)
    if action.option == "A":
        if clicked:
            return GreedyState(estimate=slot,
                               ratio=clamp_ratio(1.0 - q, 1.0 - p))
        return state
    if action.option == "B":
        if clicked:
            return state
        return GreedyState(estimate=slot, ratio=clamp_ratio(q, p))
    raise ValueError(f"unknown option {action.option!r}")


@dataclass(frozen=True, eq=False)
class PolicyTable:
    """Precomputed greedy policy sampled over a log-spaced ratio grid."""

    ratio_grid: np.ndarray
    options: np.ndarray  # dtype '<U1'
    betas: np.ndarray
    alpha: float
    n_b: float
    delta: float

    def __post_init__(self):
        if len(self.ratio_grid) < 2:
            raise ValueError("policy table needs at least 2 grid points")
        if not (len(self.ratio_grid) == len(self.options) == len(self.betas)):
            raise ValueError("grid/action length mismatch")
        if np.any(np.diff(self.ratio_grid) <= 0.0):
            raise ValueError("ratio grid must be strictly increasing")

    @property
    def log_lo(self) -> float:
        return math.log10(float(self.ratio_grid[0]))

    @property
    def log_step(self) -> float:
        return ((math.log10(float(self.ratio_grid[-1])) - self.log_lo)
                / (len(self.ratio_grid) - 1))

    def save(self, path) -> None:
        with open(path, "w", newline="") as fh:
            self.write(fh)

    def write(self, fh) -> None:
        fh.write(f"# policy-table v1 alpha={self.alpha!r} nb={self.n_b!r} "
                 f"delta={self.delta!r} count={len(self.ratio_grid)}\n")
        fh.write("r,option,beta\n")
        for r, opt, beta in zip(self.ratio_grid, self.options, self.betas):
            fh.write(f"{r:.9g},{opt},{beta:.9g}\n")

    @classmethod
    def load(cls, path) -> "PolicyTable":
        with open(path) as fh:
            return cls.read(fh)

    @classmethod
    def read(cls, fh) -> "PolicyTable":
        header = fh.readline().strip()
        if not header.startswith("# policy-table v1 "):
            raise ValueError("not a policy table file")
        meta = dict(tok.split("=", 1) for tok in header.split()[3:])
        fh.readline()  # column header
        rows = [line.strip().split(",") for line in fh if line.strip()]
        return cls(
            ratio_grid=np.array([float(r[0]) for r in rows]),
            options=np.array([r[1] for r in rows]),
            betas=np.array([float(r[2]) for r in rows]),
            alpha=float(meta["alpha"]),
            n_b=float(meta["nb"]),
            delta=float(meta["delta"]),
        )


def build_policy_table(model: ClickModel,
                       grid: Optional[GridConfig] = None,
                       search: Optional[ScalarSearchConfig] = None) -> PolicyTable:
    """Tabulate greedy_choice over ``grid.count`` log-spaced ratios."""
    if grid is None:
        grid = GridConfig(lo=RATIO_MIN, hi=RATIO_MAX, count=1000)
    if search is None:
        search = search_interval(getattr(model, "alpha", 0.0))
    ratios = np.logspace(math.log10(grid.lo), math.log10(grid.hi), grid.count)
    actions = [greedy_choice(float(r), model, search) for r in ratios]
    return PolicyTable(
        ratio_grid=ratios,
        options=np.array([a.option for a in actions]),
        betas=np.array([a.beta for a in actions]),
        alpha=getattr(model, "alpha", float("nan")),
        n_b=getattr(model, "n_b", float("nan")),
        delta=getattr(model, "delta", float("nan")),
    )


def lookup(table: PolicyTable, r: float) -> GreedyAction:
    """Nearest-in-log-space table entry; out-of-range ratios clamp to the
    end entries; the geometric midpoint ties to the lower index."""
    if not (r > 0.0):
        raise ValueError(f"revision ratio must be positive, got {r}")
    i = lookup_index(table, r)
    return GreedyAction(option=str(table.options[i]), beta=float(table.betas[i]))


def lookup_index(table: PolicyTable, r: float) -> int:
    pos = (math.log10(r) - table.log_lo) / table.log_step
    i = math.ceil(pos - 0.5)  # round half down: midpoint ties to lower index
    return min(len(table.ratio_grid) - 1, max(0, i))


def run_frame(m: int, beta_in: float, table: PolicyTable,
              outcomes: Callable[[int, float], bool],
              model: ClickModel) -> int:
    """Demodulate one frame; ``outcomes(slot, beta)`` yields the click bit."""
    return run_frame_with_policy(m, beta_in, lambda r: lookup(table, r),
                                 outcomes, model)


def run_frame_with_policy(m: int, beta_in: float,
                          policy: Callable[[float], GreedyAction],
                          outcomes: Callable[[int, float], bool],
                          model: ClickModel) -> int:
    """run_frame with an arbitrary ratio -> action policy (e.g. exact choice)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    state = initial_state(beta_in, outcomes(1, beta_in), model)
    for slot in range(2, m + 1):
        action = policy(state.ratio)
        clicked = outcomes(slot, action.beta)
        state = update_state(state, action, clicked, slot, model)
    return state.estimate


__all__ = [
    "GreedyState", "GreedyAction", "PolicyTable",
    "branch_multipliers", "greedy_choice", "initial_state", "update_state",
    "build_policy_table", "lookup", "lookup_index", "run_frame",
    "run_frame_with_policy", "clamp_ratio", "RATIO_MIN", "RATIO_MAX",
]
