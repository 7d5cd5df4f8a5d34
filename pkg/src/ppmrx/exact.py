"""Exact and numerically optimal receiver evaluation.

``greedy_exact_error`` unrolls the full binary decision tree the greedy
receiver traverses (cost 2^M, capped), carrying the pair of unnormalized
hypothesis weights (w_est, w_future) per node.  ``optimal_adaptive_error``
solves for the best adaptive displacement policy by backward induction over
the scalar state s = w_est / w_future; ``brute_force_tree_error`` exhaustively
optimizes the unrestricted displacement tree for M <= 3 and serves as the
oracle validating the scalar-state reduction.
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .channel import ClickModel
from .errors import CapacityError, NumericalDiagnosticError
from .greedy import clamp_ratio, greedy_choice
from .optimize import GridConfig, ScalarSearchConfig, maximize_scalar, search_interval

EXACT_TREE_CAP = 20  # ~10^6 leaves; beyond this Monte Carlo is authoritative


def _default_search(model: ClickModel,
                    search: Optional[ScalarSearchConfig]) -> ScalarSearchConfig:
    if search is not None:
        return search
    return search_interval(getattr(model, "alpha", 0.0))


def greedy_exact_error(m: int, beta_in: float, model: ClickModel,
                       search: Optional[ScalarSearchConfig] = None,
                       cap: int = EXACT_TREE_CAP) -> float:
    """Exact greedy-receiver error probability by full tree recursion."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m > cap:
        raise CapacityError(
            f"exact tree for M={m} exceeds cap {cap}; use Monte Carlo")
    if m == 1:
        return 0.0
    search = _default_search(model, search)

    def node(w_est: float, w_future: float, r: float, rem: int) -> float:
        if rem == 0:
            return w_est
        if w_est == 0.0 and w_future == 0.0:
            return 0.0
        act = greedy_choice(r, model, search)
        q = model.q(act.beta)
        p = model.p(act.beta)
        qbar = 1.0 - q
        pbar = 1.0 - p
        if act.option == "A":
            keep = node(w_est * q, w_future * q, r, rem - 1)
            upd = node(w_future * pbar, w_future * qbar,
                       clamp_ratio(qbar, pbar), rem - 1)
        else:
            upd = node(w_future * p, w_future * q,
                       clamp_ratio(q, p), rem - 1)
            keep = node(w_est * qbar, w_future * qbar, r, rem - 1)
        return keep + upd

    p_in = model.p(beta_in)
    q_in = model.q(beta_in)
    p_c = (node(p_in / m, q_in / m, clamp_ratio(q_in, p_in), m - 1)
           + node((1.0 - p_in) / m, (1.0 - q_in) / m,
                  clamp_ratio(1.0 - q_in, 1.0 - p_in), m - 1))
    return min(1.0, max(0.0, 1.0 - p_c))


def beta_in_candidates(model: ClickModel,
                       search: Optional[ScalarSearchConfig] = None,
                       count: int = 64) -> List[float]:
    """Initial-displacement candidate grid; 0 and alpha always included."""
    search = _default_search(model, search)
    cands = set(np.linspace(search.lo, search.hi, count).tolist())
    cands.add(0.0)
    alpha = getattr(model, "alpha", None)
    if alpha is not None:
        cands.add(float(alpha))
    return sorted(b for b in cands if b >= 0.0)


def greedy_exact_optimized(m: int, model: ClickModel,
                           search: Optional[ScalarSearchConfig] = None,
                           cap: int = EXACT_TREE_CAP) -> Tuple[float, float]:
    """(error, beta_in) minimizing the exact greedy error over the candidate
    initial displacements."""
    if m == 1:
        return 0.0, 0.0
    search = _default_search(model, search)
    best_p, best_b = math.inf, 0.0
    for b in beta_in_candidates(model, search):
        p = greedy_exact_error(m, b, model, search, cap=cap)
        if p < best_p:
            best_p, best_b = p, b
    return best_p, best_b


def optimal_adaptive_error(m: int, model: ClickModel,
                           grid: Optional[GridConfig] = None,
                           search: Optional[ScalarSearchConfig] = None) -> float:
    """Best adaptive-displacement error via backward induction.

    State s = w_est / w_future; value recursion
    v_0(s) = s,
    v_k(s) = max_beta [ q_b * v_{k-1}(max(s, p_b/q_b))
                        + qbar_b * v_{k-1}(max(s, pbar_b/qbar_b)) ],
    interpolated log-log on a log-spaced s grid.  Error = 1 - v_M(0)/M with
    the s = 0 start mapped to the grid minimum.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m == 1:
        return 0.0
    if grid is None:
        grid = GridConfig(count=2048)
    if grid.count < 512:
        raise ValueError("backward-induction grid needs >= 512 points")
    search = _default_search(model, search)

    s = np.logspace(math.log10(grid.lo), math.log10(grid.hi), grid.count)
    log_s = np.log(s)
    v = s.copy()  # v_0

    bgrid = np.linspace(search.lo, search.hi, max(search.grid_points, 64))
    qs = np.array([model.q(float(b)) for b in bgrid])
    ps = np.array([model.p(float(b)) for b in bgrid])

    for _ in range(m):
        log_v = np.log(v)

        def value_at(x):
            # identity tail beyond the grid top (v(s) = s there), clamped
            # flat extrapolation below the bottom
            xa = np.asarray(x, dtype=float)
            inner = np.exp(np.interp(np.log(np.clip(xa, s[0], s[-1])),
                                     log_s, log_v))
            return np.where(xa >= s[-1], np.maximum(xa, inner), inner)

        def branch_value(q: float, p: float) -> np.ndarray:
            qbar = 1.0 - q
            pbar = 1.0 - p
            r_nc = clamp_ratio(p, q)
            r_c = clamp_ratio(pbar, qbar)
            return (q * value_at(np.maximum(s, r_nc))
                    + qbar * value_at(np.maximum(s, r_c)))

        vals = np.empty((len(bgrid), len(s)))
        for j in range(len(bgrid)):
            vals[j] = branch_value(qs[j], ps[j])
        best_j = np.argmax(vals, axis=0)
        new_v = vals[best_j, np.arange(len(s))]

        # golden-section refinement around each state's best coarse beta
        def scalar_value(b: float, si: float) -> float:
            q = model.q(b)
            p = model.p(b)
            qbar = 1.0 - q
            pbar = 1.0 - p
            return float(q * value_at(max(si, clamp_ratio(p, q)))
                         + qbar * value_at(max(si, clamp_ratio(pbar, qbar))))

        for i in range(len(s)):
            j = int(best_j[i])
            lo = bgrid[max(j - 2, 0)]
            hi = bgrid[min(j + 2, len(bgrid) - 1)]
            if hi > lo:
                _, y = maximize_scalar(
                    lambda b, si=float(s[i]): scalar_value(b, si),
                    ScalarSearchConfig(lo=lo, hi=hi, grid_points=9,
                                       tol=search.tol))
                if y > new_v[i]:
                    new_v[i] = y

        if np.any(np.diff(new_v) < -1e-4 * np.abs(new_v[1:])):
            raise NumericalDiagnosticError(
                "value function lost monotonicity; refine the state grid")
        # iron out sub-tolerance refinement jitter: the true v is nondecreasing
        v = np.maximum.accumulate(new_v)

    return min(1.0, max(0.0, 1.0 - float(v[0]) / m))


def brute_force_tree_error(m: int, model: ClickModel,
                           search: Optional[ScalarSearchConfig] = None) -> float:
    """Exhaustive optimization of the full displacement decision tree.

    Per-node displacements are optimized by nested recursion; leaf estimates
    are the maximal-weight hypotheses, which subsumes every keep/update leaf
    assignment.  Oracle only: cost is exponential in depth, so M <= 3.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m > 3:
        raise CapacityError("brute-force tree optimizer supports M <= 3 only")
    if m == 1:
        return 0.0
    search = _default_search(model, search)
    inner = ScalarSearchConfig(lo=search.lo, hi=search.hi,
                               grid_points=min(search.grid_points, 65),
                               tol=max(search.tol, 1e-6))

    def node_value(weights: Sequence[float], slot: int) -> float:
        if slot > m:
            return max(weights)

        def branch_sum(b: float) -> float:
            q = model.q(b)
            p = model.p(b)
            qbar = 1.0 - q
            pbar = 1.0 - p
            w_nc = [w * (p if x == slot else q)
                    for x, w in enumerate(weights, start=1)]
            w_c = [w * (pbar if x == slot else qbar)
                   for x, w in enumerate(weights, start=1)]
            return node_value(w_nc, slot + 1) + node_value(w_c, slot + 1)

        _, val = maximize_scalar(branch_sum, inner)
        return val

    p_c = node_value([1.0 / m] * m, 1)
    return min(1.0, max(0.0, 1.0 - p_c))
