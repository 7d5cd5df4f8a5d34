"""Closed-form error probabilities for PPM receivers.

Implements the Helstrom bound, direct detection (the standard quantum limit),
conditional pulse nulling with inexact nulling, and the strong-pulse limit of
the greedy receiver.  Degenerate denominators (noiseless channels, nulling
displacement matching the dark-click level) are handled by algebraically
equivalent outcome-sum forms instead of epsilon nudging, so noiseless runs are
exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .channel import ClickModel
from .optimize import ScalarSearchConfig, minimize_scalar, search_interval

_DEGENERATE_EPS = 1e-12


@dataclass(frozen=True)
class BoundResult:
    p_error: float
    method_tag: str  # helstrom | dd | cpn | cpn_opt | greedy_limit
    beta_used: Optional[float] = None


def _check_order(m: int) -> int:
    if int(m) != m or m < 1:
        raise ValueError(f"PPM order m must be an integer >= 1, got {m}")
    return int(m)


def _clamp01(x: float) -> float:
    return min(1.0, max(0.0, x))


def _geom_sum(q0: float, j: int) -> float:
    """(1 - q0**j) / (1 - q0), stable as q0 -> 1 (limit j)."""
    qbar0 = 1.0 - q0
    if qbar0 < 1e-9:
        if qbar0 <= 0.0:
            return float(j)
        return -math.expm1(j * math.log1p(-qbar0)) / qbar0
    return (1.0 - q0 ** j) / qbar0


def helstrom_error(m: int, n: float) -> float:
    """Minimal discrimination error for noiseless M-ary PPM at n photons/frame."""
    m = _check_order(m)
    if not (math.isfinite(n) and n >= 0.0):
        raise ValueError(f"n must be finite and >= 0, got {n}")
    e = math.exp(-n)
    root = math.sqrt(1.0 + (m - 1) * e) - math.sqrt(1.0 - e)
    return _clamp01((m - 1) / (m * m) * root * root)


def dd_error(m: int, model: ClickModel) -> float:
    """Direct-detection error probability (standard quantum limit)."""
    m = _check_order(m)
    if m == 1:
        return 0.0
    p0 = model.p(0.0)
    q0 = model.q(0.0)
    qbar0 = 1.0 - q0
    if qbar0 < _DEGENERATE_EPS:
        # empty slots never click: errors only from an all-dark frame
        return _clamp01(p0 * (m - 1) / m)
    pbar0 = 1.0 - p0
    num = (m - p0 * q0 ** (m - 1)) * qbar0 - pbar0 * (1.0 - q0 ** m)
    return _clamp01(num / (m * qbar0))


def _cpn_outcome_sum(m: int, p0: float, q0: float, pb: float, qb: float) -> float:
    """CPN error by direct summation over switchover slots.

    Algebraically equivalent to the closed form but free of the
    1/(qbar_beta - q0) and 1/qbar0 denominators, hence usable in the
    noiseless and coincidental-level degenerate cases.
    """
    qbarb = 1.0 - qb
    pbarb = 1.0 - pb
    pbar0 = 1.0 - p0
    # pulse slot nulled and silent, trailing empties silent -> correct
    s_null = sum(qbarb ** (x - 1) * q0 ** (m - x) for x in range(1, m + 1))
    # switchover at empty slot k < x, pulse caught by direct detection
    s_dd = sum(qbarb ** (k - 1) * _geom_sum(q0, m - k) for k in range(1, m))
    pc = (pb * s_null + pbar0 * qb * s_dd + pbarb * qbarb ** (m - 1)) / m
    return _clamp01(1.0 - pc)


def cpn_error(m: int, beta: float, model: ClickModel) -> float:
    """Conditional-pulse-nulling error with nulling displacement ``beta``."""
    m = _check_order(m)
    if not math.isfinite(beta):
        raise ValueError(f"beta must be finite, got {beta}")
    if m == 1:
        return 0.0
    p0 = model.p(0.0)
    q0 = model.q(0.0)
    pb = model.p(beta)
    qb = model.q(beta)
    qbar0 = 1.0 - q0
    qbarb = 1.0 - qb
    if qbar0 < _DEGENERATE_EPS or abs(qbarb - q0) < _DEGENERATE_EPS:
        return _cpn_outcome_sum(m, p0, q0, pb, qb)
    pbar0 = 1.0 - p0
    pbarb = 1.0 - pb
    num = ((pbar0 - m * qbar0) * (q0 - qbarb)
           + qbar0 * qbarb ** (m - 1) * (pbarb * q0 - p0 * qbarb)
           + q0 ** m * (pb * qbar0 - pbar0 * qb))
    return _clamp01(num / (m * qbar0 * (qbarb - q0)))


def cpn_error_optimized(m: int, model: ClickModel,
                        search: Optional[ScalarSearchConfig] = None) -> BoundResult:
    """CPN error minimized over the nulling displacement."""
    m = _check_order(m)
    if search is None:
        search = search_interval(getattr(model, "alpha", 0.0))
    if m == 1:
        return BoundResult(p_error=0.0, method_tag="cpn_opt", beta_used=0.0)
    beta, p_err = minimize_scalar(lambda b: cpn_error(m, b, model), search)
    return BoundResult(p_error=p_err, method_tag="cpn_opt", beta_used=beta)


def greedy_strong_pulse_limit(m: int, model: ClickModel) -> float:
    """Strong-pulse limit of the greedy receiver error (dark-count floor).

    Equals the direct-detection error evaluated at a certain pulse click,
    multiplied by the click probability of a nulled pulse slot.
    """
    m = _check_order(m)
    if m == 1:
        return 0.0
    q0 = model.q(0.0)
    if 1.0 - q0 < _DEGENERATE_EPS:
        return 0.0
    alpha = getattr(model, "alpha", None)
    if alpha is None:
        raise ValueError("model must expose the pulse amplitude 'alpha'")
    pbar_a = 1.0 - model.p(alpha)
    # (-1 + m - m*q0 + q0**m) / (m * qbar0) rewritten without cancellation
    return _clamp01(pbar_a * (m - _geom_sum(q0, m)) / m)
