"""Channel parameters and single-photon-detector click statistics.

The click statistics are kept behind a small contract (``ClickModel``):
anything exposing ``q(beta)`` and ``p(beta)`` no-click probabilities can be
plugged into the bounds, greedy and simulation machinery.  The concrete
Poissonian model covers a coherent pulse of amplitude ``alpha`` with additive
noise ``n_b`` photons per slot and mode mismatch ``delta`` between the signal
and displacement modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol, runtime_checkable


@runtime_checkable
class ClickModel(Protocol):
    """No-click probabilities for a displaced slot.

    ``q(beta)`` -- empty slot displaced by ``beta``.
    ``p(beta)`` -- pulse slot displaced by ``beta``.
    Both must return values in [0, 1] for any finite ``beta``.
    """

    def q(self, beta: float) -> float: ...

    def p(self, beta: float) -> float: ...


@dataclass(frozen=True)
class ChannelParams:
    """Physical scenario: amplitude, noise, mode mismatch and PPM order."""

    alpha: float
    n_b: float = 0.0
    delta: float = 0.0
    m: int = 2

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise ValueError(f"alpha must be finite and >= 0, got {self.alpha}")
        if not (math.isfinite(self.n_b) and self.n_b >= 0.0):
            raise ValueError(f"n_b must be finite and >= 0, got {self.n_b}")
        if not (0.0 <= self.delta <= 1.0):
            raise ValueError(f"delta must lie in [0, 1], got {self.delta}")
        if int(self.m) != self.m or self.m < 1:
            raise ValueError(f"m must be an integer >= 1, got {self.m}")

    @property
    def n(self) -> float:
        """Mean signal photons per frame, alpha**2."""
        return self.alpha * self.alpha

    @property
    def visibility(self) -> float:
        """Interference visibility V = sqrt(1 - delta)."""
        return math.sqrt(1.0 - self.delta)

    @classmethod
    def from_photon_number(cls, n: float, n_b: float = 0.0, delta: float = 0.0,
                           m: int = 2) -> "ChannelParams":
        if not (math.isfinite(n) and n >= 0.0):
            raise ValueError(f"n must be finite and >= 0, got {n}")
        return cls(alpha=math.sqrt(n), n_b=n_b, delta=delta, m=m)

    def click_model(self) -> "PoissonClickModel":
        return PoissonClickModel(alpha=self.alpha, n_b=self.n_b, delta=self.delta)


@dataclass(frozen=True)
class PoissonClickModel:
    """Poissonian on-off statistics for a displaced coherent pulse.

    q(beta) = exp(-beta^2 - n_b)
    p(beta) = exp(-(alpha - sqrt(1 - delta) * beta)^2 - delta * beta^2 - n_b)
    """

    alpha: float
    n_b: float = 0.0
    delta: float = 0.0

    def __post_init__(self):
        ChannelParams(alpha=self.alpha, n_b=self.n_b, delta=self.delta, m=1)

    def q(self, beta: float) -> float:
        if not math.isfinite(beta):
            raise ValueError(f"beta must be finite, got {beta}")
        return math.exp(-beta * beta - self.n_b)

    def p(self, beta: float) -> float:
        if not math.isfinite(beta):
            raise ValueError(f"beta must be finite, got {beta}")
        v = math.sqrt(1.0 - self.delta)
        d = self.alpha - v * beta
        return math.exp(-d * d - self.delta * beta * beta - self.n_b)


def q_prob(model: ClickModel, beta: float) -> float:
    """No-click probability in an empty slot displaced by ``beta``."""
    if not math.isfinite(beta):
        raise ValueError(f"beta must be finite, got {beta}")
    return model.q(beta)


def p_prob(model: ClickModel, beta: float) -> float:
    """No-click probability in the pulse slot displaced by ``beta``."""
    if not math.isfinite(beta):
        raise ValueError(f"beta must be finite, got {beta}")
    return model.p(beta)
