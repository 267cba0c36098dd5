"""Iterated logarithms log_j, the products L_q, and their regular-variation
data a(x; L_q), plus the constants (alpha_q, gamma_q) that make a(x; L_q)
stay below alpha_q on [gamma_q, infinity)."""

from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    pass


def positivity_threshold(j: int) -> float:
    """x must exceed this for log_j x to be defined and positive."""
    if j < 1:
        raise DomainError("iteration depth must be >= 1")
    t = 1.0
    for _ in range(j - 1):
        t = math.exp(t)
    return t


def log_iter(j: int, x: float) -> float:
    """log composed j times."""
    if x <= positivity_threshold(j):
        raise DomainError(
            f"log_{j} requires x > {positivity_threshold(j)!r}, got {x!r}"
        )
    v = float(x)
    for _ in range(j):
        v = math.log(v)
    return v


def big_l(q: int, x: float) -> float:
    """L_q(x) = product of log_j x for j = 1..q."""
    if x <= positivity_threshold(q):
        raise DomainError(
            f"L_{q} requires x > {positivity_threshold(q)!r}, got {x!r}"
        )
    out = 1.0
    v = float(x)
    for _ in range(q):
        v = math.log(v)
        out *= v
    return out


def a_of_lq(q: int, x: float) -> float:
    """a(x; L_q) = x L_q'(x) / L_q(x) in closed form:
    (1/log x)(1 + sum_{j=2..q} 1/log_j x)."""
    if x <= positivity_threshold(q):
        raise DomainError(
            f"a(x; L_{q}) requires x > {positivity_threshold(q)!r}, got {x!r}"
        )
    v = math.log(x)
    inner = 1.0
    w = v
    for _ in range(2, q + 1):
        w = math.log(w)
        inner += 1.0 / w
    return inner / v


@dataclass(frozen=True)
class IteratedLogParams:
    q: int
    alpha: float
    gamma: float

    def __post_init__(self) -> None:
        if not 0 < self.alpha < 1:
            raise DomainError("alpha must lie in (0, 1)")
        if self.gamma < 1:
            raise DomainError("gamma must be >= 1")


def _verify_monotone_decrease(q: int, gamma: float, x_hi: float = 1e8) -> None:
    samples = [gamma * (x_hi / gamma) ** (i / 40) for i in range(41)]
    vals = [a_of_lq(q, x) for x in samples]
    for lo, hi in zip(vals[1:], vals[:-1]):
        if lo >= hi:
            raise DomainError(f"a(x; L_{q}) failed to decrease at sampled points")


def find_constants(q: int) -> IteratedLogParams:
    """Constants with log_{q+1} x > 0 and 0 < a(x; L_q) < alpha_q on
    [gamma_q, infinity).

    q = 1 returns the classical pair (1/log 3, 3); for q >= 2, gamma_q is the
    smallest integer above the positivity threshold of log_{q+1} with
    a(gamma_q; L_q) < 1, and alpha_q = a(gamma_q; L_q).
    """
    if q < 1:
        raise DomainError("q must be >= 1")
    if q == 1:
        params = IteratedLogParams(q=1, alpha=1.0 / math.log(3.0), gamma=3.0)
    else:
        gamma = math.floor(positivity_threshold(q + 1)) + 1
        while a_of_lq(q, gamma) >= 1.0:
            gamma += 1
        params = IteratedLogParams(q=q, alpha=a_of_lq(q, gamma), gamma=float(gamma))
    _verify_monotone_decrease(q, params.gamma)
    return params
