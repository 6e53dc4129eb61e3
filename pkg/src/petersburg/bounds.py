"""Prokhorov's explicit sample-size bound for the weak law of large numbers.

For Bernoulli trials, the frequency stays within epsilon of p with
probability above 1 - eta for every n past

    (1 + epsilon) / epsilon**2 * ln(1/eta) + 1/epsilon.

The log is natural: epsilon = eta = 0.001 reproduces the classical
6,915,663 threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ProkhorovQuery:
    """Accuracy epsilon > 0 and confidence complement eta in (0, 1]."""

    epsilon: float
    eta: float

    def __post_init__(self):
        if self.epsilon <= 0.0 or not 0.0 < self.eta <= 1.0:
            raise ValueError("parameters out of domain")


def prokhorov_n0(query: ProkhorovQuery) -> int:
    """Smallest integer strictly above the bound: a usable sample size."""
    eps = query.epsilon
    bound = (1.0 + eps) / (eps * eps) * -math.log(query.eta) + 1.0 / eps
    return math.floor(bound) + 1
