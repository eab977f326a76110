"""Growth models, bound fitting, and finite coarse-inequality witnesses.

None of these decide asymptotic relations; they produce or refute concrete
finite-range certificates.  ``fit_bound`` finds the least C with
s(n) <= C*f(n) + C over a curve's samples, and ``verify_coarse_leq`` checks
h(n) <= K*f(M*n) pointwise over a sampled range, reporting the first
violation if any.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class GrowthModel:
    """A named nondecreasing comparison function on [0, inf)."""

    kind: str
    alpha: float = 0.0

    def __call__(self, n: float) -> float:
        if self.kind == "const":
            return 1.0
        if self.kind == "log":
            return math.log2(n) if n >= 1 else 0.0
        if self.kind == "sqrt":
            return math.sqrt(n)
        if self.kind == "pow":
            return float(n) ** self.alpha
        if self.kind == "identity":
            return float(n)
        raise ValueError(f"unknown growth model {self.kind!r}")

    @staticmethod
    def const() -> "GrowthModel":
        return GrowthModel("const")

    @staticmethod
    def log() -> "GrowthModel":
        return GrowthModel("log")

    @staticmethod
    def sqrt() -> "GrowthModel":
        return GrowthModel("sqrt")

    @staticmethod
    def pow(alpha: float) -> "GrowthModel":
        if not 0 < alpha:
            raise ValueError("exponent must be positive")
        return GrowthModel("pow", alpha)

    @staticmethod
    def identity() -> "GrowthModel":
        return GrowthModel("identity")

    @staticmethod
    def from_name(name: str) -> "GrowthModel":
        if name.startswith("pow:"):
            return GrowthModel.pow(float(name.split(":", 1)[1]))
        return GrowthModel(name)


def fit_bound(values: Sequence[int], model: GrowthModel) -> float:
    """Least C with value(n) <= C*f(n) + C for every sample with n >= 1.

    ``values`` is indexed by n (a curve's value tuple works directly).
    """
    if not values:
        raise ValueError("cannot fit an empty curve")
    best = 0.0
    for n in range(1, len(values)):
        best = max(best, values[n] / (model(n) + 1.0))
    return best


def verify_coarse_leq(h: Sequence[int], f: Sequence[float], K: int, M: int,
                      N: int = 0) -> Optional[int]:
    """Check h(n) <= K*f(M*n) for all sampled n >= N; return the first bad n.

    This is a finite-range witness check, not a decision procedure: a pass
    certifies the inequality on the sampled range only.  ``f`` must be
    sampled out to M times the top index of ``h``.
    """
    if K < 1 or M < 1:
        raise ValueError("K and M must be positive integers")
    top = len(h) - 1
    if len(f) - 1 < M * top:
        raise ValueError(
            f"f is sampled to {len(f) - 1} but n={top} needs f({M * top})")
    for n in range(N, top + 1):
        if h[n] > K * f[M * n]:
            return n
    return None


def doubling_staircase(n: int) -> int:
    """A staircase that is coarsely below identity but not strongly so.

    Plateau boundaries n_0 = 0, n_1 = 1, n_{i+1} = n_i * 2^{2i}; on
    [n_i, n_{i+1}) the value is 2*n_i.  The plateaus stretch so fast that no
    unbounded multiplier fits between this function and the identity, yet it
    touches 2n at every boundary.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    lo, i = 1, 1
    while True:
        hi = lo * 2 ** (2 * i)
        if n < hi:
            return 2 * lo
        lo, i = hi, i + 1
