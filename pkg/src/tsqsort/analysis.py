"""Closed-form predictors for average comparison and swap counts.

The classical quicksort estimates and the copy-based variant's swap
recurrence are evaluated exactly as printed in the standard analyses:
predictors return signed reals and go negative for tiny n, which is the
usual asymptotic artifact; callers clamp at zero for display.
"""

from __future__ import annotations

import math

EULER_GAMMA = 0.5772156649

# Exact harmonic summation is cheap up to this point; beyond it the
# ln(n) + gamma + 1/(2n) approximation is accurate to ~1e-13 relative.
_HARMONIC_EXACT_LIMIT = 10**6


def harmonic(n: int) -> float:
    """H_n, by exact summation up to 10^6 and asymptotically beyond."""
    if n < 1:
        raise ValueError("harmonic number needs n >= 1")
    if n <= _HARMONIC_EXACT_LIMIT:
        return math.fsum(1.0 / k for k in range(1, n + 1))
    return math.log(n) + EULER_GAMMA + 1.0 / (2.0 * n)


def predict_comparisons(n: int) -> float:
    """Average comparisons of a classical quicksort: 2n ln(n) - 2.8456n."""
    _require(n)
    return 2.0 * n * math.log(n) - 2.8456 * n


def predict_swaps_classic(n: int) -> float:
    """Average swaps of a classical quicksort: 0.33n ln(n) - 0.58n."""
    _require(n)
    return 0.33 * n * math.log(n) - 0.58 * n


def predict_swaps_tsq_exact(n: int) -> float:
    """Exact average virtual swaps: (2/9)(n+1)H_n - (1/6)(n+1)."""
    _require(n)
    return (2.0 / 9.0) * (n + 1) * harmonic(n) - (n + 1) / 6.0


def predict_swaps_tsq_approx(n: int) -> float:
    """Asymptotic form of the virtual-swap average: 0.222n ln(n) - 0.038n."""
    _require(n)
    return 0.222 * n * math.log(n) - 0.038 * n


def recurrence_oracle(n: int) -> float:
    """Iterate S_n = (1 + 1/n)(2/9 + S_{n-1}) from S_2 = 0.5.

    Independent check for the closed form; O(n) time.
    """
    _require(n)
    s = 0.5
    for k in range(3, n + 1):
        s = (1.0 + 1.0 / k) * (2.0 / 9.0 + s)
    return s


def _require(n: int) -> None:
    if n < 2:
        raise ValueError("predictors are defined for n >= 2")
