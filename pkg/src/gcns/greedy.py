"""Greedy presentations over a GCNS base sequence B.

For ``b_{i+1} = s_i*b_i + 1`` with nondecreasing s, the greedy coin count is
optimal, and the greedy coefficient vector is the unique vector with

    x_k = M // b_k,   0 <= x_i <= s_i (i < k),
    x_i = s_i for some 2 <= i <= k-1  =>  x_1 = ... = x_{i-1} = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class GreedyPresentation:
    M: int
    x: tuple[int, ...]

    @property
    def coeff_sum(self) -> int:
        return sum(self.x)


@dataclass(frozen=True)
class WeightedPresentation:
    presentation: GreedyPresentation
    weight: int
    coeff_sum: int


def satisfies_greedy_conditions(B: Sequence[int], s: Sequence[int],
                                x: Sequence[int], M: int) -> bool:
    """True iff ``x`` meets all four greedy-presentation conditions for M."""
    k = len(B)
    if len(x) != k or any(xi < 0 for xi in x):
        return False
    if sum(b * xi for b, xi in zip(B, x)) != M:
        return False
    if x[-1] != M // B[-1]:
        return False
    if any(x[i] > s[i] for i in range(k - 1)):
        return False
    for i in range(1, k - 1):
        if x[i] == s[i] and any(x[:i]):
            return False
    return True


def greedy_presentation(B: Sequence[int], s: Sequence[int], M: int) -> GreedyPresentation:
    if M < 0:
        raise ValueError(f"M must be nonnegative, got {M}")
    x = [0] * len(B)
    rem = M
    for i in range(len(B) - 1, -1, -1):
        x[i], rem = divmod(rem, B[i])
    assert satisfies_greedy_conditions(B, s, x, M), (B, s, x, M)
    return GreedyPresentation(M, tuple(x))


def opt_B(B: Sequence[int], s: Sequence[int], M: int) -> int:
    """Minimum number of parts from B summing to M."""
    return greedy_presentation(B, s, M).coeff_sum


def o_bh(B: Sequence[int], s: Sequence[int], u: int, M: int) -> int:
    """``min sum (u*b_i + 1)*x_i`` over presentations of M, i.e. ``u*M + opt_B(M)``."""
    return u * M + opt_B(B, s, M)


def weight(presentation: GreedyPresentation, u: int, B: Sequence[int]) -> int:
    return sum((u * b + 1) * xi for b, xi in zip(B, presentation.x))


def weighted(B: Sequence[int], s: Sequence[int], u: int, M: int) -> WeightedPresentation:
    X = greedy_presentation(B, s, M)
    return WeightedPresentation(X, weight(X, u, B), X.coeff_sum)


def colex_compare(x1: Sequence[int], x2: Sequence[int]) -> int:
    """Colexicographic comparison: -1, 0 or 1 as x1 is below, equal to or above x2.

    Vectors are compared from the last coordinate downward.
    """
    if len(x1) != len(x2):
        raise ValueError(f"length mismatch: {len(x1)} != {len(x2)}")
    for a, b in zip(reversed(x1), reversed(x2)):
        if a != b:
            return -1 if a < b else 1
    return 0
