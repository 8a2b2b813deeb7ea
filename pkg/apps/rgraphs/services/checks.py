"""
Decision procedures for the imbalance inequalities of r-graphs.

Every check returns a Verdict. A failing Verdict carries the first
1-based index k at which a bound breaks, with both sides of the bound.
Checks never sort their input: a sequence in the wrong order is rejected.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from .core import (
    InvalidOrderError,
    InvalidParameterError,
    SortOrder,
    is_sorted,
)

logger = logging.getLogger(__name__)

PREFIX_LOWER = 'prefix-lower'
PREFIX_UPPER = 'prefix-upper'
TOTAL_ZERO = 'total-zero'
POSITION_LOWER = 'position-lower'
POSITION_UPPER = 'position-upper'
SQUARE_SUM = 'square-sum'
SQUARE_EQUALITY = 'square-equality'
RANGE_LOWER = 'range-lower'
RANGE_UPPER = 'range-upper'


@dataclass(frozen=True)
class Witness:
    k: int
    lhs: int
    rhs: int
    bound: str


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Optional[Witness] = None

    @classmethod
    def passed(cls):
        return cls(ok=True)

    @classmethod
    def failed(cls, k, lhs, rhs, bound):
        return cls(ok=False, witness=Witness(k=k, lhs=lhs, rhs=rhs, bound=bound))

    def __bool__(self):
        return self.ok

    def describe(self):
        if self.ok:
            return 'ok'
        w = self.witness
        return f"fails at k={w.k}: {w.lhs} vs {w.rhs} ({w.bound})"


def _validate(values, r, order):
    values = list(values)
    if not values:
        raise InvalidParameterError("Sequence must not be empty")
    if r < 1:
        raise InvalidParameterError(f"Capacity r must be at least 1, got {r}")
    if not is_sorted(values, order):
        raise InvalidOrderError(f"Sequence {values} is not {order}")
    return values


def check_feasible_nondecreasing(values, r):
    """
    Σ_{i≤k} b_i ≥ r·k·(k−n) for 1 ≤ k < n, and Σ b_i = 0.

    Returns:
        Verdict with the smallest violating k
    """
    values = _validate(values, r, SortOrder.NON_DECREASING)
    n = len(values)
    prefix = 0
    for k, b in enumerate(values, start=1):
        prefix += b
        if k == n:
            if prefix != 0:
                return Verdict.failed(k, prefix, 0, TOTAL_ZERO)
        elif prefix < r * k * (k - n):
            return Verdict.failed(k, prefix, r * k * (k - n), PREFIX_LOWER)
    return Verdict.passed()


def check_feasible_nonincreasing(values, r):
    """Σ_{i≤k} b_i ≤ r·k·(n−k) for 1 ≤ k < n, and Σ b_i = 0."""
    values = _validate(values, r, SortOrder.NON_INCREASING)
    n = len(values)
    prefix = 0
    for k, b in enumerate(values, start=1):
        prefix += b
        if k == n:
            if prefix != 0:
                return Verdict.failed(k, prefix, 0, TOTAL_ZERO)
        elif prefix > r * k * (n - k):
            return Verdict.failed(k, prefix, r * k * (n - k), PREFIX_UPPER)
    return Verdict.passed()


def check_feasible(values, r, order=SortOrder.NON_DECREASING):
    if order == SortOrder.NON_INCREASING:
        return check_feasible_nonincreasing(values, r)
    return check_feasible_nondecreasing(values, r)


def check_simple_feasible(values):
    """Feasibility for simple digraphs, sequence in non-increasing order."""
    return check_feasible_nonincreasing(values, 1)


def check_simple_feasible_nondecreasing(values):
    return check_feasible_nondecreasing(values, 1)


def positional_bounds(values, r):
    """r(i−n) ≤ b_i ≤ r(i−1) for every 1-based position i of a non-decreasing sequence."""
    values = _validate(values, r, SortOrder.NON_DECREASING)
    n = len(values)
    for i, b in enumerate(values, start=1):
        if b < r * (i - n):
            return Verdict.failed(i, b, r * (i - n), POSITION_LOWER)
        if b > r * (i - 1):
            return Verdict.failed(i, b, r * (i - 1), POSITION_UPPER)
    return Verdict.passed()


def square_inequality(values, r):
    """
    Σ_{i≤k} b_i² ≤ Σ_{i≤k} (2rn − 2rk − b_i)² for every k, with equality at
    k = n. The sequence must be non-increasing.
    """
    values = _validate(values, r, SortOrder.NON_INCREASING)
    n = len(values)
    for k in range(1, n + 1):
        head = values[:k]
        shift = 2 * r * n - 2 * r * k
        lhs = sum(b * b for b in head)
        rhs = sum((shift - b) ** 2 for b in head)
        if k == n and lhs != rhs:
            return Verdict.failed(k, lhs, rhs, SQUARE_EQUALITY)
        if lhs > rhs:
            return Verdict.failed(k, lhs, rhs, SQUARE_SUM)
    return Verdict.passed()


def imbalance_range(values, r):
    """Every entry lies in [−r(n−1), r(n−1)]; order is irrelevant."""
    values = list(values)
    if not values:
        raise InvalidParameterError("Sequence must not be empty")
    if r < 1:
        raise InvalidParameterError(f"Capacity r must be at least 1, got {r}")
    limit = r * (len(values) - 1)
    for i, b in enumerate(values, start=1):
        if b < -limit:
            return Verdict.failed(i, b, -limit, RANGE_LOWER)
        if b > limit:
            return Verdict.failed(i, b, limit, RANGE_UPPER)
    return Verdict.passed()


def iter_feasible_sequences(n, r):
    """
    Yield, in lexicographic order, every non-decreasing sequence of length n
    that passes check_feasible_nondecreasing for capacity r.
    """
    if n < 1 or r < 1:
        raise InvalidParameterError(f"n and r must be positive, got n={n}, r={r}")
    limit = r * (n - 1)

    def extend(prefix, total):
        k = len(prefix)
        if k == n:
            if total == 0 and check_feasible_nondecreasing(prefix, r):
                yield list(prefix)
            return
        low = prefix[-1] if prefix else -limit
        for b in range(low, limit + 1):
            running = total + b
            remaining = n - k - 1
            # Later entries are at least b and at most the range limit.
            if running + remaining * b > 0:
                break
            if running + remaining * limit < 0:
                continue
            if k + 1 < n and running < r * (k + 1) * (k + 1 - n):
                continue
            prefix.append(b)
            yield from extend(prefix, running)
            prefix.pop()

    yield from extend([], 0)
