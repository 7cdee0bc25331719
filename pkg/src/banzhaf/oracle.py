"""Brute-force ground truth by exhaustive truth-table enumeration.

Evaluators are callables from an assignment bitmask (bit i = vote of voter i)
to a truth value.  Every function here is an independent reference path: none
of them reuse the algebraic weight or derivative machinery.
"""

from __future__ import annotations

from typing import Callable

from .errors import ResourceLimitError

DEFAULT_ORACLE_CAP = 24

Evaluator = Callable[[int], bool]


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ResourceLimitError(f"{n} voters exceeds oracle cap {cap}")


def oracle_weight(evaluate: Evaluator, n: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Count of assignments on which the function is true."""
    _check_cap(n, cap)
    return sum(1 for bits in range(1 << n) if evaluate(bits))


def oracle_tbp(evaluate: Evaluator, n: int, m: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Swing count for voter m: assignments where flipping bit m flips the value.

    Counted over assignments with bit m high, which for any function equals
    the weight of the pointwise XOR of the two restrictions.
    """
    _check_cap(n, cap)
    bit = 1 << m
    count = 0
    for bits in range(1 << n):
        if bits & bit and evaluate(bits) != evaluate(bits & ~bit):
            count += 1
    return count


def oracle_monotone(
    evaluate: Evaluator, n: int, cap: int = DEFAULT_ORACLE_CAP
) -> tuple[bool, tuple[int, int] | None]:
    """Check the function never drops when one vote turns high.

    Returns (verdict, witness); the witness is a pair (low assignment, high
    assignment) with f(low) = 1 and f(high) = 0.
    """
    _check_cap(n, cap)
    for bits in range(1 << n):
        if not evaluate(bits):
            continue
        mask = ~bits & ((1 << n) - 1)
        while mask:
            low = mask & -mask
            if not evaluate(bits | low):
                return False, (bits, bits | low)
            mask ^= low
    return True, None


def oracle_causal(evaluate: Evaluator, n: int) -> bool:
    """All-no rejects and all-yes passes."""
    return (not evaluate(0)) and evaluate((1 << n) - 1)
