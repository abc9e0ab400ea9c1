"""
Dimension check for the level-5 theory in even genus: the quotients of
V^(1)_5 and V^(4)_5 together have dimension 5^(g/2) f_(g-1).
"""

import logging

from models.reports import Report
from pmod.components import modular_component
from utils.errors import DimensionMismatch, PreconditionError

logger = logging.getLogger(__name__)

MAX_GENUS = 6


def fibonacci(n: int) -> int:
    """f_0 = 0, f_1 = 1, f_(n+1) = f_n + f_(n-1)."""
    if n < 0:
        raise ValueError(f"Fibonacci index must be non-negative, got {n}")
    previous, current = 0, 1
    for _ in range(n):
        previous, current = current, previous + current
    return previous


def fibonacci_dim_check(genus: int, p: int = 5, strict: bool = True) -> Report:
    """
    Compare dim V^(1)_5 / null + dim V^(4)_5 / null with 5^(g/2) f_(g-1).

    Raises:
        PreconditionError: If g is odd, outside 2..6, or p != 5
        DimensionMismatch: If ``strict`` and the dimensions disagree
    """
    if p != 5:
        raise PreconditionError(f"the Fibonacci dimension formula is stated for p = 5, got {p}")
    if genus % 2 or not 2 <= genus <= MAX_GENUS:
        raise PreconditionError(f"genus must be even and between 2 and {MAX_GENUS}, got {genus}")
    parts = {j: modular_component(genus, j, p).quotient_dimension for j in (1, 4)}
    expected = 5 ** (genus // 2) * fibonacci(genus - 1)
    total = sum(parts.values())
    report = Report(f"Fibonacci dimension genus {genus}")
    report.add("dimension = 5^(g/2) f_(g-1)", total == expected, None if total == expected else genus,
               quotients={str(j): d for j, d in parts.items()}, total=total, expected=expected)
    report.data.update({"genus": genus, "quotient_dimensions": {str(j): d for j, d in parts.items()},
                        "expected": expected})
    logger.info(f"genus {genus}: {parts[1]} + {parts[4]} vs {expected}")
    if strict and not report.passed:
        raise DimensionMismatch(f"genus {genus}: quotient dimensions sum to {total}, expected {expected}")
    return report
