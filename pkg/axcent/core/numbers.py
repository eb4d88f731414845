"""
Exact numeric helpers.
"""

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def harmonic_number(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise ValueError("harmonic numbers are defined for n >= 0")
    total = Fraction(0)
    for i in range(1, n + 1):
        total += Fraction(1, i)
    return total


def iverson(condition: bool) -> int:
    """1 when the condition holds, else 0."""
    return 1 if condition else 0
