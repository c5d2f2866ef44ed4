"""Fibonacci and Lucas numbers (exact integers)."""

from __future__ import annotations

from functools import lru_cache

__all__ = ["fib", "lucas"]


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    """``F(n)`` with ``F(0) = 0``, ``F(1) = 1``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def lucas(n: int) -> int:
    """``L(n)`` with ``L(0) = 2``, ``L(1) = 1``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a
