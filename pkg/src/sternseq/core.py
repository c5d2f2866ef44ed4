"""Stern diatomic sequence and hyperbinary oracles.

The sequence (OEIS A002487) is defined by ``a(0) = 0``, ``a(1) = 1``,
``a(2n) = a(n)`` and ``a(2n+1) = a(n) + a(n+1)``; the shifted form
``s(n) = a(n+1)`` counts the hyperbinary representations of ``n``
(expansions in base 2 using each power at most twice).

Besides the recurrence this module provides two independent oracles --
explicit enumeration of the representations and a carry-state dynamic
program over the binary digits -- plus memory-efficient generation of
whole bit-length rows ``a(2**(k-1)) .. a(2**k - 1)`` for brute-force
scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .budget import check_bits_budget

__all__ = [
    "HyperbinaryEnumeration",
    "SternRow",
    "hyperbinary_count_dp",
    "hyperbinary_enumerate",
    "stern_a",
    "stern_range",
    "stern_row",
    "stern_s",
]


def stern_a(n: int) -> int:
    """Value ``a(n)`` of the diatomic sequence, by the recurrence.

    Iterates the pair ``(a(m), a(m+1))`` along the binary digits of
    ``n``; exact for arbitrarily large ``n``.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    a, b = 0, 1  # (a(m), a(m+1)) for the growing bit prefix m of n
    for ch in bin(n)[2:]:
        if ch == "0":
            b = a + b
        else:
            a = a + b
    return a


def stern_s(n: int) -> int:
    """Shifted value ``s(n) = a(n+1)``, the hyperbinary count of ``n``."""
    return stern_a(n + 1)


def hyperbinary_count_dp(n: int) -> int:
    """Count hyperbinary representations of ``n`` by a digit DP.

    Walks the binary digits of ``n`` from the least significant end,
    tracking in ``borrow`` the number of partial expansions that have
    overpaid the processed suffix by exactly one unit of the next
    power (only 0 or 1 units are ever useful).  Independent of the
    diatomic recurrence; equals ``stern_s(n)`` for all ``n >= 0``.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    exact, borrow = 1, 0
    while n:
        if n & 1:
            exact, borrow = exact + borrow, borrow
        else:
            exact, borrow = exact, exact + borrow
        n >>= 1
    return exact


class HyperbinaryEnumeration(list):
    """List of digit strings plus a flag recording cap truncation."""

    def __init__(self, items: list[str], truncated: bool = False):
        super().__init__(items)
        self.truncated = truncated


def _iter_hyperbinary(n: int):
    """Yield the hyperbinary representations of ``n`` as digit strings.

    Order: the canonical binary string first, then depth-first over
    breaking choices, preferring to break the leftmost positions.  Each
    output has the same length as the canonical string (leading zeros
    are kept); the rightmost position never breaks.
    """
    canonical = bin(n)[2:] if n else ""
    yield canonical
    digits = [int(ch) for ch in canonical]
    t = len(digits)
    acc: list[str] = []

    def walk(j: int, carry: int, broke: bool):
        if j == t:
            if broke:  # the no-break leaf is the canonical string again
                yield "".join(acc)
            return
        val = digits[j] + 2 * carry
        if j < t - 1 and 1 <= val <= 3:
            acc.append(str(val - 1))
            yield from walk(j + 1, 1, True)
            acc.pop()
        if val <= 2:
            acc.append(str(val))
            yield from walk(j + 1, 0, broke)
            acc.pop()

    yield from walk(0, 0, False)


def hyperbinary_enumerate(n: int, cap: int | None = None) -> HyperbinaryEnumeration:
    """All distinct hyperbinary representations of ``n``.

    Starts from the canonical binary string and applies the breaking
    rewrite ``10 -> 02`` at each position at most once; intended for
    oracle-scale ``n`` (the count grows like a Stern value).  With
    ``cap`` the enumeration stops after ``cap`` strings and the result
    is flagged as truncated.  ``n = 0`` yields the single empty
    representation.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    items: list[str] = []
    truncated = False
    for repr_string in _iter_hyperbinary(n):
        if cap is not None and len(items) >= cap:
            truncated = True
            break
        items.append(repr_string)
    return HyperbinaryEnumeration(items, truncated)


# Row values for k-bit indices are bounded by F(k+1) (Lucas), so 32-bit
# cells hold rows up to k = 45 (F46 < 2**31) and 64-bit up to k = 91.
_WIDTH_32_MAX_BITS = 45
_WIDTH_64_MAX_BITS = 91


def _cell_dtype(bits: int) -> tuple[np.dtype, int | None]:
    if bits <= _WIDTH_32_MAX_BITS:
        return np.dtype(np.uint32), 32
    if bits <= _WIDTH_64_MAX_BITS:
        return np.dtype(np.uint64), 64
    return np.dtype(object), None


def stern_range(lo: int, hi: int, dtype: np.dtype | type | None = None) -> np.ndarray:
    """Dense array of ``a(n)`` for ``lo <= n < hi``.

    Computed by recursive descent on the parent range
    ``[lo//2, hi//2]`` (even indices copy their parent, odd indices sum
    adjacent parents), so a chunk of any row costs O(chunk + log hi)
    without materializing earlier rows.
    """
    if lo < 0 or hi < lo:
        raise ValueError(f"invalid index range [{lo}, {hi})")
    if dtype is None:
        dtype = _cell_dtype(max(hi - 1, 1).bit_length())[0]
    dtype = np.dtype(dtype)
    length = hi - lo
    if length == 0:
        return np.empty(0, dtype=dtype)
    if hi <= 16 or length <= 8:
        return np.array([stern_a(n) for n in range(lo, hi)], dtype=dtype)
    parents = stern_range(lo // 2, hi // 2 + 1, dtype)
    out = np.empty(length, dtype=dtype)
    n_even_first = (hi - lo + 1) // 2  # count of positions with i even
    n_odd_first = (hi - lo) // 2
    if lo % 2 == 0:
        out[0::2] = parents[:n_even_first]
        out[1::2] = parents[:n_odd_first] + parents[1 : n_odd_first + 1]
    else:
        out[0::2] = parents[:n_even_first] + parents[1 : n_even_first + 1]
        out[1::2] = parents[1 : n_odd_first + 1]
    return out


@dataclass(frozen=True)
class SternRow:
    """The block ``a(2**(k-1)) .. a(2**k - 1)`` of one bit length.

    ``cell_width`` is the fixed storage width in bits, or ``None`` when
    the row had to be promoted to arbitrary-precision cells.
    """

    bit_length: int
    values: np.ndarray = field(repr=False)
    cell_width: int | None

    def __len__(self) -> int:
        return len(self.values)


def stern_row(k: int, chunk_size: int | None = None) -> SternRow:
    """Materialize the row of all ``k``-bit indices.

    Built from the previous row by the diatomic interleaving (even
    indices copy, odd indices sum adjacent values).  With ``chunk_size``
    the row is assembled from independently computed chunks; the result
    is identical either way.  Raises ``BudgetExceededError`` when the
    row does not fit under the configured memory ceiling.
    """
    if k < 1:
        raise ValueError("bit length must be >= 1")
    check_bits_budget(k, f"row of {k}-bit indices")
    if chunk_size is not None and chunk_size < 1:
        raise ValueError("chunk size must be >= 1")
    dtype, width = _cell_dtype(k)
    if width is not None:
        # Checked promotion: the Lucas bound F(k+1) must fit the cells.
        assert _fib_bound(k + 1) <= int(np.iinfo(dtype).max)
    lo, hi = 1 << (k - 1), 1 << k
    if chunk_size is None:
        values = stern_range(lo, hi, dtype)
    else:
        parts = [
            stern_range(start, min(start + chunk_size, hi), dtype)
            for start in range(lo, hi, chunk_size)
        ]
        values = np.concatenate(parts)
    return SternRow(bit_length=k, values=values, cell_width=width)


def _fib_bound(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
