"""Digit-string calculus for hyperbinary counting.

The central object is ``G(x)``: the number of proper hyperbinary strings
(digits 0..2, most significant digit first) reachable from the digit
string ``x`` by "breaking" digits, where breaking a position turns one
unit of its weight into two units of the next position's weight (one
step to the right), and no position may be broken twice.  For a plain
binary string
``x`` this counts the hyperbinary representations of ``[x]_2``, i.e.
``G(x) = s([x]_2)`` for the shifted Stern sequence ``s(n) = a(n+1)``.

``G`` linearizes: each digit ``d`` has a 2x2 transfer matrix over the
state "did the previous position break", and ``G(x)`` is the top-left
entry of the product in string order.  For binary strings the matrix
``mu(x)`` collects the values of ``G`` on ``x`` and its two derived
strings:

* ``double_prime(x)`` ("x''"): drop trailing zeros, decrement the last
  digit -- the version of ``x`` that has donated one broken unit to a
  string on its right;
* ``prime(x)`` ("x'"): add two to the leading digit, then normalize --
  the version of ``x`` that has received a broken unit from the left.

``mu(xy) = mu(x) * mu(y)``, which turns substring replacement arguments
into entrywise matrix comparisons; the three dominance relations
(infix/suffix/prefix) are exposed through :func:`dominates`.

Digits 2 and 3 only ever arise inside the transforms: 3 marks a digit
that must still break, and 4 (a digit broken twice) is impossible, so
such strings have ``G = 0``.  The annihilator :data:`BOTTOM` stands for
"no string at all" with ``G(BOTTOM) = 0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = [
    "BOTTOM",
    "Bottom",
    "COLUMN_END",
    "Comparator",
    "GenStringOrZero",
    "IDENTITY",
    "Mat2",
    "MU0",
    "MU1",
    "ROW_START",
    "delta",
    "dominates",
    "double_prime",
    "g_split",
    "g_value",
    "mu_of",
    "prime",
]


class Bottom:
    """Annihilator string: ``G(BOTTOM) = 0``, transforms map it to itself."""

    _instance: "Bottom | None" = None

    def __new__(cls) -> "Bottom":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BOTTOM"


BOTTOM = Bottom()

GenStringOrZero = str | Bottom

_DIGITS = frozenset("0123")


def _check_digits(x: str) -> None:
    if not _DIGITS.issuperset(x):
        bad = sorted(set(x) - _DIGITS)
        raise ValueError(f"digit string may only contain 0-3, got {bad} in {x!r}")


def _check_binary(x: str, what: str = "string") -> None:
    if x.strip("01"):
        raise ValueError(f"{what} must be binary (digits 0/1 only), got {x!r}")


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix of non-negative integers, row-major ``[[g, g_dp], [g_p, g_p_dp]]``.

    For a binary string ``x`` the entries of ``mu_of(x)`` are
    ``G(x), G(x''), G(x'), G((x')'')`` in that order.
    """

    g: int
    g_dp: int
    g_p: int
    g_p_dp: int

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.g * other.g + self.g_dp * other.g_p,
            self.g * other.g_dp + self.g_dp * other.g_p_dp,
            self.g_p * other.g + self.g_p_dp * other.g_p,
            self.g_p * other.g_dp + self.g_p_dp * other.g_p_dp,
        )

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.g, self.g_dp), (self.g_p, self.g_p_dp))

    def dominates(self, other: "Mat2") -> bool:
        """Entrywise ``self >= other``."""
        return (
            self.g >= other.g
            and self.g_dp >= other.g_dp
            and self.g_p >= other.g_p
            and self.g_p_dp >= other.g_p_dp
        )


IDENTITY = Mat2(1, 0, 0, 1)

#: Transfer matrix of the digit 1: it may stay (state 0->0), break
#: (0->1), and if it received a broken unit it has value 3 and must
#: break (1->1).
MU1 = Mat2(1, 1, 0, 1)

#: Transfer matrix of the digit 0: it cannot break on its own (0->0),
#: and after receiving a unit it is a 2 that may stay or break (1->0,
#: 1->1).
MU0 = Mat2(1, 0, 1, 1)

# Boundary vectors selecting "no incoming break" / "no outgoing break":
# G(x) is ROW_START . mu(x) . COLUMN_END, i.e. the top-left entry.
ROW_START = (1, 0)
COLUMN_END = (1, 0)


def mu_of(x: str) -> Mat2:
    """Transfer matrix of a binary digit string; ``mu_of("") == IDENTITY``."""
    _check_binary(x)
    a, b, c, d = 1, 0, 0, 1
    for ch in x:
        if ch == "1":
            b = a + b
            d = c + d
        else:
            a = a + b
            c = c + d
    return Mat2(a, b, c, d)


def g_value(x: GenStringOrZero) -> int:
    """Number of proper hyperbinary strings reachable from ``x`` by breaking.

    Accepts digits 0-3 (3 = "must break") and :data:`BOTTOM`.  For a
    binary string this equals the shifted Stern value ``s([x]_2)``;
    ``g_value("") == 1`` (the empty representation of zero).
    """
    if isinstance(x, Bottom):
        return 0
    _check_digits(x)
    # Fold the row vector ROW_START through the per-digit transfer
    # matrices; r0/r1 = counts with the previous position unbroken/broken.
    r0, r1 = 1, 0
    for ch in x:
        if ch == "1":
            r0, r1 = r0, r0 + r1
        elif ch == "0":
            r0, r1 = r0 + r1, r1
        elif ch == "2":
            r0, r1 = r0, r0
        else:  # "3"
            r0, r1 = 0, r0
    return r0


def prime(h: GenStringOrZero) -> GenStringOrZero:
    """Add two to the leading digit of ``h`` and normalize.

    Models a broken unit arriving from the left.  The leading 2 or 3 is
    rewritten away (``2h -> 1h``, ``3 1^i 0 h -> 1h``); a string of the
    form ``1^j`` (including the empty string) has no such reduction and
    collapses to the canonical unbreakable string ``"3"``, which keeps
    ``g_value(prime(h)) = 0`` while ``double_prime("3") = "2"`` still
    carries one representation.  Inputs whose leading digit is already
    2 or 3 would need a digit broken twice, so they map to
    :data:`BOTTOM`.
    """
    if isinstance(h, Bottom):
        return BOTTOM
    _check_digits(h)
    if not h:
        return "3"
    lead = h[0]
    if lead == "0":
        return "1" + h[1:]  # 0+2 = 2, then 2h -> 1h
    if lead in "23":
        return BOTTOM
    # lead == "1": the string starts 3 1^i ...; find the end of the run.
    i = 1
    while i < len(h) and h[i] == "1":
        i += 1
    if i == len(h):
        return "3"
    if h[i] == "0":
        return "1" + h[i + 1 :]
    return BOTTOM  # 3 1^i followed by 2/3: double break, no representations


def double_prime(h: GenStringOrZero) -> GenStringOrZero:
    """Strip trailing zeros and decrement the last digit of ``h``.

    Models donating a broken unit to a string on the right.  All-zero
    or empty input has nothing to donate and yields :data:`BOTTOM`.
    """
    if isinstance(h, Bottom):
        return BOTTOM
    _check_digits(h)
    stripped = h.rstrip("0")
    if not stripped:
        return BOTTOM
    last = stripped[-1]
    return stripped[:-1] + str(int(last) - 1)


def g_split(x: str, y: str) -> int:
    """Evaluate ``G(xy)`` by splitting: ``G(x)G(y) + G(x'')G(y')``.

    The two summands count the representations of the concatenation in
    which the boundary bit does not / does break.
    """
    return g_value(x) * g_value(y) + g_value(double_prime(x)) * g_value(prime(y))


class Comparator(enum.Enum):
    """Dominance relations justifying substring replacements.

    ``INFIX`` compares whole matrices, ``SUFFIX`` only the reachable
    column (right boundary fixed), ``PREFIX`` only the reachable row
    (left boundary fixed).  Infix dominance implies the other two.
    """

    INFIX = "infix"
    SUFFIX = "suffix"
    PREFIX = "prefix"


def dominates(kind: Comparator, t: str, y: str) -> bool:
    """Whether ``t`` dominates ``y`` under the given comparator.

    Entrywise comparison of ``mu(t)`` against ``mu(y)`` (INFIX), of
    ``mu(.) @ COLUMN_END`` (SUFFIX), or of ``ROW_START @ mu(.)``
    (PREFIX).  Only the matrix inequality is tested; callers combine it
    with ``[t]_2 < [y]_2`` when using it to rule out record candidates.
    """
    mt, my = mu_of(t), mu_of(y)
    if kind is Comparator.INFIX:
        return mt.dominates(my)
    if kind is Comparator.SUFFIX:
        return mt.g >= my.g and mt.g_p >= my.g_p
    if kind is Comparator.PREFIX:
        return mt.g >= my.g and mt.g_dp >= my.g_dp
    raise TypeError(f"unknown comparator {kind!r}")


def delta(x: str) -> int:
    """Number of 0s minus number of 1s in a binary string.

    For concatenations of 10/100 blocks this counts the 100 blocks.
    """
    _check_binary(x)
    return x.count("0") - x.count("1")
