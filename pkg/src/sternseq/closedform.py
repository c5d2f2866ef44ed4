"""Closed-form description of the k-bit record-setters.

From 12 bits on, the record-setters of the diatomic sequence fall into
three families for even bit lengths ``k = 2n``::

    E1:  100 (10)^a 0 (10)^(n-3-a) 11     0 <= a <= n-3
    E2:  (10)^b 0 (10)^(n-b-1) 1          1 <= b <= floor(n/2)
    E3:  (10)^(n-1) 11

and five for odd bit lengths ``k = 2n+1``::

    O1:  1000 (10)^(n-2) 1
    O2:  100100 (10)^(n-4) 011
    O3:  100 (10)^b 0 (10)^(n-2-b) 1      1 <= b <= ceil(n/2)-1
    O4:  (10)^(a+1) 0 (10)^(n-2-a) 11     0 <= a <= n-2
    O5:  (10)^n 1

giving ``floor(3k/4) - (-1)^k`` record-setters per bit length.  Each
family also has an explicit integer index (a geometric sum, exact
division by 3) and an explicit Stern value built from Fibonacci and
Lucas products; below 12 bits the record-setters are irregular and ship
as frozen data (:mod:`sternseq.tables`).

Everything here is cross-checked against the brute-force scan by
:func:`cross_validate`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import stern_a
from .fibonacci import fib, lucas
from .records import records_in_bitlength
from .tables import SMALL_BITLENGTH_MAX, SMALL_BITLENGTH_RECORDS

__all__ = [
    "ClosedFormEntry",
    "FamilyDescriptor",
    "closed_form_index",
    "closed_form_stern_value",
    "count_kbit",
    "cross_validate",
    "family_descriptors",
    "fib",
    "generate_kbit",
    "lucas",
    "render_bits",
]

CLOSED_FORM_MIN_BITS = SMALL_BITLENGTH_MAX + 1

EVEN_FAMILIES = ("E1", "E2", "E3")
ODD_FAMILIES = ("O1", "O2", "O3", "O4", "O5")


@dataclass(frozen=True)
class FamilyDescriptor:
    """One record-setter pattern: family id plus its free parameter."""

    parity: str  # "even" | "odd"
    family_id: str
    parameter: int | None = None

    def __post_init__(self):
        families = EVEN_FAMILIES if self.parity == "even" else ODD_FAMILIES
        if self.parity not in ("even", "odd") or self.family_id not in families:
            raise ValueError(f"unknown family {self.parity}/{self.family_id}")


@dataclass(frozen=True)
class ClosedFormEntry:
    """A concrete record-setter: bits, integer index, and Stern value."""

    index: int
    bits: str
    stern_value: int
    descriptor: FamilyDescriptor | None = None


def _parameter_range(family_id: str, n: int) -> range | None:
    if family_id == "E1":
        return range(0, n - 2)
    if family_id == "E2":
        return range(1, n // 2 + 1)
    if family_id == "O3":
        return range(1, (n + 1) // 2)
    if family_id == "O4":
        return range(0, n - 1)
    return None  # E3, O1, O2, O5 take no parameter


def _check_descriptor(descriptor: FamilyDescriptor, n: int) -> None:
    param_range = _parameter_range(descriptor.family_id, n)
    if param_range is None:
        if descriptor.parameter is not None:
            raise ValueError(f"{descriptor.family_id} takes no parameter")
        return
    if descriptor.parameter is None or descriptor.parameter not in param_range:
        raise ValueError(
            f"{descriptor.family_id} parameter must lie in "
            f"[{param_range.start}, {param_range.stop - 1}] for n={n}, "
            f"got {descriptor.parameter}"
        )


def render_bits(descriptor: FamilyDescriptor, n: int) -> str:
    """Binary string of the record-setter described by ``descriptor``.

    ``n`` is the half-length: the result has ``2n`` bits for even
    families and ``2n + 1`` bits for odd ones.
    """
    _check_descriptor(descriptor, n)
    p = descriptor.parameter
    match descriptor.family_id:
        case "E1":
            return "100" + "10" * p + "0" + "10" * (n - 3 - p) + "11"
        case "E2":
            return "10" * p + "0" + "10" * (n - p - 1) + "1"
        case "E3":
            return "10" * (n - 1) + "11"
        case "O1":
            return "1000" + "10" * (n - 2) + "1"
        case "O2":
            return "100100" + "10" * (n - 4) + "011"
        case "O3":
            return "100" + "10" * p + "0" + "10" * (n - 2 - p) + "1"
        case "O4":
            return "10" * (p + 1) + "0" + "10" * (n - 2 - p) + "11"
        case "O5":
            return "10" * n + "1"
    raise AssertionError


def _exact_third(numerator: int) -> int:
    q, r = divmod(numerator, 3)
    if r:
        raise ArithmeticError(f"{numerator} is not divisible by 3")
    return q


def closed_form_index(descriptor: FamilyDescriptor, n: int) -> int:
    """Integer index of the record-setter, by geometric-sum closed form."""
    _check_descriptor(descriptor, n)
    p = descriptor.parameter
    match descriptor.family_id:
        case "E1":
            return (1 << (2 * n - 1)) + _exact_third(
                (1 << (2 * n - 2)) - (1 << (2 * n - 2 * p - 3)) + 1
            )
        case "E2":
            return _exact_third((1 << (2 * n + 1)) - (1 << (2 * n - 2 * p)) - 1)
        case "E3":
            return _exact_third((1 << (2 * n + 1)) + 1)
        case "O1":
            return (1 << (2 * n)) + _exact_third((1 << (2 * n - 2)) - 1)
        case "O2":
            return (
                (1 << (2 * n))
                + (1 << (2 * n - 3))
                + _exact_third((1 << (2 * n - 4)) - 7)
            )
        case "O3":
            return (1 << (2 * n)) + _exact_third(
                (1 << (2 * n - 1)) - (1 << (2 * n - 2 * p - 2)) - 1
            )
        case "O4":
            return _exact_third((1 << (2 * n + 2)) - (1 << (2 * n - 2 * p - 1)) + 1)
        case "O5":
            return _exact_third((1 << (2 * n + 2)) - 1)
    raise AssertionError


def closed_form_stern_value(descriptor: FamilyDescriptor, n: int) -> int:
    """Stern value of the record-setter, as a Fibonacci/Lucas product."""
    _check_descriptor(descriptor, n)
    p = descriptor.parameter
    match descriptor.family_id:
        case "E1":
            return lucas(2 * p + 3) * fib(2 * n - 2 * p - 3) + lucas(2 * p + 1) * fib(
                2 * n - 2 * p - 4
            )
        case "E2":
            return fib(2 * p + 2) * fib(2 * n - 2 * p) + fib(2 * p) * fib(
                2 * n - 2 * p - 1
            )
        case "E3":
            return fib(2 * n + 1)
        case "O1":
            return fib(2 * n + 1) + fib(2 * n - 4)
        case "O2":
            return fib(2 * n + 1) + 8 * fib(2 * n - 8)
        case "O3":
            return lucas(2 * p + 3) * fib(2 * n - 2 * p - 2) + lucas(2 * p + 1) * fib(
                2 * n - 2 * p - 3
            )
        case "O4":
            return fib(2 * p + 4) * fib(2 * n - 2 * p - 1) + fib(2 * p + 2) * fib(
                2 * n - 2 * p - 2
            )
        case "O5":
            return fib(2 * n + 2)
    raise AssertionError


def _half_length(k: int) -> int:
    return k // 2 if k % 2 == 0 else (k - 1) // 2


def family_descriptors(k: int) -> list[FamilyDescriptor]:
    """All family descriptors for bit length ``k >= 12``."""
    if k < CLOSED_FORM_MIN_BITS:
        raise ValueError(f"closed forms start at {CLOSED_FORM_MIN_BITS} bits, got {k}")
    n = _half_length(k)
    parity = "even" if k % 2 == 0 else "odd"
    families = EVEN_FAMILIES if parity == "even" else ODD_FAMILIES
    out = []
    for family_id in families:
        param_range = _parameter_range(family_id, n)
        if param_range is None:
            out.append(FamilyDescriptor(parity, family_id))
        else:
            out.extend(FamilyDescriptor(parity, family_id, p) for p in param_range)
    return out


def count_kbit(k: int) -> int:
    """Number of record-setters with exactly ``k`` bits."""
    if k < 1:
        raise ValueError("bit length must be >= 1")
    if k <= SMALL_BITLENGTH_MAX:
        return len(SMALL_BITLENGTH_RECORDS[k])
    return (3 * k) // 4 - (-1) ** k


def generate_kbit(k: int) -> list[ClosedFormEntry]:
    """All ``k``-bit record-setters with indices and Stern values.

    Below 12 bits the entries come from the frozen table (values via
    the recurrence); from 12 bits on every family is instantiated over
    its parameter range.  The list is sorted by index and verified to
    be strictly increasing with the expected count.
    """
    if k < 1:
        raise ValueError("bit length must be >= 1")
    if k <= SMALL_BITLENGTH_MAX:
        entries = [
            ClosedFormEntry(index=int(bits, 2), bits=bits, stern_value=stern_a(int(bits, 2)))
            for bits in SMALL_BITLENGTH_RECORDS[k]
        ]
    else:
        n = _half_length(k)
        entries = []
        for descriptor in family_descriptors(k):
            bits = render_bits(descriptor, n)
            entries.append(
                ClosedFormEntry(
                    index=int(bits, 2),
                    bits=bits,
                    stern_value=closed_form_stern_value(descriptor, n),
                    descriptor=descriptor,
                )
            )
    entries.sort(key=lambda e: e.index)
    if any(a.index >= b.index for a, b in zip(entries, entries[1:])):
        raise RuntimeError(f"family instantiation for k={k} produced duplicate indices")
    if len(entries) != count_kbit(k) or any(e.index.bit_length() != k for e in entries):
        raise RuntimeError(f"family instantiation for k={k} is inconsistent")
    return entries


def cross_validate(k: int) -> tuple[bool, list[str]]:
    """Compare the closed forms for ``k`` bits against the brute-force scan.

    Checks element-wise equality of indices, binary forms, and Stern
    values, and (for ``k >= 12``) that each closed-form index formula
    reproduces its rendered bits.  Returns ``(ok, discrepancies)``.
    """
    expected = generate_kbit(k)
    scanned = records_in_bitlength(k, "A")
    discrepancies: list[str] = []
    if len(expected) != len(scanned):
        discrepancies.append(
            f"k={k}: closed form yields {len(expected)} entries, scan found {len(scanned)}"
        )
    for entry, record in zip(expected, scanned):
        if entry.index != record.index:
            discrepancies.append(
                f"k={k}: index mismatch {entry.index} (closed form) vs {record.index} (scan)"
            )
            continue
        if entry.stern_value != record.value:
            discrepancies.append(
                f"k={k}, index {entry.index}: value {entry.stern_value} (closed form) "
                f"vs {record.value} (scan)"
            )
        if entry.bits != record.bits:
            discrepancies.append(f"k={k}, index {entry.index}: binary form mismatch")
    if k >= CLOSED_FORM_MIN_BITS:
        n = _half_length(k)
        for entry in expected:
            formula_index = closed_form_index(entry.descriptor, n)
            if formula_index != entry.index:
                discrepancies.append(
                    f"k={k}, {entry.descriptor.family_id}"
                    f"(parameter={entry.descriptor.parameter}): index formula gives "
                    f"{formula_index}, rendered bits give {entry.index}"
                )
    return (not discrepancies, discrepancies)
