"""Stern diatomic sequence toolkit.

Exact computation of the sequence (OEIS A002487) by recurrence,
hyperbinary enumeration, and digit dynamic programming; the 2x2
transfer-matrix calculus on digit strings behind it; brute-force
scanning and auditing of its record-setters (A212288/A212289); and the
closed-form classification of all record-setters from 12 bits on.
"""

from .budget import BudgetExceededError, memory_ceiling_bits
from .closedform import (
    ClosedFormEntry,
    FamilyDescriptor,
    closed_form_index,
    closed_form_stern_value,
    count_kbit,
    cross_validate,
    family_descriptors,
    generate_kbit,
    render_bits,
)
from .core import (
    HyperbinaryEnumeration,
    SternRow,
    hyperbinary_count_dp,
    hyperbinary_enumerate,
    stern_a,
    stern_range,
    stern_row,
    stern_s,
)
from .fibonacci import fib, lucas
from .records import (
    AuditReport,
    RecordSetter,
    audit_substring_properties,
    records_in_bitlength,
    records_scan,
    verify_extremal_lemmas,
)
from .strings import (
    BOTTOM,
    Bottom,
    Comparator,
    Mat2,
    delta,
    dominates,
    double_prime,
    g_split,
    g_value,
    mu_of,
    prime,
)

__version__ = "0.1.0"

__all__ = [
    "BOTTOM",
    "AuditReport",
    "Bottom",
    "BudgetExceededError",
    "ClosedFormEntry",
    "Comparator",
    "FamilyDescriptor",
    "HyperbinaryEnumeration",
    "Mat2",
    "RecordSetter",
    "SternRow",
    "audit_substring_properties",
    "closed_form_index",
    "closed_form_stern_value",
    "count_kbit",
    "cross_validate",
    "delta",
    "dominates",
    "double_prime",
    "family_descriptors",
    "fib",
    "g_split",
    "g_value",
    "generate_kbit",
    "hyperbinary_count_dp",
    "hyperbinary_enumerate",
    "lucas",
    "memory_ceiling_bits",
    "mu_of",
    "prime",
    "records_in_bitlength",
    "records_scan",
    "render_bits",
    "stern_a",
    "stern_range",
    "stern_row",
    "stern_s",
    "verify_extremal_lemmas",
]
