"""Command-line frontend.

Subcommands::

    value    exact sequence values by recurrence, matrix product, or DP
    records  record-setter listings from brute-force scan or closed forms
    verify   run the verification suites, exit non-zero on any failure
    plot     emit "n, a(n), running maximum" rows for external plotting
    table    reproduce the three frozen reference tables

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 memory
budget exceeded (override the budget with ``STERNSEQ_MAX_BITS``).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

import numpy as np

from .budget import (
    MAX_BITS_ENV_VAR,
    BudgetExceededError,
    check_bits_budget,
    memory_ceiling_bits,
)
from .closedform import CLOSED_FORM_MIN_BITS, cross_validate, generate_kbit
from .core import hyperbinary_count_dp, stern_a, stern_range, stern_s
from .fibonacci import fib
from .records import (
    audit_substring_properties,
    records_in_bitlength,
    records_scan,
    verify_dominance_witnesses,
    verify_extremal_lemmas,
)
from .strings import g_split, g_value, mu_of
from .tables import (
    FIRST_RECORDS,
    INITIAL_VALUES,
    SMALL_BITLENGTH_MAX,
    SMALL_BITLENGTH_RECORDS,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FORMATS = ("plain", "csv", "jsonlines", "bfile")
SUITES = ("tables", "identities", "substrings", "extremal", "crossval")

IDENTITY_SAMPLES = 10_000
IDENTITY_SEED = 20220926


@dataclass(frozen=True)
class RecordRow:
    index: int
    value: int
    k: int
    family: str | None

    @property
    def bits(self) -> str:
        return format(self.index, "b")


def _emit(lines, out) -> None:
    for line in lines:
        print(line, file=out)


def format_records(rows: list[RecordRow], fmt: str):
    """Render record rows in one of the output formats.

    ``bfile`` follows the OEIS flat-file convention ("index value" per
    line); ``jsonlines`` string-encodes the integers so arbitrarily
    large values survive tools that parse numbers as doubles.
    """
    if fmt == "bfile":
        return (f"{r.index} {r.value}" for r in rows)
    if fmt == "plain":
        return (
            f"{r.index} {r.bits} {r.value}" + (f" {r.family}" if r.family else "")
            for r in rows
        )
    if fmt == "csv":
        header = ["index,bits,value,k,family"]
        return iter(
            header
            + [f"{r.index},{r.bits},{r.value},{r.k},{r.family or ''}" for r in rows]
        )
    if fmt == "jsonlines":

        def lines():
            for r in rows:
                doc = {"index": str(r.index), "bits": r.bits, "value": str(r.value), "k": r.k}
                if r.family is not None:
                    doc["family"] = r.family
                yield json.dumps(doc)

        return lines()
    raise ValueError(f"unknown format {fmt!r}")


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse OEIS b-file lines ("n value", comments starting with #)."""
    pairs = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        n, value = line.split()
        pairs.append((int(n), int(value)))
    return pairs


def _family_lookup(k: int) -> dict[int, str]:
    if k < CLOSED_FORM_MIN_BITS:
        return {}
    return {
        entry.index: entry.descriptor.family_id
        for entry in generate_kbit(k)
        if entry.descriptor is not None
    }


def _rows_from_scan(k: int, convention: str, exact_bits: bool) -> list[RecordRow]:
    records = records_in_bitlength(k, convention) if exact_bits else records_scan(k, convention)
    shift = 1 if convention == "S" else 0
    families: dict[int, dict[int, str]] = {}
    rows = []
    for r in records:
        lookup = families.setdefault(r.bit_length, _family_lookup(r.bit_length))
        rows.append(
            RecordRow(
                index=r.index,
                value=r.value,
                k=r.bit_length,
                family=lookup.get(r.index + shift),
            )
        )
    return rows


def _rows_from_closed_form(k: int, convention: str, exact_bits: bool) -> list[RecordRow]:
    rows = []
    for kk in range(1, k + 1) if not exact_bits else (k,):
        for entry in generate_kbit(kk):
            family = entry.descriptor.family_id if entry.descriptor else None
            index = entry.index if convention == "A" else entry.index - 1
            if exact_bits and index.bit_length() != kk:
                continue  # the 1-bit record maps to s-index 0
            rows.append(
                RecordRow(index=index, value=entry.stern_value, k=index.bit_length(), family=family)
            )
    return rows


# ----------------------------- subcommands -----------------------------


def cmd_value(args) -> int:
    n = args.n
    if n < 0:
        print("error: the index must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    shifted = n if args.convention == "S" else n - 1
    if args.method == "recurrence":
        value = stern_s(n) if args.convention == "S" else stern_a(n)
    elif args.method == "dp":
        value = 0 if shifted < 0 else hyperbinary_count_dp(shifted)
    else:  # matrix
        value = 0 if shifted < 0 else g_value(format(shifted, "b"))
    print(value)
    return EXIT_OK


def cmd_records(args) -> int:
    exact_bits = args.bits is not None
    k = args.bits if exact_bits else args.max_bits
    if k < 1:
        print("error: bit length must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.source == "scan":
        rows = _rows_from_scan(k, args.convention, exact_bits)
    else:
        rows = _rows_from_closed_form(k, args.convention, exact_bits)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        _emit(format_records(rows, args.format), out)
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def cmd_plot(args) -> int:
    if args.max < 0:
        print("error: --max must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    check_bits_budget(args.max.bit_length(), f"plot of values up to index {args.max}")
    values = stern_range(0, args.max + 1, np.int64)
    running = np.maximum.accumulate(values)
    sep = "," if args.format == "csv" else " "
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        _emit(
            (f"{n}{sep}{int(a)}{sep}{int(m)}" for n, (a, m) in enumerate(zip(values, running))),
            out,
        )
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def cmd_table(args) -> int:
    if args.which == 1:
        for n in range(16):
            print(n, stern_a(n))
    elif args.which == 2:
        for i, record in enumerate(records_scan(8, "A")[: len(FIRST_RECORDS)]):
            print(i, record.index, record.value)
    else:
        for k in range(1, SMALL_BITLENGTH_MAX + 1):
            for record in records_in_bitlength(k, "A"):
                print(k, record.bits, record.index)
    return EXIT_OK


# ----------------------------- verify suites -----------------------------


def _suite_tables(lo: int, hi: int):
    failures = []
    checked = 0
    for n, expected in enumerate(INITIAL_VALUES):
        checked += 1
        if stern_a(n) != expected:
            failures.append(f"a({n}) = {stern_a(n)}, reference says {expected}")
    scanned = [(r.index, r.value) for r in records_scan(8, "A")[: len(FIRST_RECORDS)]]
    checked += len(FIRST_RECORDS)
    if scanned != list(FIRST_RECORDS):
        failures.append("first record-setters do not match the reference list")
    for k in range(max(lo, 1), min(hi, SMALL_BITLENGTH_MAX) + 1):
        found = [r.bits for r in records_in_bitlength(k, "A")]
        checked += len(found)
        if tuple(found) != SMALL_BITLENGTH_RECORDS[k]:
            failures.append(f"{k}-bit record-setters do not match the reference list")
    return checked, failures


def _random_binary(rng: random.Random, max_len: int) -> str:
    length = rng.randint(0, max_len)
    return "".join(rng.choice("01") for _ in range(length))


def _suite_identities():
    failures = []
    rng = random.Random(IDENTITY_SEED)
    checked = 0
    for _ in range(IDENTITY_SAMPLES):
        x = _random_binary(rng, 12)
        y = _random_binary(rng, 24 - len(x))
        checked += 1
        if mu_of(x + y) != mu_of(x) * mu_of(y):
            failures.append(f"matrix homomorphism fails for {x!r} + {y!r}")
        if g_split(x, y) != g_value(x + y):
            failures.append(f"split identity fails for {x!r} + {y!r}")
        z = _random_binary(rng, 20)
        if g_value(z) != stern_s(int(z, 2) if z else 0):
            failures.append(f"g_value({z!r}) disagrees with the shifted sequence")
    for i in range(1, 41):
        checked += 1
        block = "10" * i
        ok = (
            g_value(block) == fib(2 * i + 1)
            and g_value(block + "0") == fib(2 * i + 2)
            and g_value("1" + block) == fib(2 * i + 2)
            and g_value("1" + block + "0") == fib(2 * i + 3)
            and mu_of(block).rows
            == ((fib(2 * i + 1), fib(2 * i)), (fib(2 * i), fib(2 * i - 1)))
        )
        if not ok:
            failures.append(f"Fibonacci value identities fail for (10)^{i}")
    witness_report = verify_dominance_witnesses()
    checked += witness_report.checked_count
    failures.extend(f"witness {name} (index {idx})" for idx, name in witness_report.violations)
    return checked, failures


def _suite_substrings(hi: int):
    report = audit_substring_properties(hi)
    failures = [f"index {idx}: {prop}" for idx, prop in report.violations]
    notes = [f"index {idx}: {note}" for idx, note in report.informational]
    return report.checked_count, failures, notes


def _suite_extremal():
    report = verify_extremal_lemmas(8)
    return report.checked_count, [f"{prop} (at {idx})" for idx, prop in report.violations]


def _suite_crossval(lo: int, hi: int):
    failures = []
    checked = 0
    for k in range(max(lo, 1), hi + 1):
        ok, discrepancies = cross_validate(k)
        checked += 1
        if not ok:
            failures.extend(discrepancies)
    return checked, failures


def _parse_k_range(text: str) -> tuple[int, int]:
    lo_str, sep, hi_str = text.partition("..")
    if not sep:
        raise ValueError
    lo, hi = int(lo_str), int(hi_str)
    if lo < 1 or hi < lo:
        raise ValueError
    return lo, hi


def cmd_verify(args) -> int:
    try:
        lo, hi = _parse_k_range(args.k_range)
    except ValueError:
        print(f"error: --k-range must look like 1..12, got {args.k_range!r}", file=sys.stderr)
        return EXIT_USAGE
    suites = args.suites.split(",") if args.suites else list(SUITES)
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        print(f"error: unknown suites {unknown}; pick from {','.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    any_failed = False
    for suite in suites:
        notes: list[str] = []
        if suite == "tables":
            checked, failures = _suite_tables(lo, hi)
        elif suite == "identities":
            checked, failures = _suite_identities()
        elif suite == "substrings":
            checked, failures, notes = _suite_substrings(hi)
        elif suite == "extremal":
            checked, failures = _suite_extremal()
        else:
            checked, failures = _suite_crossval(lo, hi)
        status = "PASS" if not failures else "FAIL"
        any_failed = any_failed or bool(failures)
        print(f"{suite:<11} {status}  checked={checked}")
        for note in notes:
            print(f"  note: {note}")
        for failure in failures[:20]:
            print(f"  FAIL: {failure}")
        if len(failures) > 20:
            print(f"  ... and {len(failures) - 20} more")
    return EXIT_VERIFY_FAILED if any_failed else EXIT_OK


# ----------------------------- parser -----------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sternseq",
        description="Stern diatomic sequence: values, record-setters, verification.",
        epilog=(
            f"Dense scans are limited to indices below 2**{memory_ceiling_bits()} "
            f"(override with {MAX_BITS_ENV_VAR})."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_value = sub.add_parser("value", help="print one sequence value")
    p_value.add_argument("n", type=int)
    p_value.add_argument("--convention", choices=("A", "S"), default="A")
    p_value.add_argument(
        "--method", choices=("recurrence", "matrix", "dp"), default="recurrence"
    )
    p_value.set_defaults(func=cmd_value)

    p_records = sub.add_parser("records", help="list record-setters")
    group = p_records.add_mutually_exclusive_group(required=True)
    group.add_argument("--max-bits", type=int, help="all records below 2**K")
    group.add_argument("--bits", type=int, help="records with exactly K bits")
    p_records.add_argument("--convention", choices=("A", "S"), default="A")
    p_records.add_argument("--source", choices=("scan", "closed-form"), default="scan")
    p_records.add_argument("--format", choices=FORMATS, default="plain")
    p_records.add_argument("--output", help="write to a file instead of stdout")
    p_records.set_defaults(func=cmd_records)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--k-range", default="1..12", help="bit-length range, e.g. 12..24")
    p_verify.add_argument("--suites", help=f"comma-separated subset of {','.join(SUITES)}")
    p_verify.set_defaults(func=cmd_verify)

    p_plot = sub.add_parser("plot", help="emit n, a(n), running-maximum rows")
    p_plot.add_argument("--max", type=int, required=True)
    p_plot.add_argument("--format", choices=("csv", "plain"), default="csv")
    p_plot.add_argument("--output", help="write to a file instead of stdout")
    p_plot.set_defaults(func=cmd_plot)

    p_table = sub.add_parser(
        "table",
        help="reproduce a reference table: 1 = first values, "
        "2 = first record-setters, 3 = per-bit-length record-setters",
    )
    p_table.add_argument("which", type=int, choices=(1, 2, 3))
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
