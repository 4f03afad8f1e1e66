"""Command-line calculator for string and cycle counts.

Subcommands:
    count-sum         one exact count of strings with a given digit sum
    sum-distribution  the whole digit-sum histogram
    table             cycle and string counts per orbit order
    verify            cross-check the closed forms against exhaustive enumeration

Every number is printed as an exact decimal string, never floating point.
Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 enumeration
budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import arith, cyclecount, enumeration, sumcount

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags, but 2 is reserved here for
    # verification mismatches; usage errors are remapped to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text!r}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="stringcycles",
        description="Exact counts of strings by digit sum and cyclic-shift orbit order.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    count = sub.add_parser("count-sum", help="count strings with one digit sum")
    count.add_argument("--alphabet", type=_positive_int, required=True,
                       help="alphabet size (symbols 0..A-1)")
    count.add_argument("--length", type=_positive_int, required=True,
                       help="string length")
    count.add_argument("--sum", type=_nonnegative_int, required=True,
                       help="target digit sum")
    count.set_defaults(func=_cmd_count_sum)

    dist = sub.add_parser("sum-distribution", help="counts for every digit sum")
    dist.add_argument("--alphabet", type=_positive_int, required=True,
                      help="alphabet size (symbols 0..A-1)")
    dist.add_argument("--length", type=_positive_int, required=True,
                      help="string length")
    dist.add_argument("--format", choices=("text", "csv", "json"), default="text",
                      help="output format (default text)")
    dist.set_defaults(func=_cmd_sum_distribution)

    table = sub.add_parser("table", help="cycle and string counts per orbit order")
    table.add_argument("--alphabet", type=_positive_int, required=True,
                       help="alphabet size (symbols 0..A-1)")
    table.add_argument("--length", type=_positive_int, required=True,
                       help="string length")
    table.add_argument("--sum", type=_nonnegative_int, default=None,
                       help="restrict to one digit sum")
    table.add_argument("--format", choices=("text", "csv", "json"), default="text",
                       help="output format (default text)")
    table.set_defaults(func=_cmd_table)

    verify = sub.add_parser("verify", help="check the formulas against enumeration")
    verify.add_argument("--alphabet", type=_positive_int, required=True,
                        help="alphabet size (symbols 0..A-1)")
    verify.add_argument("--length", type=_positive_int, required=True,
                        help="string length")
    verify.add_argument("--budget", type=_positive_int,
                        default=enumeration.DEFAULT_BUDGET,
                        help="largest word count to enumerate (default 10**8)")
    verify.set_defaults(func=_cmd_verify)

    return parser


def _cmd_count_sum(args: argparse.Namespace) -> int:
    print(sumcount.strings_with_sum(args.alphabet, args.length, args.sum))
    return EXIT_OK


def _aligned(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> list[str]:
    table = [header, *rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table]


def _cmd_sum_distribution(args: argparse.Namespace) -> int:
    counts = sumcount.sum_distribution_gf(args.alphabet, args.length)
    total = sum(counts)
    if args.format == "text":
        for m, count in enumerate(counts):
            print(f"{m} {count}")
        print(f"total {total}")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["sum", "strings"])
        for m, count in enumerate(counts):
            writer.writerow([m, count])
        writer.writerow(["total", total])
    else:
        record = {
            "alphabet": args.alphabet,
            "length": args.length,
            "rows": [
                {"sum": m, "strings": str(count)} for m, count in enumerate(counts)
            ],
            "total_strings": str(total),
        }
        print(json.dumps(record, indent=2))
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    table = cyclecount.cycle_table(args.alphabet, args.length, args.sum)
    ordered = sorted(table.rows.items())
    if args.format == "text":
        lines = [f"alphabet {table.alphabet}", f"length {table.length}"]
        if table.target_sum is not None:
            lines.append(f"sum {table.target_sum}")
        body = [(str(n), str(row.cycles), str(row.strings)) for n, row in ordered]
        body.append(("total", "", str(table.total_strings)))
        lines.extend(_aligned(("order", "cycles", "strings"), body))
        print("\n".join(lines))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["order", "cycles", "strings"])
        for n, row in ordered:
            writer.writerow([n, row.cycles, row.strings])
        writer.writerow(["total", "", table.total_strings])
    else:
        record: dict[str, object] = {
            "alphabet": table.alphabet,
            "length": table.length,
        }
        if table.target_sum is not None:
            record["sum"] = table.target_sum
        record["rows"] = [
            {"order": n, "cycles": str(row.cycles), "strings": str(row.strings)}
            for n, row in ordered
        ]
        record["total_strings"] = str(table.total_strings)
        print(json.dumps(record, indent=2))
    return EXIT_OK


def _report(label: str, mismatches: list[str]) -> bool:
    if mismatches:
        print(f"FAIL {label}")
        for line in mismatches[:10]:
            print(f"  {line}", file=sys.stderr)
        if len(mismatches) > 10:
            print(f"  ... and {len(mismatches) - 10} more", file=sys.stderr)
        return False
    print(f"PASS {label}")
    return True


def _check_cells(
    alphabet: int, length: int, cells: dict[tuple[int, int], tuple[int, int]]
) -> bool:
    mismatches = []
    checked = 0
    for total in range(length * (alphabet - 1) + 1):
        for order in arith.divisors(length):
            expected = cyclecount.strings_of_order(alphabet, length, total, order)
            cycles, strings = cells.get((total, order), (0, 0))
            if strings != expected or strings != cycles * order:
                mismatches.append(
                    f"sum={total} order={order}: enumerated {strings} strings, "
                    f"closed form gives {expected}"
                )
            checked += 1
    return _report(
        f"enumerated orbit cells match the closed-form counts ({checked} cells)",
        mismatches,
    )


def _check_recursion(alphabet: int, length: int) -> bool:
    mismatches = []
    sums = range(length * (alphabet - 1) + 1)
    for total in sums:
        full = cyclecount.strings_of_order_full(alphabet, length, total)
        recursive = cyclecount.strings_of_order_recursive(alphabet, length, total)
        if full != recursive:
            mismatches.append(
                f"sum={total}: closed form {full}, recursion {recursive}"
            )
    return _report(
        f"closed form matches the peeling recursion ({len(sums)} digit sums)",
        mismatches,
    )


def _check_chains(length: int) -> bool:
    mismatches = []
    checked = arith.divisors(length)
    for k in checked:
        delta = arith.chain_tally(k).delta
        q = arith.q_coefficient(k)
        if delta != q:
            mismatches.append(f"k={k}: chain tally delta {delta}, coefficient q {q}")
    return _report(
        f"divisor-chain tallies match the coefficient q ({len(checked)} divisors)",
        mismatches,
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        cells = enumeration.classify_all(args.alphabet, args.length, budget=args.budget)
    except enumeration.BudgetExceededError as exc:
        print(exc, file=sys.stderr)
        return EXIT_BUDGET
    ok = _check_cells(args.alphabet, args.length, cells)
    ok = _check_recursion(args.alphabet, args.length) and ok
    ok = _check_chains(args.length) and ok
    return EXIT_OK if ok else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
