"""Acceptance gate: every shipping criterion, exact and timed where a time
bound applies, printing one PASS/FAIL line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdict lines.
"""

import time

from stringcycles import arith, cli, cyclecount, enumeration, sumcount

REFERENCE_CYCLES = {1: 5, 2: 10, 3: 40, 4: 150, 6: 2580, 12: 20343700}


def verdict(number, description, ok):
    print(f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {description}")
    assert ok, f"criterion {number} failed: {description}"


def test_criterion_01_reference_table_from_the_cli(capsys):
    started = time.perf_counter()
    code = cli.main(["table", "--alphabet", "5", "--length", "12"])
    elapsed = time.perf_counter() - started
    out = capsys.readouterr().out
    cycles = {}
    for line in out.splitlines():
        cells = line.split()
        if cells and cells[0].isdigit():
            cycles[int(cells[0])] = int(cells[1])
    with capsys.disabled():
        verdict(1, "reference table (A=5, N=12) exact via closed form, under 1 s",
                code == 0 and cycles == REFERENCE_CYCLES and elapsed < 1.0)


def test_criterion_02_reference_grand_total():
    table = cyclecount.cycle_table(5, 12)
    total = sum(n * row.cycles for n, row in table.rows.items())
    verdict(2, "grand total of the reference table is exactly 5**12 = 244140625",
            total == 244140625 == 5**12)


def test_criterion_03_exhaustive_cells_match_closed_form():
    started = time.perf_counter()
    ok = True
    for alphabet in range(1, 5):
        for length in range(1, 11):
            cells = enumeration.classify_all(alphabet, length)
            for total in range(length * (alphabet - 1) + 1):
                for order in arith.divisors(length):
                    expected = cyclecount.strings_of_order(alphabet, length, total, order)
                    cycles, strings = cells.get((total, order), (0, 0))
                    ok = ok and strings == expected and strings == cycles * order
    elapsed = time.perf_counter() - started
    verdict(3, f"all cells match for A<=4, N<=10, every sum ({elapsed:.1f} s, limit 120 s)",
            ok and elapsed < 120.0)


def test_criterion_04_awkward_shapes_match_the_table():
    ok = True
    for alphabet, length in [(5, 7), (3, 12)]:
        cells = enumeration.classify_all(alphabet, length)
        by_order = {n: [0, 0] for n in arith.divisors(length)}
        for (_, order), (cycles, strings) in cells.items():
            by_order[order][0] += cycles
            by_order[order][1] += strings
        table = cyclecount.cycle_table(alphabet, length)
        for n, row in table.rows.items():
            ok = ok and tuple(by_order[n]) == (row.cycles, row.strings)
        ok = ok and sum(s for _, s in cells.values()) == alphabet**length
    verdict(4, "enumeration totals match the table for (A=5, N=7) and (A=3, N=12)", ok)


def test_criterion_05_closed_form_equals_recursion():
    ok = True
    for alphabet in range(1, 5):
        for length in range(1, 13):
            for total in range(length * (alphabet - 1) + 1):
                full = cyclecount.strings_of_order_full(alphabet, length, total)
                recursive = cyclecount.strings_of_order_recursive(alphabet, length, total)
                ok = ok and full == recursive
    verdict(5, "closed form equals the peeling recursion for A<=4, N<=12, every sum", ok)


def test_criterion_06_alternating_sum_equals_generating_function():
    ok = True
    for alphabet in range(1, 9):
        for length in range(1, 11):
            coeffs = sumcount.sum_distribution_gf(alphabet, length)
            for total, coeff in enumerate(coeffs):
                ok = ok and coeff == sumcount.strings_with_sum(alphabet, length, total)
            ok = ok and sum(coeffs) == alphabet**length
    verdict(6, "alternating sum equals generating-function coefficients for A<=8, N<=10", ok)


def test_criterion_07_chain_tallies_equal_q():
    started = time.perf_counter()
    ok = all(
        arith.chain_tally(k).delta == arith.q_coefficient(k) for k in range(1, 201)
    )
    elapsed = time.perf_counter() - started
    verdict(7, f"chain tally delta equals q for K = 1..200 ({elapsed:.2f} s, limit 10 s)",
            ok and elapsed < 10.0)


def test_criterion_08_worked_chain_coefficients_for_length_twelve():
    coefficients = [arith.chain_tally(12 // n).delta for n in (12, 6, 4, 3, 2, 1)]
    verdict(8, "chain-derived coefficients for N=12 are +1, -1, -1, 0, +1, 0",
            coefficients == [1, -1, -1, 0, 1, 0])


def test_criterion_09_prime_length_totals_recover_fermat():
    ok = True
    for length in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        for alphabet in range(1, 21):
            total = cyclecount.strings_of_order_total(alphabet, length)
            ok = ok and total == alphabet**length - alphabet
            ok = ok and total % length == 0
    verdict(9, "prime-length totals equal A**N - A and are divisible by N", ok)


def test_criterion_10_order_divides_its_total():
    ok = all(
        cyclecount.strings_of_order_total(alphabet, order) % order == 0
        for alphabet in range(1, 21)
        for order in range(1, 31)
    )
    verdict(10, "every order divides its sum-free string total (A<=20, n<=30)", ok)


def test_criterion_11_verify_flags_an_injected_fault(capsys, monkeypatch):
    original = arith.q_coefficient
    monkeypatch.setattr(arith, "q_coefficient", lambda nu: original(nu) + 1)
    code = cli.main(["verify", "--alphabet", "3", "--length", "6"])
    capsys.readouterr()
    with capsys.disabled():
        verdict(11, "verify exits with code 2 under an injected off-by-one in q",
                code == 2)
