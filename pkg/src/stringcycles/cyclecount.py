"""Counts of cyclic-shift orbits ("cycles") by order, with or without a fixed
digit sum.

Two routes compute the full-order count: a closed form driven by the
divisor-chain coefficient q, and a recursion that peels the short-orbit
contributions off the plain sum counts. The recursion never touches q, so
keeping both in the library gives a cheap online cross-check (`verify=True`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import arith, sumcount


class VerificationError(RuntimeError):
    """The closed form and the recursion disagreed."""


def _require_instance(alphabet: int, length: int) -> None:
    if alphabet < 1:
        raise ValueError(f"alphabet size must be >= 1, got {alphabet}")
    if length < 1:
        raise ValueError(f"string length must be >= 1, got {length}")


def order_set(alphabet: int, length: int, total: int) -> list[int]:
    """Admissible orbit orders for the instance: divisors n of `length` with
    length | total * n, in increasing order.

    The alphabet size never changes the set; it is accepted so call sites
    mirror the other counting functions.
    """
    if length < 1:
        raise ValueError(f"string length must be >= 1, got {length}")
    return [n for n in arith.divisors(length) if (total * n) % length == 0]


def strings_of_order_full(
    alphabet: int, length: int, total: int, *, verify: bool = False
) -> int:
    """Number of sum-`total` strings whose orbit has the full order `length`.

    Closed form: for each admissible order n, weight the plain count of the
    scaled-down instance (length n, sum total*n/length) by
    q(length/n) and add up. With verify=True the independent peeling
    recursion is evaluated as well and a disagreement raises
    VerificationError.
    """
    _require_instance(alphabet, length)
    count = 0
    for n in order_set(alphabet, length, total):
        count += arith.q_coefficient(length // n) * sumcount.strings_with_sum(
            alphabet, n, total * n // length
        )
    if verify:
        recursive = strings_of_order_recursive(alphabet, length, total)
        if count != recursive:
            raise VerificationError(
                f"closed form gives {count} but the recursion gives {recursive} "
                f"for alphabet={alphabet} length={length} sum={total}"
            )
    assert count >= 0
    return count


def strings_of_order(
    alphabet: int, length: int, total: int, order: int, *, verify: bool = False
) -> int:
    """Number of sum-`total` strings of length `length` on orbits of exactly
    `order`; 0 whenever the order is not admissible for the instance.
    """
    _require_instance(alphabet, length)
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if length % order != 0 or (total * order) % length != 0:
        return 0
    return strings_of_order_full(
        alphabet, order, total * order // length, verify=verify
    )


def strings_of_order_recursive(alphabet: int, length: int, total: int) -> int:
    """Full-order count by peeling: the plain sum count minus the strings on
    every shorter admissible order, each of those computed by the same
    recursion on its scaled-down instance.
    """
    _require_instance(alphabet, length)
    count = sumcount.strings_with_sum(alphabet, length, total)
    for n in order_set(alphabet, length, total):
        if n == length:
            continue
        count -= strings_of_order_recursive(alphabet, n, total * n // length)
    assert count >= 0
    return count


def strings_of_order_total(alphabet: int, order: int) -> int:
    """Number of strings on orbits of exactly `order`, any digit sum.

    Independent of the ambient string length: sum of
    q(order/k) * alphabet**k over the divisors k of `order`.
    """
    if alphabet < 1:
        raise ValueError(f"alphabet size must be >= 1, got {alphabet}")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return sum(
        arith.q_coefficient(order // k) * alphabet**k for k in arith.divisors(order)
    )


class OrderCount(NamedTuple):
    cycles: int
    strings: int


@dataclass(frozen=True)
class CountTable:
    """Cycle and string counts per orbit order for one instance, optionally
    restricted to one digit sum."""

    alphabet: int
    length: int
    target_sum: int | None
    rows: dict[int, OrderCount]

    @property
    def total_strings(self) -> int:
        return sum(row.strings for row in self.rows.values())

    @property
    def total_cycles(self) -> int:
        return sum(row.cycles for row in self.rows.values())


def cycle_table(
    alphabet: int,
    length: int,
    target_sum: int | None = None,
    *,
    verify: bool = False,
) -> CountTable:
    """Tabulate cycle and string counts for every admissible order.

    Without `target_sum` the orders are all divisors of `length` and each row
    counts strings of that exact order regardless of sum; with `target_sum`
    the orders come from order_set and rows count sum-restricted strings.
    Zero rows are kept so the table shape depends only on the instance.

    With verify=True every row is cross-checked: sum-restricted rows against
    the peeling recursion, sum-free rows against the sum over all digit sums.
    """
    _require_instance(alphabet, length)
    rows: dict[int, OrderCount] = {}
    if target_sum is None:
        for n in arith.divisors(length):
            strings = strings_of_order_total(alphabet, n)
            if verify:
                marginal = sum(
                    strings_of_order(alphabet, length, m, n)
                    for m in range(length * (alphabet - 1) + 1)
                )
                if marginal != strings:
                    raise VerificationError(
                        f"order {n}: sum over digit sums gives {marginal} "
                        f"but the direct total gives {strings}"
                    )
            assert strings % n == 0
            rows[n] = OrderCount(cycles=strings // n, strings=strings)
    else:
        for n in order_set(alphabet, length, target_sum):
            strings = strings_of_order(alphabet, length, target_sum, n, verify=verify)
            assert strings % n == 0
            rows[n] = OrderCount(cycles=strings // n, strings=strings)
    return CountTable(alphabet, length, target_sum, rows)
