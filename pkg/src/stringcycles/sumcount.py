"""Counting strings by digit sum: a closed-form alternating sum and the
generating-function expansion that independently produces the same numbers.
"""

from __future__ import annotations

from . import arith


def _require_instance(alphabet: int, length: int) -> None:
    if alphabet < 1:
        raise ValueError(f"alphabet size must be >= 1, got {alphabet}")
    if length < 1:
        raise ValueError(f"string length must be >= 1, got {length}")


def strings_with_sum(alphabet: int, length: int, total: int) -> int:
    """Number of length-`length` strings over {0, ..., alphabet-1} whose
    symbols sum to `total`.

    Evaluates de Moivre's alternating sum

        sum_{n=0}^{floor(total/alphabet)}
            (-1)**n C(length, n) C(length - 1 + total - n*alphabet, length - 1)

    in exact signed arithmetic. Sums outside 0 .. length*(alphabet-1) are
    valid queries and count 0.
    """
    _require_instance(alphabet, length)
    if total < 0 or total > length * (alphabet - 1):
        return 0
    acc = 0
    for n in range(total // alphabet + 1):
        term = arith.binomial(length, n) * arith.binomial(
            length - 1 + total - n * alphabet, length - 1
        )
        acc += -term if n % 2 else term
    assert acc >= 0, "alternating sum must end nonnegative"
    return acc


def sum_distribution_gf(alphabet: int, length: int) -> list[int]:
    """Coefficient list of (1 + z + ... + z**(alphabet-1)) ** length.

    Entry m is the number of strings with digit sum m, for
    m = 0 .. length*(alphabet-1). Exact integer arithmetic throughout;
    multiplying by the all-ones factor is a sliding-window sum, done with
    prefix sums so each of the `length` expansion steps is linear.
    """
    _require_instance(alphabet, length)
    coeffs = [1]
    for _ in range(length):
        prefix = [0]
        for c in coeffs:
            prefix.append(prefix[-1] + c)
        width = len(coeffs)
        coeffs = [
            prefix[min(m + 1, width)] - prefix[max(0, m - alphabet + 1)]
            for m in range(width + alphabet - 1)
        ]
    return coeffs
