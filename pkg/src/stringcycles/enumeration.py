"""Exhaustive ground truth: materialize whole instance spaces, rotate words,
and classify every orbit by (digit sum, order).

Everything here is deliberately direct - rotations are compared wholesale
and orbits are found by scanning all alphabet**length words - so the closed
forms elsewhere can be checked against code that shares none of their
machinery. Memory stays bounded by the number of distinct cells, not words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import arith

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """The instance would enumerate more words than the configured budget."""

    def __init__(self, alphabet: int, length: int, budget: int):
        self.alphabet = alphabet
        self.length = length
        self.budget = budget
        super().__init__(
            f"enumerating {alphabet}**{length} = {alphabet**length} words "
            f"exceeds the budget of {budget}"
        )


@dataclass(frozen=True)
class Word:
    """A fixed-length word over the alphabet {0, ..., alphabet-1}."""

    symbols: tuple[int, ...]
    alphabet: int

    def __post_init__(self) -> None:
        if self.alphabet < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.alphabet}")
        if len(self.symbols) < 1:
            raise ValueError("a word must contain at least one symbol")
        for s in self.symbols:
            if not 0 <= s < self.alphabet:
                raise ValueError(
                    f"symbol {s} outside the alphabet {{0..{self.alphabet - 1}}}"
                )

    def __len__(self) -> int:
        return len(self.symbols)


def digit_sum(word: Word) -> int:
    """Sum of all symbols of the word."""
    return sum(word.symbols)


def shift(word: Word) -> Word:
    """One cyclic shift: the last symbol moves to the front."""
    syms = word.symbols
    return Word(syms[-1:] + syms[:-1], word.alphabet)


def word_order(word: Word) -> int:
    """Smallest n >= 1 with shift applied n times giving the word back,
    found by literally shifting until it reappears."""
    rotated = shift(word)
    n = 1
    while rotated != word:
        rotated = shift(rotated)
        n += 1
    return n


def canonical_rotation(word: Word) -> Word:
    """The lexicographically smallest rotation; two words share it exactly
    when one is a rotation of the other."""
    n = len(word.symbols)
    doubled = word.symbols + word.symbols
    best = min(doubled[i : i + n] for i in range(n))
    return Word(best, word.alphabet)


def _require_budget(alphabet: int, length: int, budget: int) -> None:
    if alphabet < 1:
        raise ValueError(f"alphabet size must be >= 1, got {alphabet}")
    if length < 1:
        raise ValueError(f"string length must be >= 1, got {length}")
    if alphabet**length > budget:
        raise BudgetExceededError(alphabet, length, budget)


def _orbit_scan(alphabet: int, length: int) -> Iterator[tuple[tuple[int, ...], int]]:
    # Yield (representative, order) once per orbit, the representative being
    # the lexicographically smallest rotation. A word is skipped as soon as a
    # strictly smaller rotation shows up; the first rotation equal to the word
    # is its order, and rotations beyond it only repeat earlier ones.
    for word in itertools.product(range(alphabet), repeat=length):
        doubled = word + word
        order = length
        minimal = True
        for r in range(1, length):
            rotation = doubled[r : r + length]
            if rotation < word:
                minimal = False
                break
            if rotation == word:
                order = r
                break
        if minimal:
            yield word, order


def classify_all(
    alphabet: int, length: int, budget: int = DEFAULT_BUDGET
) -> dict[tuple[int, int], tuple[int, int]]:
    """Scan all alphabet**length words and bucket their orbits by
    (digit sum, order).

    Returns a map {(sum, order): (orbit count, word count)}; each orbit is
    recorded exactly once, at its minimal rotation, and cells that would be
    zero are simply absent. Instances larger than `budget` words raise
    BudgetExceededError before any work is done.
    """
    _require_budget(alphabet, length, budget)
    cells: dict[tuple[int, int], tuple[int, int]] = {}
    for word, order in _orbit_scan(alphabet, length):
        key = (sum(word), order)
        cycles, strings = cells.get(key, (0, 0))
        cells[key] = (cycles + 1, strings + order)
    return cells


def epicycle_construction_check(
    alphabet: int, length: int, budget: int = DEFAULT_BUDGET
) -> bool:
    """Confirm by inspection that short orbits are stacked copies of
    full-order cores.

    True iff every orbit of order n < length has a representative made of
    length/n copies of a length-n word whose own order is n, and every
    full-order orbit of each shorter divisor length lifts to exactly one
    order-n orbit of the long words.
    """
    _require_budget(alphabet, length, budget)
    reps = dict(_orbit_scan(alphabet, length))
    for order in arith.divisors(length):
        if order == length:
            continue
        copies = length // order
        found = {rep for rep, n in reps.items() if n == order}
        for rep in found:
            core = rep[:order]
            if rep != core * copies:
                return False
            if word_order(Word(core, alphabet)) != order:
                return False
        lifted = {
            core * copies for core, n in _orbit_scan(alphabet, order) if n == order
        }
        if found != lifted:
            return False
    return True
