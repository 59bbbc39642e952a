"""Shared corpora and independent re-checkers used across test modules.

The fixed puzzles below were found by exhaustive search with the naive
definition checker and are verified again inside the tests that use them.
"""

from __future__ import annotations

from itertools import combinations, product
from random import Random

from trifree import PuzzleSet

# smallest verified puzzle (lexicographically) for each size
FIXED_USP_ROWS = {
    1: ((1, 2, 3),),
    2: ((1, 1), (2, 3)),
    3: ((1, 1, 1), (1, 2, 3), (2, 3, 1)),
    4: ((1, 1, 1), (1, 2, 3), (2, 3, 1), (3, 2, 2)),
}


def fixed_usp(s: int) -> PuzzleSet:
    rows = FIXED_USP_ROWS[s]
    return PuzzleSet(len(rows[0]), rows)


def exhaustive_small_puzzles() -> list[PuzzleSet]:
    """Every puzzle with width <= 2 and 1..3 rows (136 in total)."""
    out = []
    for k in (1, 2):
        alphabet = sorted(product((1, 2, 3), repeat=k))
        for s in (1, 2, 3):
            for rows in combinations(alphabet, s):
                out.append(PuzzleSet(k, rows))
    return out


def random_puzzle(rng: Random, max_width: int = 4, max_rows: int = 4) -> PuzzleSet:
    k = rng.randint(1, max_width)
    s = rng.randint(1, min(max_rows, 3**k))
    rows: set[tuple[int, ...]] = set()
    while len(rows) < s:
        rows.add(tuple(rng.randint(1, 3) for _ in range(k)))
    return PuzzleSet(k, tuple(rows))


def ap_violation_exists_naive(modulus: int, elements: tuple[int, ...]) -> bool:
    """Cubic transliteration of the progression condition."""
    n = len(elements)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if i == j == k:
                    continue
                if (elements[i] + elements[j]) % modulus == (2 * elements[k]) % modulus:
                    return True
    return False


def usp_triple_violates(
    rows: tuple[tuple[int, ...], ...],
    p1: tuple[int, ...],
    p2: tuple[int, ...],
    p3: tuple[int, ...],
) -> bool:
    """Replay a claimed witness against the raw puzzle definition:
    a not-all-equal triple violates when no cell sees two of the three
    symbol events."""
    if p1 == p2 == p3:
        return False
    k = len(rows[0])
    for r in range(len(rows)):
        for i in range(k):
            hits = (
                (rows[p1[r]][i] == 1)
                + (rows[p2[r]][i] == 2)
                + (rows[p3[r]][i] == 3)
            )
            if hits >= 2:
                return False
    return True


def pmf_triple_sums_consistently(family, p1, p2, p3) -> bool:
    """Replay a claimed family witness: every index sums consistently."""
    triples = family.triples
    return all(
        (triples[p1[i]][0].value ^ triples[p2[i]][1].value) == triples[p3[i]][2].value
        for i in range(len(triples))
    )
