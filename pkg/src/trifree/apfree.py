"""Subsets of Z_m with no three-term arithmetic progression.

A set B of residues is progression-free mod m when no b1, b2, b3 in B with
not all three equal satisfy b1 + b2 = 2*b3 (mod m).  Only odd moduli are
supported: 2 is then invertible, which the downstream puzzle construction
relies on.  Elements are stored as integers in [1, m], so m itself stands
for the zero residue.

Provides a quadratic verifier, a Behrend-style sphere construction that
also considers a greedy baseline, a plain greedy construction, and an
exhaustive maximum search for small moduli.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError


@dataclass(frozen=True)
class APFreeSet:
    """A set of residues mod an odd modulus, candidates for AP-freeness.

    Construction checks well-formedness only (odd modulus, strictly
    increasing elements in [1, m]); the progression property itself is
    checked by apfree_verify.
    """

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.modulus
        if not isinstance(m, int) or m < 1 or m % 2 == 0:
            raise ValueError(f"modulus must be an odd positive integer, got {m!r}")
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        prev = 0
        for e in elems:
            if not isinstance(e, int) or not 1 <= e <= m:
                raise ValueError(f"element {e!r} outside [1, {m}]")
            if e <= prev:
                raise ValueError("elements must be strictly increasing")
            prev = e

    @property
    def size(self) -> int:
        return len(self.elements)


def apfree_verify(s: APFreeSet) -> tuple[bool, tuple[int, int, int] | None]:
    """Check AP-freeness in O(n^2) hashed lookups.

    Returns (True, None) if no violating triple exists, otherwise
    (False, (i, j, k)) with 1-based element indices such that
    b_i + b_j = 2*b_k (mod m) and not i == j == k.  The witness is the
    first violation met in a fixed (i, k) scan, so it is deterministic.
    """
    m = s.modulus
    elems = s.elements
    index = {e % m: pos for pos, e in enumerate(elems, start=1)}
    for i, bi in enumerate(elems, start=1):
        for k, bk in enumerate(elems, start=1):
            j = index.get((2 * bk - bi) % m)
            if j is not None and not (i == j == k):
                return False, (i, j, k)
    return True, None


def _residues(s: APFreeSet) -> set[int]:
    return {e % s.modulus for e in s.elements}


def _can_add(x: int, residues: set[int], m: int) -> bool:
    """Whether residue x extends an AP-free residue set without violation."""
    # progressions a + b = 2x and a + x = 2c with a, b, c already present;
    # triples using x twice would force x equal to an existing residue
    for a in residues:
        if (2 * x - a) % m in residues:
            return False
    for c in residues:
        if (2 * c - x) % m in residues:
            return False
    return True


def greedy_construct(m: int) -> APFreeSet:
    """Scan 1..m in order, keeping every element that stays AP-free."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"modulus must be an odd positive integer, got {m!r}")
    chosen: list[int] = []
    residues: set[int] = set()
    for x in range(1, m + 1):
        r = x % m
        if _can_add(r, residues, m):
            chosen.append(x)
            residues.add(r)
    return APFreeSet(m, tuple(chosen))


def _sphere_candidate(m: int, d: int) -> tuple[int, ...]:
    """Digit-sphere elements of [1, (m-1)/2] for digit bound d.

    Integers are written in base q = 2d - 1 with digits below d, so integer
    addition of two of them never carries; the most populous fixed value of
    the sum of squared digits is kept.  Restricting to [1, (m-1)/2] makes
    the integer progression-freeness survive reduction mod m.
    """
    upper = (m - 1) // 2
    if upper < 1:
        return ()
    q = 2 * d - 1
    positions = 1
    while q**positions <= upper:
        positions += 1
    spheres: dict[int, list[int]] = {}
    digits = list(range(d))

    def extend(pos: int, value: int, radius: int) -> None:
        if pos == positions:
            if 1 <= value <= upper:
                spheres.setdefault(radius, []).append(value)
            return
        base = q**pos
        for dig in digits:
            v = value + dig * base
            if v > upper:
                break
            extend(pos + 1, v, radius + dig * dig)

    extend(0, 0, 0)
    if not spheres:
        return ()
    best_radius = max(spheres, key=lambda r: (len(spheres[r]), -r))
    return tuple(sorted(spheres[best_radius]))


def behrend_construct(m: int, *, max_digit: int = 8) -> APFreeSet:
    """Best verified AP-free set found by the digit-sphere sweep.

    Sweeps the digit bound d = 2..max_digit, takes the most populous sphere
    for each d, adds the greedy construction as one more candidate, verifies
    every candidate, and keeps the largest verified one.  Ties keep the
    earlier candidate (smallest d; greedy is considered last).
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"modulus must be an odd integer >= 3, got {m!r}")
    candidates = [_sphere_candidate(m, d) for d in range(2, max_digit + 1)]
    candidates.append(greedy_construct(m).elements)
    best: APFreeSet | None = None
    for elems in candidates:
        cand = APFreeSet(m, elems)
        ok, _ = apfree_verify(cand)
        if ok and (best is None or cand.size > best.size):
            best = cand
    assert best is not None  # greedy always verifies
    return best


def apfree_bruteforce_max(m: int, *, limit: int = 31) -> APFreeSet:
    """Exhaustive maximum AP-free subset of Z_m for small odd m.

    Branch and bound over elements in increasing order; the bound prunes a
    branch when even taking every remaining element cannot beat the best
    set found so far.  Intended as an oracle; m above `limit` is refused.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"modulus must be an odd positive integer, got {m!r}")
    if m > limit:
        raise BudgetExceededError(
            f"exhaustive search refused for m={m} > {limit}; use behrend_construct"
        )
    best: list[int] = []
    current: list[int] = []
    residues: set[int] = set()

    def search(start: int) -> None:
        nonlocal best
        if len(current) > len(best):
            best = current.copy()
        for x in range(start, m + 1):
            if len(current) + (m - x + 1) <= len(best):
                break
            r = x % m
            if _can_add(r, residues, m):
                current.append(x)
                residues.add(r)
                search(x + 1)
                current.pop()
                residues.remove(r)

    search(1)
    return APFreeSet(m, tuple(best))
