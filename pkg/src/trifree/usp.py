"""Uniquely solvable puzzles over the alphabet {1, 2, 3}.

A puzzle set is a collection of distinct rows u in {1,2,3}^k.  It is
uniquely solvable when for every triple of row permutations (p1, p2, p3)
that are not all equal, some row u and column i see at least two of the
events (p1 u)_i = 1, (p2 u)_i = 2, (p3 u)_i = 3.

Two verifiers are provided: a direct transliteration of the definition
over all (s!)^3 permutation triples, and a reduced check over (s!)^2 pairs
that normalizes the first permutation to the identity (substituting
u' = p1(u) shows the property only depends on p2 p1^-1 and p3 p1^-1).

Construction is randomized: random column weights mod m define residue maps
on index sets, and disjoint index triples whose residues agree on a fixed
AP-free target set become puzzle rows.  AP-freeness of the targets is what
forbids the mixed coincidences, so the output is always uniquely solvable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial

from .apfree import APFreeSet, behrend_construct
from .errors import BudgetExceededError
from .rng import check_seed, substream

Perm = tuple[int, ...]
Witness = tuple[Perm, Perm, Perm]

DEFAULT_BRUTE_BUDGET = factorial(6)
DEFAULT_REDUCED_BUDGET = factorial(8) ** 2
DEFAULT_BLOCK_BUDGET = 4


@dataclass(frozen=True)
class PuzzleSet:
    """Distinct rows over {1,2,3}, kept sorted for a canonical form."""

    width: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.width, int) or self.width < 1:
            raise ValueError(f"width must be a positive integer, got {self.width!r}")
        rows = tuple(sorted(tuple(r) for r in self.rows))
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if len(r) != self.width:
                raise ValueError(f"row {r!r} does not have width {self.width}")
            if any(e not in (1, 2, 3) for e in r):
                raise ValueError(f"row {r!r} has entries outside {{1,2,3}}")
        if len(set(rows)) != len(rows):
            raise ValueError("rows must be distinct")

    @property
    def size(self) -> int:
        return len(self.rows)


def usp_verify_bruteforce(
    u: PuzzleSet, *, budget: int = DEFAULT_BRUTE_BUDGET
) -> tuple[bool, Witness | None]:
    """Check unique solvability over all (s!)^3 permutation triples.

    Returns (True, None) or (False, (p1, p2, p3)) with the first violating
    triple in lexicographic order; permutations map row indices of the
    canonical (sorted) row order.  Kept deliberately naive as an oracle.
    """
    s = u.size
    if factorial(s) > budget:
        raise BudgetExceededError(
            f"{s}! = {factorial(s)} permutations exceed budget {budget}; "
            "use usp_verify_reduced"
        )
    rows = u.rows
    k = u.width
    perms = list(permutations(range(s)))
    for p1 in perms:
        for p2 in perms:
            for p3 in perms:
                if p1 == p2 == p3:
                    continue
                found = False
                for r in range(s):
                    for i in range(k):
                        hits = (
                            (rows[p1[r]][i] == 1)
                            + (rows[p2[r]][i] == 2)
                            + (rows[p3[r]][i] == 3)
                        )
                        if hits >= 2:
                            found = True
                            break
                    if found:
                        break
                if not found:
                    return False, (p1, p2, p3)
    return True, None


def _coincidence_tables(u: PuzzleSet) -> tuple[list[list[bool]], list[list[bool]], list[list[bool]]]:
    """p12[a][b]: some column has value 1 in row a and 2 in row b; same for 1/3 and 2/3."""
    rows = u.rows
    s = len(rows)
    k = u.width
    p12 = [[False] * s for _ in range(s)]
    p13 = [[False] * s for _ in range(s)]
    p23 = [[False] * s for _ in range(s)]
    for a in range(s):
        ra = rows[a]
        for b in range(s):
            rb = rows[b]
            for i in range(k):
                if ra[i] == 1 and rb[i] == 2:
                    p12[a][b] = True
                    break
            for i in range(k):
                if ra[i] == 1 and rb[i] == 3:
                    p13[a][b] = True
                    break
            for i in range(k):
                if ra[i] == 2 and rb[i] == 3:
                    p23[a][b] = True
                    break
    return p12, p13, p23


def usp_verify_reduced(
    u: PuzzleSet, *, budget: int = DEFAULT_REDUCED_BUDGET
) -> tuple[bool, Witness | None]:
    """Check unique solvability over (s!)^2 permutation pairs.

    The first permutation is normalized to the identity; a pair (p2, p3)
    violates iff no row index j has a two-symbol coincidence among
    (j, p2(j)), (j, p3(j)), (p2(j), p3(j)).  Coincidences are precomputed
    per ordered row pair, so each pair costs O(s).  Witnesses are reported
    as (identity, p2, p3), the first violation in lexicographic order.
    """
    s = u.size
    if s <= 1:
        return True, None
    if factorial(s) ** 2 > budget:
        raise BudgetExceededError(
            f"({s}!)^2 = {factorial(s) ** 2} permutation pairs exceed budget {budget}"
        )
    p12, p13, p23 = _coincidence_tables(u)
    identity = tuple(range(s))
    perms = list(permutations(range(s)))
    for p2 in perms:
        rows12 = [p12[j][p2[j]] for j in range(s)]
        for p3 in perms:
            if p2 == identity and p3 == identity:
                continue
            ok = False
            for j in range(s):
                if rows12[j] or p13[j][p3[j]] or p23[p2[j]][p3[j]]:
                    ok = True
                    break
            if not ok:
                return False, (identity, p2, p3)
    return True, None


@dataclass(frozen=True)
class CWConfig:
    """Everything needed to reproduce one randomized construction run."""

    t: int
    m: int
    weights: tuple[int, ...]
    apfree: APFreeSet
    seed: int

    def __post_init__(self) -> None:
        if not isinstance(self.t, int) or self.t < 1:
            raise ValueError(f"block size t must be a positive integer, got {self.t!r}")
        if self.m != 2 * comb(2 * self.t, self.t) + 1:
            raise ValueError(f"modulus {self.m} does not match 2*C({2*self.t},{self.t})+1")
        weights = tuple(self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != 3 * self.t + 1:
            raise ValueError(f"expected {3 * self.t + 1} weights, got {len(weights)}")
        if any(not isinstance(w, int) or not 0 <= w < self.m for w in weights):
            raise ValueError("weights must be integers in [0, m)")
        if self.apfree.modulus != self.m:
            raise ValueError(
                f"AP-free set has modulus {self.apfree.modulus}, construction needs {self.m}"
            )
        check_seed(self.seed)


@dataclass(frozen=True)
class TripleCandidate:
    """A disjoint index triple (ones, twos, threes) mapped to target b.

    The three sets partition 1..3t; the puzzle row it induces has symbol 1
    on `ones`, 2 on `twos`, 3 on `threes`.
    """

    ones: tuple[int, ...]
    twos: tuple[int, ...]
    threes: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        t = len(self.ones)
        if t < 1 or len(self.twos) != t or len(self.threes) != t:
            raise ValueError("the three index sets must have equal positive size")
        union = set(self.ones) | set(self.twos) | set(self.threes)
        if union != set(range(1, 3 * t + 1)):
            raise ValueError("index sets must partition 1..3t")

    def row(self) -> tuple[int, ...]:
        t = len(self.ones)
        row = [0] * (3 * t)
        for j in self.ones:
            row[j - 1] = 1
        for j in self.twos:
            row[j - 1] = 2
        for j in self.threes:
            row[j - 1] = 3
        return tuple(row)


@dataclass(frozen=True)
class CWSampleStats:
    """Per-target candidate counts, aligned with config.apfree.elements."""

    candidate_counts: tuple[int, ...]
    removed_counts: tuple[int, ...]
    kept: tuple[TripleCandidate, ...]

    @property
    def total_candidates(self) -> int:
        return sum(self.candidate_counts)

    @property
    def total_removed(self) -> int:
        return sum(self.removed_counts)


def beta_maps(subset: tuple[int, ...] | frozenset[int], config: CWConfig) -> tuple[int, int, int]:
    """Residue maps (bx, by, bz) of a t-subset of 1..3t under the weights.

    bx(S) = sum of weights over S; by(S) = w0 + that sum; bz(S) = the halved
    complement sum (w0 + sum over indices outside S) * (m+1)/2, all mod m.
    Halving is exact because m is odd.
    """
    t = config.t
    m = config.m
    w = config.weights
    s = set(subset)
    if len(s) != t or not s <= set(range(1, 3 * t + 1)):
        raise ValueError(f"subset must contain exactly {t} distinct indices from 1..{3 * t}")
    inner = sum(w[j] for j in s) % m
    bx = inner
    by = (w[0] + inner) % m
    comp = (w[0] + sum(w[j] for j in range(1, 3 * t + 1) if j not in s)) % m
    bz = comp * ((m + 1) // 2) % m
    return bx, by, bz


def cw_sample(
    t: int,
    seed: int,
    *,
    apfree: APFreeSet | None = None,
    budget: int = DEFAULT_BLOCK_BUDGET,
) -> tuple[PuzzleSet, CWConfig, CWSampleStats]:
    """One randomized construction run at block size t.

    Draws 3t+1 weights uniformly from [0, m) with m = 2*C(2t,t) + 1,
    enumerates disjoint index triples (I, J, K) whose bx(I) and by(J)
    residues agree on an element of the AP-free target set (bz(K) then
    agrees automatically), keeps the lexicographically smallest triple per
    target, and assembles the kept triples into puzzle rows.

    Returns the puzzle, the reproducing configuration, and per-target
    statistics (candidate counts before dedup, removed counts, kept
    triples).  The puzzle may be empty when no target is hit.
    """
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"block size t must be a positive integer, got {t!r}")
    if t > budget:
        raise BudgetExceededError(f"t={t} exceeds enumeration budget {budget}")
    check_seed(seed)
    m = 2 * comb(2 * t, t) + 1
    targets = behrend_construct(m) if apfree is None else apfree
    if targets.modulus != m:
        raise ValueError(f"AP-free set has modulus {targets.modulus}, t={t} needs {m}")

    rng = substream(seed)
    weights = tuple(rng.randrange(m) for _ in range(3 * t + 1))
    config = CWConfig(t=t, m=m, weights=weights, apfree=targets, seed=seed)

    by_target: dict[int, list[TripleCandidate]] = {b: [] for b in targets.elements}
    residue_of = {b % m: b for b in targets.elements}
    indices = range(1, 3 * t + 1)
    w = weights
    for ones in combinations(indices, t):
        bx = sum(w[j] for j in ones) % m
        b = residue_of.get(bx)
        if b is None:
            continue
        rest = [j for j in indices if j not in ones]
        for twos in combinations(rest, t):
            by = (w[0] + sum(w[j] for j in twos)) % m
            if by == bx:
                in_twos = set(twos)
                threes = tuple(j for j in rest if j not in in_twos)
                by_target[b].append(TripleCandidate(ones, twos, threes, b))

    kept: list[TripleCandidate] = []
    counts: list[int] = []
    removed: list[int] = []
    for b in targets.elements:
        cands = by_target[b]
        counts.append(len(cands))
        removed.append(max(len(cands) - 1, 0))
        if cands:
            # enumeration order is lexicographic in (ones, twos)
            kept.append(cands[0])
    stats = CWSampleStats(tuple(counts), tuple(removed), tuple(kept))
    puzzle = PuzzleSet(3 * t, tuple(c.row() for c in kept))
    return puzzle, config, stats


def cw_expected_size(t: int, apfree_size: int) -> Fraction:
    """Exact rational lower bound on the expected puzzle size.

    Each target contributes multinomial(3t; t, t, t) / m^2 expected
    candidates before dedup (bx(I) and by(J) are independent and uniform
    because w0 enters only by); subtracting the dedup-removal bound leaves
    at least a quarter of that, so the returned value is
    (1/4) * multinomial(3t; t, t, t) * m^-2 * apfree_size.
    """
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"block size t must be a positive integer, got {t!r}")
    if not isinstance(apfree_size, int) or apfree_size < 0:
        raise ValueError(f"apfree_size must be a non-negative integer, got {apfree_size!r}")
    m = 2 * comb(2 * t, t) + 1
    multinomial = comb(3 * t, t) * comb(2 * t, t)
    return Fraction(multinomial * apfree_size, 4 * m * m)
