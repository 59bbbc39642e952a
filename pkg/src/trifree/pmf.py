"""Perfect-matching-free vector families and hard function triples.

A family of triples (a_i, b_i, c_i) over GF(2)^k with c_i = a_i + b_i is
matching-free when only the aligned permutation triple sums consistently:
for every (p1, p2, p3) not all equal there is an index i with
a_{p1(i)} + b_{p2(i)} != c_{p3(i)}.

Uniquely solvable puzzles map onto such families coordinatewise
(1 -> a-bit, 2 -> b-bit, anything but 3 -> c-bit).  Blowing a family up by
permuting and concatenating its blocks yields three function supports of
size s! in which every support vector lies on exactly one triangle; such
instances are the hard inputs for the triangle-freeness tester.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .errors import BudgetExceededError
from .gf2 import GF2Vector, vec_add, vec_concat
from .usp import PuzzleSet

Perm = tuple[int, ...]
# ("sum", i): c_i != a_i + b_i at index i.
# ("perm", (p1, p2, p3)): a not-all-equal permutation triple summing
# consistently at every index.
PmfWitness = tuple[str, object]

DEFAULT_PAIR_BUDGET = factorial(6) ** 2
DEFAULT_TRIPLE_BUDGET = factorial(4) ** 3
DEFAULT_PERM_BUDGET = factorial(6)


@dataclass(frozen=True)
class PMFFamily:
    """An indexed sequence of vector triples (a_i, b_i, c_i).

    Kept as a sequence, not a set: repeated triples are retained, since the
    matching-freeness condition quantifies over indices.  Construction
    checks dimensions only; the sum condition and matching-freeness are
    checked by pmf_verify.
    """

    dim: int
    triples: tuple[tuple[GF2Vector, GF2Vector, GF2Vector], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")
        triples = tuple(tuple(tr) for tr in self.triples)
        object.__setattr__(self, "triples", triples)
        for tr in triples:
            if len(tr) != 3:
                raise ValueError(f"expected (a, b, c) triples, got {tr!r}")
            for v in tr:
                if not isinstance(v, GF2Vector) or v.dim != self.dim:
                    raise ValueError(f"vector {v!r} does not have dimension {self.dim}")

    @property
    def size(self) -> int:
        return len(self.triples)


@dataclass(frozen=True)
class FunctionTriple:
    """Three Boolean functions on GF(2)^dim, stored as support sets."""

    dim: int
    supports: tuple[frozenset[GF2Vector], frozenset[GF2Vector], frozenset[GF2Vector]]

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")
        supports = tuple(frozenset(s) for s in self.supports)
        object.__setattr__(self, "supports", supports)
        if len(supports) != 3:
            raise ValueError("expected exactly three supports")
        for s in supports:
            for v in s:
                if not isinstance(v, GF2Vector) or v.dim != self.dim:
                    raise ValueError(f"support vector {v!r} does not have dimension {self.dim}")

    @property
    def support_sizes(self) -> tuple[int, int, int]:
        return tuple(len(s) for s in self.supports)  # type: ignore[return-value]


def usp_to_pmf(u: PuzzleSet) -> PMFFamily:
    """Map puzzle rows to vector triples coordinatewise.

    a has 1 where the row has symbol 1, b where it has 2, and c where it
    has anything but 3; hence c = a + b at every row.  Rows are taken in
    the puzzle's canonical sorted order.
    """
    triples = []
    for row in u.rows:
        a = GF2Vector.from_bits([1 if e == 1 else 0 for e in row])
        b = GF2Vector.from_bits([1 if e == 2 else 0 for e in row])
        c = GF2Vector.from_bits([1 if e != 3 else 0 for e in row])
        triples.append((a, b, c))
    return PMFFamily(u.width, tuple(triples))


def _sum_violation(f: PMFFamily) -> PmfWitness | None:
    for i, (a, b, c) in enumerate(f.triples):
        if vec_add(a, b) != c:
            return ("sum", i)
    return None


def pmf_verify(
    f: PMFFamily, *, budget: int = DEFAULT_PAIR_BUDGET
) -> tuple[bool, PmfWitness | None]:
    """Check both family conditions over (s!)^2 permutation pairs.

    Substituting i -> p3^-1(i) shows (p1, p2, p3) sums consistently iff
    (p1 p3^-1, p2 p3^-1, id) does, so the third permutation is normalized
    to the identity.  Returns (True, None), or (False, ("sum", i)) when
    c_i != a_i + b_i, or (False, ("perm", (p1, p2, id))) for the first
    consistently-summing not-all-equal pair in lexicographic order.
    """
    bad = _sum_violation(f)
    if bad is not None:
        return False, bad
    s = f.size
    if s <= 1:
        return True, None
    if factorial(s) ** 2 > budget:
        raise BudgetExceededError(
            f"({s}!)^2 = {factorial(s) ** 2} permutation pairs exceed budget {budget}"
        )
    avals = [a.value for a, _, _ in f.triples]
    bvals = [b.value for _, b, _ in f.triples]
    cvals = [c.value for _, _, c in f.triples]
    identity = tuple(range(s))
    perms = list(permutations(range(s)))
    idx = range(s)
    for p1 in perms:
        for p2 in perms:
            if p1 == identity and p2 == identity:
                continue
            if all(avals[p1[i]] ^ bvals[p2[i]] == cvals[i] for i in idx):
                return False, ("perm", (p1, p2, identity))
    return True, None


def pmf_verify_bruteforce(
    f: PMFFamily, *, budget: int = DEFAULT_TRIPLE_BUDGET
) -> tuple[bool, PmfWitness | None]:
    """Check both family conditions over all (s!)^3 permutation triples.

    Deliberately naive oracle for cross-validating pmf_verify on small s.
    """
    bad = _sum_violation(f)
    if bad is not None:
        return False, bad
    s = f.size
    if s <= 1:
        return True, None
    if factorial(s) ** 3 > budget:
        raise BudgetExceededError(
            f"({s}!)^3 = {factorial(s) ** 3} permutation triples exceed budget {budget}; "
            "use pmf_verify"
        )
    avals = [a.value for a, _, _ in f.triples]
    bvals = [b.value for _, b, _ in f.triples]
    cvals = [c.value for _, _, c in f.triples]
    perms = list(permutations(range(s)))
    idx = range(s)
    for p1 in perms:
        for p2 in perms:
            for p3 in perms:
                if p1 == p2 == p3:
                    continue
                if all(avals[p1[i]] ^ bvals[p2[i]] == cvals[p3[i]] for i in idx):
                    return False, ("perm", (p1, p2, p3))
    return True, None


def blowup(f: PMFFamily, *, budget: int = DEFAULT_PERM_BUDGET) -> FunctionTriple:
    """Expand a family into function supports of (at most) s! vectors.

    For every permutation p of the s indices, concatenate a_{p(1)},...,
    a_{p(s)} into one support vector of f1; likewise b's for f2 and c's
    for f3.  For matching-free families the concatenations are distinct
    and every support vector lies on exactly one triangle.
    """
    s = f.size
    if s < 1:
        raise ValueError("cannot blow up an empty family")
    if factorial(s) > budget:
        raise BudgetExceededError(f"{s}! = {factorial(s)} permutations exceed budget {budget}")
    sup_a = set()
    sup_b = set()
    sup_c = set()
    for p in permutations(range(s)):
        sup_a.add(vec_concat([f.triples[i][0] for i in p]))
        sup_b.add(vec_concat([f.triples[i][1] for i in p]))
        sup_c.add(vec_concat([f.triples[i][2] for i in p]))
    return FunctionTriple(f.dim * s, (frozenset(sup_a), frozenset(sup_b), frozenset(sup_c)))


def reduce_to_single(t: FunctionTriple) -> FunctionTriple:
    """Fold a triple into one shared function on two extra coordinates.

    The new function holds (1,0)++x for x in supp f1, (0,1)++y for y in
    supp f2, and (1,1)++z for z in supp f3; vectors prefixed (0,0) are
    absent.  The prefixes are their own XOR triangle, so the distinct
    triangles of the folded instance are exactly those of the input while
    the domain grows by a factor of 4.
    """
    n = t.dim
    shared = set()
    for prefix, support in zip((0b10, 0b01, 0b11), t.supports):
        for v in support:
            shared.add(GF2Vector(n + 2, (prefix << n) | v.value))
    folded = frozenset(shared)
    return FunctionTriple(n + 2, (folded, folded, folded))


def replicate(t: FunctionTriple, copies: int) -> FunctionTriple:
    """Place `copies` disjoint copies of an instance side by side.

    Copy b of a vector occupies block b of `copies` blocks of the original
    dimension; ceil(log2 copies) tag coordinates are appended, carrying the
    block index for f1 and f2 vectors and zero for f3 vectors.  A sampled
    pair (x, y) can then only complete a triangle when both land in the
    same block (the tag of x+y must vanish), so the triangle count is
    exactly `copies` times the input's.
    """
    if not isinstance(copies, int) or copies < 1:
        raise ValueError(f"copies must be a positive integer, got {copies!r}")
    if copies == 1:
        return t
    n = t.dim
    ntag = (copies - 1).bit_length()
    dim = copies * n + ntag
    new_supports = []
    for role, support in enumerate(t.supports):
        out = set()
        for block in range(copies):
            tag = 0 if role == 2 else block
            for v in support:
                # content sits in block `block`, tag bits trail at the end
                value = v.value << ((copies - 1 - block) * n + ntag) | tag
                out.add(GF2Vector(dim, value))
        new_supports.append(frozenset(out))
    return FunctionTriple(dim, tuple(new_supports))
