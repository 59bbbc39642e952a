"""Canonical triangle-freeness tester, exact oracles, and query exponents.

A triangle in a function triple is a pair x, y with f1(x) = f2(y) =
f3(x+y) = 1.  The canonical tester samples (x, y) uniformly and reports a
detection when it hits a triangle; it never rejects a triangle-free input.
The oracles here enumerate triangles exactly over the sparse supports,
bound the edit distance to triangle-freeness from below by a
vertex-disjoint triangle packing, and evaluate the query-complexity
exponent alpha as a function of the family rate.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import log2, sqrt
from typing import NamedTuple

from .errors import BudgetExceededError
from .gf2 import GF2Vector
from .pmf import FunctionTriple
from .rng import check_seed, substream

DEFAULT_PAIR_BUDGET = 10**8
DEFAULT_EXACT_LIMIT = 20
Z_95 = 1.96


def enumerate_triangles(
    t: FunctionTriple, *, budget: int = DEFAULT_PAIR_BUDGET
) -> list[tuple[GF2Vector, GF2Vector]]:
    """List every pair (x, y) with x in f1, y in f2, x+y in f3.

    Pairs are role-ordered and each appears exactly once, in lexicographic
    order of (x, y); len() of the result is the per-sample hit count of the
    canonical tester.  Several pairs may describe the same three-vertex
    triangle when supports overlap; see distinct_triangle_count.
    """
    s1, s2, s3 = t.supports
    if len(s1) * len(s2) > budget:
        raise BudgetExceededError(
            f"{len(s1)}*{len(s2)} support pairs exceed budget {budget}"
        )
    v3 = {v.value for v in s3}
    dim = t.dim
    out = []
    for x in sorted(s1):
        xv = x.value
        for y in sorted(s2):
            if xv ^ y.value in v3:
                out.append((x, y))
    return out


def triangle_vertex_set(
    pair: tuple[GF2Vector, GF2Vector]
) -> frozenset[GF2Vector]:
    """The vertices {x, y, x+y} of a triangle, role information dropped."""
    x, y = pair
    return frozenset((x, y, GF2Vector(x.dim, x.value ^ y.value)))


def distinct_triangle_count(
    t: FunctionTriple, *, budget: int = DEFAULT_PAIR_BUDGET
) -> int:
    """Number of distinct vertex sets {x, y, x+y} among all triangles.

    On instances whose three supports are the same set, each triangle is
    found under six role-orderings; this counter is the role-free count
    that folding an instance into a single shared function preserves.
    """
    pairs = enumerate_triangles(t, budget=budget)
    return len({triangle_vertex_set(p) for p in pairs})


class PackingBound(NamedTuple):
    value: int
    exact: bool


def distance_lower_bound(
    t: FunctionTriple,
    *,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> PackingBound:
    """Lower-bound the support edits needed to reach triangle-freeness.

    Computes a maximum (or greedy maximal) packing of triangles with
    pairwise disjoint vertex sets.  Removing one support point can destroy
    at most one packed triangle, whether the supports are separate sets or
    one shared function, so the packing size is a sound lower bound in
    both readings.  Exact via branch and bound when the number of distinct
    triangles is at most exact_limit, greedy otherwise (exact=False).
    """
    pairs = enumerate_triangles(t, budget=budget)
    seen = set()
    vertex_sets: list[frozenset[int]] = []
    for x, y in pairs:
        vs = frozenset((x.value, y.value, x.value ^ y.value))
        if vs not in seen:
            seen.add(vs)
            vertex_sets.append(vs)
    if len(vertex_sets) <= exact_limit:
        return PackingBound(_max_disjoint(vertex_sets), True)
    used: set[int] = set()
    count = 0
    for vs in vertex_sets:
        if not (vs & used):
            used |= vs
            count += 1
    return PackingBound(count, False)


def _max_disjoint(vertex_sets: list[frozenset[int]]) -> int:
    n = len(vertex_sets)
    best = 0

    def search(i: int, used: frozenset[int], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + (n - i) <= best:
            return
        for j in range(i, n):
            vs = vertex_sets[j]
            if not (vs & used):
                search(j + 1, used | vs, size + 1)

    search(0, frozenset(), 0)
    return best


@dataclass(frozen=True)
class TesterReport:
    """Aggregated canonical-tester run, plus optional oracle enrichment."""

    queries_per_trial: int
    trials: int
    detections: int
    detection_rate: float
    detection_rate_stderr: float
    ci_low: float
    ci_high: float
    support_sizes: tuple[int, int, int]
    seed: int
    triangle_count: int | None = None
    distance_lb: int | None = None
    distance_lb_exact: bool | None = None
    epsilon_sum_lower_bound: Fraction | None = None
    epsilon_max_lower_bound: Fraction | None = None
    notes: str = ""

    def to_text(self) -> str:
        lines = [
            f"queries_per_trial={self.queries_per_trial}",
            f"trials={self.trials}",
            f"detections={self.detections}",
            f"detection_rate={self.detection_rate!r}",
            f"detection_rate_stderr={self.detection_rate_stderr!r}",
            f"ci_low={self.ci_low!r}",
            f"ci_high={self.ci_high!r}",
            f"support_f1={self.support_sizes[0]}",
            f"support_f2={self.support_sizes[1]}",
            f"support_f3={self.support_sizes[2]}",
            f"seed={self.seed}",
        ]
        if self.triangle_count is not None:
            lines.append(f"triangle_count={self.triangle_count}")
        if self.distance_lb is not None:
            lines.append(f"distance_lb={self.distance_lb}")
            lines.append(f"distance_lb_exact={'yes' if self.distance_lb_exact else 'no'}")
        if self.epsilon_sum_lower_bound is not None:
            lines.append(f"epsilon_sum_lower_bound={self.epsilon_sum_lower_bound}")
        if self.epsilon_max_lower_bound is not None:
            lines.append(f"epsilon_max_lower_bound={self.epsilon_max_lower_bound}")
        if self.notes:
            lines.append(f"notes={self.notes}")
        return "\n".join(lines) + "\n"


def canonical_test(t: FunctionTriple, q: int, trials: int, seed: int) -> TesterReport:
    """Run `trials` independent trials of q uniform (x, y) samples each.

    A trial detects when any of its samples hits a triangle.  Each trial
    draws from its own substream of (seed, trial index), so the aggregate
    is identical under any parallel schedule.  One-sided by construction:
    triangle-free inputs can never produce a detection.
    """
    if not isinstance(q, int) or q < 0:
        raise ValueError(f"queries per trial must be a non-negative integer, got {q!r}")
    if not isinstance(trials, int) or trials < 1:
        raise ValueError(f"trials must be a positive integer, got {trials!r}")
    check_seed(seed)
    n = t.dim
    s1 = frozenset(v.value for v in t.supports[0])
    s2 = frozenset(v.value for v in t.supports[1])
    s3 = frozenset(v.value for v in t.supports[2])
    detections = 0
    for trial in range(trials):
        rng = substream(seed, trial)
        g = rng.getrandbits
        for _ in range(q):
            x = g(n)
            y = g(n)
            if x in s1 and y in s2 and x ^ y in s3:
                detections += 1
                break
    rate = detections / trials
    stderr = sqrt(rate * (1.0 - rate) / trials)
    return TesterReport(
        queries_per_trial=q,
        trials=trials,
        detections=detections,
        detection_rate=rate,
        detection_rate_stderr=stderr,
        ci_low=max(0.0, rate - Z_95 * stderr),
        ci_high=min(1.0, rate + Z_95 * stderr),
        support_sizes=t.support_sizes,
        seed=seed,
    )


def enrich_report(
    report: TesterReport,
    t: FunctionTriple,
    *,
    budget: int = DEFAULT_PAIR_BUDGET,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> TesterReport:
    """Attach exact oracle results to a tester report when affordable.

    Adds the exact triangle count (role-ordered pairs, the tester's hit
    numerator), the packing lower bound on edit distance, and the two
    distance normalizations: total edits / 2^n (summed convention) and a
    per-function bound (edits/3) / 2^n.  On budget refusal the report is
    returned unchanged with a note.
    """
    try:
        count = len(enumerate_triangles(t, budget=budget))
        bound = distance_lower_bound(t, exact_limit=exact_limit, budget=budget)
    except BudgetExceededError as exc:
        note = f"oracle skipped: {exc}"
        merged = f"{report.notes}; {note}" if report.notes else note
        return replace(report, notes=merged)
    domain = 1 << t.dim
    return replace(
        report,
        triangle_count=count,
        distance_lb=bound.value,
        distance_lb_exact=bound.exact,
        epsilon_sum_lower_bound=Fraction(bound.value, domain),
        epsilon_max_lower_bound=Fraction(bound.value, 3 * domain),
    )


@dataclass(frozen=True)
class ExponentReport:
    """Query-complexity exponents induced by a family rate log2(s)/k."""

    rate: float
    alpha_canonical: float
    alpha_one_sided: float
    k: int | None = None
    s: int | None = None

    def to_text(self) -> str:
        lines = []
        if self.k is not None:
            lines.append(f"k={self.k}")
        if self.s is not None:
            lines.append(f"s={self.s}")
        lines.append(f"rate={self.rate!r}")
        lines.append(f"alpha_canonical={self.alpha_canonical!r}")
        lines.append(f"alpha_one_sided={self.alpha_one_sided!r}")
        return "\n".join(lines) + "\n"


def alpha_from_rate(rate: float, *, k: int | None = None, s: int | None = None) -> ExponentReport:
    """Exponents for a given rate: alpha = (2 - rate)/(1 - rate), halved
    for one-sided testers (a one-sided tester with q queries simulates the
    canonical one with O(q^2))."""
    if not 0.0 < rate < 1.0:
        raise ValueError(f"rate must lie in (0, 1) for a finite exponent, got {rate!r}")
    alpha = (2.0 - rate) / (1.0 - rate)
    return ExponentReport(rate=rate, alpha_canonical=alpha, alpha_one_sided=alpha / 2.0, k=k, s=s)


def alpha_exponent(k: int, s: int) -> ExponentReport:
    """Exponents for an integer family shape: s vectors of dimension k."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(s, int) or s < 2:
        raise ValueError(f"s must be an integer >= 2, got {s!r}")
    return alpha_from_rate(log2(s) / k, k=k, s=s)
