"""Puzzle verifiers and the randomized construction."""

from fractions import Fraction
from itertools import combinations
from math import comb
from random import Random

import pytest

from trifree import (
    APFreeSet,
    BudgetExceededError,
    CWConfig,
    PuzzleSet,
    TripleCandidate,
    behrend_construct,
    beta_maps,
    cw_expected_size,
    cw_sample,
    usp_verify_bruteforce,
    usp_verify_reduced,
)
from helpers import (
    FIXED_USP_ROWS,
    exhaustive_small_puzzles,
    fixed_usp,
    random_puzzle,
    usp_triple_violates,
)


def test_puzzle_rows_are_canonicalized():
    u = PuzzleSet(2, ((3, 3), (1, 2)))
    assert u.rows == ((1, 2), (3, 3))
    assert u.size == 2
    assert PuzzleSet(2, ((1, 2), (3, 3))) == u


def test_puzzle_rejects_malformed_rows():
    with pytest.raises(ValueError):
        PuzzleSet(2, ((1, 2), (1, 2)))
    with pytest.raises(ValueError):
        PuzzleSet(2, ((1, 4),))
    with pytest.raises(ValueError):
        PuzzleSet(2, ((1, 2, 3),))
    with pytest.raises(ValueError):
        PuzzleSet(0, ())


def test_empty_and_singleton_puzzles_verify():
    assert usp_verify_bruteforce(PuzzleSet(3, ()))[0]
    assert usp_verify_bruteforce(PuzzleSet(3, ((1, 2, 3),)))[0]
    assert usp_verify_reduced(PuzzleSet(3, ((1, 2, 3),)))[0]


def test_known_negative_with_witness_replay():
    u = PuzzleSet(2, ((1, 2), (2, 1)))
    ok, witness = usp_verify_bruteforce(u)
    assert not ok
    assert usp_triple_violates(u.rows, *witness)
    ok2, witness2 = usp_verify_reduced(u)
    assert not ok2
    assert witness2[0] == (0, 1)  # normalized to the identity
    assert usp_triple_violates(u.rows, *witness2)


def test_diagonal_rows_are_not_uniquely_solvable():
    u = PuzzleSet(2, ((1, 1), (2, 2), (3, 3)))
    assert not usp_verify_bruteforce(u)[0]
    assert not usp_verify_reduced(u)[0]


def test_known_positives():
    assert usp_verify_bruteforce(PuzzleSet(2, ((1, 2), (3, 3))))[0]
    assert usp_verify_bruteforce(PuzzleSet(2, ((1, 1), (2, 3))))[0]


def test_fixed_corpus_passes_both_verifiers():
    for s, rows in FIXED_USP_ROWS.items():
        u = fixed_usp(s)
        assert u.rows == tuple(sorted(rows))
        assert usp_verify_bruteforce(u)[0], f"s={s}"
        assert usp_verify_reduced(u)[0], f"s={s}"


def test_two_row_width_two_census():
    # exhaustive count over all 36 two-row puzzles of width 2
    census = [u for u in exhaustive_small_puzzles() if u.width == 2 and u.size == 2]
    assert len(census) == 36
    valid = [u for u in census if usp_verify_bruteforce(u)[0]]
    assert len(valid) == 12


def test_verifier_equivalence_exhaustive_and_random():
    for u in exhaustive_small_puzzles():
        assert usp_verify_reduced(u)[0] == usp_verify_bruteforce(u)[0]
    rng = Random(421)
    for _ in range(300):
        u = random_puzzle(rng)
        assert usp_verify_reduced(u)[0] == usp_verify_bruteforce(u)[0]


def test_verdict_invariant_under_column_relabeling():
    rng = Random(422)
    for _ in range(100):
        u = random_puzzle(rng, max_width=3, max_rows=3)
        perm = list(range(u.width))
        rng.shuffle(perm)
        permuted = PuzzleSet(
            u.width, tuple(tuple(row[perm[i]] for i in range(u.width)) for row in u.rows)
        )
        assert usp_verify_reduced(permuted)[0] == usp_verify_reduced(u)[0]


def test_row_order_is_irrelevant():
    rows = ((1, 1, 1), (1, 2, 3), (2, 3, 1))
    assert PuzzleSet(3, rows) == PuzzleSet(3, tuple(reversed(rows)))


def test_bruteforce_budget_points_to_reduced():
    u = PuzzleSet(1, ((1,), (2,), (3,)))
    with pytest.raises(BudgetExceededError, match="usp_verify_reduced"):
        usp_verify_bruteforce(u, budget=2)


def test_reduced_budget_refusal():
    u = PuzzleSet(1, ((1,), (2,), (3,)))
    with pytest.raises(BudgetExceededError):
        usp_verify_reduced(u, budget=35)


def _config(t: int, weights: tuple[int, ...], apfree: APFreeSet, seed: int = 0) -> CWConfig:
    return CWConfig(t=t, m=apfree.modulus, weights=weights, apfree=apfree, seed=seed)


def test_beta_maps_zero_weights():
    config = _config(1, (0, 0, 0, 0), APFreeSet(5, (1, 2)))
    for subset in ((1,), (2,), (3,)):
        assert beta_maps(subset, config) == (0, 0, 0)


def test_beta_maps_worked_example():
    config = _config(1, (1, 2, 3, 4), APFreeSet(5, (1, 2)))
    assert beta_maps((1,), config) == (2, 3, 4)


def test_half_of_odd_modulus():
    # (m+1)/2 doubles back to 1 mod m
    for m in (5, 13, 41):
        assert 2 * ((m + 1) // 2) % m == 1


def test_beta_maps_rejects_wrong_subset():
    config = _config(1, (1, 2, 3, 4), APFreeSet(5, (1, 2)))
    with pytest.raises(ValueError):
        beta_maps((1, 2), config)
    with pytest.raises(ValueError):
        beta_maps((4,), config)


def test_beta_identity_forces_third_map():
    # whenever bx(I) = by(J) on disjoint I, J, the remainder K satisfies
    # bz(K) = the same residue: 2*bz(K) = w0 + sum over K's complement
    rng = Random(423)
    for t in (1, 2):
        m = 2 * comb(2 * t, t) + 1
        apfree = behrend_construct(m)
        for _ in range(30):
            weights = tuple(rng.randrange(m) for _ in range(3 * t + 1))
            config = _config(t, weights, apfree)
            indices = range(1, 3 * t + 1)
            for ones in combinations(indices, t):
                rest = [j for j in indices if j not in ones]
                for twos in combinations(rest, t):
                    threes = tuple(j for j in rest if j not in set(twos))
                    bx = beta_maps(ones, config)[0]
                    by = beta_maps(twos, config)[1]
                    if bx == by:
                        assert beta_maps(threes, config)[2] == bx


def test_config_validation():
    apfree5 = APFreeSet(5, (1, 2))
    with pytest.raises(ValueError):
        CWConfig(t=1, m=7, weights=(0, 0, 0, 0), apfree=apfree5, seed=0)
    with pytest.raises(ValueError):
        CWConfig(t=1, m=5, weights=(0, 0, 0), apfree=apfree5, seed=0)
    with pytest.raises(ValueError):
        CWConfig(t=1, m=5, weights=(0, 0, 0, 5), apfree=apfree5, seed=0)
    with pytest.raises(ValueError):
        CWConfig(t=2, m=13, weights=(0,) * 7, apfree=apfree5, seed=0)
    with pytest.raises(ValueError):
        CWConfig(t=1, m=5, weights=(0, 0, 0, 0), apfree=apfree5, seed=-1)


def test_triple_candidate_validation():
    TripleCandidate((1,), (2,), (3,), 1)
    with pytest.raises(ValueError):
        TripleCandidate((1,), (2,), (4,), 1)
    with pytest.raises(ValueError):
        TripleCandidate((1, 2), (3,), (4,), 1)


def test_cw_sample_moduli():
    _, config1, _ = cw_sample(1, 99)
    assert config1.m == 5
    _, config2, _ = cw_sample(2, 99)
    assert config2.m == 13


def test_cw_sample_deterministic():
    a = cw_sample(2, 123456789)
    b = cw_sample(2, 123456789)
    assert a == b
    c = cw_sample(2, 987654321)
    assert a[1].weights != c[1].weights


def test_cw_sample_outputs_verify():
    for t in (1, 2):
        apfree = behrend_construct(2 * comb(2 * t, t) + 1)
        for seed in range(30):
            puzzle, config, _ = cw_sample(t, seed, apfree=apfree)
            assert config.seed == seed
            assert puzzle.width == 3 * t
            assert usp_verify_reduced(puzzle)[0], f"t={t} seed={seed}"


def test_cw_sample_statistics_are_consistent():
    for seed in (5, 17, 3021):
        puzzle, config, stats = cw_sample(2, seed)
        b = config.apfree.elements
        assert len(stats.candidate_counts) == len(b)
        assert len(stats.removed_counts) == len(b)
        for count, removed in zip(stats.candidate_counts, stats.removed_counts):
            assert removed == max(count - 1, 0)
        assert len(stats.kept) == sum(1 for c in stats.candidate_counts if c > 0)
        assert puzzle.size == len(stats.kept)
        assert sorted(c.row() for c in stats.kept) == list(puzzle.rows)
        for cand in stats.kept:
            residue = cand.target % config.m
            assert beta_maps(cand.ones, config)[0] == residue
            assert beta_maps(cand.twos, config)[1] == residue
            assert beta_maps(cand.threes, config)[2] == residue


def test_cw_sample_keeps_lexicographically_smallest():
    for seed in (11, 222, 3333):
        _, config, stats = cw_sample(2, seed)
        candidates: dict[int, list[tuple]] = {}
        indices = range(1, 7)
        residue_of = {b % config.m: b for b in config.apfree.elements}
        for ones in combinations(indices, 2):
            rest = [j for j in indices if j not in ones]
            for twos in combinations(rest, 2):
                bx = beta_maps(ones, config)[0]
                if bx == beta_maps(twos, config)[1] and bx in residue_of:
                    candidates.setdefault(residue_of[bx], []).append((ones, twos))
        for cand in stats.kept:
            assert (cand.ones, cand.twos) == min(candidates[cand.target])
        assert sum(stats.candidate_counts) == sum(len(v) for v in candidates.values())


def test_cw_sample_budget_and_validation():
    with pytest.raises(BudgetExceededError):
        cw_sample(5, 0)
    with pytest.raises(ValueError):
        cw_sample(0, 0)
    with pytest.raises(ValueError):
        cw_sample(1, 0, apfree=APFreeSet(7, (1, 2)))
    with pytest.raises(ValueError):
        cw_sample(1, -3)


def test_expected_size_values():
    assert cw_expected_size(1, 2) == Fraction(3, 25)
    assert cw_expected_size(2, 4) == Fraction(90, 169)
    assert cw_expected_size(3, 0) == 0


def test_expected_size_validation():
    with pytest.raises(ValueError):
        cw_expected_size(0, 2)
    with pytest.raises(ValueError):
        cw_expected_size(1, -1)
