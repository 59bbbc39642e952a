"""Hard instances for triangle-freeness testing.

Pipeline: progression-free sets in Z_m fuel a randomized construction of
uniquely solvable puzzles; puzzles map to matching-free vector families;
families blow up into Boolean function triples that are far from
triangle-free yet nearly invisible to the canonical sampling tester.  The
tester module simulates that tester, enumerates triangles exactly, and
reports the resulting query-complexity exponents.
"""

from .apfree import (
    APFreeSet,
    apfree_bruteforce_max,
    apfree_verify,
    behrend_construct,
    greedy_construct,
)
from .errors import BudgetExceededError
from .gf2 import GF2Vector, vec_add, vec_concat
from .pmf import (
    FunctionTriple,
    PMFFamily,
    blowup,
    pmf_verify,
    pmf_verify_bruteforce,
    reduce_to_single,
    replicate,
    usp_to_pmf,
)
from .rng import substream
from .tester import (
    ExponentReport,
    PackingBound,
    TesterReport,
    alpha_exponent,
    alpha_from_rate,
    canonical_test,
    distance_lower_bound,
    distinct_triangle_count,
    enrich_report,
    enumerate_triangles,
    triangle_vertex_set,
)
from .usp import (
    CWConfig,
    CWSampleStats,
    PuzzleSet,
    TripleCandidate,
    beta_maps,
    cw_expected_size,
    cw_sample,
    usp_verify_bruteforce,
    usp_verify_reduced,
)

__version__ = "0.1.0"

__all__ = [
    "APFreeSet",
    "BudgetExceededError",
    "CWConfig",
    "CWSampleStats",
    "ExponentReport",
    "FunctionTriple",
    "GF2Vector",
    "PMFFamily",
    "PackingBound",
    "PuzzleSet",
    "TesterReport",
    "TripleCandidate",
    "alpha_exponent",
    "alpha_from_rate",
    "apfree_bruteforce_max",
    "apfree_verify",
    "behrend_construct",
    "beta_maps",
    "blowup",
    "canonical_test",
    "cw_expected_size",
    "cw_sample",
    "distance_lower_bound",
    "distinct_triangle_count",
    "enrich_report",
    "enumerate_triangles",
    "greedy_construct",
    "pmf_verify",
    "pmf_verify_bruteforce",
    "reduce_to_single",
    "replicate",
    "substream",
    "triangle_vertex_set",
    "usp_to_pmf",
    "usp_verify_bruteforce",
    "usp_verify_reduced",
    "vec_add",
    "vec_concat",
]
