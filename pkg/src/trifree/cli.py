"""Command-line front end.

Subcommands build, verify, exercise, and report on every artifact type:

  apfree    construct a progression-free set for a modulus
  usp       run the randomized puzzle construction, keep the best of many
  verify    check any artifact file, print a witness on violation
  build     chain puzzle/family -> function-triple instance
  test      run the canonical tester on an instance, attach exact oracles
  exponent  evaluate the query-complexity exponents for a rate

Data goes to stdout or --out; logs go to stderr.  Exit codes: 0 success or
property holds, 1 property violation (witness printed), 2 usage or I/O
error.  Randomized commands take --seed (default: fresh entropy, or the
TRIFREE_SEED environment variable when set); the resolved seed is always
echoed so every run can be reproduced bit for bit.
"""

from __future__ import annotations

import argparse
import os
import secrets
import sys
from math import comb
from typing import Sequence

from . import serialize
from .apfree import apfree_verify, behrend_construct
from .errors import BudgetExceededError
from .pmf import blowup, pmf_verify, reduce_to_single, replicate, usp_to_pmf
from .rng import MAX_SEED, substream
from .tester import alpha_exponent, alpha_from_rate, canonical_test, enrich_report, enumerate_triangles
from .usp import cw_sample, usp_verify_reduced


def _log(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def _resolve_seed(explicit: int | None) -> int:
    """Pick the run seed: --seed, else TRIFREE_SEED, else fresh entropy.

    The resolved value and its source are echoed to stderr so reruns can
    reproduce the output exactly.
    """
    if explicit is not None:
        seed = explicit
        source = "flag"
    else:
        env = os.environ.get("TRIFREE_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                raise ValueError(f"TRIFREE_SEED must be an integer, got {env!r}") from None
            source = "env"
        else:
            seed = secrets.randbits(64)
            source = "entropy"
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be in [0, 2**64), got {seed}")
    _log(f"seed={seed} source={source}")
    return seed


def _perm_text(perm: tuple[int, ...]) -> str:
    return ",".join(str(p) for p in perm)


def _budget_kwargs(budget: int | None) -> dict[str, int]:
    """Forward --budget when given, else let each op use its default."""
    return {} if budget is None else {"budget": budget}


def cmd_apfree(args: argparse.Namespace) -> int:
    m = args.m
    if m < 3 or m % 2 == 0:
        _log(f"error: modulus must be an odd integer >= 3, got {m}")
        return 2
    s = behrend_construct(m)
    ok, _ = apfree_verify(s)
    assert ok  # construction keeps only verified candidates
    _log(f"apfree: modulus {m}, size {s.size}")
    _emit(serialize.apfree_to_text(s), args.out)
    return 0


def cmd_usp(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    if args.best_of < 1:
        _log("error: --best-of must be at least 1")
        return 2
    t = args.t
    m = 2 * comb(2 * t, t) + 1
    if args.apfree is not None:
        with open(args.apfree, encoding="ascii") as fh:
            targets = serialize.apfree_from_text(fh.read())
        if targets.modulus != m:
            _log(f"error: AP-free modulus {targets.modulus} does not match m={m} for t={t}")
            return 2
        _log(f"apfree: loaded {args.apfree} (size {targets.size})")
    else:
        targets = behrend_construct(m)
        _log(f"apfree: constructed for m={m} (size {targets.size})")

    best = None
    for trial in range(args.best_of):
        trial_seed = substream(seed, trial).getrandbits(64)
        puzzle, config, _stats = cw_sample(
            t, trial_seed, apfree=targets, **_budget_kwargs(args.budget)
        )
        if best is None or puzzle.size > best[0].size:
            best = (puzzle, config, trial)
            _log(f"trial {trial}: size {puzzle.size} (new best)")
    assert best is not None
    puzzle, config, trial = best

    try:
        ok, witness = usp_verify_reduced(puzzle)
        if not ok:
            _log(f"error: construction output failed verification: {witness}")
            return 1
        _log(f"verified: size {puzzle.size} from trial {trial}")
    except BudgetExceededError as exc:
        _log(f"verification skipped: {exc}")

    _emit(serialize.puzzle_to_text(puzzle), args.out)
    if args.out is not None:
        apfree_path = args.out + ".apfree"
        with open(apfree_path, "w", encoding="ascii") as fh:
            fh.write(serialize.apfree_to_text(targets))
        config_path = args.out + ".config"
        with open(config_path, "w", encoding="ascii") as fh:
            fh.write(serialize.cwconfig_to_text(config, os.path.basename(apfree_path)))
        _log(f"wrote {args.out}, {config_path}, {apfree_path}")
    else:
        _log(f"config: t={config.t} m={config.m} trial_seed={config.seed}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    kind, value = serialize.load_artifact(args.path)
    _log(f"artifact: {kind}")
    kwargs = _budget_kwargs(args.budget)
    if kind == "apfree":
        ok, witness = apfree_verify(value)
        if not ok:
            print("invalid")
            print(f"witness indices {witness[0]} {witness[1]} {witness[2]}")
            return 1
    elif kind == "usp":
        ok, witness = usp_verify_reduced(value, **kwargs)
        if not ok:
            print("invalid")
            print("witness permutations " + " ".join(_perm_text(p) for p in witness))
            return 1
    elif kind == "pmf":
        ok, witness = pmf_verify(value, **kwargs)
        if not ok:
            print("invalid")
            tag, data = witness
            if tag == "sum":
                print(f"witness sum-violation index {data}")
            else:
                print("witness permutations " + " ".join(_perm_text(p) for p in data))
            return 1
    elif kind == "instance":
        triangles = enumerate_triangles(value, **kwargs)
        print(f"triangles {len(triangles)}")
        return 0
    else:
        _log("error: configuration files describe a run; verify the puzzle file instead")
        return 2
    print("valid")
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    kind, value = serialize.load_artifact(args.input)
    if kind == "usp":
        family = usp_to_pmf(value)
        _log(f"family: k={family.dim} s={family.size} (from puzzle)")
    elif kind == "pmf":
        family = value
        _log(f"family: k={family.dim} s={family.size}")
    else:
        _log(f"error: build expects a puzzle or family file, got {kind}")
        return 2
    instance = blowup(family, **_budget_kwargs(args.budget))
    if args.copies != 1:
        instance = replicate(instance, args.copies)
        _log(f"replicated: copies={args.copies}")
    if args.single:
        instance = reduce_to_single(instance)
        _log("folded into a single shared function")
    _log(f"instance: n={instance.dim} supports={instance.support_sizes}")
    _emit(serialize.instance_to_text(instance), args.out)
    return 0


def cmd_test(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    kind, value = serialize.load_artifact(args.input)
    if kind != "instance":
        _log(f"error: test expects an instance file, got {kind}")
        return 2
    report = canonical_test(value, args.q, args.trials, seed)
    report = enrich_report(report, value, **_budget_kwargs(args.budget))
    text = report.to_text()
    sys.stdout.write(text)
    if args.out is not None:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
        _log(f"wrote {args.out}")
    return 0


def cmd_exponent(args: argparse.Namespace) -> int:
    if args.rate is not None:
        if args.k is not None or args.s is not None:
            _log("error: give either --rate or both --k and --s, not both")
            return 2
        report = alpha_from_rate(args.rate)
    elif args.k is not None and args.s is not None:
        report = alpha_exponent(args.k, args.s)
    else:
        _log("error: give either --rate or both --k and --s")
        return 2
    _emit(report.to_text(), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifree",
        description="Construct and test hard instances for triangle-freeness testing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apfree", help="construct a progression-free set mod m")
    p.add_argument("m", type=int, help="odd modulus >= 3")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_apfree)

    p = sub.add_parser("usp", help="randomized puzzle construction, best of many trials")
    p.add_argument("--t", type=int, required=True, help="block size t (modulus is 2*C(2t,t)+1)")
    p.add_argument("--best-of", type=int, default=1, help="number of independent trials")
    p.add_argument("--seed", type=int, help="64-bit master seed")
    p.add_argument("--apfree", help="existing AP-free set file (constructed when absent)")
    p.add_argument("--budget", type=int, help="block-size budget for the enumeration")
    p.add_argument("--out", help="output file; also writes .config and .apfree siblings")
    p.set_defaults(func=cmd_usp)

    p = sub.add_parser("verify", help="verify any artifact file")
    p.add_argument("path", help="apfree | puzzle | family | instance file")
    p.add_argument("--budget", type=int, help="enumeration budget for the selected verifier")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("build", help="build a function-triple instance from a puzzle or family")
    p.add_argument("input", help="puzzle or family file")
    p.add_argument("--copies", type=int, default=1, help="disjoint copies to place (default 1)")
    p.add_argument("--single", action="store_true", help="fold into one shared function")
    p.add_argument("--budget", type=int, help="permutation budget for the blow-up")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("test", help="run the canonical tester on an instance")
    p.add_argument("input", help="instance file")
    p.add_argument("--q", type=int, default=1, help="queries per trial (default 1)")
    p.add_argument("--trials", type=int, default=10000, help="number of trials (default 10000)")
    p.add_argument("--seed", type=int, help="64-bit seed")
    p.add_argument("--budget", type=int, help="pair budget for the exact oracles")
    p.add_argument("--out", help="also write the report to this file")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("exponent", help="query-complexity exponents for a family rate")
    p.add_argument("--k", type=int, help="vector dimension")
    p.add_argument("--s", type=int, help="family size")
    p.add_argument("--rate", type=float, help="rate log2(s)/k given directly")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_exponent)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        _log(f"error: {exc}")
        return 2
    except ValueError as exc:
        _log(f"error: {exc}")
        return 2
    except OSError as exc:
        _log(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
