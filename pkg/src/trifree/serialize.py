"""Line-oriented text formats for every artifact type.

All artifacts are plain text so they diff cleanly and reload exactly:

  AP-free set     "m <modulus>" then one line of space-separated elements
  puzzle set      "k <width> s <rows>" then one row of {1,2,3} chars per line
  construction    "t", "m", "seed", "weights", "apfree <path>" lines
  vector family   "k <dim> s <size>" then lines "a b c" of 0/1 strings
  function triple "n <dim>" then blocks "f1|f2|f3 <count>" of 0/1 strings

Vectors render most significant coordinate first, matching str(GF2Vector).
Loading is strict: wrong headers, counts, widths, or symbols raise
ValueError with the offending content.
"""

from __future__ import annotations

import os

from .apfree import APFreeSet
from .gf2 import GF2Vector
from .pmf import FunctionTriple, PMFFamily
from .usp import CWConfig, PuzzleSet


def _lines(text: str) -> list[str]:
    return [line.rstrip("\n") for line in text.splitlines()]


def _header(line: str, tag: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != tag:
        raise ValueError(f"expected header '{tag} <value>', got {line!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise ValueError(f"non-integer field in header {line!r}") from None


def apfree_to_text(s: APFreeSet) -> str:
    return f"m {s.modulus}\n" + " ".join(str(e) for e in s.elements) + "\n"


def apfree_from_text(text: str) -> APFreeSet:
    lines = _lines(text)
    if not lines:
        raise ValueError("empty AP-free set file")
    m = _header(lines[0], "m")
    elems = tuple(int(p) for p in lines[1].split()) if len(lines) > 1 else ()
    return APFreeSet(m, elems)


def puzzle_to_text(u: PuzzleSet) -> str:
    out = [f"k {u.width} s {u.size}"]
    out.extend("".join(str(e) for e in row) for row in u.rows)
    return "\n".join(out) + "\n"


def puzzle_from_text(text: str) -> PuzzleSet:
    lines = _lines(text)
    if not lines:
        raise ValueError("empty puzzle file")
    parts = lines[0].split()
    if len(parts) != 4 or parts[0] != "k" or parts[2] != "s":
        raise ValueError(f"expected 'k <width> s <rows>', got {lines[0]!r}")
    width, size = int(parts[1]), int(parts[3])
    body = [line for line in lines[1:] if line]
    if len(body) != size:
        raise ValueError(f"expected {size} rows, found {len(body)}")
    rows = []
    for line in body:
        if len(line) != width or any(c not in "123" for c in line):
            raise ValueError(f"bad puzzle row {line!r} for width {width}")
        rows.append(tuple(int(c) for c in line))
    return PuzzleSet(width, tuple(rows))


def cwconfig_to_text(config: CWConfig, apfree_ref: str) -> str:
    return (
        f"t {config.t}\n"
        f"m {config.m}\n"
        f"seed {config.seed}\n"
        "weights " + " ".join(str(w) for w in config.weights) + "\n"
        f"apfree {apfree_ref}\n"
    )


def cwconfig_from_text(text: str) -> tuple[int, int, int, tuple[int, ...], str]:
    """Parse the reproducing-configuration fields and the AP-free path
    reference; resolving the reference is the caller's concern."""
    fields: dict[str, str] = {}
    for line in _lines(text):
        if not line:
            continue
        key, _, rest = line.partition(" ")
        fields[key] = rest
    missing = {"t", "m", "seed", "weights", "apfree"} - fields.keys()
    if missing:
        raise ValueError(f"configuration file missing fields {sorted(missing)}")
    t = int(fields["t"])
    weights = tuple(int(w) for w in fields["weights"].split())
    if len(weights) != 3 * t + 1:
        raise ValueError(f"expected {3 * t + 1} weights for t={t}, got {len(weights)}")
    return (t, int(fields["m"]), int(fields["seed"]), weights, fields["apfree"])


def load_cwconfig(path: str) -> CWConfig:
    """Load a configuration file, resolving the AP-free reference relative
    to the configuration file's directory."""
    with open(path, encoding="ascii") as fh:
        t, m, seed, weights, ref = cwconfig_from_text(fh.read())
    if not os.path.isabs(ref):
        ref = os.path.join(os.path.dirname(os.path.abspath(path)), ref)
    with open(ref, encoding="ascii") as fh:
        apfree = apfree_from_text(fh.read())
    config = CWConfig(t=t, m=m, weights=weights, apfree=apfree, seed=seed)
    return config


def pmf_to_text(f: PMFFamily) -> str:
    out = [f"k {f.dim} s {f.size}"]
    out.extend(f"{a} {b} {c}" for a, b, c in f.triples)
    return "\n".join(out) + "\n"


def pmf_from_text(text: str) -> PMFFamily:
    lines = _lines(text)
    if not lines:
        raise ValueError("empty family file")
    parts = lines[0].split()
    if len(parts) != 4 or parts[0] != "k" or parts[2] != "s":
        raise ValueError(f"expected 'k <dim> s <size>', got {lines[0]!r}")
    dim, size = int(parts[1]), int(parts[3])
    body = [line for line in lines[1:] if line]
    if len(body) != size:
        raise ValueError(f"expected {size} triples, found {len(body)}")
    triples = []
    for line in body:
        words = line.split()
        if len(words) != 3:
            raise ValueError(f"expected 'a b c' vectors, got {line!r}")
        a, b, c = (GF2Vector.from_string(w) for w in words)
        if a.dim != dim or b.dim != dim or c.dim != dim:
            raise ValueError(f"vector dimensions in {line!r} do not match {dim}")
        triples.append((a, b, c))
    return PMFFamily(dim, tuple(triples))


def instance_to_text(t: FunctionTriple) -> str:
    out = [f"n {t.dim}"]
    for name, support in zip(("f1", "f2", "f3"), t.supports):
        out.append(f"{name} {len(support)}")
        out.extend(str(v) for v in sorted(support))
    return "\n".join(out) + "\n"


def instance_from_text(text: str) -> FunctionTriple:
    lines = [line for line in _lines(text) if line]
    if not lines:
        raise ValueError("empty instance file")
    dim = _header(lines[0], "n")
    supports = []
    pos = 1
    for name in ("f1", "f2", "f3"):
        if pos >= len(lines):
            raise ValueError(f"missing block {name!r}")
        parts = lines[pos].split()
        if len(parts) != 2 or parts[0] != name:
            raise ValueError(f"expected '{name} <count>', got {lines[pos]!r}")
        count = int(parts[1])
        pos += 1
        block = lines[pos : pos + count]
        if len(block) != count:
            raise ValueError(f"block {name!r} announces {count} vectors, found {len(block)}")
        vectors = [GF2Vector.from_string(w) for w in block]
        if any(v.dim != dim for v in vectors):
            raise ValueError(f"vector dimension mismatch in block {name!r}")
        support = frozenset(vectors)
        if len(support) != count:
            raise ValueError(f"duplicate vectors in block {name!r}")
        supports.append(support)
        pos += count
    if pos != len(lines):
        raise ValueError(f"{len(lines) - pos} unexpected trailing lines")
    return FunctionTriple(dim, tuple(supports))


def detect_kind(text: str) -> str:
    """Classify an artifact file by its header shape.

    Returns one of "apfree", "usp", "pmf", "instance", "cwconfig".  Puzzle
    and family files share the "k ... s ..." header; the first body line
    tells them apart (family rows contain spaces).  An empty-body "k ... s
    0" file is reported as a puzzle.
    """
    lines = [line for line in _lines(text) if line]
    if not lines:
        raise ValueError("cannot classify an empty file")
    head = lines[0].split()
    if not head:
        raise ValueError("cannot classify a blank header")
    tag = head[0]
    if tag == "m":
        return "apfree"
    if tag == "n":
        return "instance"
    if tag == "t":
        return "cwconfig"
    if tag == "k":
        if len(lines) > 1 and " " in lines[1].strip():
            return "pmf"
        return "usp"
    raise ValueError(f"unrecognized artifact header {lines[0]!r}")


_LOADERS = {
    "apfree": apfree_from_text,
    "usp": puzzle_from_text,
    "pmf": pmf_from_text,
    "instance": instance_from_text,
}


def load_artifact(path: str) -> tuple[str, object]:
    """Load any artifact file, returning (kind, value).

    Configuration files are classified but must be loaded via
    load_cwconfig, which resolves their AP-free reference.
    """
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    kind = detect_kind(text)
    if kind == "cwconfig":
        return kind, load_cwconfig(path)
    return kind, _LOADERS[kind](text)
