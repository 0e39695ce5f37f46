"""Wire formats: family JSONL, plain-family JSONL, certificate JSON.

Signed-family JSONL holds one family per line, pairs as two-element
[element, sign] arrays sorted by element:

    {"n":4,"k":2,"r":2,"sets":[[[1,1],[2,2]],[[1,1],[3,1]]]}

Plain-family JSONL:

    {"n":5,"sets":[[2,3],[2,4]]}

Certificate JSON:

    {"params":{"n":4,"k":2,"r":2},"map":[{"from":[[2,1],[3,1]],"to":[[1,1],[4,1]]}],"blocks":{"a0":1,"a":[0,0]}}

Readers are strict: non-canonical or invalid lines (unsorted pairs,
duplicate sets, wrong sizes, out-of-range values, unexpected keys) are
rejected with a FormatError carrying the 1-based line number.  Writers
emit compact UTF-8 with LF line endings, byte-stable for a fixed input.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Params, PlainFamily, SignedFamily
from .errors import Error, FormatError
from .injection import InjectionCertificate


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def signed_family_to_json(fam: SignedFamily) -> str:
    obj = {
        "n": fam.params.n,
        "k": fam.params.k,
        "r": fam.params.r,
        "sets": [[[x, a] for x, a in m] for m in fam.members],
    }
    return json.dumps(obj, separators=(",", ":"))


def parse_signed_family(line: str, lineno: int = 1) -> SignedFamily:
    """Parse one family line, rejecting anything invalid or non-canonical."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise FormatError(lineno, f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FormatError(lineno, "expected a JSON object")
    if set(obj) != {"n", "k", "r", "sets"}:
        raise FormatError(lineno, f"expected keys n, k, r, sets; got {sorted(obj)}")
    for key in ("n", "k", "r"):
        if not _is_int(obj[key]):
            raise FormatError(lineno, f"{key} must be an integer")
    try:
        params = Params(obj["n"], obj["k"], obj["r"])
    except ValueError as exc:
        raise FormatError(lineno, str(exc)) from None
    if not isinstance(obj["sets"], list):
        raise FormatError(lineno, "sets must be an array")
    members = []
    seen = set()
    for si, raw in enumerate(obj["sets"]):
        if not isinstance(raw, list):
            raise FormatError(lineno, f"set {si} must be an array of pairs")
        prev = 0
        pairs = []
        for pr in raw:
            if (
                not isinstance(pr, list)
                or len(pr) != 2
                or not _is_int(pr[0])
                or not _is_int(pr[1])
            ):
                raise FormatError(
                    lineno, f"set {si}: pairs must be [element, sign] integer arrays"
                )
            x, a = pr
            if x <= prev:
                raise FormatError(
                    lineno, f"set {si} is not strictly element-sorted at element {x}"
                )
            prev = x
            if not 1 <= x <= params.n:
                raise FormatError(lineno, f"set {si}: element {x} outside [1, {params.n}]")
            if not 1 <= a <= params.r:
                raise FormatError(lineno, f"set {si}: sign {a} outside [1, {params.r}]")
            pairs.append((x, a))
        if len(pairs) != params.k:
            raise FormatError(lineno, f"set {si} has {len(pairs)} pairs, expected {params.k}")
        member = tuple(pairs)
        if member in seen:
            raise FormatError(lineno, f"duplicate set {list(member)}")
        seen.add(member)
        members.append(member)
    return SignedFamily(params, tuple(members))


def parse_signed_families(lines) -> list[SignedFamily]:
    out = []
    for lineno, line in enumerate(lines, start=1):
        text = line.rstrip("\n")
        if not text.strip():
            raise FormatError(lineno, "blank line")
        out.append(parse_signed_family(text, lineno))
    return out


def read_signed_families(path) -> list[SignedFamily]:
    with open(path, encoding="utf-8") as fh:
        return parse_signed_families(fh)


def write_signed_families(path, families) -> None:
    text = "".join(signed_family_to_json(f) + "\n" for f in families)
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def plain_family_to_json(fam: PlainFamily) -> str:
    obj = {"n": fam.ground, "sets": [list(m) for m in fam.members]}
    return json.dumps(obj, separators=(",", ":"))


def parse_plain_family(line: str, lineno: int = 1) -> PlainFamily:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise FormatError(lineno, f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FormatError(lineno, "expected a JSON object")
    if set(obj) != {"n", "sets"}:
        raise FormatError(lineno, f"expected keys n, sets; got {sorted(obj)}")
    if not _is_int(obj["n"]) or obj["n"] < 1:
        raise FormatError(lineno, "n must be a positive integer")
    if not isinstance(obj["sets"], list):
        raise FormatError(lineno, "sets must be an array")
    members = []
    for si, raw in enumerate(obj["sets"]):
        if not isinstance(raw, list) or not all(_is_int(x) for x in raw):
            raise FormatError(lineno, f"set {si} must be an array of integers")
        if any(raw[i] >= raw[i + 1] for i in range(len(raw) - 1)):
            raise FormatError(lineno, f"set {si} is not strictly sorted")
        members.append(tuple(raw))
    try:
        return PlainFamily(obj["n"], tuple(members))
    except (Error, ValueError) as exc:
        raise FormatError(lineno, str(exc)) from None


def parse_plain_families(lines) -> list[PlainFamily]:
    out = []
    for lineno, line in enumerate(lines, start=1):
        text = line.rstrip("\n")
        if not text.strip():
            raise FormatError(lineno, "blank line")
        out.append(parse_plain_family(text, lineno))
    return out


def read_plain_families(path) -> list[PlainFamily]:
    with open(path, encoding="utf-8") as fh:
        return parse_plain_families(fh)


def write_plain_families(path, families) -> None:
    text = "".join(plain_family_to_json(f) + "\n" for f in families)
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def certificate_to_json(cert: InjectionCertificate) -> str:
    """Serialize a certificate; byte-identical for equal certificates."""
    obj = {
        "params": {"n": cert.params.n, "k": cert.params.k, "r": cert.params.r},
        "map": [
            {"from": [[x, a] for x, a in s], "to": [[x, a] for x, a in t]}
            for s, t in cert.mapping
        ],
        "blocks": {"a0": cert.block_sizes[0], "a": list(cert.block_sizes[1:])},
    }
    return json.dumps(obj, separators=(",", ":"))


def certificate_to_path(path, cert: InjectionCertificate) -> None:
    Path(path).write_text(certificate_to_json(cert) + "\n", encoding="utf-8", newline="\n")
