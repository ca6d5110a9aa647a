"""Reading and writing join spaces (``joinspace-v1``) and line structures
(``linespace-v1``).

Both are JSON objects written in a fixed layout, one join or line per text
line, so that canonical files round-trip byte for byte::

    {
      "format": "joinspace-v1",
      "points": 3,
      "joins": [
        [0, 1, [0, 1]],
        [0, 2, [0, 1, 2]],
        [1, 2, [1, 2]]
      ]
    }

An optional ``"labels"`` list (one string per point) follows ``"points"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .bitset import from_points, to_points
from .linespace import SetLineStructure, validate_lines
from .relations import (MAX_POINTS, JoinAxiomError, JoinSpace, StructuralError,
                        pair_count, pair_index, pairs)

SPACE_FORMAT = "joinspace-v1"
LINE_FORMAT = "linespace-v1"


class FormatError(ValueError):
    """Malformed file; the message names the offending position."""


def _dump_list(xs) -> str:
    return "[" + ", ".join(map(str, xs)) + "]"


def dumps_space(s: JoinSpace, labels: list[str] | None = None) -> str:
    head = [f'  "format": "{SPACE_FORMAT}"', f'  "points": {s.n}']
    if labels is not None:
        if len(labels) != s.n:
            raise ValueError(f"{len(labels)} labels for {s.n} points")
        head.append('  "labels": [' + ", ".join(json.dumps(str(x)) for x in labels) + "]")
    rows = [f"    [{a}, {c}, {_dump_list(to_points(m))}]" for a, c, m in s.joins()]
    body = '  "joins": []' if not rows else '  "joins": [\n' + ",\n".join(rows) + "\n  ]"
    return "{\n" + ",\n".join(head + [body]) + "\n}\n"


def dumps_lines(L: SetLineStructure) -> str:
    rows = [f"    {_dump_list(to_points(y))}" for y in L.lines]
    body = '  "lines": []' if not rows else '  "lines": [\n' + ",\n".join(rows) + "\n  ]"
    return "{\n" + ",\n".join([f'  "format": "{LINE_FORMAT}"', f'  "points": {L.n}', body]) + "\n}\n"


def _parse(text: str, where: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{where}: line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: top level must be an object")
    return doc


def _points(doc: dict, where: str) -> int:
    n = doc.get("points")
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= MAX_POINTS:
        raise FormatError(f"{where}: 'points' must be an integer in 0..{MAX_POINTS}")
    return n


def _point_list(xs, n: int, where: str) -> list[int]:
    if not isinstance(xs, list) or not all(isinstance(x, int) and not isinstance(x, bool)
                                           for x in xs):
        raise FormatError(f"{where}: expected a list of point indices")
    bad = [x for x in xs if not 0 <= x < n]
    if bad:
        raise FormatError(f"{where}: point {bad[0]} out of range 0..{n - 1}")
    if len(set(xs)) != len(xs):
        raise FormatError(f"{where}: repeated point")
    return xs


def detect_format(text: str, where: str = "<input>") -> str:
    return _parse(text, where).get("format", "")


def loads_space(text: str, where: str = "<input>") -> tuple[JoinSpace, list[str] | None]:
    doc = _parse(text, where)
    if doc.get("format") != SPACE_FORMAT:
        raise FormatError(f"{where}: format tag must be {SPACE_FORMAT!r}, got {doc.get('format')!r}")
    n = _points(doc, where)
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n
                               or not all(isinstance(x, str) for x in labels)):
        raise FormatError(f"{where}: 'labels' must be {n} strings")
    entries = doc.get("joins")
    if not isinstance(entries, list):
        raise FormatError(f"{where}: 'joins' must be a list")
    if len(entries) != pair_count(n):
        raise FormatError(f"{where}: expected {pair_count(n)} join entries, got {len(entries)}")
    joins = [None] * pair_count(n)
    for k, entry in enumerate(entries):
        pos = f"{where}: joins[{k}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise FormatError(f"{pos}: expected [a, c, [members...]]")
        a, c, mem = entry
        _point_list([a, c], n, pos)
        if not a < c:
            raise FormatError(f"{pos}: need a < c, got {a}, {c}")
        mem = _point_list(mem, n, pos)
        if a not in mem or c not in mem:
            raise FormatError(f"{pos}: members must contain {a} and {c}")
        i = pair_index(n, a, c)
        if joins[i] is not None:
            raise FormatError(f"{pos}: pair ({a}, {c}) given twice")
        joins[i] = from_points(mem)
    try:
        return JoinSpace(n, tuple(joins)), labels
    except (StructuralError, JoinAxiomError) as e:
        raise FormatError(f"{where}: {e}") from None


def loads_lines(text: str, where: str = "<input>", raw: bool = False) -> SetLineStructure:
    """Parse a line file; unless ``raw``, it must satisfy A1-A2."""
    doc = _parse(text, where)
    if doc.get("format") != LINE_FORMAT:
        raise FormatError(f"{where}: format tag must be {LINE_FORMAT!r}, got {doc.get('format')!r}")
    n = _points(doc, where)
    lines = doc.get("lines")
    if not isinstance(lines, list):
        raise FormatError(f"{where}: 'lines' must be a list")
    masks = [from_points(_point_list(y, n, f"{where}: lines[{k}]")) for k, y in enumerate(lines)]
    try:
        L = SetLineStructure(n, tuple(masks))
    except StructuralError as e:
        raise FormatError(f"{where}: {e}") from None
    if not raw:
        rep = validate_lines(L)
        if not rep:
            raise FormatError(f"{where}: not a line structure, witness {rep.witness}")
    return L


def read_space(path: str | Path) -> tuple[JoinSpace, list[str] | None]:
    return loads_space(Path(path).read_text(), str(path))


def write_space(path: str | Path, s: JoinSpace, labels: list[str] | None = None) -> None:
    Path(path).write_text(dumps_space(s, labels))


def read_lines(path: str | Path, raw: bool = False) -> SetLineStructure:
    return loads_lines(Path(path).read_text(), str(path), raw)


def write_lines(path: str | Path, L: SetLineStructure) -> None:
    Path(path).write_text(dumps_lines(L))


def compact_space(s: JoinSpace) -> str:
    """Single-line JSON form, used for streams of models."""
    return json.dumps({"format": SPACE_FORMAT, "points": s.n,
                       "joins": [[a, c, list(to_points(m))] for a, c, m in s.joins()]},
                      separators=(",", ":"))


__all__ = ["FormatError", "dumps_space", "loads_space", "dumps_lines", "loads_lines",
           "read_space", "write_space", "read_lines", "write_lines", "compact_space",
           "detect_format", "pairs"]
