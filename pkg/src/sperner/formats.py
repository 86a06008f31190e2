"""Reading and writing partition-system documents.

Two interchangeable representations:

* Plain text: a header line ``n k m`` (optionally followed by ``base=0``
  or ``base=1``; default 0), then m partition lines.  Classes are
  separated by ``|``, elements by ``,``.  Lines starting with ``#`` are
  comments; ``# name: X`` sets the system name.  With ``base=1`` labels
  1..n are shifted down by one; the token ``inf`` always denotes the
  final internal element n-1 (the center point of the rotational
  layouts).

* JSON: a versioned object with explicit ``n``, ``k``, ``name``,
  0-based ``partitions`` and a free-form ``metadata`` map.

Serialization canonicalizes: classes sorted by (size, smallest element),
partitions sorted likewise, so parse(serialize(s)) == s in canonical form
and equal systems serialize byte-identically.
"""

from __future__ import annotations

import json

from .model import Partition, PartitionSystem

__all__ = ["FORMAT_VERSION", "ParseError", "serialize", "parse"]

FORMAT_VERSION = 1


class ParseError(Exception):
    """Document error with an optional 1-based line/column position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


def _canonical_partitions(system: PartitionSystem) -> list[Partition]:
    return sorted(system.partitions, key=lambda p: p._key())


def serialize(system: PartitionSystem, fmt: str = "text", metadata: dict | None = None) -> str:
    """Render a system as a text or JSON document (labels 0-based)."""
    parts = _canonical_partitions(system)
    if fmt == "text":
        lines = []
        if system.name:
            lines.append(f"# name: {system.name}")
        lines.append(f"{system.n} {system.k} {len(parts)}")
        for p in parts:
            lines.append("|".join(",".join(str(e) for e in c) for c in p.class_sets))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "format_version": FORMAT_VERSION,
            "n": system.n,
            "k": system.k,
            "name": system.name,
            "partitions": [[list(c) for c in p.class_sets] for p in parts],
            "metadata": metadata or {},
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r} (expected 'text' or 'json')")


def parse(text: str) -> PartitionSystem:
    """Parse a text or JSON document into a validated PartitionSystem.

    Every partition must be a genuine k-partition of the declared ground
    set; structural defects (duplicate or uncovered elements, wrong class
    count) raise ParseError with the offending position.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _parse_json(text: str) -> PartitionSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    for key in ("n", "k", "partitions"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    n, k = doc["n"], doc["k"]
    if not (isinstance(n, int) and isinstance(k, int) and n >= 1 and k >= 1):
        raise ParseError("n and k must be positive integers")
    raw = doc["partitions"]
    if not isinstance(raw, list):
        raise ParseError("partitions must be a list")
    partitions = []
    for idx, classes in enumerate(raw):
        if not isinstance(classes, list) or not all(isinstance(c, list) for c in classes):
            raise ParseError(f"partition {idx} must be a list of element lists")
        try:
            part = _build_partition(n, k, [[_check_int(e, idx) for e in c] for c in classes])
        except ParseError:
            raise
        partitions.append(part)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string or null")
    return PartitionSystem(n, k, partitions, name=name)


def _check_int(e, idx: int) -> int:
    if not isinstance(e, int):
        raise ParseError(f"partition {idx}: element {e!r} is not an integer")
    return e


def _build_partition(n: int, k: int, classes: list[list[int]], line: int | None = None) -> Partition:
    if len(classes) != k:
        raise ParseError(f"expected {k} classes, found {len(classes)}", line)
    seen: dict[int, bool] = {}
    for c in classes:
        if not c:
            raise ParseError("empty class", line)
        for e in c:
            if not 0 <= e < n:
                raise ParseError(f"element {e} outside 0..{n - 1}", line)
            if e in seen:
                raise ParseError(f"element {e} appears more than once", line)
            seen[e] = True
    for e in range(n):
        if e not in seen:
            raise ParseError(f"element {e} uncovered", line)
    return Partition(n, classes, k)


def _parse_text(text: str) -> PartitionSystem:
    name = None
    header = None
    header_line = 0
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("name:"):
                name = comment[len("name:"):].strip() or None
            continue
        if header is None:
            header = line
            header_line = lineno
        else:
            body.append((lineno, line))

    if header is None:
        raise ParseError("empty document")

    tokens = header.split()
    if len(tokens) < 3:
        raise ParseError("header must be 'n k m' with optional 'base=0|1'", header_line, 1)
    try:
        n, k, count = (int(t) for t in tokens[:3])
    except ValueError:
        raise ParseError("header must start with three integers", header_line, 1) from None
    if n < 1 or k < 1 or count < 0:
        raise ParseError("header values must be positive (partition count may be 0)", header_line, 1)
    base = 0
    for tok in tokens[3:]:
        if tok in ("base=0", "base=1"):
            base = int(tok[-1])
        else:
            raise ParseError(f"unrecognized header token {tok!r}", header_line, header.find(tok) + 1)

    if len(body) != count:
        raise ParseError(
            f"header declares {count} partitions, found {len(body)}",
            body[count][0] if len(body) > count else header_line,
        )

    partitions = []
    for lineno, line in body:
        classes: list[list[int]] = []
        cls: list[int] = []
        token_start = 0
        for idx, ch in enumerate(line + ","):  # sentinel terminates the last token
            if ch not in ",|":
                continue
            word = line[token_start:idx].strip()
            col = token_start + 1
            token_start = idx + 1
            if word == "inf":
                cls.append(n - 1)
            else:
                try:
                    value = int(word)
                except ValueError:
                    raise ParseError(f"bad element token {word!r}", lineno, col) from None
                internal = value - base
                if not 0 <= internal < n:
                    raise ParseError(
                        f"element {value} outside the declared ground set", lineno, col
                    )
                cls.append(internal)
            if ch == "|":
                classes.append(cls)
                cls = []
        classes.append(cls)
        partitions.append(_build_partition(n, k, classes, line=lineno))
    return PartitionSystem(n, k, partitions, name=name)
