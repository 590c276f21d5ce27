"""JSON documents for semigroups and congruences.

The writer emits keys in a fixed order and one table row per line, so a
document written by ``dumps`` reads back and re-serializes byte for byte.
See ``docs/format.md`` for the schema.
"""

import json
import sys

from .congruences import Congruence
from .core import FiniteSemigroup, normalize_zero
from .errors import MalformedInputError, ParseError

FORMAT_VERSION = 1
SEMIGROUP_KEYS = ("version", "order", "zero", "identity", "names", "labels", "table")
CONGRUENCE_KEYS = ("version", "order", "blocks")


def _compact(value):
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def _emit(fields, rows_key):
    lines = ["{"]
    items = list(fields.items())
    for i, (key, value) in enumerate(items):
        comma = "," if i < len(items) - 1 else ""
        if key == rows_key:
            lines.append(f'  "{key}": [')
            for j, row in enumerate(value):
                sep = "," if j < len(value) - 1 else ""
                lines.append(f"    {_compact(row)}{sep}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f'  "{key}": {_compact(value)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_document(S):
    return {
        "version": FORMAT_VERSION,
        "order": S.order,
        "zero": S.zero,
        "identity": S.identity,
        "names": None if S.names is None else list(S.names),
        "labels": None if S.labels is None else [None if lab is None else list(lab) for lab in S.labels],
        "table": S.table.tolist(),
    }


def dumps(S):
    return _emit(to_document(S), "table")


def _parse_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None


def _check_keys(doc, allowed, required):
    if not isinstance(doc, dict):
        raise MalformedInputError("document must be a JSON object")
    unknown = sorted(set(doc) - set(allowed))
    if unknown:
        raise MalformedInputError(f"unknown document keys: {', '.join(unknown)}")
    missing = [k for k in required if k not in doc]
    if missing:
        raise MalformedInputError(f"missing document keys: {', '.join(missing)}")
    if doc["version"] != FORMAT_VERSION:
        raise MalformedInputError(f"unsupported format version {doc['version']!r}")


def _is_int(v):
    return isinstance(v, int) and not isinstance(v, bool)


def from_document(doc, normalize=True):
    """Build a validated semigroup from a parsed document.

    Associativity, markers, names and labels are all checked; a zero that
    is not at index 0 is moved there unless ``normalize`` is false.
    """
    _check_keys(doc, SEMIGROUP_KEYS, ("version", "order", "table"))
    order = doc["order"]
    table = doc["table"]
    if not _is_int(order) or order < 1:
        raise MalformedInputError(f"order must be a positive integer, got {order!r}")
    if not isinstance(table, list) or len(table) != order:
        raise MalformedInputError(f"table must be a list of {order} rows")
    for i, row in enumerate(table):
        if not isinstance(row, list) or not all(_is_int(v) for v in row):
            raise MalformedInputError(f"table row {i} must be a list of integers")
    names = doc.get("names")
    if names is not None and not (isinstance(names, list) and all(isinstance(s, str) for s in names)):
        raise MalformedInputError("names must be a list of strings")
    labels = doc.get("labels")
    if labels is not None and not isinstance(labels, list):
        raise MalformedInputError("labels must be a list")
    for key in ("zero", "identity"):
        if doc.get(key) is not None and not _is_int(doc[key]):
            raise MalformedInputError(f"{key} must be an integer or null")
    S = FiniteSemigroup(table, zero=doc.get("zero"), identity=doc.get("identity"), names=names, labels=labels)
    return normalize_zero(S) if normalize else S


def loads(text, normalize=True):
    return from_document(_parse_json(text), normalize=normalize)


def _read(path):
    if str(path) == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from None


def _write(text, path):
    if str(path) == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def load(path, normalize=True):
    return loads(_read(path), normalize=normalize)


def store(S, path):
    _write(dumps(S), path)


def dumps_congruence(c):
    return _emit({"version": FORMAT_VERSION, "order": c.order,
                  "blocks": [list(b) for b in c.blocks()]}, "blocks")


def loads_congruence(text):
    doc = _parse_json(text)
    _check_keys(doc, CONGRUENCE_KEYS, CONGRUENCE_KEYS)
    order = doc["order"]
    blocks = doc["blocks"]
    if not _is_int(order) or order < 1:
        raise MalformedInputError(f"order must be a positive integer, got {order!r}")
    if not isinstance(blocks, list) or not all(
        isinstance(b, list) and all(_is_int(v) for v in b) for b in blocks
    ):
        raise MalformedInputError("blocks must be a list of integer lists")
    return Congruence.from_blocks(blocks, order=order)


def load_congruence(path):
    return loads_congruence(_read(path))


def store_congruence(c, path):
    _write(dumps_congruence(c), path)
