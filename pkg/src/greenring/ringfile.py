"""BasedRingFile persistence (JSON) and table emitters (JSON/CSV/text)."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any

from .based import BasedRing
from .errors import GreenRingError
from .presented import render_terms

__all__ = [
    "FORMAT_VERSION",
    "FileFormatError",
    "dumps",
    "ring_to_dict",
    "ring_from_dict",
    "save_ring",
    "load_ring",
    "ring_csv",
    "ring_text",
    "format_float",
]

FORMAT_VERSION = 1


class FileFormatError(GreenRingError):
    """A BasedRingFile is malformed."""


def format_float(x: float) -> str:
    return format(float(x), ".12g")


def _scalar(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, int):
        return str(v)
    return json.dumps(v, ensure_ascii=False)


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON text with stable field order; lists of scalars stay on one line."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_scalar(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return _scalar(obj)


def ring_to_dict(r: BasedRing) -> dict:
    constants = [
        [i, j, k, c]
        for (i, j), terms in sorted(r.constants.items())
        for k, c in terms
    ]
    return {
        "format_version": FORMAT_VERSION,
        "labels": list(r.labels),
        "unit": r.unit_index,
        "involution": list(r.involution) if r.involution is not None else None,
        "constants": constants,
    }


def _require(cond: bool, message: str):
    if not cond:
        raise FileFormatError(message)


def ring_from_dict(data: dict, *, validate: bool = True) -> BasedRing:
    """Build a ring from a parsed BasedRingFile.

    ``validate=False`` skips unit/associativity validation so that a
    verifier can report those defects instead of failing on load.
    """
    _require(isinstance(data, dict), "top level must be an object")
    _require(data.get("format_version") == FORMAT_VERSION,
             f"unsupported format_version {data.get('format_version')!r}")
    labels = data.get("labels")
    _require(isinstance(labels, list) and all(isinstance(s, str) for s in labels),
             "labels must be a list of strings")
    rank = len(labels)
    unit = data.get("unit")
    _require(isinstance(unit, int) and 0 <= unit < rank, "unit index out of range")
    inv = data.get("involution")
    if inv is not None:
        _require(isinstance(inv, list) and len(inv) == rank
                 and all(isinstance(s, int) and 0 <= s < rank for s in inv),
                 "involution must list one index per label")
    seen = set()
    constants: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for entry in data.get("constants", []):
        _require(isinstance(entry, list) and len(entry) == 4
                 and all(isinstance(v, int) and not isinstance(v, bool) for v in entry),
                 f"constant entry {entry!r} is not [i, j, k, N]")
        i, j, k, c = entry
        _require(all(0 <= v < rank for v in (i, j, k)), f"index out of range in {entry!r}")
        _require(c != 0, f"zero structure constant in {entry!r}")
        _require((i, j, k) not in seen, f"duplicate constant ({i}, {j}, {k})")
        seen.add((i, j, k))
        constants.setdefault((i, j), []).append((k, c))
    ring = BasedRing(tuple(labels), unit, constants, validate=validate)
    if inv is not None:
        ring = ring.with_involution(inv) if validate else _attach(ring, inv)
    return ring


def _attach(ring: BasedRing, inv) -> BasedRing:
    from dataclasses import replace

    return replace(ring, involution=tuple(inv), validate=False)


def save_ring(r: BasedRing, path: str | Path) -> None:
    Path(path).write_text(dumps(ring_to_dict(r)) + "\n", encoding="utf-8")


def load_ring(path: str | Path, *, validate: bool = True) -> BasedRing:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON ({exc})") from None
    return ring_from_dict(data, validate=validate)


def _product_text(r: BasedRing, terms) -> str:
    return render_terms((r.labels[k], c) for k, c in sorted(terms, key=lambda t: -t[0]))


def ring_csv(r: BasedRing) -> str:
    """Sparse multiplication table: one row per nonzero product."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["left", "right", "product"])
    for (i, j), terms in sorted(r.constants.items()):
        w.writerow([r.labels[i], r.labels[j], _product_text(r, terms)])
    return buf.getvalue()


def ring_text(r: BasedRing) -> str:
    lines = [f"rank {r.rank}, unit {r.labels[r.unit_index]}"]
    lines.append("basis: " + ", ".join(r.labels))
    if r.involution is not None:
        lines.append("involution: " + ", ".join(
            f"{r.labels[i]} -> {r.labels[s]}" for i, s in enumerate(r.involution)))
    for (i, j), terms in sorted(r.constants.items()):
        lines.append(f"({r.labels[i]}) * ({r.labels[j]}) = {_product_text(r, terms)}")
    return "\n".join(lines) + "\n"
