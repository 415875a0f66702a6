"""JSON algebra documents and report serialization helpers."""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .algebra import LieAlgebra
from .errors import DuplicatePair, IndexOutOfRange, LieIndexError
from .fields import FieldSpec
from .linalg import Subspace

TOOL_NAME = "lieindex"
TOOL_VERSION = "0.1.0"


class DocumentError(LieIndexError, ValueError):
    pass


def _resolve(ref, names: list[str]) -> int:
    if isinstance(ref, bool):
        raise DocumentError(f"invalid basis reference {ref!r}")
    if isinstance(ref, int):
        if not 0 <= ref < len(names):
            raise IndexOutOfRange(f"basis index {ref} out of range")
        return ref
    if isinstance(ref, str) and ref in names:
        return names.index(ref)
    raise DocumentError(f"unknown basis label {ref!r}")


def parse_algebra(doc: dict) -> LieAlgebra:
    """Build a validated algebra from an AlgebraDocument mapping.

    Basis references may be labels or 0-based indices.
    """
    if not isinstance(doc, dict):
        raise DocumentError("algebra document must be a JSON object")
    try:
        field = FieldSpec.from_json(doc["field"])
        dim = int(doc["dim"])
    except KeyError as exc:
        raise DocumentError(f"missing key {exc.args[0]!r}") from None
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    names = doc.get("basis") or [f"e{i + 1}" for i in range(dim)]
    if len(names) != dim or len(set(names)) != dim:
        raise DocumentError("basis must list dim distinct labels")
    names = [str(x) for x in names]
    table: dict[tuple[int, int], list] = {}
    for entry in doc.get("brackets", []):
        try:
            i = _resolve(entry["left"], names)
            j = _resolve(entry["right"], names)
            value = entry["value"]
        except (KeyError, TypeError):
            raise DocumentError(f"malformed bracket entry {entry!r}") from None
        if i >= j:
            raise DuplicatePair(f"bracket [{names[i]}, {names[j]}] must have left index < right index")
        if (i, j) in table:
            raise DuplicatePair(f"bracket [{names[i]}, {names[j]}] given twice")
        vec = [field.zero] * dim
        if not isinstance(value, dict):
            raise DocumentError(f"bracket value must map labels to scalar strings: {value!r}")
        for label, scalar in value.items():
            k = _resolve(label if label in names else _maybe_int(label), names)
            try:
                vec[k] = field.parse(str(scalar))
            except (ValueError, ZeroDivisionError) as exc:
                raise DocumentError(f"bad scalar {scalar!r}: {exc}") from None
        table[(i, j)] = vec
    return LieAlgebra(field, dim, table, names)


def _maybe_int(label):
    try:
        return int(label)
    except (TypeError, ValueError):
        return label


def algebra_to_doc(L: LieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(L.table):
        v = L.table[(i, j)]
        brackets.append(
            {
                "left": L.names[i],
                "right": L.names[j],
                "value": {L.names[k]: L.field.format(c) for k, c in enumerate(v) if c},
            }
        )
    return {"field": L.field.to_json(), "dim": L.dim, "basis": list(L.names), "brackets": brackets}


def subspace_rows(s: Subspace) -> list[list[str]]:
    return s.format_rows()


def parse_vectors(text_or_list, field: FieldSpec, dim: int) -> list[tuple]:
    """Vectors given as a JSON array of arrays of scalar strings."""
    data = json.loads(text_or_list) if isinstance(text_or_list, str) else text_or_list
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise DocumentError("vectors must be a JSON array of arrays")
    out = []
    for row in data:
        if len(row) != dim:
            raise DocumentError(f"vector {row!r} does not have length {dim}")
        try:
            out.append(tuple(field.parse(str(x)) for x in row))
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"bad scalar in {row!r}: {exc}") from None
    return out


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(payload: Any) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def report(command: list[str], input_payload: Any, results: dict, summary: dict) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "command": list(command),
        "input_digest": digest(input_payload),
        "results": results,
        "summary": summary,
    }
