"""JSON system documents.

A document looks like::

    {
      "order": 2,
      "matrices": [[["1", "0"], ["1", "1"]], [["1", "0"], ["1", "1"]]],
      "initialA": ["1", "1"],
      "initialB": ["0", "1"]
    }

Scalars are strings such as ``"3"``, ``"-1/2"`` or ``"1/3+2/5i"`` (plain
JSON integers are accepted too). An optional ``"coefficients"`` list claims
a scalar recurrence for the system; ``verify`` tests that claim.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .algebra import Mat2, Scalar, as_scalar, format_scalar
from .decouple import CoefficientVector, CoupledSystem

__all__ = [
    "DocumentError",
    "SystemDocument",
    "parse_document",
    "loads_document",
    "system_to_document",
    "dumps_document",
    "canonical_document",
]


class DocumentError(ValueError):
    """Malformed or inconsistent system document."""


@dataclass(frozen=True)
class SystemDocument:
    system: CoupledSystem
    claimed: CoefficientVector | None = None


def _scalar(value: Any, where: str) -> Scalar:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(f"{where}: expected a scalar string, got {value!r}")
    try:
        return as_scalar(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{where}: {exc}") from None


def _scalar_list(value: Any, where: str) -> list[Scalar]:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list")
    return [_scalar(v, f"{where}[{i}]") for i, v in enumerate(value)]


def parse_document(doc: Any) -> SystemDocument:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    missing = [k for k in ("order", "matrices", "initialA", "initialB") if k not in doc]
    if missing:
        raise DocumentError(f"missing field(s): {', '.join(missing)}")
    order = doc["order"]
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise DocumentError(f"order must be a positive integer, got {order!r}")
    raw = doc["matrices"]
    if not isinstance(raw, list) or len(raw) != order:
        raise DocumentError(f"expected {order} matrices")
    matrices = []
    for t, m in enumerate(raw):
        if not isinstance(m, list) or len(m) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in m):
            raise DocumentError(f"matrices[{t}]: expected a 2x2 grid")
        matrices.append(Mat2(*(_scalar(m[r][c], f"matrices[{t}][{r}][{c}]") for r in range(2) for c in range(2))))
    init_a = _scalar_list(doc["initialA"], "initialA")
    init_b = _scalar_list(doc["initialB"], "initialB")
    if len(init_a) != order or len(init_b) != order:
        raise DocumentError(f"initialA and initialB need {order} entries each")
    claimed = None
    if doc.get("coefficients") is not None:
        cs = _scalar_list(doc["coefficients"], "coefficients")
        if len(cs) != 2 * order:
            raise DocumentError(f"coefficients need {2 * order} entries")
        claimed = CoefficientVector(order, tuple(cs))
    return SystemDocument(CoupledSystem(tuple(matrices), tuple(init_a), tuple(init_b)), claimed)


def loads_document(text: str) -> SystemDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return parse_document(doc)


def system_to_document(sys: CoupledSystem, claimed: CoefficientVector | None = None) -> dict:
    doc: dict[str, Any] = {
        "order": sys.order,
        "matrices": [[[format_scalar(x) for x in row] for row in m.rows] for m in sys.matrices],
        "initialA": [format_scalar(x) for x in sys.init_a],
        "initialB": [format_scalar(x) for x in sys.init_b],
    }
    if claimed is not None:
        doc["coefficients"] = [format_scalar(x) for x in claimed.coeffs]
    return doc


def dumps_document(sys: CoupledSystem, claimed: CoefficientVector | None = None) -> str:
    return json.dumps(system_to_document(sys, claimed), indent=2)


def canonical_document(doc: dict) -> dict:
    """Same document with every scalar rewritten in canonical string form."""
    parsed = parse_document(doc)
    return system_to_document(parsed.system, parsed.claimed)
