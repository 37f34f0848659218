"""JSON interchange format for algebras.

    {
      "name": "octonions",
      "dim": 8,
      "basis": ["e0", ..., "e7"],
      "kind": "algebra",            # or "bracket"
      "table": [{"i": 1, "j": 2, "terms": [[3, "1"]]}, ...],
      "params": [1, 2, 3, 4, 5, 6, 7]   # optional
    }

Coefficients are strings ("p/q" or integers) so nothing is ever a float.
Omitted (i, j) entries are zero products.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .algebra import Algebra, AlgebraFormatError, algebra_from_structure_constants


def algebra_to_content(a: Algebra, params: Sequence[int] | None = None) -> dict:
    table = []
    for i, row in enumerate(a.products):
        for j, v in enumerate(row):
            terms = [[k, str(c)] for k, c in enumerate(v.coords) if c]
            if terms:
                table.append({"i": i, "j": j, "terms": terms})
    content = {
        "name": a.name,
        "dim": a.dim,
        "basis": list(a.basis_labels),
        "kind": a.kind,
        "table": table,
    }
    if params is not None:
        content["params"] = list(params)
    return content


def dumps_algebra(a: Algebra, params: Sequence[int] | None = None) -> str:
    return json.dumps(algebra_to_content(a, params), indent=2) + "\n"


def loads_algebra(text: str) -> tuple[Algebra, list[int] | None]:
    """Parse file content; returns the algebra and its optional params list."""
    try:
        content = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"not valid JSON: {exc.msg}", (exc.lineno, exc.colno)) from None
    algebra = algebra_from_structure_constants(content)
    params = content.get("params")
    if params is not None:
        if not isinstance(params, list) or not all(
            isinstance(p, int) and not isinstance(p, bool) and 0 <= p < algebra.dim for p in params
        ):
            raise AlgebraFormatError(f"params must be basis indices below {algebra.dim}", "params")
        if algebra.kind == "bracket":
            raise AlgebraFormatError("params are only meaningful for kind 'algebra'", "params")
    return algebra, params


def load_algebra(path: str | Path) -> tuple[Algebra, list[int] | None]:
    return loads_algebra(Path(path).read_text(encoding="utf-8"))
