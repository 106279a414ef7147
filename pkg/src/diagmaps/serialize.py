"""JSON value forms shared by the CLI and the data files.

group        {"ambient_rank": k, "relations": [[...], ...]}   (relations are columns)
element      {"coords": [...]}
homomorphism {"matrix": [[...], ...]}                          (row-major)

Groups may also be written as canonical text such as ``"Z^2 x Z/3"``.
Extra keys are ignored so that ``--json`` output can be fed back in.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .errors import InputError
from .fgab import Element, FgAbGroup, Homomorphism, IntMatrix, from_invariants, group_from_presentation, hom_make

_TEXT_TERM = re.compile(r"^Z(?:\^(\d+))?$|^Z/(\d+)$")


def parse_group_text(text: str) -> FgAbGroup:
    """Parse ``Z^r x Z/d1 x ...``; ``0`` is the trivial group.

    >>> print(parse_group_text("Z/2 x Z x Z/6"))
    Z x Z/2 x Z/6
    """
    text = text.strip()
    if text in ("0", ""):
        return from_invariants(0, ())
    free_rank, factors = 0, []
    for term in text.split(" x "):
        match = _TEXT_TERM.match(term.strip())
        if not match:
            raise InputError(f"cannot parse group term {term!r}")
        power, mod = match.groups()
        if mod is not None:
            d = int(mod)
            if d == 0:
                free_rank += 1
            elif d > 1:
                factors.append(d)
        else:
            free_rank += int(power) if power else 1
    return from_invariants(free_rank, factors)


def group_from_json(obj: Any) -> FgAbGroup:
    if isinstance(obj, str):
        return parse_group_text(obj)
    if not isinstance(obj, dict) or "ambient_rank" not in obj:
        raise InputError("group must be an object with 'ambient_rank' and 'relations'")
    try:
        k = int(obj["ambient_rank"])
        rels = obj.get("relations", [])
        return group_from_presentation(k, IntMatrix.from_columns(rels, k))
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad group presentation: {exc}") from exc


def group_to_json(g: FgAbGroup) -> dict:
    return {
        "ambient_rank": g.ambient_rank,
        "relations": [list(c) for c in g.relations.columns()],
        "free_rank": g.free_rank,
        "invariant_factors": list(g.invariant_factors),
        "canonical": str(g),
    }


def element_from_json(obj: Any, group: FgAbGroup) -> Element:
    coords = obj.get("coords") if isinstance(obj, dict) else obj
    if not isinstance(coords, list):
        raise InputError("element must be {'coords': [...]} or a list of integers")
    if len(coords) != group.ambient_rank:
        raise InputError(f"element has {len(coords)} coordinates, group {group} needs {group.ambient_rank}")
    return group.element(coords)


def element_to_json(e: Element) -> dict:
    return {"coords": list(e.coords)}


def hom_from_json(obj: Any, source: FgAbGroup, target: FgAbGroup) -> Homomorphism:
    matrix = obj.get("matrix") if isinstance(obj, dict) else obj
    if not isinstance(matrix, list):
        raise InputError("homomorphism must be {'matrix': [[...], ...]}")
    if target.ambient_rank == 0:
        m = IntMatrix.zeros(0, source.ambient_rank)
    else:
        try:
            m = IntMatrix.from_rows(matrix, source.ambient_rank)
        except Exception as exc:
            raise InputError(f"bad homomorphism matrix: {exc}") from exc
    return hom_make(source, target, m)


def hom_to_json(h: Homomorphism) -> dict:
    return {"matrix": h.matrix.tolist()}


def load_json(source: str | Path) -> Any:
    """Read JSON from a file path, or parse the argument itself if it looks like JSON."""
    text = str(source)
    try:
        if text.lstrip().startswith(("{", "[", '"')):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {text[:40]!r}: {exc}") from exc
    except OSError as exc:
        raise InputError(f"cannot read {text!r}: {exc.strerror}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
