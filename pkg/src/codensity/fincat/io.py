"""JSON category files."""

from __future__ import annotations

import json
from pathlib import Path

from .category import FinCategory
from .concrete import TableConcreteCategory


def load_category(path) -> FinCategory | TableConcreteCategory:
    data = json.loads(Path(path).read_text())
    return category_from_document(data)


def category_from_document(data: dict):
    if "compose" not in data and "poset" in data:
        elems = data["poset"]["elements"]
        rel = {tuple(p) for p in data["poset"]["leq"]}
        closure = _transitive_closure(elems, rel)
        cat = FinCategory.from_poset(elems, lambda a, b: (a, b) in closure, data.get("name", ""))
    else:
        cat = FinCategory.from_dict(data)
    if "underlying" in data:
        return TableConcreteCategory(cat, {x: tuple(v) for x, v in data["underlying"].items()},
                                     data.get("realize", {}), data.get("faithful", True))
    return cat


def _transitive_closure(elems, rel):
    out = set(rel) | {(a, a) for a in elems}
    changed = True
    while changed:
        changed = False
        for a, b in list(out):
            for c, d in list(out):
                if b == c and (a, d) not in out:
                    out.add((a, d))
                    changed = True
    return out


def dump_category(cat: FinCategory) -> str:
    """Byte-stable serialization."""
    return json.dumps(cat.to_dict(), sort_keys=True, indent=1) + "\n"
