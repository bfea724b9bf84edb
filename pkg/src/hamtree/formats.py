"""JSON documents for trees and colorings.

Tree file::

    {"format": "hamtree-tree", "version": 1, "n": 4,
     "edges": [[0, 1], [0, 2], [0, 3]],
     "labels": {"0": "w", ...},                      # optional
     "family": {"kind": "symmetric", "params": {"k": 2, "d": 2},
                "canonical_order": [0, 1, 2, 3],
                "order_source": "literal"}}          # optional

Coloring file::

    {"format": "hamtree-coloring", "version": 1,
     "colors": {"0": 0, "1": 2, ...}, "span": 4, ...extra fields}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .coloring import Coloring
from .families import FamilyInstance
from .tree import Tree, TreeError, validate_tree

TREE_FORMAT = "hamtree-tree"
COLORING_FORMAT = "hamtree-coloring"
VERSION = 1


class FileFormatError(ValueError):
    pass


@dataclass
class TreeDoc:
    tree: Tree
    labels: dict[int, str] | None = None
    family: dict[str, Any] | None = None

    @classmethod
    def from_instance(cls, inst: FamilyInstance) -> "TreeDoc":
        fam = {
            "kind": inst.spec.kind,
            "params": inst.spec.p,
            "canonical_order": list(inst.canonical_order),
            "order_source": inst.order_source,
        }
        return cls(inst.tree, dict(inst.labels), fam)

    @property
    def canonical_order(self) -> tuple[int, ...] | None:
        if self.family and "canonical_order" in self.family:
            return tuple(self.family["canonical_order"])
        return None


@dataclass
class ColoringDoc:
    coloring: Coloring
    extra: dict[str, Any] = field(default_factory=dict)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def tree_to_dict(doc: TreeDoc) -> dict:
    out: dict[str, Any] = {
        "format": TREE_FORMAT,
        "version": VERSION,
        "n": doc.tree.n,
        "edges": [list(e) for e in doc.tree.edges],
    }
    if doc.labels is not None:
        out["labels"] = {str(u): doc.labels[u] for u in sorted(doc.labels)}
    if doc.family is not None:
        out["family"] = doc.family
    return out


def tree_from_dict(data: Any) -> TreeDoc:
    if not isinstance(data, dict) or data.get("format") != TREE_FORMAT:
        raise FileFormatError(f"not a {TREE_FORMAT} document")
    if data.get("version") != VERSION:
        raise FileFormatError(f"unsupported version {data.get('version')!r}")
    try:
        tree = validate_tree(int(data["n"]), data["edges"])
        labels = data.get("labels")
        if labels is not None:
            labels = {int(u): str(name) for u, name in labels.items()}
    except KeyError as e:
        raise FileFormatError(f"missing field {e}") from None
    except (TypeError, ValueError) as e:
        if isinstance(e, TreeError):
            raise FileFormatError(f"invalid tree: {e}") from None
        raise FileFormatError(str(e)) from None
    return TreeDoc(tree, labels, data.get("family"))


def coloring_to_dict(doc: ColoringDoc) -> dict:
    out: dict[str, Any] = {
        "format": COLORING_FORMAT,
        "version": VERSION,
        "colors": {str(u): c for u, c in enumerate(doc.coloring.colors)},
        "span": doc.coloring.span,
    }
    out.update(doc.extra)
    return out


def coloring_from_dict(data: Any, n: int | None = None) -> ColoringDoc:
    """Parse a coloring document; with ``n`` every vertex 0..n-1 must appear."""
    if not isinstance(data, dict) or data.get("format") != COLORING_FORMAT:
        raise FileFormatError(f"not a {COLORING_FORMAT} document")
    if data.get("version") != VERSION:
        raise FileFormatError(f"unsupported version {data.get('version')!r}")
    try:
        raw = {int(u): int(c) for u, c in data["colors"].items()}
        span = int(data["span"])
    except KeyError as e:
        raise FileFormatError(f"missing field {e}") from None
    except (TypeError, ValueError, AttributeError) as e:
        raise FileFormatError(str(e)) from None
    size = n if n is not None else len(raw)
    if sorted(raw) != list(range(size)):
        missing = sorted(set(range(size)) - set(raw))
        raise FileFormatError(f"colors must cover vertices 0..{size - 1} exactly (missing {missing})")
    if any(c < 0 for c in raw.values()):
        raise FileFormatError("colors must be non-negative")
    col = Coloring(tuple(raw[u] for u in range(size)))
    if col.span != span:
        raise FileFormatError(f"recorded span {span} != max color {col.span}")
    extra = {k: v for k, v in data.items() if k not in ("format", "version", "colors", "span")}
    return ColoringDoc(col, extra)


def _read_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise FileFormatError(f"{path}: {e}") from None


def save_tree(path, doc: TreeDoc) -> None:
    Path(path).write_text(dumps(tree_to_dict(doc)))


def load_tree(path) -> TreeDoc:
    return tree_from_dict(_read_json(path))


def save_coloring(path, doc: ColoringDoc) -> None:
    Path(path).write_text(dumps(coloring_to_dict(doc)))


def load_coloring(path, n: int | None = None) -> ColoringDoc:
    return coloring_from_dict(_read_json(path), n)


def load_order(path, n: int) -> tuple[int, ...]:
    """A vertex order stored as a JSON list or as whitespace/comma separated ids."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise FileFormatError(str(e)) from None
    try:
        data = json.loads(text)
        if isinstance(data, dict):
            data = data.get("order")
        order = tuple(int(x) for x in data)
    except (json.JSONDecodeError, TypeError, ValueError):
        try:
            order = tuple(int(x) for x in text.replace(",", " ").split())
        except ValueError as e:
            raise FileFormatError(f"{path}: {e}") from None
    if sorted(order) != list(range(n)):
        raise FileFormatError(f"{path}: order is not a permutation of 0..{n - 1}")
    return order
