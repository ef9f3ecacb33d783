"""JSON persistence for tilings.

A tiling document is a UTF-8 JSON object with the fields ``version``,
``face_degree``, ``twin``, ``next``, ``corner``, ``vertex_of`` and
``meta``; corner labels are stored as the letters a-h.
"""

from __future__ import annotations

import json

from . import tiling as tm
from .tiling import Tiling, letter, label_from_letter

FORMAT_VERSION = 1


def document(t: Tiling, meta: dict | None = None) -> dict:
    """The JSON-ready dictionary for a tiling."""
    degrees = {len(cyc) for cyc in t.faces()}
    return {
        "version": FORMAT_VERSION,
        "face_degree": max(degrees) if len(degrees) == 1 else None,
        "twin": list(t.twin),
        "next": list(t.nxt),
        "corner": [letter(c) for c in t.corner],
        "vertex_of": list(t.vertex_of),
        "meta": dict(meta or {}),
    }


def from_document(doc: dict) -> Tiling:
    """Rebuild a tiling from a parsed document, validating as we go."""
    for field in ("version", "twin", "next", "corner", "vertex_of"):
        if field not in doc:
            raise ValueError("document lacks field %r" % field)
    if doc["version"] != FORMAT_VERSION:
        raise ValueError("unsupported document version %r" % doc["version"])
    corner = [label_from_letter(ch) for ch in doc["corner"]]
    t = Tiling(list(doc["twin"]), list(doc["next"]), corner)
    problems = tm.validate(t, doc.get("face_degree"))
    if problems:
        raise ValueError("inconsistent document: %s" % "; ".join(problems))
    if list(t.vertex_of) != list(doc["vertex_of"]):
        raise ValueError("inconsistent document: vertex_of does not match "
                         "the twin/next orbits")
    return t


def save(path, t: Tiling, meta: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document(t, meta), f)
        f.write("\n")


def load(path) -> Tiling:
    with open(path, encoding="utf-8") as f:
        return from_document(json.load(f))


def load_with_meta(path):
    with open(path, encoding="utf-8") as f:
        doc = json.load(f)
    return from_document(doc), doc.get("meta", {})
