"""Single-edit mutations of graph documents: label flips, deletions, redirections."""

from __future__ import annotations

import copy
from dataclasses import dataclass
from typing import Iterator

from .graph import RED


@dataclass(frozen=True)
class Mutation:
    kind: str  # "flip", "delete" or "redirect"
    edge: int
    value: object = None

    def __str__(self) -> str:
        return f"{self.kind}[{self.edge}]" + ("" if self.value is None else f"={self.value}")


def single_edit_mutations(doc: dict) -> Iterator[tuple[Mutation, dict]]:
    """Every document differing from ``doc`` by one edge edit.

    Flips go to every other legal label of the edge colour; redirections
    go to every other vertex.
    """
    ids = [v["id"] for v in doc["vertices"]]
    for i, e in enumerate(doc["edges"]):
        labels = (0, 2) if e["color"] == RED else (0, 1, 2)
        for lab in labels:
            if lab != e.get("label_halves"):
                yield Mutation("flip", i, lab), _replace(doc, i, {**e, "label_halves": lab})
        yield Mutation("delete", i), _replace(doc, i, None)
        for w in ids:
            if w != e["dst"]:
                yield Mutation("redirect", i, w), _replace(doc, i, {**e, "dst": w})


def _replace(doc: dict, i: int, edge: dict | None) -> dict:
    out = copy.copy(doc)
    edges = list(doc["edges"])
    if edge is None:
        del edges[i]
    else:
        edges[i] = edge
    out["edges"] = edges
    return out
