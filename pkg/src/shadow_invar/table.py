"""Bundled PD codes: prime knots through 8 crossings plus 9_24, prime links through 7.

Knot codes come from KnotInfo and link codes from LinkInfo, taken in
LinkInfo's default orientation. Set ``SHADOW_INVAR_TABLE`` to use a
different table file of the same shape.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .diagram import LinkDiagram, diagram_from_pd, mirror, unknot

ENV_VAR = "SHADOW_INVAR_TABLE"
UNKNOT_NAMES = ("0_1", "unknot", "Unknot")


@dataclass(frozen=True)
class TableEntry:
    name: str
    kind: str
    components: int
    crossings: int
    pd: tuple
    orientations: dict = field(default_factory=dict, compare=False)

    def diagram(self, mirrored: bool = False) -> LinkDiagram:
        d = diagram_from_pd(self.pd, self.name)
        return mirror(d) if mirrored else d


def table_path() -> str:
    override = os.environ.get(ENV_VAR)
    if override:
        return override
    return str(resources.files("shadow_invar") / "data" / "table.json")


@lru_cache(maxsize=4)
def _read(path: str) -> tuple[TableEntry, ...]:
    with open(path) as fh:
        data = json.load(fh)
    return tuple(
        TableEntry(e["name"], e.get("kind", "knot" if e["components"] == 1 else "link"),
                   e["components"], e.get("crossings", len(e["pd"])),
                   tuple(tuple(x) for x in e["pd"]), e.get("orientations", {}))
        for e in data["links"]
    )


def load_table(path: str | None = None) -> tuple[TableEntry, ...]:
    return _read(path or table_path())


def lookup(name: str, path: str | None = None) -> TableEntry:
    for e in load_table(path):
        if e.name == name:
            return e
    raise KeyError(name)


def resolve_link(name: str, mirrored: bool = False, path: str | None = None) -> LinkDiagram:
    """Diagram for a table name; the unknot names give the 0-crossing diagram."""
    if name in UNKNOT_NAMES:
        return unknot()
    return lookup(name, path).diagram(mirrored)


def select(max_crossings: int, links: bool = False, max_link_crossings: int | None = None,
           extra: tuple[str, ...] = (), path: str | None = None) -> list[TableEntry]:
    """Knots up to ``max_crossings`` (and links, if asked), in table order, plus ``extra``."""
    if max_link_crossings is None:
        max_link_crossings = max_crossings
    out = []
    for e in load_table(path):
        if e.kind == "knot" and e.crossings <= max_crossings:
            out.append(e)
        elif e.kind == "link" and links and e.crossings <= max_link_crossings:
            out.append(e)
        elif e.name in extra:
            out.append(e)
    return out
