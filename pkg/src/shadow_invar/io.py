"""JSON file formats for biracks, shadows, module structures and links.

All indices in files are 1-based::

    {"kind": "birack", "n": 2, "U": [[1, 1], [2, 2]], "L": [[2, 2], [1, 1]]}
    {"kind": "shadow", "m": 3, "action": [[2, 2], [3, 3], [1, 1]]}
    {"kind": "module", "ring": 3, "blocks": [{"A": 1, "T": ..., "S": ..., "R": ...}, ...]}
    {"name": "3_1", "components": 1, "pd": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import ShadowModuleStructure
from .birack import Birack, Shadow
from .diagram import LinkDiagram, diagram_from_pd, unknot


class StructureFileError(ValueError):
    """A structure file is missing, unparsable or has the wrong shape."""


def _load(path) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise StructureFileError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise StructureFileError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise StructureFileError(f"{path}: expected a JSON object")
    return data


def _require(data: dict, kind: str, keys: set[str], path) -> None:
    if data.get("kind") != kind:
        raise StructureFileError(f"{path}: expected kind {kind!r}, got {data.get('kind')!r}")
    if set(data) != keys | {"kind"}:
        raise StructureFileError(f"{path}: keys must be exactly {sorted(keys | {'kind'})}")


def _square(table, n: int, name: str, path) -> None:
    if not (isinstance(table, list) and len(table) == n
            and all(isinstance(r, list) and len(r) == n and all(isinstance(v, int) for v in r) for r in table)):
        raise StructureFileError(f"{path}: {name} must be an {n}x{n} integer table")


def birack_from_json(data: dict, path="<birack>", verify: bool = True) -> Birack:
    _require(data, "birack", {"n", "U", "L"}, path)
    n = data["n"]
    _square(data["U"], n, "U", path)
    _square(data["L"], n, "L", path)
    try:
        b = Birack([[data["U"][y][x] - 1 for y in range(n)] for x in range(n)],
                   [[data["L"][x][y] - 1 for y in range(n)] for x in range(n)], verify=False)
    except (IndexError, TypeError) as exc:
        raise StructureFileError(f"{path}: {exc}") from exc
    if any(not 0 <= v < n for row in b.b1 + b.b2 for v in row):
        raise StructureFileError(f"{path}: entries must lie in 1..{n}")
    if verify:
        b.verify()
    return b


def shadow_from_json(data: dict, birack: Birack, path="<shadow>", verify: bool = True) -> Shadow:
    _require(data, "shadow", {"m", "action"}, path)
    m, action = data["m"], data["action"]
    if not (isinstance(action, list) and len(action) == m
            and all(isinstance(r, list) and len(r) == birack.n for r in action)):
        raise StructureFileError(f"{path}: action must be an {m}x{birack.n} table")
    if any(not (isinstance(v, int) and 1 <= v <= m) for r in action for v in r):
        raise StructureFileError(f"{path}: action entries must lie in 1..{m}")
    return Shadow(birack, [[v - 1 for v in r] for r in action], verify=verify)


def module_from_json(data: dict, path="<module>") -> ShadowModuleStructure:
    _require(data, "module", {"ring", "blocks"}, path)
    k, blocks = data["ring"], data["blocks"]
    if not isinstance(k, int) or k < 2:
        raise StructureFileError(f"{path}: ring must be an integer >= 2")
    if not isinstance(blocks, list) or not blocks:
        raise StructureFileError(f"{path}: blocks must be a non-empty list")
    by_A = {}
    for blk in blocks:
        if not isinstance(blk, dict) or set(blk) != {"A", "T", "S", "R"}:
            raise StructureFileError(f"{path}: each block needs exactly A, T, S, R")
        by_A[blk["A"]] = blk
    if sorted(by_A) != list(range(1, len(blocks) + 1)):
        raise StructureFileError(f"{path}: block indices A must be 1..{len(blocks)}")
    n = len(blocks[0]["T"])
    for blk in blocks:
        for key in "TSR":
            _square(blk[key], n, f"block A={blk['A']} {key}", path)
    ordered = [by_A[A] for A in range(1, len(blocks) + 1)]
    return ShadowModuleStructure(k, [b["T"] for b in ordered], [b["S"] for b in ordered],
                                 [b["R"] for b in ordered])


def birack_to_json(b: Birack) -> dict:
    return {"kind": "birack", "n": b.n, "U": b.U, "L": b.L}


def shadow_to_json(sh: Shadow) -> dict:
    return {"kind": "shadow", "m": sh.m, "action": sh.table}


def module_to_json(ms: ShadowModuleStructure) -> dict:
    return {"kind": "module", "ring": ms.ring, "blocks": [
        {"A": A + 1, "T": [list(r) for r in ms.T[A]], "S": [list(r) for r in ms.S[A]],
         "R": [list(r) for r in ms.R[A]]} for A in range(ms.m)]}


def load_birack(path, verify: bool = True) -> Birack:
    return birack_from_json(_load(path), path, verify)


def load_shadow(path, birack: Birack, verify: bool = True) -> Shadow:
    return shadow_from_json(_load(path), birack, path, verify)


def load_module(path) -> ShadowModuleStructure:
    return module_from_json(_load(path), path)


def link_from_json(data: dict, path="<link>") -> LinkDiagram:
    if "pd" not in data:
        raise StructureFileError(f"{path}: link file needs a 'pd' entry")
    name = data.get("name", Path(str(path)).stem)
    pd = data["pd"]
    if not pd:
        return unknot()
    d = diagram_from_pd(pd, name)
    if "components" in data and data["components"] != d.n_components:
        raise StructureFileError(f"{path}: declared {data['components']} components, PD has {d.n_components}")
    return d


def load_link(path) -> LinkDiagram:
    return link_from_json(_load(path), path)


def dump(obj: dict) -> str:
    return json.dumps(obj, separators=(", ", ": "))
