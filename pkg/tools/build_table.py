"""Regenerate the bundled PD table from the KnotInfo/LinkInfo database.

Needs the optional ``database_knotinfo`` package; the runtime package does
not. Knots: prime knots through 8 crossings plus 9_24. Links: prime
multi-component links through 7 crossings, default orientation ({0} or
{0,0}) under ``pd`` and every other orientation under ``orientations``.
"""

import json
import re
import sys
from pathlib import Path

import database_knotinfo

OUT = Path(__file__).resolve().parents[1] / "src" / "shadow_invar" / "data" / "table.json"


def parse_vector(text):
    return [[int(v) for v in re.findall(r"-?\d+", grp)] for grp in re.findall(r"\{([^{}]*)\}", text)]


def knot_key(name):
    c, i = name.split("_")
    return int(c), int(i)


def main():
    entries = []
    knots = database_knotinfo.link_list()[1:]
    for row in knots:
        name = row["name"]
        if name == "0_1":
            continue
        c = int(row["crossing_number"])
        if c <= 8 or name == "9_24":
            pd = json.loads(row["pd_notation"])
            entries.append({"name": name, "kind": "knot", "components": 1, "crossings": c, "pd": pd})
    entries.sort(key=lambda e: knot_key(e["name"]))

    links = {}
    for row in database_knotinfo.link_list(proper_links=True)[1:]:
        c = int(row["crossing_number"])
        if c > 7:
            continue
        base, _, orient = row["name"].partition("{")
        orient = "{" + orient
        entry = links.setdefault(base, {"name": base, "kind": "link", "components": int(row["components"]),
                                        "crossings": c, "pd": None, "orientations": {}})
        pd = parse_vector(row["pd_notation_vector"])
        if set(orient) <= set("{0,}"):
            entry["pd"] = pd
        else:
            entry["orientations"][orient] = pd
    entries.extend(links.values())

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w") as fh:
        fh.write("{\n  \"source\": \"KnotInfo/LinkInfo (database_knotinfo %s)\",\n  \"links\": [\n" % database_knotinfo.version())
        fh.write(",\n".join("    " + json.dumps(e) for e in entries))
        fh.write("\n  ]\n}\n")
    print(f"wrote {len(entries)} entries to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
