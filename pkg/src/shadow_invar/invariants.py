"""Shadow labelings, fundamental module presentations and the enhanced invariants.

Crossing conventions (validated by Reidemeister-move tests): in the
positive reading ``(a, b, c, d)`` of a crossing with birack labels
``x = f(a)``, ``y = f(b)`` we have ``(f(c), f(d)) = B(x, y)``. Across a
semiarc labeled ``w``, the region on its left is the region on its right
acted on by ``w``. The region index ``A`` of a crossing is the quadrant
between ``b`` and ``d``. Beads satisfy ``c = t b + s a`` and ``d = r a``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .algebra import GeneratorIndex, ShadowModuleStructure
from .birack import Birack, Shadow
from .diagram import LinkDiagram, writhe_targets
from .zn import count_homogeneous_solutions


class PropagationInconsistency(AssertionError):
    pass


@dataclass(frozen=True)
class ShadowLabeling:
    diagram: LinkDiagram = field(repr=False, compare=False)
    semiarc_labels: tuple[int, ...]
    region_labels: tuple[int, ...]
    writhe: tuple[int, ...] = ()


def birack_labelings(d: LinkDiagram, b: Birack) -> Iterator[tuple[int, ...]]:
    """All semiarc labelings of ``d`` by ``b``, lexicographic in semiarc index.

    Backtracking in semiarc order; a crossing is checked against its allowed
    label tuples as soon as any of its semiarcs is labeled.
    """
    n, E = b.n, d.n_edges
    if not d.crossings:
        for x in range(n):
            yield (x,) * E
        return
    allowed = [(x, y, b.b1[x][y], b.b2[x][y]) for x in range(n) for y in range(n)]
    touching = [[] for _ in range(E)]
    for X in d.crossings:
        slots = X.reading
        for e in set(slots):
            touching[e].append(slots)
    labels = [None] * E

    def consistent(e):
        for slots in touching[e]:
            cur = [labels[s] for s in slots]
            if not any(all(c is None or c == v for c, v in zip(cur, tup)) for tup in allowed):
                return False
        return True

    def rec(e):
        if e == E:
            yield tuple(labels)
            return
        for v in range(n):
            labels[e] = v
            if consistent(e):
                yield from rec(e + 1)
        labels[e] = None

    yield from rec(0)


def region_labels(d: LinkDiagram, sh: Shadow, arcs: Sequence[int], seed: int) -> tuple[int, ...]:
    """Propagate a shadow label from face 0 across every semiarc."""
    F = d.n_faces
    regions = [None] * F
    regions[0] = seed
    adj = [[] for _ in range(F)]
    for e in range(d.n_edges):
        adj[d.face_right[e]].append((e, d.face_left[e], True))
        adj[d.face_left[e]].append((e, d.face_right[e], False))
    stack = [0]
    while stack:
        f = stack.pop()
        for e, g, to_left in adj[f]:
            w = arcs[e]
            val = sh.act[regions[f]][w] if to_left else sh.act_inv[regions[f]][w]
            if regions[g] is None:
                regions[g] = val
                stack.append(g)
            elif regions[g] != val:
                raise PropagationInconsistency(f"region {g} gets {regions[g]} and {val}")
    return tuple(regions)


def enumerate_shadow_labelings(d: LinkDiagram, b: Birack, sh: Shadow, writhe=()) -> list[ShadowLabeling]:
    out = []
    for arcs in birack_labelings(d, b):
        for A in range(sh.m):
            out.append(ShadowLabeling(d, arcs, region_labels(d, sh, arcs, A), tuple(writhe)))
    return out


def count_birack_labelings(d: LinkDiagram, b: Birack) -> int:
    return sum(1 for _ in birack_labelings(d, b))


def birack_counting_invariant(d: LinkDiagram, b: Birack) -> int:
    """Labelings summed over one full period of framings mod the birack rank."""
    return sum(count_birack_labelings(dd, b) for _, dd in writhe_targets(d, b.rank))


class LinearForm(dict):
    """A formal sum ``{generator or None: integer coefficient}``; None is the constant."""

    def add(self, key, coef):
        v = self.get(key, 0) + coef
        if v:
            self[key] = v
        else:
            self.pop(key, None)

    def specialize(self, ms: ShadowModuleStructure) -> int:
        return sum(c * (1 if g is None else ms.value(g)) for g, c in self.items()) % ms.ring

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for g, c in sorted(self.items(), key=lambda kv: (kv[0] is not None, str(kv[0]))):
            if g is None:
                parts.append(str(c))
            else:
                parts.append(("" if c == 1 else "-" if c == -1 else str(c)) + str(g))
        return " + ".join(parts).replace("+ -", "- ")


@dataclass
class PresentationMatrix:
    """Two rows per crossing, one column per semiarc, entries are LinearForms."""

    rows: list[list[LinearForm]]
    ncols: int

    def specialize(self, ms: ShadowModuleStructure) -> list[list[int]]:
        return [[entry.specialize(ms) for entry in row] for row in self.rows]

    def generators(self) -> set[GeneratorIndex]:
        return {g for row in self.rows for e in row for g in e if g is not None}

    def __str__(self):
        cells = [[str(e) for e in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def presentation_matrix(f: ShadowLabeling) -> PresentationMatrix:
    """Coefficient matrix of the bead relations ``t b + s a - c`` and ``r a - d``."""
    d = f.diagram
    rows = []
    for i, X in enumerate(d.crossings):
        a, b, c, dd = X.reading
        x, y = f.semiarc_labels[a], f.semiarc_labels[b]
        A = f.region_labels[d.crossing_face(i)]
        r1 = [LinearForm() for _ in range(d.n_edges)]
        r2 = [LinearForm() for _ in range(d.n_edges)]
        r1[b].add(GeneratorIndex("t", A, x, y), 1)
        r1[a].add(GeneratorIndex("s", A, x, y), 1)
        r1[c].add(None, -1)
        r2[a].add(GeneratorIndex("r", A, x, y), 1)
        r2[dd].add(None, -1)
        rows += [r1, r2]
    return PresentationMatrix(rows, d.n_edges)


def count_module_homs(pm: PresentationMatrix, ms: ShadowModuleStructure) -> int:
    return count_homogeneous_solutions(pm.specialize(ms), ms.ring, pm.ncols)


@dataclass(frozen=True)
class InvariantValue:
    """Multiset of hom counts (sorted ascending) and the matching polynomial in u."""

    multiset: tuple[int, ...]

    @property
    def polynomial(self) -> dict[int, int]:
        return dict(sorted(Counter(self.multiset).items()))

    @classmethod
    def from_polynomial(cls, poly: dict[int, int]) -> "InvariantValue":
        return cls(tuple(sorted(e for e, c in poly.items() for _ in range(c))))

    def __str__(self):
        if not self.multiset:
            return "0"
        terms = []
        for e, c in self.polynomial.items():
            if e == 0:
                terms.append(str(c))
                continue
            coef = "" if c == 1 else str(c)
            terms.append(f"{coef}u" if e == 1 else f"{coef}u^{e}")
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {"multiset": list(self.multiset),
                "polynomial": {str(e): c for e, c in self.polynomial.items()}}


def shadow_module_invariant(d: LinkDiagram, b: Birack, sh: Shadow, ms: ShadowModuleStructure) -> InvariantValue:
    counts = []
    for w, dd in writhe_targets(d, b.rank):
        for f in enumerate_shadow_labelings(dd, b, sh, w):
            counts.append(count_module_homs(presentation_matrix(f), ms))
    return InvariantValue(tuple(sorted(counts)))


def parse_polynomial(text: str) -> InvariantValue:
    """Inverse of ``str(InvariantValue)``, e.g. ``"4u^3 + 4u^27"``."""
    poly = {}
    text = text.strip()
    if text == "0":
        return InvariantValue(())
    for term in text.replace(" ", "").split("+"):
        if "u" in term:
            coef, _, exp = term.partition("u")
            e = int(exp[1:]) if exp.startswith("^") else 1
            c = int(coef) if coef else 1
        else:
            e, c = 0, int(term)
        poly[e] = poly.get(e, 0) + c
    return InvariantValue.from_polynomial(poly)
