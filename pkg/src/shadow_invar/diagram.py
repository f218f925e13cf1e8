"""Oriented blackboard-framed link diagrams built from PD codes.

PD convention: ``X(a, b, c, d)`` lists the four semiarcs meeting at a
crossing counterclockwise, starting from the incoming under-strand ``a``
(so ``c`` is the outgoing under-strand). The crossing is positive when the
over-strand runs ``d -> b`` and negative when it runs ``b -> d``.

Corner ``i`` of a crossing is the quadrant between positions ``i`` and
``i + 1``. Semiarcs are renumbered ``0..E-1`` in increasing order of their
PD labels; the original labels are kept in ``LinkDiagram.labels``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Sequence


class MalformedPD(ValueError):
    pass


class NonOrientable(ValueError):
    pass


class NonPlanar(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    """A crossing with its semiarcs by role and its positive reading.

    The positive reading ``(a, b, c, d)`` is ``(over-in, under-in,
    under-out, over-out)`` for a positive crossing and ``(over-out,
    under-out, under-in, over-in)`` for a negative one. Labels satisfy
    ``(label c, label d) = B(label a, label b)`` either way, and
    ``corner`` is the quadrant between ``b`` and ``d``.
    """

    pd: tuple[int, int, int, int]
    sign: int
    over_in: int
    over_out: int
    under_in: int
    under_out: int

    @property
    def reading(self) -> tuple[int, int, int, int]:
        if self.sign > 0:
            return self.over_in, self.under_in, self.under_out, self.over_out
        return self.over_out, self.under_out, self.under_in, self.over_in

    @property
    def corner(self) -> int:
        # between positions 0 (under-in) and 1 (over-out) when positive,
        # between 1 (over-in) and 2 (under-out) when negative
        return 0 if self.sign > 0 else 1


class LinkDiagram:
    """A fully derived oriented planar link diagram.

    Attributes: ``crossings``; ``n_edges``; ``labels`` (PD label of each
    semiarc); ``head``/``tail`` (``(crossing, position)`` where each semiarc
    ends/starts); ``faces`` (list of corner lists); ``face_left``/
    ``face_right`` per semiarc relative to its orientation; ``components``
    (semiarcs in traversal order); ``self_writhe`` per component.
    """

    def __init__(self, pd: Sequence[Sequence[int]], over_forward: Sequence[bool], name: str = ""):
        self.name = name
        self.pd = tuple(tuple(x) for x in pd)
        self._over_forward = tuple(over_forward)
        if not self.pd:
            self._init_unknot()
        else:
            self._derive()
        self._check_euler()

    # -- construction --------------------------------------------------------

    def _init_unknot(self):
        self.crossings = ()
        self.labels = (1,)
        self.n_edges = 1
        self.head = self.tail = ()
        self.faces = [[], []]
        self.face_right = (0,)
        self.face_left = (1,)
        self.components = ((0,),)
        self.edge_component = (0,)
        self.self_writhe = (0,)

    def _derive(self):
        labels = sorted({e for x in self.pd for e in x})
        index = {e: i for i, e in enumerate(labels)}
        self.labels = tuple(labels)
        self.n_edges = E = len(labels)
        pd = [tuple(index[e] for e in x) for x in self.pd]

        head = [None] * E
        tail = [None] * E
        crossings = []
        for i, (x, fwd) in enumerate(zip(pd, self._over_forward)):
            a, b, c, d = x
            # fwd: over-strand runs from position 1 to position 3 (b -> d)
            oi, oo = (1, 3) if fwd else (3, 1)
            for pos, role in ((0, "in"), (2, "out"), (oi, "in"), (oo, "out")):
                slot = head if role == "in" else tail
                if slot[x[pos]] is not None:
                    raise NonOrientable(f"semiarc {labels[x[pos]]} has two {role}bound ends")
                slot[x[pos]] = (i, pos)
            crossings.append(Crossing(
                pd=x, sign=-1 if fwd else 1,
                over_in=x[oi], over_out=x[oo], under_in=a, under_out=c,
            ))
        self.crossings = tuple(crossings)
        self.head, self.tail = tuple(head), tuple(tail)

        # faces by corner tracing: corner (X, i) -> semiarc at position i+1
        # -> its other end (Y, q) -> corner (Y, q)
        ends = {}
        for e in range(E):
            ends[head[e]] = tail[e]
            ends[tail[e]] = head[e]
        corner_face = {}
        faces = []
        for X, i in product(range(len(pd)), range(4)):
            if (X, i) in corner_face:
                continue
            fid = len(faces)
            cycle = []
            cur = (X, i)
            while cur not in corner_face:
                corner_face[cur] = fid
                cycle.append(cur)
                cur = ends[(cur[0], (cur[1] + 1) % 4)]
            if cur != (X, i):
                raise NonPlanar("corner tracing did not close up")
            faces.append(cycle)
        self.faces = faces
        self.corner_face = corner_face
        # arriving at position q: corner q is on the right, corner q-1 on the left
        self.face_right = tuple(corner_face[(head[e][0], head[e][1])] for e in range(E))
        self.face_left = tuple(corner_face[(head[e][0], (head[e][1] - 1) % 4)] for e in range(E))

        # components by following each strand straight through crossings
        succ = [pd[head[e][0]][(head[e][1] + 2) % 4] for e in range(E)]
        comp = [-1] * E
        components = []
        for e in range(E):
            if comp[e] >= 0:
                continue
            cid = len(components)
            walk = []
            f = e
            while comp[f] < 0:
                comp[f] = cid
                walk.append(f)
                f = succ[f]
            components.append(tuple(walk))
        self.components = tuple(components)
        self.edge_component = tuple(comp)
        self.successor = tuple(succ)
        writhe = [0] * len(components)
        for x in crossings:
            if comp[x.over_in] == comp[x.under_in]:
                writhe[comp[x.over_in]] += x.sign
        self.self_writhe = tuple(writhe)

    def _check_euler(self):
        V, E, F = len(self.crossings), self.n_edges, len(self.faces)
        if V and V - E + F != 2:
            raise NonPlanar(f"V - E + F = {V} - {E} + {F} != 2")

    # -- views ---------------------------------------------------------------

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def crossing_face(self, i: int) -> int:
        """The face at the distinguished corner of crossing ``i``."""
        return self.corner_face[(i, self.crossings[i].corner)]

    def pd_code(self) -> list[list[int]]:
        return [list(x) for x in self.pd]

    def __repr__(self):
        return (f"LinkDiagram({self.name!r}, crossings={len(self.crossings)}, "
                f"components={self.n_components}, self_writhe={self.self_writhe})")


def _orient(pd: Sequence[tuple[int, ...]]) -> list[bool]:
    """Decide for each crossing whether its over-strand runs b -> d.

    Under-strands fix the direction of their semiarcs; directions then
    propagate through semiarcs (one end in, one end out) and across the two
    over positions of each crossing. Components with no under-crossing at
    all fall back to consecutive PD numbering.
    """
    occ = {}
    for i, x in enumerate(pd):
        for p, e in enumerate(x):
            occ.setdefault(e, []).append((i, p))
    for e, where in occ.items():
        if len(where) != 2:
            raise MalformedPD(f"semiarc {e} appears {len(where)} times")

    direction = {}  # (crossing, position) -> True for incoming
    queue = deque()

    def assign(slot, incoming):
        if slot in direction:
            if direction[slot] != incoming:
                raise NonOrientable(f"inconsistent orientation at crossing {slot[0]}, position {slot[1]}")
            return
        direction[slot] = incoming
        queue.append(slot)

    def drain():
        while queue:
            i, p = queue.popleft()
            incoming = direction[(i, p)]
            e = pd[i][p]
            other = occ[e][0] if occ[e][1] == (i, p) else occ[e][1]
            assign(other, not incoming)
            assign((i, (p + 2) % 4), not incoming)

    for i in range(len(pd)):
        assign((i, 0), True)
        assign((i, 2), False)
    drain()
    for i, (a, b, c, d) in enumerate(pd):
        if (i, 1) not in direction:
            fwd = d == b + 1 or b > d + 1
            assign((i, 1), fwd)
            drain()
    return [direction[(i, 1)] for i in range(len(pd))]


def diagram_from_pd(pd: Sequence[Sequence[int]], name: str = "") -> LinkDiagram:
    """Derive an oriented diagram (signs, faces, components) from a PD code."""
    pd = [tuple(x) for x in pd]
    if any(len(x) != 4 for x in pd):
        raise MalformedPD("every crossing needs exactly four semiarcs")
    return LinkDiagram(pd, _orient(pd), name=name)


def unknot() -> LinkDiagram:
    return LinkDiagram([], [], name="0_1")


def mirror_pd(pd: Sequence[Sequence[int]]) -> list[list[int]]:
    """PD code of the mirror image: reverse the cyclic order at each crossing."""
    return [[a, d, c, b] for a, b, c, d in pd]


def mirror(d: LinkDiagram) -> LinkDiagram:
    pd = mirror_pd(d.pd)
    return LinkDiagram(pd, [not f for f in d._over_forward], name=d.name)


def add_positive_kink(d: LinkDiagram, component: int, count: int = 1) -> LinkDiagram:
    """Insert ``count`` positive kinks on the lowest semiarc of ``component``.

    Each kink is ``X(f, f, g, e)``: the strand enters over on ``e``, loops
    round on ``f`` to pass under itself and leaves on ``g``; the loop lies to
    the right of the strand.
    """
    if not 0 <= component < d.n_components:
        raise ValueError(f"no component {component}")
    for _ in range(count):
        if not d.crossings:
            pd, fwd = [(2, 2, 1, 1)], [False]
        else:
            e = min(d.components[component])
            label = d.labels[e]
            f, g = max(d.labels) + 1, max(d.labels) + 2
            X, q = d.head[e]
            pd = [list(x) for x in d.pd]
            pd[X][q] = g
            pd.append([f, f, g, label])
            pd = [tuple(x) for x in pd]
            fwd = list(d._over_forward) + [False]
        d = LinkDiagram(pd, fwd, name=d.name)
    return d


def writhe_targets(d: LinkDiagram, N: int) -> list[tuple[tuple[int, ...], LinkDiagram]]:
    """One framing-adjusted diagram per writhe vector in ``(Z_N)^c``, lexicographically."""
    if N < 1:
        raise ValueError("rank must be positive")
    out = []
    for w in product(range(N), repeat=d.n_components):
        dd = d
        for comp, target in enumerate(w):
            k = (target - d.self_writhe[comp]) % N
            if k:
                dd = add_positive_kink(dd, comp, k)
        out.append((w, dd))
    return out
