"""The shadow algebra Z[X, S]: relations, module verification and module search.

A module structure on Z_k assigns to every ``(A, x, y)`` a triple
``(t, s, r)`` with ``t`` and ``r`` units. The seven relation families come
from labeled framed Reidemeister III moves (families 1-6) and the N-phone
cord move (family 7). Compound subscripts expand through the birack tables:
``x_y = B2(x, y)``, ``y^x = B1(x, y)`` and ``x_{yz} = (x_y)_z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .birack import Birack, Shadow
from .zn import is_unit

KINDS = ("t", "s", "r")


class NotAUnit(ValueError):
    def __init__(self, gen: "GeneratorIndex", value: int, ring: int):
        self.gen = gen
        super().__init__(f"{gen} = {value} is not a unit mod {ring}")


class GeneratorIndex(NamedTuple):
    kind: str
    A: int
    x: int
    y: int

    def __str__(self):
        return f"{self.kind}_{{{self.A + 1},{self.x + 1},{self.y + 1}}}"


@dataclass(frozen=True)
class RelationInstance:
    """One element of the defining ideal, as a signed sum of monomials.

    ``terms`` holds ``(coefficient, factors)`` pairs; an empty ``factors``
    tuple is the constant 1. ``params`` are 0-based ``(A, x, y, z)`` for
    families 1-6 and ``(A, x)`` for family 7.
    """

    family: int
    params: tuple[int, ...]
    terms: tuple[tuple[int, tuple[GeneratorIndex, ...]], ...]

    def generators(self) -> set[GeneratorIndex]:
        return {g for _, fs in self.terms for g in fs}

    def evaluate(self, ms: "ShadowModuleStructure") -> int:
        total = 0
        for coef, factors in self.terms:
            v = coef
            for g in factors:
                v *= ms.value(g)
            total += v
        return total % ms.ring

    def __str__(self):
        parts = []
        for coef, factors in self.terms:
            mono = "".join(str(g) for g in factors) or "1"
            sign = "-" if coef < 0 else "+"
            mag = "" if abs(coef) == 1 else str(abs(coef))
            parts.append(f"{sign} {mag}{mono}")
        text = " ".join(parts)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        params = ",".join(str(p + 1) for p in self.params)
        return f"family {self.family} at ({params}): {text}"


def generate_relations(b: Birack, sh: Shadow) -> list[RelationInstance]:
    """All relation instances: families 1-6 per ``(A, x, y, z)``, family 7 per ``(A, x)``."""
    b1, b2, act = b.b1, b.b2, sh.act
    X, S = range(b.n), range(sh.m)

    def t(A, x, y):
        return GeneratorIndex("t", A, x, y)

    def s(A, x, y):
        return GeneratorIndex("s", A, x, y)

    def r(A, x, y):
        return GeneratorIndex("r", A, x, y)

    fam = {f: [] for f in range(1, 7)}
    for A, x, y, z in product(S, X, X, X):
        zy = b1[y][z]           # z^y
        yz = b2[y][z]           # y_z
        xzy = b2[x][zy]         # x_{z^y}
        xy = b2[x][y]           # x_y
        yx = b1[x][y]           # y^x
        xyz = b2[xy][z]         # x_{yz} = (x_y)_z
        zxy = b1[xy][z]         # z^{x_y}
        Ayz, Az, Axyz = act[A][yz], act[A][z], act[A][xyz]
        p = (A, x, y, z)

        def rel(f, *terms):
            fam[f].append(RelationInstance(f, p, tuple(terms)))

        rel(1, (1, (r(A, xzy, yz), r(Ayz, x, zy))), (-1, (r(A, xy, z), r(Az, x, y))))
        rel(2, (1, (t(A, xzy, yz), r(A, y, z))), (-1, (r(Axyz, yx, zxy), t(Az, x, y))))
        rel(3, (1, (s(A, xzy, yz), r(Ayz, x, zy))), (-1, (r(Axyz, yx, zxy), s(Az, x, y))))
        rel(4, (1, (t(Ayz, x, zy), t(A, y, z))), (-1, (t(Axyz, yx, zxy), t(A, xy, z))))
        rel(5, (1, (t(Ayz, x, zy), s(A, y, z))), (-1, (s(Axyz, yx, zxy), t(Az, x, y))))
        rel(6, (1, (s(Ayz, x, zy),)),
            (-1, (t(Axyz, yx, zxy), s(A, xy, z), r(Az, x, y))),
            (-1, (s(Axyz, yx, zxy), s(Az, x, y))))

    alpha, pi, N = b.alpha, b.pi, b.rank
    fam7 = []
    for A, x in product(S, X):
        # product over the N kinks of (t r + s), expanded into monomials
        monomials = [()]
        for k in range(N):
            w = (pi ** k)(x)
            aw = alpha(w)
            B = sh.act_inv[A][aw]
            choices = ((t(B, w, aw), r(B, w, aw)), (s(B, w, aw),))
            monomials = [m + c for m in monomials for c in choices]
        terms = ((1, ()),) + tuple((-1, m) for m in monomials)
        fam7.append(RelationInstance(7, (A, x), terms))

    out = []
    for f in range(1, 7):
        out.extend(fam[f])
    out.extend(fam7)
    return out


@dataclass(frozen=True)
class ShadowModuleStructure:
    """Coefficients ``t, s, r`` in Z_ring indexed by ``[A][x][y]`` (0-based)."""

    ring: int
    T: tuple
    S: tuple
    R: tuple

    def __post_init__(self):
        for name in ("T", "S", "R"):
            object.__setattr__(self, name, _freeze(getattr(self, name), self.ring))

    @property
    def m(self) -> int:
        return len(self.T)

    @property
    def n(self) -> int:
        return len(self.T[0]) if self.T else 0

    def value(self, g: GeneratorIndex) -> int:
        return getattr(self, g.kind.upper())[g.A][g.x][g.y]

    @classmethod
    def constant(cls, m: int, n: int, ring: int, t: int = 1, s: int = 0, r: int = 1):
        def block(v):
            return [[[v] * n for _ in range(n)] for _ in range(m)]
        return cls(ring, block(t), block(s), block(r))

    @classmethod
    def from_block_matrix(cls, M: Sequence[Sequence[int]], n: int, ring: int):
        """Read the ``(m n) x (3 n)`` layout ``[T_A | S_A | R_A]``, one row block per A."""
        if len(M) % n or any(len(row) != 3 * n for row in M):
            raise ValueError(f"block matrix must be (m*{n}) x {3 * n}")
        m = len(M) // n
        T = [[list(M[A * n + i][0:n]) for i in range(n)] for A in range(m)]
        S = [[list(M[A * n + i][n:2 * n]) for i in range(n)] for A in range(m)]
        R = [[list(M[A * n + i][2 * n:3 * n]) for i in range(n)] for A in range(m)]
        return cls(ring, T, S, R)

    def block_matrix(self) -> list[list[int]]:
        return [list(self.T[A][i]) + list(self.S[A][i]) + list(self.R[A][i])
                for A in range(self.m) for i in range(self.n)]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.block_matrix() for v in row)

    def check_units(self) -> None:
        for kind, table in (("t", self.T), ("r", self.R)):
            for A, x, y in product(range(self.m), range(self.n), range(self.n)):
                if not is_unit(table[A][x][y], self.ring):
                    raise NotAUnit(GeneratorIndex(kind, A, x, y), table[A][x][y], self.ring)


def _freeze(block, ring):
    return tuple(tuple(tuple(v % ring for v in row) for row in mat) for mat in block)


def failing_relation(ms: ShadowModuleStructure, b: Birack, sh: Shadow) -> RelationInstance | None:
    """First relation instance that is nonzero under ``ms``, or None.

    Raises NotAUnit if some t or r coefficient is not invertible.
    """
    if (ms.m, ms.n) != (sh.m, b.n):
        raise ValueError(f"module tables are {ms.m}x{ms.n}, structures need {sh.m}x{b.n}")
    ms.check_units()
    for rel in generate_relations(b, sh):
        if rel.evaluate(ms):
            return rel
    return None


def verify_module(ms: ShadowModuleStructure, b: Birack, sh: Shadow) -> bool:
    return failing_relation(ms, b, sh) is None


def _flat_index(g: GeneratorIndex, n: int) -> int:
    # position of g in the row-major flattening of the block matrix
    return ((g.A * n + g.x) * 3 + KINDS.index(g.kind)) * n + g.y


def iter_modules(b: Birack, sh: Shadow, k: int) -> Iterator[ShadowModuleStructure]:
    """Yield every module structure on Z_k in lexicographic order of ``flat()``.

    Depth-first over the flattened block matrix; each relation is checked as
    soon as its last generator is assigned.
    """
    if k < 2:
        raise ValueError("ring modulus must be at least 2")
    m, n = sh.m, b.n
    nvars = 3 * m * n * n
    units = [v for v in range(k) if is_unit(v, k)]
    domains = [units if (i // n) % 3 != 1 else list(range(k)) for i in range(nvars)]

    checks = [[] for _ in range(nvars)]
    for rel in generate_relations(b, sh):
        compiled = tuple((c, tuple(_flat_index(g, n) for g in fs)) for c, fs in rel.terms)
        last = max((i for _, idx in compiled for i in idx), default=-1)
        if last < 0:
            if sum(c for c, _ in compiled) % k:
                return
            continue
        checks[last].append(compiled)

    vals = [0] * nvars

    def ok(pos):
        for rel in checks[pos]:
            total = 0
            for c, idx in rel:
                v = c
                for i in idx:
                    v *= vals[i]
                total += v
            if total % k:
                return False
        return True

    def build():
        M = [vals[row * 3 * n:(row + 1) * 3 * n] for row in range(m * n)]
        return ShadowModuleStructure.from_block_matrix(M, n, k)

    # iterative DFS keeps recursion depth flat for larger instances
    choice = [-1] * nvars
    pos = 0
    while pos >= 0:
        choice[pos] += 1
        if choice[pos] >= len(domains[pos]):
            choice[pos] = -1
            pos -= 1
            continue
        vals[pos] = domains[pos][choice[pos]]
        if not ok(pos):
            continue
        if pos == nvars - 1:
            yield build()
        else:
            pos += 1


def search_modules(b: Birack, sh: Shadow, k: int, limit: int | None = None) -> list[ShadowModuleStructure]:
    out = []
    for ms in iter_modules(b, sh, k):
        out.append(ms)
        if limit is not None and len(out) >= limit:
            break
    return out
