"""Finite biracks and birack shadows given by operation tables.

Elements are 0-based integers in the Python API. Tables read from or
written to files, and all error witnesses, are 1-based so they can be
compared directly with printed matrices.

Notation: ``B(x, y) = (B1(x, y), B2(x, y)) = (y^x, x_y)``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .zn import Permutation, is_unit


class AxiomViolation(ValueError):
    """A structure table fails one of its axioms.

    ``axiom`` names the failing condition and ``witness`` is the first
    offending tuple in lexicographic order, 1-based.
    """

    def __init__(self, axiom: str, witness: tuple = (), detail: str = ""):
        self.axiom = axiom
        self.witness = tuple(witness)
        msg = f"axiom {axiom} fails at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class PreconditionFailed(ValueError):
    pass


def _first_non_bijection(maps: Iterable[Sequence[int]], size: int):
    """Index of the first map (given by image lists) that is not a bijection."""
    for idx, images in enumerate(maps):
        if len(set(images)) != size:
            return idx
    return None


class Birack:
    """A finite birack on ``{0, ..., n-1}``.

    ``b1[x][y] = B1(x, y)`` and ``b2[x][y] = B2(x, y)``. Construction runs
    the full exhaustive axiom check unless ``verify=False``.
    """

    def __init__(self, b1: Sequence[Sequence[int]], b2: Sequence[Sequence[int]], verify: bool = True):
        self.n = len(b1)
        self.b1 = tuple(tuple(r) for r in b1)
        self.b2 = tuple(tuple(r) for r in b2)
        if verify:
            self.verify()

    # -- encodings ---------------------------------------------------------

    @classmethod
    def from_tables(cls, U: Sequence[Sequence[int]], L: Sequence[Sequence[int]]) -> "Birack":
        """Build from the 1-based block matrix ``[U | L]``.

        ``U[i][j] = B1(x_j, x_i)`` (note the transposition) and
        ``L[i][j] = B2(x_i, x_j)``.
        """
        n = len(U)
        for name, T in (("U", U), ("L", L)):
            if len(T) != n or any(len(row) != n for row in T):
                raise ValueError(f"{name} must be {n}x{n}")
            if any(not 1 <= v <= n for row in T for v in row):
                raise ValueError(f"{name} entries must lie in 1..{n}")
        b1 = [[U[y][x] - 1 for y in range(n)] for x in range(n)]
        b2 = [[L[x][y] - 1 for y in range(n)] for x in range(n)]
        return cls(b1, b2)

    @property
    def U(self) -> list[list[int]]:
        return [[self.b1[j][i] + 1 for j in range(self.n)] for i in range(self.n)]

    @property
    def L(self) -> list[list[int]]:
        return [[self.b2[i][j] + 1 for j in range(self.n)] for i in range(self.n)]

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.b1[x][y], self.b2[x][y]

    def __eq__(self, other):
        return isinstance(other, Birack) and (self.b1, self.b2) == (other.b1, other.b2)

    def __hash__(self):
        return hash((self.b1, self.b2))

    def __repr__(self):
        return f"Birack(U={self.U}, L={self.L})"

    # -- derived maps ------------------------------------------------------

    @cached_property
    def sideways(self) -> dict[tuple[int, int], tuple[int, int]]:
        """The sideways map, ``S(B1(x, y), x) = (B2(x, y), y)``."""
        return {(self.b1[x][y], x): (self.b2[x][y], y) for x in range(self.n) for y in range(self.n)}

    @cached_property
    def sideways_inverse(self) -> dict[tuple[int, int], tuple[int, int]]:
        return {v: k for k, v in self.sideways.items()}

    @cached_property
    def alpha(self) -> Permutation:
        # alpha = ((S^-1 o diag)_2)^-1
        second = [self.sideways_inverse[(x, x)][1] for x in range(self.n)]
        return Permutation(tuple(second)).inverse()

    @cached_property
    def pi(self) -> Permutation:
        first = Permutation(tuple(self.sideways_inverse[(x, x)][0] for x in range(self.n)))
        return first * self.alpha

    @cached_property
    def rank(self) -> int:
        return self.pi.order()

    def kink_maps(self) -> tuple[Permutation, Permutation, int]:
        return self.alpha, self.pi, self.rank

    # -- verification ------------------------------------------------------

    def verify(self) -> None:
        """Exhaustively check the birack axioms; raise AxiomViolation on failure."""
        n = self.n
        X = range(n)
        if any(len(r) != n for r in self.b1 + self.b2) or len(self.b2) != n:
            raise ValueError("tables must be square and of equal size")
        seen = {}
        for x, y in product(X, X):
            img = (self.b1[x][y], self.b2[x][y])
            if img in seen:
                raise AxiomViolation("B-invertible", (seen[img][0] + 1, seen[img][1] + 1, x + 1, y + 1),
                                     "B is not injective")
            seen[img] = (x, y)

        # (i) sideways: u = B1(x, y) must determine y, and S must be a bijection
        bad = _first_non_bijection(([self.b1[x][y] for y in X] for x in X), n)
        if bad is not None:
            raise AxiomViolation("i", (bad + 1,), "y -> B1(x, y) is not a bijection")
        bad = _first_non_bijection(([self.b2[x][y] for x in X] for y in X), n)
        if bad is not None:
            raise AxiomViolation("i", (bad + 1,), "sideways map is not invertible")

        # (ii) diagonal components of S and S^-1
        S, Sinv = self.sideways, self.sideways_inverse
        for label, table in (("S", S), ("S^-1", Sinv)):
            for comp in (0, 1):
                images = [table[(x, x)][comp] for x in X]
                if len(set(images)) != n:
                    raise AxiomViolation("ii", (comp + 1,), f"({label} o diag)_{comp + 1} is not a bijection")

        # (iii) set-theoretic Yang-Baxter equation
        b1, b2 = self.b1, self.b2
        for x, y, z in product(X, X, X):
            # (B x I)(I x B)(B x I): rightmost factor first
            p, q = b1[x][y], b2[x][y]
            q, r = b1[q][z], b2[q][z]
            lhs = (b1[p][q], b2[p][q], r)
            q, r = b1[y][z], b2[y][z]
            p, q = b1[x][q], b2[x][q]
            q, r = b1[q][r], b2[q][r]
            rhs = (p, q, r)
            if lhs != rhs:
                raise AxiomViolation("iii", (x + 1, y + 1, z + 1), "Yang-Baxter equation fails")


def birack_from_tables(U, L) -> Birack:
    return Birack.from_tables(U, L)


def tsr_birack(n: int, t: int, s: int, r: int) -> Birack:
    """The (t, s, r)-birack ``B(x, y) = (t y + s x, r x)`` on Z_n.

    Element ``k`` of the birack is the residue ``k`` (so file index ``k + 1``).
    """
    t, s, r = t % n, s % n, r % n
    if not (is_unit(t, n) and is_unit(r, n)):
        raise PreconditionFailed(f"t={t} and r={r} must be units mod {n}")
    if (s * s - (1 - t * r) * s) % n:
        raise PreconditionFailed(f"s^2 != (1 - tr)s mod {n} for t={t}, s={s}, r={r}")
    b1 = [[(t * y + s * x) % n for y in range(n)] for x in range(n)]
    b2 = [[(r * x) % n for y in range(n)] for x in range(n)]
    return Birack(b1, b2)


def quandle_promotion(triangle: Sequence[Sequence[int]]) -> Birack:
    """Promote a rack table to the birack ``B(x, y) = (y |> x, x)``.

    ``triangle[i][j]`` is the 1-based index of ``x_i |> x_j``.
    """
    n = len(triangle)
    b1 = [[triangle[y][x] - 1 for y in range(n)] for x in range(n)]
    b2 = [[x for _ in range(n)] for x in range(n)]
    return Birack(b1, b2)


def is_birack_homomorphism(f: Sequence[int], b: Birack, b2: Birack) -> bool:
    """True iff ``B'(f x, f y) = (f B1(x, y), f B2(x, y))`` for all pairs."""
    return all(
        b2(f[x], f[y]) == (f[b.b1[x][y]], f[b.b2[x][y]])
        for x in range(b.n) for y in range(b.n)
    )


def is_subbirack(b: Birack, Y: Iterable[int]) -> bool:
    """True iff ``Y x Y`` is closed under B and the restriction is a birack."""
    Y = sorted(set(Y))
    if not Y:
        return True
    pos = {y: i for i, y in enumerate(Y)}
    try:
        b1 = [[pos[b.b1[x][y]] for y in Y] for x in Y]
        b2 = [[pos[b.b2[x][y]] for y in Y] for x in Y]
    except KeyError:
        return False
    try:
        Birack(b1, b2)
    except AxiomViolation:
        return False
    return True


class Shadow:
    """An X-shadow: an invertible right action of a birack on ``{0..m-1}``.

    ``act[A][x] = A . x``; ``act_inv[A][x]`` is the unique ``B`` with
    ``B . x = A``.
    """

    def __init__(self, birack: Birack, act: Sequence[Sequence[int]], verify: bool = True):
        self.birack = birack
        self.m = len(act)
        self.act = tuple(tuple(r) for r in act)
        if verify:
            self.verify()
        inv = [[0] * birack.n for _ in range(self.m)]
        for A in range(self.m):
            for x in range(birack.n):
                inv[self.act[A][x]][x] = A
        self.act_inv = tuple(tuple(r) for r in inv)

    @classmethod
    def from_table(cls, birack: Birack, action: Sequence[Sequence[int]]) -> "Shadow":
        m = len(action)
        if any(len(row) != birack.n for row in action):
            raise ValueError(f"action table must be {m}x{birack.n}")
        if any(not 1 <= v <= m for row in action for v in row):
            raise ValueError(f"action entries must lie in 1..{m}")
        return cls(birack, [[v - 1 for v in row] for row in action])

    @property
    def table(self) -> list[list[int]]:
        return [[v + 1 for v in row] for row in self.act]

    def __repr__(self):
        return f"Shadow(action={self.table})"

    def verify(self) -> None:
        b, act = self.birack, self.act
        X, S = range(b.n), range(self.m)
        for x in X:
            if len({act[A][x] for A in S}) != self.m:
                raise AxiomViolation("invertible", (x + 1,), "A -> A.x is not a bijection")
        pi = b.pi
        for A, x, y in product(S, X, X):
            # (A . y_x) . x^y == (A . x) . y
            lhs = act[act[A][b.b2[y][x]]][b.b1[y][x]]
            rhs = act[act[A][x]][y]
            if lhs != rhs:
                raise AxiomViolation("i", (A + 1, x + 1, y + 1), "(A.y_x).x^y != (A.x).y")
        for A, x in product(S, X):
            if act[A][x] != act[A][pi(x)]:
                raise AxiomViolation("ii", (A + 1, x + 1), "A.x != A.pi(x)")


def shadow_from_table(b: Birack, action) -> Shadow:
    return Shadow.from_table(b, action)
