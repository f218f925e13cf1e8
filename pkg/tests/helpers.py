"""Shared fixtures data and independent oracles for the test suite."""

from __future__ import annotations

from importlib import resources
from itertools import product

from shadow_invar import io

DATA = resources.files("shadow_invar") / "data" / "structures"


def structure_set(birack, shadow, module=None):
    b = io.load_birack(DATA / birack)
    sh = io.load_shadow(DATA / shadow, b)
    ms = io.load_module(DATA / module) if module else None
    return b, sh, ms


def swap_set():
    """Two-element swap birack, three-element shadow, module over Z_3."""
    return structure_set("b2_birack.json", "b2_s3_shadow.json", "b2_s3_z3_module.json")


def swap_z5_set():
    return structure_set("b2_birack.json", "b2_s2_shadow.json", "b2_s2_z5_module.json")


def three_set():
    return structure_set("b3_birack.json", "b3_s2_shadow.json", "b3_s2_z3_module.json")


ALL_SETS = {"swap_z3": swap_set, "swap_z5": swap_z5_set, "three_z3": three_set}

TREFOIL_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
FIGURE_EIGHT_PD = [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)]
HOPF_PD = [(1, 3, 2, 4), (3, 1, 4, 2)]


# -- brute-force oracles -------------------------------------------------------

def brute_force_solutions(M, n, v):
    """Count vectors in (Z_n)^v killed by M, by enumeration."""
    return sum(
        1 for x in product(range(n), repeat=v)
        if all(sum(a * b for a, b in zip(row, x)) % n == 0 for row in M)
    )


def birack_axioms_hold(b1, b2):
    """Direct check of the birack axioms from the definitions, 0-based tables.

    Builds B and the sideways map as dictionaries, then tests bijectivity,
    the diagonal conditions and the Yang-Baxter equation literally.
    """
    n = len(b1)
    X = range(n)
    B = {(x, y): (b1[x][y], b2[x][y]) for x in X for y in X}
    if len(set(B.values())) != n * n:
        return False
    # S(B1(x,y), x) = (B2(x,y), y) must define a bijection of X x X
    S = {}
    for x, y in product(X, X):
        key = (B[(x, y)][0], x)
        if key in S and S[key] != (B[(x, y)][1], y):
            return False
        S[key] = (B[(x, y)][1], y)
    if len(S) != n * n or len(set(S.values())) != n * n:
        return False
    Sinv = {v: k for k, v in S.items()}
    for table in (S, Sinv):
        for i in (0, 1):
            if len({table[(x, x)][i] for x in X}) != n:
                return False

    def B12(t):
        a, c = B[(t[0], t[1])]
        return (a, c, t[2])

    def B23(t):
        a, c = B[(t[1], t[2])]
        return (t[0], a, c)

    return all(B12(B23(B12(t))) == B23(B12(B23(t))) for t in product(X, X, X))


# -- braid closures ------------------------------------------------------------

def braid_closure_pd(word, strands):
    """PD code of the closure of a braid word.

    ``word`` holds nonzero integers: ``i`` for the generator crossing
    strands ``i`` and ``i+1`` positively and ``-i`` for its inverse. Every
    strand position must be touched by the word.
    """
    current = list(range(1, strands + 1))
    first = list(current)
    nxt = strands + 1
    pd = []
    for g in word:
        i = abs(g) - 1
        left_in, right_in = current[i], current[i + 1]
        left_out, right_out = nxt, nxt + 1  # outputs at positions i, i+1
        nxt += 2
        # the strand entering on the left leaves on the right and vice versa
        if g > 0:
            # the right-to-left strand goes under
            pd.append([right_in, right_out, left_out, left_in])
        else:
            # the left-to-right strand goes under
            pd.append([left_in, right_in, right_out, left_out])
        current[i], current[i + 1] = left_out, right_out
    rename = dict(zip(current, first))
    return [[rename.get(e, e) for e in x] for x in pd]
