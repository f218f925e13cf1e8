from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from helpers import birack_axioms_hold
from shadow_invar.birack import (
    AxiomViolation, Birack, PreconditionFailed, Shadow, birack_from_tables,
    is_birack_homomorphism, is_subbirack, quandle_promotion, shadow_from_table, tsr_birack,
)
from shadow_invar.zn import Permutation

SWAP_U, SWAP_L = [[1, 1], [2, 2]], [[2, 2], [1, 1]]
THREE_U = [[1, 3, 1], [2, 2, 2], [3, 1, 3]]
THREE_L = [[3, 3, 3], [2, 2, 2], [1, 1, 1]]
# valid 3-element birack, and a copy with L[1][3] and L[3][3] swapped
YBE_U = [[1, 1, 1], [3, 3, 3], [2, 2, 2]]
YBE_L = [[1, 1, 1], [2, 3, 3], [3, 2, 2]]
YBE_L_BROKEN = [[1, 1, 2], [2, 3, 3], [3, 2, 1]]


def tables_0based(U, L):
    n = len(U)
    return ([[U[y][x] - 1 for y in range(n)] for x in range(n)],
            [[L[x][y] - 1 for y in range(n)] for x in range(n)])


def test_swap_birack_matrix_encoding():
    b = birack_from_tables(SWAP_U, SWAP_L)
    assert b.U == SWAP_U and b.L == SWAP_L
    # B(x1, x1) = (x1, x2): read U[1][1] and L[1][1]
    assert b(0, 0) == (0, 1)


def test_swap_birack_kink_maps():
    alpha, pi, N = birack_from_tables(SWAP_U, SWAP_L).kink_maps()
    assert alpha == Permutation((1, 0))
    assert pi == Permutation((1, 0))
    assert N == 2


def test_three_element_birack_rank():
    b = birack_from_tables(THREE_U, THREE_L)
    assert b.pi.one_based() == [3, 2, 1]
    assert b.rank == 2


def test_one_element_birack():
    b = birack_from_tables([[1]], [[1]])
    alpha, pi, N = b.kink_maps()
    assert alpha.is_identity() and pi.is_identity() and N == 1


def test_small_table_agrees_with_axiom_oracle():
    U, L = [[1, 2], [2, 1]], [[1, 1], [2, 2]]
    expected = birack_axioms_hold(*tables_0based(U, L))
    try:
        birack_from_tables(U, L)
        accepted = True
    except AxiomViolation:
        accepted = False
    assert accepted == expected


@pytest.mark.parametrize("n", [1, 2])
def test_all_small_tables_agree_with_axiom_oracle(n):
    for flat in product(range(n), repeat=2 * n * n):
        b1 = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        b2 = [list(flat[n * n + i * n:n * n + (i + 1) * n]) for i in range(n)]
        try:
            Birack(b1, b2)
            accepted = True
        except AxiomViolation:
            accepted = False
        assert accepted == birack_axioms_hold(b1, b2)


def test_broken_yang_baxter_witness():
    assert birack_axioms_hold(*tables_0based(YBE_U, YBE_L))
    with pytest.raises(AxiomViolation) as info:
        birack_from_tables(YBE_U, YBE_L_BROKEN)
    assert info.value.axiom == "iii"
    assert info.value.witness == (1, 1, 2)
    assert not birack_axioms_hold(*tables_0based(YBE_U, YBE_L_BROKEN))


def test_non_injective_map_rejected():
    with pytest.raises(AxiomViolation) as info:
        birack_from_tables([[1, 1], [1, 1]], [[1, 1], [1, 1]])
    assert info.value.axiom == "B-invertible"


def test_tsr_precondition():
    with pytest.raises(PreconditionFailed):
        tsr_birack(2, 1, 1, 1)
    with pytest.raises(PreconditionFailed):
        tsr_birack(4, 2, 0, 1)


def test_tsr_mod3():
    b = tsr_birack(3, 2, 0, 2)
    assert birack_axioms_hold(b.b1, b.b2)
    # brute-force the kink maps: B(x, a) = (p, a) on the diagonal of S^-1
    for x in range(3):
        a = b.alpha(x)
        assert b(x, a) == (b.pi(x), a)
    assert b.rank == b.pi.order()


def test_tsr_swap_case():
    b = tsr_birack(5, 1, 0, 1)
    assert all(b(x, y) == (y, x) for x in range(5) for y in range(5))
    assert b.rank == 1


def test_quandle_promotions():
    trivial = quandle_promotion([[1, 1], [2, 2]])
    assert trivial.rank == 1
    dihedral = [[(2 * j - i) % 3 + 1 for j in range(3)] for i in range(3)]
    b = quandle_promotion(dihedral)
    assert b.rank == 1
    assert birack_axioms_hold(b.b1, b.b2)
    with pytest.raises(AxiomViolation):
        quandle_promotion([[1, 1], [1, 1]])


def test_shadow_tables():
    b = birack_from_tables(SWAP_U, SWAP_L)
    assert shadow_from_table(b, [[2, 2], [3, 3], [1, 1]]).act_inv[0] == (2, 2)
    shadow_from_table(b, [[1, 1]])
    shadow_from_table(b, [[2, 2], [1, 1]])
    b3 = birack_from_tables(THREE_U, THREE_L)
    shadow_from_table(b3, [[2, 2, 2], [1, 1, 1]])


def test_shadow_axiom_violations():
    b = birack_from_tables(SWAP_U, SWAP_L)
    with pytest.raises(AxiomViolation) as info:
        shadow_from_table(b, [[1, 2], [2, 1]])
    assert info.value.axiom in ("i", "ii")
    with pytest.raises(AxiomViolation) as info:
        shadow_from_table(b, [[1, 1], [1, 1]])
    assert info.value.axiom == "invertible"


def test_homomorphisms():
    b = birack_from_tables(SWAP_U, SWAP_L)
    assert is_birack_homomorphism([0, 1], b, b)
    one = birack_from_tables([[1]], [[1]])
    assert is_birack_homomorphism([0, 0], b, one)
    expected = all(b(1 - x, 1 - y) == (1 - b.b1[x][y], 1 - b.b2[x][y]) for x in range(2) for y in range(2))
    assert is_birack_homomorphism([1, 0], b, b) == expected


def test_subbiracks():
    b = birack_from_tables(SWAP_U, SWAP_L)
    assert is_subbirack(b, [0, 1])
    assert is_subbirack(b, [])
    assert not is_subbirack(b, [0])
    b3 = birack_from_tables(THREE_U, THREE_L)
    assert is_subbirack(b3, [1])


VALID = [(SWAP_U, SWAP_L), (THREE_U, THREE_L), (YBE_U, YBE_L)]


@pytest.mark.parametrize("U,L", VALID)
def test_sideways_reconstruction(U, L):
    b = birack_from_tables(U, L)
    for x, y in product(range(b.n), repeat=2):
        assert b.sideways[(b.b1[x][y], x)] == (b.b2[x][y], y)
        assert b.sideways_inverse[(b.b2[x][y], y)] == (b.b1[x][y], x)


@pytest.mark.parametrize("U,L", VALID)
def test_pi_order_is_minimal(U, L):
    b = birack_from_tables(U, L)
    N = b.rank
    assert (b.pi ** N).is_identity()
    assert all(not (b.pi ** k).is_identity() for k in range(1, N))


@given(st.sampled_from([2, 3, 4, 5, 6, 7, 8, 9]), st.data())
@settings(max_examples=80, deadline=None)
def test_tsr_biracks_satisfy_axioms(n, data):
    units = [u for u in range(1, n) if __import__("math").gcd(u, n) == 1]
    t = data.draw(st.sampled_from(units))
    r = data.draw(st.sampled_from(units))
    s = data.draw(st.integers(0, n - 1))
    if (s * s - (1 - t * r) * s) % n:
        with pytest.raises(PreconditionFailed):
            tsr_birack(n, t, s, r)
        return
    b = tsr_birack(n, t, s, r)
    assert birack_axioms_hold(b.b1, b.b2)
    for x in range(n):
        assert b(x, b.alpha(x)) == (b.pi(x), b.alpha(x))


@pytest.mark.parametrize("U,L,action", [
    (SWAP_U, SWAP_L, [[2, 2], [3, 3], [1, 1]]),
    (SWAP_U, SWAP_L, [[2, 2], [1, 1]]),
    (THREE_U, THREE_L, [[2, 2, 2], [1, 1, 1]]),
])
def test_shadow_constant_on_pi_orbits(U, L, action):
    b = birack_from_tables(U, L)
    sh = Shadow.from_table(b, action)
    for A, x in product(range(sh.m), range(b.n)):
        assert sh.act[A][x] == sh.act[A][b.pi(x)]
        assert sh.act_inv[sh.act[A][x]][x] == A
