import itertools

import pytest

from oracles import brute_force_2cocycles
from qcocycle.cocycle import (
    CapExceeded,
    Cocycle2,
    Cocycle3,
    Coefficients,
    DimensionError,
    enumerate_2cocycles,
    mochizuki_cocycle,
    mochizuki_value,
    verify_2cocycle,
    verify_3cocycle,
)
from qcocycle.quandle import make_dihedral


def _edges(X):
    return [(a, b) for a in range(6) for b in range(6) if b not in (a, X.inverse_map[a])]


def test_q6z4_cocycle_passes(phi_q6):
    assert verify_2cocycle(phi_q6).ok


def test_zero_2cocycle(q6):
    assert verify_2cocycle(Cocycle2.zero(q6, 4)).ok
    assert verify_2cocycle(Cocycle2.zero(make_dihedral(5), 7)).ok


def test_perturbed_q6z4_fails(phi_q6, q6):
    table = [list(r) for r in phi_q6.table]
    assert table[0][4] == 2  # phi(1,5) in 1-based numbering
    table[0][4] = 3
    rep = verify_2cocycle(Cocycle2(q6, Coefficients(4), table))
    assert not rep.ok and rep.degenerate_ok
    (x1, x2, x3), lhs, rhs = rep.identity_witness
    assert lhs != rhs
    # the witness really violates the identity for the perturbed table
    op = q6.table
    assert (table[x1][x3] - table[x1][x2]) % 4 == lhs
    assert (table[op[x1][x2]][x3] - table[op[x1][x3]][op[x2][x3]]) % 4 == rhs


def test_q6z4_values(phi_q6):
    # 1-based numbering
    assert phi_q6(0, 4) == 2
    assert phi_q6(1, 1) == 0
    assert phi_q6(2, 5) == 1
    assert phi_q6(4, 2) == 2
    assert phi_q6(0, 5) == 3 and phi_q6(2, 1) == 3


def test_q6z4_edge_equations(phi_q6, q6):
    """The reduced edge conditions hold, with delta = phi(a, a^-1) = 1."""
    f, op, inv = phi_q6, q6.op, q6.inverse_map
    for a, b in _edges(q6):
        assert (f(a, b) + f(op(a, b), a) - f(a, op(b, a))) % 4 == 0
        bi = inv[b]
        assert (f(a, bi) + f(op(a, bi), b) - f(a, b) - f(op(a, b), bi)) % 4 == 0
        ai = inv[a]
        assert (f(a, b) + f(op(a, b), ai) - f(a, op(b, ai))) % 4 == 1


def test_three_crossing_cycle(phi_q6, q6):
    for a, b in _edges(q6):
        c = q6.op(a, b)
        assert q6.op(b, c) == a
        assert (phi_q6(a, b) + phi_q6(b, c) + phi_q6(c, a)) % 4 == 1


def test_dimension_mismatch(q6):
    with pytest.raises(DimensionError):
        Cocycle2(q6, Coefficients(4), ((0,) * 5,) * 5)
    with pytest.raises(DimensionError):
        Cocycle3(q6, Coefficients(4), (((0,) * 6,) * 6,) * 5)


def test_mochizuki_values():
    assert mochizuki_value(3, 0, 1, 2) == 2
    assert (0 - 1) * (3**3 + 1 - 16) // 3 == -4
    assert mochizuki_cocycle(3)(1, 1, 2) == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_mochizuki_passes(p):
    assert verify_3cocycle(mochizuki_cocycle(p)).ok


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_mochizuki_degenerate(p):
    th = mochizuki_cocycle(p)
    for x, y in itertools.product(range(p), repeat=2):
        assert th(x, x, y) == 0 and th(x, y, y) == 0


def test_mochizuki_perturbed_fails():
    th = mochizuki_cocycle(5)
    t = [[list(r) for r in s] for s in th.table]
    t[0][1][2] = (t[0][1][2] + 1) % 5
    rep = verify_3cocycle(Cocycle3(th.quandle, th.coeff, t))
    assert not rep.ok and rep.identity_witness is not None


def test_zero_3cocycle():
    assert verify_3cocycle(Cocycle3.zero(make_dihedral(3), 3)).ok


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15])
def test_mochizuki_rejects(p):
    with pytest.raises(ValueError):
        mochizuki_cocycle(p)


def test_enumerate_r3_matches_exhaustion(r3):
    space = enumerate_2cocycles(r3, 3)
    got = {c.table for c in space.iter_cocycles()}
    assert Cocycle2.zero(r3, 3).table in got
    assert got == set(brute_force_2cocycles(r3.table, 3))
    assert all(verify_2cocycle(c).ok for c in space.iter_cocycles())


def test_enumerate_r3_mod6_matches_exhaustion(r3):
    # composite modulus with zero divisors
    space = enumerate_2cocycles(r3, 6)
    assert {c.table for c in space.iter_cocycles()} == set(brute_force_2cocycles(r3.table, 6))


def test_enumerate_q6_contains_q6z4(q6, phi_q6):
    space = enumerate_2cocycles(q6, 4)
    tables = set()
    for c in space.iter_cocycles():
        tables.add(c.table)
    assert phi_q6.table in tables
    assert len(tables) == space.count


def test_q6_cocycles_constant_on_inverses(q6):
    space = enumerate_2cocycles(q6, 4)
    for c in space.iter_cocycles():
        assert verify_2cocycle(c).ok
        assert len({c(a, q6.inverse_map[a]) for a in range(6)}) == 1


def test_enumerate_cap(q6):
    space = enumerate_2cocycles(q6, 4)
    with pytest.raises(CapExceeded):
        next(space.iter_cocycles(cap=10))


def test_enumerate_order_guard():
    with pytest.raises(ValueError):
        enumerate_2cocycles(make_dihedral(5), 5, max_order=4)


def test_generators_are_cocycles(q6):
    for c, order in enumerate_2cocycles(q6, 4).generators():
        assert verify_2cocycle(c).ok
        assert order > 1
