import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qcocycle.zn import egcd, matvec, solve_homogeneous, unit_normaliser


@st.composite
def systems(draw):
    n = draw(st.sampled_from([2, 3, 4, 5, 6, 8, 9, 12]))
    cols = draw(st.integers(1, 4))
    rows = draw(st.integers(0, 5))
    A = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=cols, max_size=cols),
                      min_size=rows, max_size=rows))
    return n, cols, A


@settings(max_examples=200, deadline=None)
@given(systems())
def test_kernel_matches_exhaustion(system):
    n, cols, A = system
    space = solve_homogeneous(A, cols, n)
    brute = {x for x in itertools.product(range(n), repeat=cols) if not any(matvec(A, x, n))}
    got = list(space)
    assert len(got) == space.count == len(set(got))
    assert set(got) == brute


def test_zero_divisor_system():
    # 2x = 0 mod 4 has two solutions; naive division by 2 would miss one
    space = solve_homogeneous([[2]], 1, 4)
    assert sorted(space) == [(0,), (2,)]


def test_egcd():
    for a, b in itertools.product(range(-12, 13), repeat=2):
        s, t, d = egcd(a, b)
        assert s * a + t * b == d


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12])
def test_unit_normaliser(n):
    import math
    for a in range(n):
        u = unit_normaliser(a, n)
        assert math.gcd(u, n) == 1
        assert (u * a) % n == math.gcd(a, n) % n


def test_rejects_modulus_one():
    with pytest.raises(ValueError):
        solve_homogeneous([[1]], 1, 1)
