import pytest
from hypothesis import given, settings, strategies as st

from oracles import compose_transpositions, cycle_count, naive_colorings
from qcocycle.diagram import (
    FIGURE_EIGHT,
    BraidSyntaxError,
    BraidWord,
    ClosedDiagram,
    NotAKnotError,
    check_type_r_extension,
    enumerate_colorings,
    parse_braid,
    parse_knot,
    propagate,
    s_knot_braid,
    torus_braid,
)
from qcocycle.quandle import make_dihedral, make_q6


def test_parse_power():
    b = parse_braid("2: s1^3")
    assert b.strands == 2 and b.word == ((1, 1),) * 3


def test_parse_s33():
    assert parse_braid("3: s1^3 s2^-1 s1^3 s2^-1") == s_knot_braid(3, 3)


def test_parse_out_of_range():
    with pytest.raises(BraidSyntaxError) as exc:
        parse_braid("2: s3")
    assert exc.value.position == 3


@pytest.mark.parametrize("text", ["2 s1", "2: t1", "x: s1", "2: s1^", "0: "])
def test_parse_malformed(text):
    with pytest.raises(BraidSyntaxError):
        parse_braid(text)


def test_parse_first_error_position():
    with pytest.raises(BraidSyntaxError) as exc:
        parse_braid("3: s1 s2 bad s9")
    assert exc.value.position == len("3: s1 s2 ")


letters = st.tuples(st.integers(1, 2), st.sampled_from([1, -1]))


@given(st.lists(letters, max_size=10))
def test_str_roundtrip(word):
    b = BraidWord(3, tuple(word))
    assert parse_braid(str(b)) == b


def test_torus_braids():
    assert torus_braid(3).word == ((1, 1),) * 3
    assert len(torus_braid(1)) == 1 and len(torus_braid(9)) == 9
    with pytest.raises(ValueError):
        torus_braid(4)


def test_s_knot_braid():
    assert len(s_knot_braid(3, 9)) == 14
    perm = compose_transpositions(3, s_knot_braid(9, 9).word)
    assert cycle_count(perm) == 1
    assert s_knot_braid(9, 9).is_knot()


def test_link_rejected():
    with pytest.raises(NotAKnotError):
        ClosedDiagram(BraidWord(2, ((1, 1), (1, 1))))
    with pytest.raises(NotAKnotError):
        s_knot_braid(2, 2)


def test_knot_names():
    assert parse_knot("torus:5") == torus_braid(5)
    assert parse_knot("sknot:3,9") == s_knot_braid(3, 9)
    assert parse_knot("fig8") == FIGURE_EIGHT
    assert parse_knot("unknot") == BraidWord(1)


def test_t23_q6_count(q6):
    assert len(enumerate_colorings(torus_braid(3), q6)) == 30


def test_t23_r3_count():
    R3 = make_dihedral(3)
    assert len(enumerate_colorings(torus_braid(3), R3)) == 9
    assert len(naive_colorings(2, torus_braid(3).word, R3.table)) == 9


def test_constant_colorings_survive():
    R3 = make_dihedral(3)
    for K in (torus_braid(5), s_knot_braid(3, 3), FIGURE_EIGHT):
        tops = {c.top for c in enumerate_colorings(K, R3)}
        for a in range(3):
            assert (a,) * K.strands in tops


def test_unknot_r3():
    assert len(enumerate_colorings(BraidWord(1), make_dihedral(3))) == 3


def test_lexicographic_order(q6):
    tops = [c.top for c in enumerate_colorings(s_knot_braid(3, 3), q6)]
    assert tops == sorted(tops)


def test_workers_same_result(q6):
    K = s_knot_braid(3, 9)
    assert enumerate_colorings(K, q6, workers=2) == enumerate_colorings(K, q6)


def test_s_knot_three_cases(q6):
    inv = q6.inverse_map
    tops = {c.top for c in enumerate_colorings(s_knot_braid(3, 3), q6)}
    trivial = {(a, a, a) for a in range(6)}
    same = {(a, b, b) for a in range(6) for b in range(6) if b not in (a, inv[a])}
    inverse = {(a, b, inv[b]) for a in range(6) for b in range(6) if b not in (a, inv[a])}
    assert tops == trivial | same | inverse
    assert (len(trivial), len(same), len(inverse)) == (6, 24, 24)


def test_crossing_relation_holds(q6):
    # every recorded (under, over) pair maps one under-arc to the other
    for c in enumerate_colorings(s_knot_braid(3, 3), q6):
        for j, ((i, s), (u, o)) in enumerate(zip(s_knot_braid(3, 3).word, c.crossing_colors)):
            before, after = c.states[j], c.states[j + 1]
            if s > 0:
                assert (u, o) == (before[i - 1], before[i]) and after[i] == q6.op(u, o)
            else:
                assert o == before[i - 1] and u == after[i - 1] and q6.op(u, o) == before[i]


@given(st.integers(0, 5), st.integers(0, 5), st.sampled_from([1, -1]))
def test_letter_maps_are_inverse(a, b, sign):
    q6 = make_q6()
    fwd = propagate([(1, sign)], (a, b), q6).states[-1]
    back = propagate([(1, -sign)], fwd, q6).states[-1]
    assert back == (a, b)


def test_type_extension(q6):
    R5 = make_dihedral(5)
    for c in enumerate_colorings(torus_braid(5), R5):
        assert check_type_r_extension(c, R5, 0)
        assert check_type_r_extension(c, R5, 2)
    cols = enumerate_colorings(torus_braid(3), q6)
    assert all(check_type_r_extension(c, q6, 4) for c in cols)
    assert all(check_type_r_extension(c, q6, 8) for c in cols)
    # non-trivial Q6 colorings do not extend for r = 2
    assert not all(check_type_r_extension(c, q6, 2) for c in cols)


knot_words = st.lists(letters, min_size=1, max_size=8).map(lambda w: BraidWord(3, tuple(w))).filter(
    lambda b: b.is_knot()
)


@settings(max_examples=30, deadline=None)
@given(knot_words, st.integers(1, 2), st.sampled_from([1, -1]))
def test_conjugation_preserves_count(b, i, sign):
    R3 = make_dihedral(3)
    assert len(enumerate_colorings(b, R3)) == len(enumerate_colorings(b.conjugate(i, sign), R3))
