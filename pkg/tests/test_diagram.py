import pytest

from knotlab.diagram import (
    PlanarDiagram,
    add_kink,
    connect_sum,
    crossing_cap,
    jones,
    jones_q,
    jones_twist,
    kauffman_bracket,
    mirror,
    parse_pd,
)
from knotlab.errors import KnotError
from knotlab.laurent import LaurentPoly, parse_poly

from oracles import naive_bracket

LEFT_TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


# ---- parsing and validation ----

def test_parse_empty_is_unknot():
    for text in ("", "   ", "PD[]"):
        d = parse_pd(text)
        assert d.crossings == ()
        assert str(d) == "unknot"


def test_parse_round_trip():
    d = parse_pd(LEFT_TREFOIL)
    assert str(d) == LEFT_TREFOIL
    assert parse_pd(str(d)) == d


def test_parse_accepts_wrappers_and_separators():
    d = parse_pd(LEFT_TREFOIL)
    assert parse_pd("PD[x[1,4,2,5], x[3,6,4,1], x[5,2,6,3]]") == d
    assert parse_pd("X[ 1 , 4 , 2 , 5 ]; X[3,6,4,1]; X[5,2,6,3]") == d


def test_parse_rejects_junk():
    with pytest.raises(KnotError):
        parse_pd("X[1,4,2,5] banana")
    with pytest.raises(KnotError):
        parse_pd("Y[1,2,3,4]")
    with pytest.raises(KnotError):
        parse_pd("X[1,2,3]")


def test_validate_arc_multiplicity():
    with pytest.raises(KnotError, match="appears"):
        parse_pd("X[1,2,3,4]")  # every arc once
    with pytest.raises(KnotError, match="appears"):
        parse_pd("X[1,1,1,2] X[2,3,3,4] X[4,5,5,6]")


def test_validate_rejects_nonpositive_labels():
    with pytest.raises(KnotError, match="positive"):
        parse_pd("X[0,1,1,2] X[2,3,3,4]")


def test_validate_rejects_two_components():
    # two strands crossing each other twice and closing up separately
    with pytest.raises(KnotError, match="component"):
        parse_pd("X[1,4,2,3] X[2,3,1,4]")


def test_validate_rejects_unorientable():
    # arc 1 enters both crossings as the under-strand
    with pytest.raises(KnotError, match="orientation"):
        parse_pd("X[1,3,2,4] X[1,4,2,3]")


def test_signs_and_writhe():
    left = parse_pd(LEFT_TREFOIL)
    assert left.signs == (-1, -1, -1)
    assert left.writhe() == -3
    assert parse_pd(FIGURE_EIGHT).writhe() == 0
    assert parse_pd("X[1,1,2,2]").writhe() == 1
    assert parse_pd("X[1,2,2,1]").writhe() == -1


# ---- bracket and Jones values ----

def test_unknot_polynomials():
    d = parse_pd("")
    assert kauffman_bracket(d) == LaurentPoly.one()
    assert jones(d) == LaurentPoly.one()
    assert jones_q(d) == LaurentPoly.one()


def test_kink_brackets():
    assert kauffman_bracket(parse_pd("X[1,1,2,2]")) == LaurentPoly.term(-1, 3)
    assert kauffman_bracket(parse_pd("X[1,2,2,1]")) == LaurentPoly.term(-1, -3)
    assert jones(parse_pd("X[1,1,2,2]")) == LaurentPoly.one()
    assert jones(parse_pd("X[1,2,2,1]")) == LaurentPoly.one()


def test_trefoil_jones():
    left = parse_pd(LEFT_TREFOIL)
    assert jones(left) == parse_poly("-t^-4 + t^-3 + t^-1")
    assert jones(mirror(left)) == parse_poly("t + t^3 - t^4")


def test_figure_eight_jones():
    d = parse_pd(FIGURE_EIGHT)
    expected = parse_poly("t^-2 - t^-1 + 1 - t + t^2")
    assert jones(d) == expected
    # amphichiral: the mirror has the same Jones polynomial
    assert jones(mirror(d)) == expected


def test_jones_q_doubles_exponents():
    for text in (LEFT_TREFOIL, FIGURE_EIGHT):
        d = parse_pd(text)
        assert jones_q(d) == jones(d).reindex(2)


# ---- contraction agrees with the brute-force state sum ----

def _small_diagrams():
    left = parse_pd(LEFT_TREFOIL)
    fig8 = parse_pd(FIGURE_EIGHT)
    out = [
        parse_pd("X[1,1,2,2]"),
        parse_pd("X[1,2,2,1]"),
        left,
        mirror(left),
        fig8,
        add_kink(left, 4, 1),
        add_kink(fig8, 7, -1),
        connect_sum(left, 1, mirror(left), 1),
        connect_sum(left, 2, left, 5),
    ]
    # every two-kink unknot
    for s1 in (1, -1):
        for s2 in (1, -1):
            base = parse_pd("X[1,1,2,2]" if s1 > 0 else "X[1,2,2,1]")
            out.append(add_kink(base, 2, s2))
    return out


def test_bracket_matches_naive_state_sum():
    for d in _small_diagrams():
        assert kauffman_bracket(d) == naive_bracket(d.crossings), str(d)


# ---- Reidemeister I and mirror behaviour ----

def test_kink_leaves_jones_alone():
    for text in (LEFT_TREFOIL, FIGURE_EIGHT):
        d = parse_pd(text)
        v = jones(d)
        for arc in d.arcs:
            for sign in (1, -1):
                kinked = add_kink(d, arc, sign)
                assert kinked.writhe() == d.writhe() + sign
                assert len(kinked.crossings) == len(d.crossings) + 1
                assert jones(kinked) == v, (text, arc, sign)


def test_mirror_inverts_jones():
    for d in _small_diagrams():
        assert jones(mirror(d)) == jones(d).substitute_inverse(), str(d)


def test_mirror_is_an_involution():
    for d in _small_diagrams():
        back = mirror(mirror(d))
        assert back.crossings == d.crossings
        assert back.signs == d.signs
    assert mirror(parse_pd("")).crossings == ()


def test_mirror_flips_writhe():
    for d in _small_diagrams():
        assert mirror(d).writhe() == -d.writhe()


# ---- surgery ----

def test_add_kink_rejects_bad_input():
    d = parse_pd(LEFT_TREFOIL)
    with pytest.raises(KnotError):
        add_kink(d, 1, 0)
    with pytest.raises(KnotError):
        add_kink(d, 99, 1)
    with pytest.raises(KnotError):
        add_kink(parse_pd(""), 1, 1)


def test_connect_sum_unknot_identity():
    d = parse_pd(LEFT_TREFOIL)
    e = parse_pd("")
    assert connect_sum(d, 1, e, None) == d
    assert connect_sum(e, None, d, 1) == d


def test_connect_sum_rejects_bad_arcs():
    d = parse_pd(LEFT_TREFOIL)
    with pytest.raises(KnotError):
        connect_sum(d, None, d, 1)
    with pytest.raises(KnotError):
        connect_sum(d, 1, d, 99)


def test_connect_sum_jones_is_multiplicative():
    left = parse_pd(LEFT_TREFOIL)
    fig8 = parse_pd(FIGURE_EIGHT)
    for a in (1, 4):
        for b in (2, 7):
            summed = connect_sum(left, a, fig8, b)
            assert len(summed.crossings) == 7
            assert jones(summed) == jones(left) * jones(fig8), (a, b)
    square = connect_sum(left, 1, left, 1)
    assert jones(square) == jones(left) ** 2


def test_jones_twist_algebra():
    v = jones(parse_pd(LEFT_TREFOIL))
    assert jones_twist(v, 0) == v
    assert jones_twist(LaurentPoly.one(), 5) == LaurentPoly.one()
    for a in (-2, 1, 3):
        for b in (-1, 2):
            assert jones_twist(jones_twist(v, a), b) == jones_twist(v, a + b)


# ---- crossing cap ----

def test_crossing_cap_env(monkeypatch):
    monkeypatch.delenv("KNOTLAB_CROSSING_CAP", raising=False)
    assert crossing_cap() == 32
    monkeypatch.setenv("KNOTLAB_CROSSING_CAP", "2")
    assert crossing_cap() == 2
    with pytest.raises(KnotError, match="exceeds cap"):
        kauffman_bracket(parse_pd(LEFT_TREFOIL))
    monkeypatch.setenv("KNOTLAB_CROSSING_CAP", "abc")
    with pytest.raises(KnotError):
        crossing_cap()
    monkeypatch.setenv("KNOTLAB_CROSSING_CAP", "-1")
    with pytest.raises(KnotError):
        crossing_cap()


def test_diagram_is_frozen():
    d = parse_pd(LEFT_TREFOIL)
    with pytest.raises(Exception):
        d.crossings = ()
    assert isinstance(d, PlanarDiagram)
