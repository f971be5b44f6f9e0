import pytest

from knotlab.diagram import jones, mirror, parse_pd, validate
from knotlab.errors import KnotError
from knotlab.laurent import parse_poly
from knotlab.morse import MorseBuilder


def plat_trefoil(over: str) -> MorseBuilder:
    """Two bridges, three half twists between the middle strands."""
    b = MorseBuilder()
    b.cap(0)
    b.cap(2)
    for _ in range(3):
        b.crossing(1, over)
    b.cup(0)
    b.cup(0)
    return b


def hopf(over: str, flow2: str = "lr") -> MorseBuilder:
    b = MorseBuilder()
    b.cap(0, flow="lr", label="a")
    b.cap(2, flow=flow2, label="b")
    b.crossing(1, over)
    b.crossing(1, over)
    b.cup(0)
    b.cup(0)
    return b


# ---- building knots ----

def test_plat_trefoil_pd_is_valid():
    quads = plat_trefoil("L").to_pd()
    d = validate(quads)
    assert len(d.crossings) == 3
    assert set(d.arcs) == set(range(1, 7))


def test_plat_trefoil_chirality():
    right = validate(plat_trefoil("L").to_pd())
    left = validate(plat_trefoil("R").to_pd())
    assert right.writhe() == 3
    assert left.writhe() == -3
    assert jones(right) == parse_poly("t + t^3 - t^4")
    assert jones(left) == parse_poly("-t^-4 + t^-3 + t^-1")
    assert jones(mirror(right)) == jones(left)


def test_single_crossing_kink():
    b = MorseBuilder()
    b.cap(0)
    b.cap(1)
    b.cup(2)
    b.crossing(0, "L")
    b.cup(0)
    d = validate(b.to_pd())
    assert len(d.crossings) == 1
    assert jones(d) == jones(parse_pd(""))


def test_orientation_is_free_for_a_knot():
    # pinning the single cap either way gives the same diagram
    results = []
    for flow in ("lr", "rl", None):
        b = MorseBuilder()
        b.cap(0, flow=flow)
        b.cap(2, flow=None)
        for _ in range(3):
            b.crossing(1, "L")
        b.cup(0)
        b.cup(0)
        results.append(jones(validate(b.to_pd())))
    assert results[0] == results[1] == results[2]


# ---- error handling ----

def test_positions_must_be_open():
    b = MorseBuilder()
    with pytest.raises(KnotError, match="out of range"):
        b.cup(0)
    with pytest.raises(KnotError, match="out of range"):
        b.crossing(0)
    with pytest.raises(KnotError, match="out of range"):
        b.cap(1)
    b.cap(0)
    with pytest.raises(KnotError, match="out of range"):
        b.crossing(1)


def test_bad_tile_arguments():
    b = MorseBuilder()
    with pytest.raises(KnotError, match="flow"):
        b.cap(0, flow="up")
    b.cap(0)
    with pytest.raises(KnotError, match="over"):
        b.crossing(0, over="X")


def test_finish_rejects_open_ends():
    b = MorseBuilder()
    b.cap(0)
    with pytest.raises(KnotError, match="still open"):
        b.finish()


def test_no_tiles_after_finish():
    b = MorseBuilder()
    b.cap(0)
    b.cup(0)
    b.finish()
    with pytest.raises(KnotError, match="finished"):
        b.cap(0)


def test_conflicting_pins():
    b = MorseBuilder()
    b.cap(0, flow="lr")
    b.cap(2, flow="rl")
    b.cup(1)
    b.cup(0)
    with pytest.raises(KnotError, match="pins conflict"):
        b.finish()


def test_free_circles_counted_and_rejected():
    b = MorseBuilder()
    b.cap(0)
    b.cup(0)
    with pytest.raises(KnotError, match="circles"):
        b.to_pd()
    b2 = MorseBuilder()
    b2.cap(0)
    b2.cup(0)
    assert b2.finish() == []
    assert b2.free_circles == 1


# ---- linking numbers ----

def test_hopf_linking_number():
    assert hopf("L").linking_number("a", "b") == -1
    assert hopf("R").linking_number("a", "b") == 1
    # reversing one curve reverses the linking number
    assert hopf("L", flow2="rl").linking_number("a", "b") == 1
    # symmetric in the two labels
    assert hopf("R").linking_number("b", "a") == 1


def test_linking_number_ignores_self_crossings():
    b = plat_trefoil("L")
    assert b.linking_number("K", "K") == 0


def test_unlinked_curves():
    b = MorseBuilder()
    b.cap(0, label="a")
    b.cup(0)
    b.cap(0, label="b")
    b.cup(0)
    assert b.linking_number("a", "b") == 0
    assert b.free_circles == 2


def test_four_crossing_tangle_linking():
    # double the Hopf twisting: linking number doubles
    b = MorseBuilder()
    b.cap(0, flow="lr", label="a")
    b.cap(2, flow="lr", label="b")
    for _ in range(4):
        b.crossing(1, "R")
    b.cup(0)
    b.cup(0)
    assert b.linking_number("a", "b") == 2
