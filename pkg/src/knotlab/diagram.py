"""Planar diagrams, the Kauffman bracket, and the Jones polynomial.

A diagram is a list of crossings ``X[a,b,c,d]``: the four arc labels
around a crossing, read counterclockwise starting from the incoming
under-strand.  So ``a`` is the under-strand entering, ``c`` is it
leaving, and the over-strand occupies ``b`` and ``d``.  Arc labels are
positive integers, and every label must occur exactly twice overall.

Worked example, the left-handed trefoil::

    X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]

At the first crossing the under-strand runs 1 -> 2 while arc 4 and
arc 5 pass over.  Tracing under-passages 1->2, 3->4, 5->6 and solving
the over-strand directions from "each arc leaves one crossing and
enters one" gives a single consistent orientation; all three crossings
come out negative (writhe -3), and the Jones polynomial below is
-t^-4 + t^-3 + t^-1.

Bracket conventions: an A-smoothing joins (a,b) and (c,d), a
B-smoothing joins (a,d) and (b,c),

    <L> = A <L_A> + A^-1 <L_B>,    <unknot> = 1,
    closed loop factor delta = -A^2 - A^-2,

and the Jones polynomial is (-A)^(-3w) <D> rewritten in q = A^-2 and
then in t = q^2.  Knots always yield integer powers of t.

The bracket is computed by sweeping crossings one at a time and keeping
a dictionary of partial states (matchings on the open strand ends), so
cost is driven by the width of the sweep, not 2^crossings.  A crossing
cap (default 32, env KNOTLAB_CROSSING_CAP) keeps accidental huge inputs
from hanging the process.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import KnotError
from .laurent import LaurentPoly

__all__ = [
    "PlanarDiagram",
    "parse_pd",
    "writhe",
    "kauffman_bracket",
    "jones",
    "jones_q",
    "jones_twist",
    "mirror",
    "add_kink",
    "connect_sum",
    "crossing_cap",
]

DEFAULT_CROSSING_CAP = 32

Crossing = tuple[int, int, int, int]


def crossing_cap() -> int:
    """Crossing limit for bracket evaluation.  Override with the
    KNOTLAB_CROSSING_CAP environment variable."""
    raw = os.environ.get("KNOTLAB_CROSSING_CAP")
    if raw is None:
        return DEFAULT_CROSSING_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise KnotError(f"KNOTLAB_CROSSING_CAP is not an integer: {raw!r}") from None
    if cap < 0:
        raise KnotError("KNOTLAB_CROSSING_CAP must be >= 0")
    return cap


@dataclass(frozen=True)
class PlanarDiagram:
    """A validated single-component oriented diagram.

    ``signs[i]`` is the sign of crossing i: +1 when the over-strand runs
    from slot d to slot b (counterclockwise frame), -1 the other way.
    Instances are immutable; operations below return new diagrams.
    """

    crossings: tuple[Crossing, ...]
    signs: tuple[int, ...]

    @property
    def arcs(self) -> tuple[int, ...]:
        seen = sorted({a for x in self.crossings for a in x})
        return tuple(seen)

    def writhe(self) -> int:
        return sum(self.signs)

    def __str__(self) -> str:
        if not self.crossings:
            return "unknot"
        return " ".join("X[%d,%d,%d,%d]" % x for x in self.crossings)


_X_TOKEN = re.compile(r"[Xx]\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``X[a,b,c,d]`` tokens separated by whitespace or commas and
    validate the result.  An empty string (or ``PD[]``) is the
    zero-crossing unknot."""
    s = text.strip()
    if s.upper().startswith("PD[") and s.endswith("]"):
        s = s[3:-1]
    leftovers = _X_TOKEN.sub(" ", s)
    if leftovers.strip(" \t\n,;"):
        raise KnotError(f"pd: unrecognized text {leftovers.strip()!r}")
    quads = [tuple(int(g) for g in m.groups()) for m in _X_TOKEN.finditer(s)]
    return validate(quads)


def validate(quads: Sequence[Sequence[int]]) -> PlanarDiagram:
    """Check arc multiplicity, solve a consistent orientation, and check
    the diagram is a single closed curve."""
    crossings: list[Crossing] = []
    for q in quads:
        if len(q) != 4:
            raise KnotError(f"pd: crossing needs 4 arcs, got {q!r}")
        a, b, c, d = (int(v) for v in q)
        if min(a, b, c, d) < 1:
            raise KnotError("pd: arc labels must be positive integers")
        crossings.append((a, b, c, d))
    if not crossings:
        return PlanarDiagram((), ())

    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(crossings):
        for slot, arc in enumerate(x):
            occurrences.setdefault(arc, []).append((ci, slot))
    for arc, occ in sorted(occurrences.items()):
        if len(occ) != 2:
            raise KnotError(f"pd: arc {arc} appears {len(occ)} times, must be 2")

    # Orientation: under slots are fixed (a enters, c leaves); each
    # crossing has one unknown, the over direction.  over_in[ci] is the
    # slot (1 or 3) where the over-strand enters.
    over_in: dict[int, int] = {}

    def role(ci: int, slot: int):
        # True = arc enters the crossing here, False = leaves, None = unknown
        if slot == 0:
            return True
        if slot == 2:
            return False
        if ci not in over_in:
            return None
        return over_in[ci] == slot

    def set_over(ci: int, slot_in: int) -> None:
        if ci in over_in:
            if over_in[ci] != slot_in:
                raise KnotError("pd: inconsistent orientation")
            return
        over_in[ci] = slot_in
        for s in (1, 3):
            _propagate(crossings[ci][s])

    def _propagate(arc: int) -> None:
        (c1, s1), (c2, s2) = occurrences[arc]
        r1, r2 = role(c1, s1), role(c2, s2)
        if r1 is None and r2 is None:
            return
        if r1 is None:
            # the arc must enter at (c1, s1) iff it leaves at (c2, s2)
            set_over(c1, s1 if not r2 else 4 - s1)
            return
        if r2 is None:
            set_over(c2, s2 if not r1 else 4 - s2)
            return
        if r1 == r2:
            raise KnotError(f"pd: inconsistent orientation at arc {arc}")

    for arc in sorted(occurrences):
        _propagate(arc)
    # crossings still undetermined lie on strands that never pass under;
    # each such strand can be oriented either way, so seed one crossing
    # and let propagation finish the job (the single-component check
    # below rejects these diagrams anyway)
    for ci in range(len(crossings)):
        if ci not in over_in:
            set_over(ci, 1)

    # full re-check: every arc enters once and leaves once
    for arc, occ in sorted(occurrences.items()):
        roles = [role(ci, slot) for ci, slot in occ]
        if roles[0] == roles[1]:
            raise KnotError(f"pd: inconsistent orientation at arc {arc}")

    # trace: map incoming arc -> outgoing arc through its crossing
    succ: dict[int, int] = {}
    for ci, x in enumerate(crossings):
        succ[x[0]] = x[2]
        if over_in[ci] == 1:
            succ[x[1]] = x[3]
        else:
            succ[x[3]] = x[1]
    start = min(succ)
    seen = {start}
    cur = succ[start]
    while cur != start:
        seen.add(cur)
        cur = succ[cur]
    if len(seen) != len(occurrences):
        raise KnotError("pd: diagram has more than one component")

    signs = []
    for ci in range(len(crossings)):
        # over d->b is the positive crossing in this frame
        signs.append(1 if over_in[ci] == 3 else -1)
    return PlanarDiagram(tuple(crossings), tuple(signs))


def writhe(diagram: PlanarDiagram) -> int:
    return diagram.writhe()


# -- bracket -------------------------------------------------------------------

_DELTA = {2: -1, -2: -1}  # -A^2 - A^-2, as exponent -> coefficient


def _contraction_order(crossings: Sequence[Crossing]) -> list[int]:
    """Greedy order keeping the set of open arcs small."""
    remaining = set(range(len(crossings)))
    open_arcs: set[int] = set()
    pending: dict[int, int] = {}
    for x in crossings:
        for a in x:
            pending[a] = pending.get(a, 0) + 1
    order = []
    while remaining:
        best = None
        best_cost = None
        for ci in sorted(remaining):
            touched = set(crossings[ci])
            closed = sum(
                1 for a in touched if pending[a] - crossings[ci].count(a) == 0
            )
            cost = len(open_arcs | touched) - closed
            if best_cost is None or cost < best_cost:
                best, best_cost = ci, cost
        order.append(best)
        remaining.discard(best)
        for a in crossings[best]:
            pending[a] -= 1
        open_arcs |= set(crossings[best])
        open_arcs = {a for a in open_arcs if pending[a] > 0}
    return order


def kauffman_bracket(diagram: PlanarDiagram) -> LaurentPoly:
    """The bracket <D> as a Laurent polynomial in A."""
    crossings = diagram.crossings
    if len(crossings) > crossing_cap():
        raise KnotError(
            f"bracket: {len(crossings)} crossings exceeds cap {crossing_cap()} "
            "(set KNOTLAB_CROSSING_CAP to raise)"
        )
    if not crossings:
        return LaurentPoly.one()

    # token (arc, k): k-th occurrence of the arc in slot scan order
    occ_count: dict[int, int] = {}
    tokens: list[tuple[tuple[int, int], ...]] = []
    for x in crossings:
        slot_tokens = []
        for arc in x:
            k = occ_count.get(arc, 0)
            occ_count[arc] = k + 1
            slot_tokens.append((arc, k))
        tokens.append(tuple(slot_tokens))

    # cut the lowest arc open: its two tokens are tied to sentinels, so
    # every complete state ends as the same single strand and the loop
    # count comes out right without a final division by delta
    cut = min(occ_count)
    s0, s1 = (-1, 0), (-1, 1)
    base = {(cut, 0): s0, s0: (cut, 0), (cut, 1): s1, s1: (cut, 1)}

    states: dict[frozenset, dict[int, int]] = {_state_key(base): {0: 1}}
    links = {_state_key(base): base}

    for ci in _contraction_order(crossings):
        ta, tb, tc, td = tokens[ci]
        new_states: dict[frozenset, dict[int, int]] = {}
        new_links: dict[frozenset, dict] = {}
        for key, poly in states.items():
            partner = links[key]
            for joins, exp in ((((ta, tb), (tc, td)), 1), (((ta, td), (tb, tc)), -1)):
                p = dict(partner)
                for t in (ta, tb, tc, td):
                    if t not in p:
                        arc, k = t
                        other = (arc, 1 - k)
                        p[t] = other
                        p[other] = t
                loops = 0
                for u, v in joins:
                    x = p.pop(u)
                    y = p.pop(v)
                    if x == v:
                        loops += 1
                    else:
                        p[x] = y
                        p[y] = x
                term = {e + exp: c for e, c in poly.items()}
                for _ in range(loops):
                    term = _mul_delta(term)
                k2 = _state_key(p)
                acc = new_states.get(k2)
                if acc is None:
                    new_states[k2] = term
                    new_links[k2] = p
                else:
                    for e, c in term.items():
                        acc[e] = acc.get(e, 0) + c
        states, links = new_states, new_links

    final_key = _state_key({s0: s1, s1: s0})
    if set(states) != {final_key}:
        raise AssertionError("bracket: contraction did not close the diagram")
    return LaurentPoly(states[final_key])


def _state_key(partner: dict) -> frozenset:
    return frozenset((min(u, v), max(u, v)) for u, v in partner.items())


def _mul_delta(poly: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e, c in poly.items():
        for de, dc in _DELTA.items():
            k = e + de
            out[k] = out.get(k, 0) + c * dc
    return {e: c for e, c in out.items() if c}


# -- Jones ---------------------------------------------------------------------


def jones_q(diagram: PlanarDiagram) -> LaurentPoly:
    """Jones polynomial in the variable q = t^(1/2) = A^-2."""
    bracket = kauffman_bracket(diagram)
    w = diagram.writhe()
    normalized = bracket.shift(-3 * w)
    if w % 2:
        normalized = -normalized
    out: dict[int, int] = {}
    for e, c in normalized.items():
        if e % 2:
            raise AssertionError("jones: odd A-exponent after normalization")
        out[-e // 2] = c
    return LaurentPoly(out)


def jones(diagram: PlanarDiagram) -> LaurentPoly:
    """Jones polynomial in t.  For knots every q-exponent is even, so
    this is always representable."""
    return jones_q(diagram).halve_exponents()


def jones_twist(v: LaurentPoly, ell: int) -> LaurentPoly:
    """Jones polynomial after ell extra full twists in a band whose core
    is unknotted and unlinked from the rest of the surface:

        V_ell(t) = t^(2 ell) V(t) + 1 - t^(2 ell).

    Valid for either sign of ell; iterating the one-twist case gives the
    same closed form.
    """
    factor = LaurentPoly.term(1, 2 * ell)
    return factor * v + LaurentPoly.one() - factor


# -- diagram surgery -----------------------------------------------------------


def mirror(diagram: PlanarDiagram) -> PlanarDiagram:
    """Swap every crossing.  Kauffman bracket maps A -> A^-1; Jones maps
    t -> t^-1."""
    out = []
    for x, sign in zip(diagram.crossings, diagram.signs):
        a, b, c, d = x
        if sign > 0:
            out.append((d, a, b, c))
        else:
            out.append((b, c, d, a))
    return validate(out)


def _sink_slot(diagram: PlanarDiagram, arc: int) -> tuple[int, int]:
    """(crossing index, slot) where the arc enters a crossing."""
    for ci, x in enumerate(diagram.crossings):
        over_in = 3 if diagram.signs[ci] > 0 else 1
        for slot, val in enumerate(x):
            if val == arc and (slot == 0 or slot == over_in):
                return ci, slot
    raise KnotError(f"pd: unknown arc {arc}")


def add_kink(diagram: PlanarDiagram, arc: int, sign: int) -> PlanarDiagram:
    """Insert a single curl of the given sign on an arc (a Reidemeister I
    move).  Writhe changes by sign; Jones is unchanged."""
    if sign not in (1, -1):
        raise KnotError("kink sign must be +1 or -1")
    if not diagram.crossings:
        raise KnotError("pd: cannot kink the zero-crossing unknot")
    if arc not in diagram.arcs:
        raise KnotError(f"pd: unknown arc {arc}")
    top = max(diagram.arcs)
    z, w = top + 1, top + 2  # z continues the arc, w is the little loop
    ci, slot = _sink_slot(diagram, arc)
    out = [list(x) for x in diagram.crossings]
    out[ci][slot] = z
    if sign > 0:
        out.append([arc, z, w, w])
    else:
        out.append([arc, w, w, z])
    return validate(out)


def connect_sum(d1: PlanarDiagram, arc1: int | None, d2: PlanarDiagram,
                arc2: int | None) -> PlanarDiagram:
    """Splice two diagrams head-to-tail at the chosen arcs.

    Either summand may be the zero-crossing unknot, in which case the
    other diagram is returned unchanged."""
    if not d2.crossings:
        return d1
    if not d1.crossings:
        return d2
    if arc1 is None or arc2 is None:
        raise KnotError("pd: connect sum needs an arc in each diagram")
    if arc1 not in d1.arcs:
        raise KnotError(f"pd: unknown arc {arc1}")
    if arc2 not in d2.arcs:
        raise KnotError(f"pd: unknown arc {arc2}")
    offset = max(d1.arcs)
    rows2 = [[a + offset for a in x] for x in d2.crossings]
    arc2o = arc2 + offset
    c1, s1 = _sink_slot(d1, arc1)
    shifted = PlanarDiagram(tuple(tuple(x) for x in rows2),
                            d2.signs)
    c2, s2 = _sink_slot(shifted, arc2o)
    rows1 = [list(x) for x in d1.crossings]
    rows1[c1][s1] = arc2o
    rows2[c2][s2] = arc1
    return validate(rows1 + rows2)
