"""Deciding first S-equivalence after a band twist.

Setting: a genus-one Seifert matrix M = ((a11, a12), (a21, a22)) with
|a12 - a21| = 1, and the knot obtained by giving one of the two bands
ell extra full twists.  Twisting the first band replaces a11 by
a11 - ell; twisting the second replaces a22 by a22 - ell.  Write
s = a12 + a21 (odd, so never zero).

The twisted form is congruent to M by a unimodular basis change -- i.e.
the two matrices are "first S-equivalent", S-equivalent without any
enlargement moves -- precisely when the *other* band is untwisted
(a22 = 0 for a first-band twist, a11 = 0 for a second-band twist) and
s divides ell.  In that case an explicit certificate is

    first band:   T = ((1, -ell/s), (0, 1))
    second band:  T = ((1, 0), (-ell/s, 1))

and one checks T M T^T recovers the twisted matrix.  A positive answer
implies the knots are S-equivalent outright; a negative answer only
says no genus-preserving congruence exists, it does not decide full
S-equivalence.

``brute_force_congruence`` is a deliberately dumb exhaustive search for
a congruence with bounded entries.  It exists to cross-check the
decision procedure above and shares no code with it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from .errors import KnotError
from .seifert import CongruenceCertificate, SeifertMatrix, int_det

__all__ = [
    "Band",
    "twist_form",
    "SEquivReport",
    "first_sequiv_condition",
    "decide_first_sequiv",
    "verify_certificate",
    "brute_force_congruence",
    "connected_sum_certificate",
]

Band = Literal["first", "second"]

POSITIVE_NOTE = "first S-equivalence implies S-equivalence of the two forms"
NEGATIVE_NOTE = (
    "no genus-preserving congruence exists; full S-equivalence is not decided"
)


def _check_band(band: str) -> Band:
    if band not in ("first", "second"):
        raise KnotError(f"band must be 'first' or 'second', got {band!r}")
    return band  # type: ignore[return-value]


def _check_genus_one(m: SeifertMatrix) -> None:
    if m.genus != 1:
        raise KnotError("twist: genus-one matrix required")
    if abs(m.rows[0][1] - m.rows[1][0]) != 1:
        raise KnotError("twist: |a12 - a21| must be 1")


def twist_form(m: SeifertMatrix, ell: int, band: Band = "first") -> SeifertMatrix:
    """Seifert matrix after ell extra full twists in one band."""
    _check_genus_one(m)
    band = _check_band(band)
    (a, b), (c, d) = m.rows
    if band == "first":
        return SeifertMatrix(((a - ell, b), (c, d)))
    return SeifertMatrix(((a, b), (c, d - ell)))


def first_sequiv_condition(m: SeifertMatrix, ell: int, band: Band = "first") -> bool:
    """True iff the twisted form is congruent to M over the integers."""
    _check_genus_one(m)
    band = _check_band(band)
    if ell == 0:
        return True
    other = m.rows[1][1] if band == "first" else m.rows[0][0]
    return other == 0 and ell % abs(m.s) == 0


@dataclass(frozen=True)
class SEquivReport:
    """Outcome of the decision procedure, with a witness when positive."""

    matrix: SeifertMatrix
    twisted: SeifertMatrix
    ell: int
    band: Band
    equivalent: bool
    certificate: Optional[CongruenceCertificate]
    reason: str
    note: str

    def as_dict(self) -> dict:
        return {
            "matrix": [list(r) for r in self.matrix.rows],
            "twisted": [list(r) for r in self.twisted.rows],
            "ell": self.ell,
            "band": self.band,
            "first_s_equivalent": self.equivalent,
            "certificate": [list(r) for r in self.certificate.rows]
            if self.certificate
            else None,
            "reason": self.reason,
            "note": self.note,
        }


def decide_first_sequiv(m: SeifertMatrix, ell: int, band: Band = "first") -> SEquivReport:
    """Decide first S-equivalence of M and its ell-twisted form, and
    produce the unimodular certificate when the answer is positive."""
    _check_genus_one(m)
    band = _check_band(band)
    twisted = twist_form(m, ell, band)
    s = m.s
    if ell == 0:
        cert = CongruenceCertificate.identity(2)
        return SEquivReport(
            m, twisted, ell, band, True, cert, "ell = 0, forms are equal", POSITIVE_NOTE
        )
    other_name, other = (
        ("a22", m.rows[1][1]) if band == "first" else ("a11", m.rows[0][0])
    )
    if other != 0:
        return SEquivReport(
            m,
            twisted,
            ell,
            band,
            False,
            None,
            f"{other_name} = {other} != 0",
            NEGATIVE_NOTE,
        )
    if ell % abs(s) != 0:
        return SEquivReport(
            m,
            twisted,
            ell,
            band,
            False,
            None,
            f"s = {s} does not divide ell = {ell}",
            NEGATIVE_NOTE,
        )
    k = ell // s
    if band == "first":
        cert = CongruenceCertificate(((1, -k), (0, 1)))
    else:
        cert = CongruenceCertificate(((1, 0), (-k, 1)))
    assert cert.apply(m) == twisted
    return SEquivReport(
        m,
        twisted,
        ell,
        band,
        True,
        cert,
        f"{other_name} = 0 and s = {s} divides ell = {ell}",
        POSITIVE_NOTE,
    )


def verify_certificate(
    m: SeifertMatrix, target: SeifertMatrix, t: CongruenceCertificate
) -> bool:
    """True iff det(T) = +-1 and T M T^T equals the target exactly."""
    if t.size != m.size or m.size != target.size:
        raise KnotError("verify: size mismatch")
    if int_det(t.rows) not in (1, -1):
        return False
    return t.apply(m) == target


# -- exhaustive oracle ---------------------------------------------------------

_PERMS: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
# unimodular candidates for searches small enough to enumerate in one chunk,
# keyed by (matrix size, entry bound)
_UNIMODULAR: dict[tuple[int, int], np.ndarray] = {}


def _signed_perms(n: int) -> list[tuple[int, tuple[int, ...]]]:
    got = _PERMS.get(n)
    if got is None:
        got = []
        for perm in itertools.permutations(range(n)):
            inv = sum(
                1
                for i in range(n)
                for j in range(i + 1, n)
                if perm[i] > perm[j]
            )
            got.append((-1 if inv % 2 else 1, perm))
        _PERMS[n] = got
    return got


def _batch_det(t: np.ndarray) -> np.ndarray:
    """Exact determinants of a batch of small integer matrices, by the
    permutation expansion."""
    n = t.shape[1]
    out = np.zeros(t.shape[0], dtype=np.int64)
    for sign, perm in _signed_perms(n):
        term = t[:, 0, perm[0]].copy()
        for i in range(1, n):
            term *= t[:, i, perm[i]]
        out += sign * term
    return out


def brute_force_congruence(
    m: SeifertMatrix, target: SeifertMatrix, bound: int
) -> Optional[CongruenceCertificate]:
    """Search every integer matrix T with entries in [-bound, bound] for
    T M T^T = target, returning the first witness in lexicographic entry
    order (row-major, entries ascending), or None.

    Independent of the decision procedure by construction: it knows
    nothing about twists, it just enumerates candidates in batches.
    Matrices larger than 4x4 are rejected, and the 4x4 search space is
    (2*bound+1)^16, only realistic for tiny bounds.
    """
    if bound < 0:
        raise KnotError("oracle: bound must be >= 0")
    n = m.size
    if n != target.size:
        raise KnotError("oracle: size mismatch")
    if n > 4:
        raise KnotError("oracle: matrices larger than 4x4 are not supported")
    if n == 0:
        return CongruenceCertificate(())

    mm = np.array(m.rows, dtype=np.int64)
    tt = np.array(target.rows, dtype=np.int64)
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    total = n * n
    # entries split into a lexicographic outer prefix and a vectorized tail
    tail = min(total, 10)
    head = total - tail
    grids = np.meshgrid(*([rng] * tail), indexing="ij")
    block = np.stack(grids, axis=-1).reshape(-1, tail)
    single_chunk = head == 0
    if single_chunk:
        cached = _UNIMODULAR.get((n, bound))
    for prefix in itertools.product(rng.tolist(), repeat=head):
        if single_chunk and cached is not None:
            t = cached
        else:
            cand = np.empty((block.shape[0], total), dtype=np.int64)
            if head:
                cand[:, :head] = prefix
            cand[:, head:] = block
            t = cand.reshape(-1, n, n)
            keep = np.abs(_batch_det(t)) == 1
            t = t[keep]
            if single_chunk:
                _UNIMODULAR[(n, bound)] = t
        if not t.shape[0]:
            continue
        prod = np.einsum("nij,jk,nlk->nil", t, mm, t)
        hit = np.all(prod == tt, axis=(1, 2))
        idx = np.flatnonzero(hit)
        if idx.size:
            rows = tuple(tuple(int(x) for x in row) for row in t[idx[0]])
            return CongruenceCertificate(rows)
    return None


def connected_sum_certificate(
    t: CongruenceCertificate, pad: int
) -> CongruenceCertificate:
    """Lift a certificate along connected sum with a fixed summand:
    T (+) I_pad."""
    if pad < 0:
        raise KnotError("pad must be >= 0")
    return t.direct_sum(CongruenceCertificate.identity(pad))
