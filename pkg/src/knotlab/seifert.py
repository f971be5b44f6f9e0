"""Seifert matrices and the moves that generate S-equivalence.

A Seifert matrix here is a square integer matrix M of even size 2g with
det(M - M^T) = 1.  That determinant condition says the associated
surface has one boundary component, and it is exactly what the
enlargement moves below must preserve.

Three moves generate S-equivalence of Seifert matrices:

  * congruence by a unimodular integer matrix T:  M -> T M T^T,
  * enlargement of a 2g x 2g matrix to a (2g+2) x (2g+2) one by a new
    trivial row/column pair (in two mirror-image shapes, below),
  * the inverse reduction.

The first enlargement shape appends, after the rows of M, a row of
zeros and then a row q_1 .. q_n, with corner block ((0,1),(0,0)) and
zero columns above it.  The second appends a zero column and then a
column q_1 .. q_n to the rows of M, with corner block ((0,0),(1,0)) and
zero rows below.  ``enlarge_first``/``enlarge_second`` build these and
``try_reduce`` inverts them when the pattern is present.

Also here: the Alexander polynomial det(M - t M^T) normalized modulo
units, the signature of M + M^T (computed by exact rational congruence
diagonalization), and the knot determinant |det(M + M^T)|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import KnotError
from .laurent import LaurentPoly

__all__ = [
    "SeifertMatrix",
    "CongruenceCertificate",
    "int_det",
    "alexander",
    "signature",
    "knot_determinant",
    "enlarge_first",
    "enlarge_second",
    "try_reduce",
    "connected_sum",
]

Rows = Sequence[Sequence[int]]


def int_det(rows: Rows) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise KnotError("matrix is not square")
    if n == 0:
        return 1
    a = [[int(x) for x in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _as_int_rows(rows: Rows, what: str) -> tuple[tuple[int, ...], ...]:
    out = []
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise KnotError(f"{what}: matrix must be square")
        row = []
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise KnotError(f"{what}: entries must be ints, got {x!r}")
            row.append(x)
        out.append(tuple(row))
    return tuple(out)


def _mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(
        tuple(sum(a[i][x] * b[x][j] for x in range(k)) for j in range(m))
        for i in range(n)
    )


def _transpose(a):
    return tuple(zip(*a)) if a else ()


@dataclass(frozen=True)
class CongruenceCertificate:
    """A unimodular integer matrix T, witnessing M' = T M T^T.

    Construction rejects non-square and non-unimodular matrices, so any
    certificate object in circulation is a valid basis change.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = _as_int_rows(self.rows, "certificate")
        object.__setattr__(self, "rows", rows)
        if int_det(rows) not in (1, -1):
            raise KnotError("certificate: matrix is not unimodular")

    @property
    def size(self) -> int:
        return len(self.rows)

    def det(self) -> int:
        return int_det(self.rows)

    def apply(self, m: "SeifertMatrix") -> "SeifertMatrix":
        """The congruent matrix T M T^T."""
        if self.size != m.size:
            raise KnotError("certificate: size mismatch with matrix")
        return SeifertMatrix(_mat_mul(_mat_mul(self.rows, m.rows), _transpose(self.rows)))

    @classmethod
    def identity(cls, size: int) -> "CongruenceCertificate":
        return cls(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    def direct_sum(self, other: "CongruenceCertificate") -> "CongruenceCertificate":
        n, m = self.size, other.size
        rows = [list(r) + [0] * m for r in self.rows]
        rows += [[0] * n + list(r) for r in other.rows]
        return CongruenceCertificate(tuple(tuple(r) for r in rows))

    def __str__(self) -> str:
        return format_matrix(self.rows)


@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer matrix of even size with det(M - M^T) = 1."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = _as_int_rows(self.rows, "seifert")
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n % 2:
            raise KnotError("seifert: size must be even")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        d = int_det(skew)
        if d != 1:
            raise KnotError(f"seifert: det(M - M^T) = {d}, must be 1")

    # -- basics -----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def genus(self) -> int:
        return self.size // 2

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "SeifertMatrix":
        return SeifertMatrix(_transpose(self.rows))

    @property
    def s(self) -> int:
        """a12 + a21, defined for genus-one matrices.  Always odd and
        nonzero, since |a12 - a21| = 1."""
        if self.genus != 1:
            raise KnotError("seifert: s is defined for genus-one matrices only")
        return self.rows[0][1] + self.rows[1][0]

    def __str__(self) -> str:
        return format_matrix(self.rows)

    # -- S-equivalence moves ------------------------------------------------

    def congruent_by(self, t: CongruenceCertificate) -> "SeifertMatrix":
        return t.apply(self)


def format_matrix(rows) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in rows) + "]"


def parse_matrix(text: str) -> list[list[int]]:
    """Accept either the inline form [[0,2],[1,0]] or one row per line of
    whitespace-separated integers."""
    s = text.strip()
    if not s:
        raise KnotError("matrix: empty text")
    if s.startswith("["):
        import ast

        try:
            obj = ast.literal_eval(s)
        except (ValueError, SyntaxError) as e:
            raise KnotError(f"matrix: bad literal ({e})") from None
        if not isinstance(obj, (list, tuple)) or not all(
            isinstance(r, (list, tuple)) for r in obj
        ):
            raise KnotError("matrix: expected a list of rows")
        rows = [[int(x) for x in r] for r in obj]
    else:
        rows = []
        for line in s.splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                rows.append([int(tok) for tok in line.replace(",", " ").split()])
            except ValueError:
                raise KnotError(f"matrix: bad row {line!r}") from None
    if not rows or any(len(r) != len(rows) for r in rows):
        raise KnotError("matrix: rows must form a square matrix")
    return rows


# -- invariants of the form ---------------------------------------------------


def alexander(m: SeifertMatrix) -> LaurentPoly:
    """Alexander polynomial det(M - t M^T), normalized so the lowest
    exponent is 0 and the lowest coefficient is positive.

    The normalization makes the result a genuine S-equivalence invariant:
    det(M - t M^T) itself is only well defined up to units +-t^k.
    """
    n = m.size
    if n == 0:
        return LaurentPoly.one()
    entries = [
        [
            LaurentPoly({0: m.rows[i][j], 1: -m.rows[j][i]})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(entries).normalize_units()


def _poly_det(entries: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a matrix of Laurent polynomials by expansion over
    column subsets: minors[S] is the determinant of the top |S| rows on
    column set S.  Placing row i at column j costs a sign of
    (-1)^(i + #used columns below j)."""
    n = len(entries)
    minors = {0: LaurentPoly.one()}
    for i in range(n):
        nxt: dict[int, LaurentPoly] = {}
        for mask, minor in minors.items():
            if minor.is_zero():
                continue
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                cell = entries[i][j]
                if cell.is_zero():
                    continue
                add = minor * cell
                if (i + bin(mask & (bit - 1)).count("1")) & 1:
                    add = -add
                key = mask | bit
                prev = nxt.get(key)
                nxt[key] = add if prev is None else prev + add
        minors = nxt
        if not minors:
            return LaurentPoly.zero()
    return minors.get((1 << n) - 1, LaurentPoly.zero())


def knot_determinant(m: SeifertMatrix) -> int:
    """|det(M + M^T)|, i.e. |Alexander at t = -1|."""
    n = m.size
    sym = [[m.rows[i][j] + m.rows[j][i] for j in range(n)] for i in range(n)]
    return abs(int_det(sym))


def signature(m: SeifertMatrix) -> int:
    """Signature of the symmetrized form M + M^T.

    Diagonalizes by exact rational congruence (simultaneous row and
    column operations), then counts signs on the diagonal.
    """
    n = m.size
    a = [
        [Fraction(m.rows[i][j] + m.rows[j][i]) for j in range(n)]
        for i in range(n)
    ]
    sig = 0
    for k in range(n):
        if a[k][k] == 0:
            pivot = None
            for i in range(k, n):
                if a[i][i] != 0:
                    pivot = i
                    break
            if pivot is None:
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            # make a diagonal entry: add row/col j to row/col i
                            for x in range(n):
                                a[i][x] += a[j][x]
                            for x in range(n):
                                a[x][i] += a[x][j]
                            pivot = i
                            break
                    if pivot is not None:
                        break
            if pivot is None:
                break  # remaining block is zero
            if pivot != k:
                a[k], a[pivot] = a[pivot], a[k]
                for row in a:
                    row[k], row[pivot] = row[pivot], row[k]
        d = a[k][k]
        sig += 1 if d > 0 else -1
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                for x in range(n):
                    a[i][x] -= f * a[k][x]
                for x in range(n):
                    a[x][i] -= f * a[x][k]
    return sig


# -- enlargement and reduction -------------------------------------------------


def enlarge_first(m: SeifertMatrix, q: Sequence[int]) -> SeifertMatrix:
    """Enlarge by a new row pair below: a zero row, then the row q.

    The result E has E[i] = row i of M padded with (0, 0); row n is all
    zeros except E[n][n+1] = 1; row n+1 is q_1 .. q_n followed by (0, 0).
    """
    n = m.size
    if len(q) != n:
        raise KnotError(f"enlarge: need {n} twist entries, got {len(q)}")
    rows = [list(r) + [0, 0] for r in m.rows]
    rows.append([0] * n + [0, 1])
    rows.append([int(x) for x in q] + [0, 0])
    return SeifertMatrix(tuple(tuple(r) for r in rows))


def enlarge_second(m: SeifertMatrix, q: Sequence[int]) -> SeifertMatrix:
    """Enlarge by a new column pair at the right: a zero column, then the
    column q, with corner block ((0,0),(1,0)) and zero rows below.
    Mirror image of :func:`enlarge_first`.
    """
    n = m.size
    if len(q) != n:
        raise KnotError(f"enlarge: need {n} twist entries, got {len(q)}")
    rows = [list(m.rows[i]) + [0, int(q[i])] for i in range(n)]
    rows.append([0] * n + [0, 0])
    rows.append([0] * n + [1, 0])
    return SeifertMatrix(tuple(tuple(r) for r in rows))


def try_reduce(m: SeifertMatrix) -> tuple[SeifertMatrix, str] | None:
    """Undo one enlargement if the last two rows/columns match either
    template exactly.  Returns (inner matrix, "first" | "second"), or
    None when neither template is present.
    """
    n = m.size - 2
    if n < 0:
        return None
    r = m.rows
    inner = tuple(tuple(r[i][j] for j in range(n)) for i in range(n))

    def zeros(xs):
        return all(x == 0 for x in xs)

    # first template: trailing rows (0..0, 0, 1) and (q, 0, 0), zero columns above
    if (
        zeros(r[n][:n])
        and r[n][n] == 0
        and r[n][n + 1] == 1
        and r[n + 1][n] == 0
        and r[n + 1][n + 1] == 0
        and all(r[i][n] == 0 and r[i][n + 1] == 0 for i in range(n))
    ):
        return SeifertMatrix(inner), "first"
    # second template: trailing columns (0, q) and corner ((0,0),(1,0)), zero rows below
    if (
        zeros(r[n][:n])
        and zeros(r[n + 1][:n])
        and r[n][n] == 0
        and r[n][n + 1] == 0
        and r[n + 1][n] == 1
        and r[n + 1][n + 1] == 0
        and all(r[i][n] == 0 for i in range(n))
    ):
        return SeifertMatrix(inner), "second"
    return None


def connected_sum(a: SeifertMatrix, b: SeifertMatrix) -> SeifertMatrix:
    """Block sum M_a (+) M_b, the Seifert matrix of the connected sum."""
    n, m = a.size, b.size
    rows = [list(r) + [0] * m for r in a.rows]
    rows += [[0] * n + list(r) for r in b.rows]
    return SeifertMatrix(tuple(tuple(r) for r in rows))
