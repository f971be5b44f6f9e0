"""Integer Laurent polynomials in one variable.

Coefficients and exponents are arbitrary-precision Python ints, so every
operation here is exact; nothing in this package ever touches floating
point when computing an invariant.  A polynomial is stored as a mapping
exponent -> nonzero coefficient.  Instances are immutable value objects:
arithmetic returns new objects and never mutates, which makes them safe
to share between threads.

The text form orders terms by ascending exponent and writes the variable
as ``t`` with caret powers, e.g. ``t^-2 - 3 + 2t``.  ``parse`` accepts
the same grammar (any amount of whitespace, ``^`` powers, an optional
variable letter chosen by the caller).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import KnotError

__all__ = ["LaurentPoly", "ZERO", "ONE", "T", "parse_poly"]


class LaurentPoly:
    """An element of Z[t, t^-1].

    >>> p = LaurentPoly({0: 1, 1: -1})
    >>> p * p
    LaurentPoly('1 - 2t + t^2')
    >>> p.evaluate(2)
    Fraction(-1, 1)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                if not isinstance(exp, int) or not isinstance(c, int):
                    raise KnotError("laurent: exponents and coefficients must be ints")
                if c:
                    clean[exp] = c
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int) -> "LaurentPoly":
        """The monomial coeff * t^exp."""
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self._coeffs.items()))

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise KnotError("laurent: zero polynomial has no degree")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise KnotError("laurent: zero polynomial has no degree")
        return max(self._coeffs)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise KnotError("laurent: only nonnegative integer powers")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- the operations the rest of the package needs -----------------------

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under t -> t^-1 (mirror image on Jones polynomials)."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def reindex(self, factor: int) -> "LaurentPoly":
        """Multiply every exponent by a positive integer (variable substitution
        t -> t^factor)."""
        if factor <= 0:
            raise KnotError("laurent: reindex factor must be positive")
        return LaurentPoly({e * factor: c for e, c in self._coeffs.items()})

    def halve_exponents(self) -> "LaurentPoly":
        """Substitute t^2 -> t; every exponent must be even."""
        if any(e % 2 for e in self._coeffs):
            raise KnotError("laurent: odd exponent, cannot halve")
        return LaurentPoly({e // 2: c for e, c in self._coeffs.items()})

    def evaluate(self, x: int | Fraction) -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        x = Fraction(x)
        if x == 0:
            raise KnotError("laurent: cannot evaluate at 0")
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += c * x ** e
        return total

    def normalize_units(self) -> "LaurentPoly":
        """Canonical representative modulo units +-t^k: lowest exponent 0 and
        lowest coefficient positive.  Used to compare Alexander polynomials."""
        if not self._coeffs:
            return self
        low = self.min_exp
        sign = 1 if self._coeffs[low] > 0 else -1
        return LaurentPoly({e - low: sign * c for e, c in self._coeffs.items()})

    # -- text form -----------------------------------------------------------

    def format(self, var: str = "t") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exp, c in sorted(self._coeffs.items()):
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                power = var if exp == 1 else f"{var}^{exp}"
                body = head + power
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:"
    r"(?P<coeff>\d+)\s*(?:\*?\s*(?P<var1>[A-Za-z])(?:\^(?P<exp1>-?\d+))?)?"
    r"|(?P<var2>[A-Za-z])(?:\^(?P<exp2>-?\d+))?"
    r")\s*"
)


def parse_poly(text: str, var: str = "t") -> LaurentPoly:
    """Parse the text form produced by :meth:`LaurentPoly.format`.

    >>> parse_poly("t^-1 - 2 + t")
    LaurentPoly('t^-1 - 2 + t')
    """
    s = text.strip()
    if not s:
        raise KnotError("laurent: empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise KnotError(f"laurent: cannot parse {s[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise KnotError(f"laurent: missing +/- before {s[pos:]!r}")
        name = m.group("var1") or m.group("var2")
        if name is not None and name != var:
            raise KnotError(f"laurent: unexpected variable {name!r}, want {var!r}")
        coeff = int(m.group("coeff") or 1)
        if sign == "-":
            coeff = -coeff
        if name is None:
            exp = 0
        else:
            raw = m.group("exp1") or m.group("exp2")
            exp = int(raw) if raw is not None else 1
        coeffs[exp] = coeffs.get(exp, 0) + coeff
        pos = m.end()
        first = False
    return LaurentPoly(coeffs)


def poly_sum(terms: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[int, int] = {}
    for p in terms:
        for e, c in p._coeffs.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(out)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
T = LaurentPoly.term(1, 1)
