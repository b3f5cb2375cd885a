"""Exact arithmetic for the Farey-type diagrams of a 2-bridge link.

The link L([r,s]) with [r,s] = 1/(r + 1/s), r = 2w+1, s = 2u+1, comes with a
strip of quadrilaterals in the hyperbolic plane: w+1 of them fanning around
the vertex 0/1, followed by |u|+1 (sharing one quadrilateral with the first
fan) around the vertex 1/r.  Every edge of every diagram D_t is the image of
a model edge under an element of the subgroup G of PSL(2,Z) whose lower-left
entry is even, and boundary-slope bookkeeping only ever needs the value -d/c
of that element.  This module provides the exact rational type (including
the point at infinity 1/0), the G-matrices, the quadrilateral strip, and
continued-fraction conversion in both directions.

Everything here is immutable and pure; all functions are safe to call
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class DomainError(ValueError):
    """An input violates a domain constraint (link parameters, weights...)."""


# ---------------------------------------------------------------------------
# Rational numbers, including 1/0
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rational:
    """A reduced fraction num/den, with den = 0 reserved for the vertex 1/0.

    Normalisation: gcd(|num|, den) = 1, den >= 0, and the infinite vertex is
    stored as 1/0 (positive numerator).
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        n, d = self.num, self.den
        if n == 0 and d == 0:
            raise DomainError("0/0 is not a rational point")
        if d < 0:
            n, d = -n, -d
        g = gcd(abs(n), d)
        if g > 1:
            n //= g
            d //= g
        if d == 0:
            n = 1
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    def __neg__(self) -> "Rational":
        if self.is_infinity:
            return self
        return Rational(-self.num, self.den)

    def reciprocal(self) -> "Rational":
        return Rational(self.den, self.num)

    def _cmp_key(self, other: "Rational") -> tuple[int, int]:
        if self.is_infinity or other.is_infinity:
            raise DomainError("cannot order the infinite vertex 1/0")
        return (self.num * other.den, other.num * self.den)

    def __lt__(self, other: "Rational") -> bool:
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other: "Rational") -> bool:
        a, b = self._cmp_key(other)
        return a <= b

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


INFINITY = Rational(1, 0)
ZERO = Rational(0, 1)


def gcm(x: int, y: int) -> int:
    """Greatest common measure with the convention GCM(x, 0) = |x|.

    The boundary-circle counts divide slope pairs such as (beta, 2n) where
    either entry may vanish; GCM(2, 0) = 2 is what makes the two-circle
    counts come out right in the planar-surface case analysis.
    """
    return gcd(abs(x), abs(y))


# ---------------------------------------------------------------------------
# The subgroup G of PSL(2,Z) with even lower-left entry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GMatrix:
    """An element (a b; c d) of G: determinant +1 and c even.

    Matrices are stored up to overall sign (PSL(2,Z)); the representative
    with c > 0, or c = 0 and a > 0, is chosen so that equality of dataclass
    fields is equality in the group.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        a, b, c, d = self.a, self.b, self.c, self.d
        if c < 0 or (c == 0 and a < 0):
            a, b, c, d = -a, -b, -c, -d
        if a * d - b * c != 1:
            raise DomainError(f"matrix ({a},{b};{c},{d}) has determinant != +1")
        if c % 2 != 0:
            raise DomainError(f"matrix ({a},{b};{c},{d}) is not in G: c is odd")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        return GMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @property
    def minus_d_over_c(self) -> Rational:
        """The value -d/c, the slope this matrix sends to 1/0."""
        return Rational(-self.d, self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.c},{self.d})"


IDENTITY = GMatrix(1, 0, 0, 1)


def apply(m: GMatrix, v: Rational) -> Rational:
    """Act on a slope: (a b; c d) sends p/q to (ap+bq)/(cp+dq)."""
    return Rational(m.a * v.num + m.b * v.den, m.c * v.num + m.d * v.den)


# ---------------------------------------------------------------------------
# Continued fractions
# ---------------------------------------------------------------------------

def from_partial_quotients(quotients: list[int]) -> Rational:
    """Value of the continued fraction 1/(a1 + 1/(a2 + ... + 1/ak)).

    Each quotient must be a nonzero integer.  The value itself may be any
    rational point including 1/0, but an *intermediate* tail evaluating to
    exactly zero (so that some a_i + 1/0 would be formed) is rejected.
    """
    if not quotients:
        raise DomainError("empty partial-quotient list")
    for a in quotients:
        if a == 0:
            raise DomainError("partial quotients must be nonzero")
    # Fold from the right: x_k = a_k, x_i = a_i + 1/x_{i+1}; value = 1/x_1.
    num, den = quotients[-1], 1
    for a in reversed(quotients[:-1]):
        if num == 0:
            raise DomainError("intermediate zero tail in continued fraction")
        num, den = a * num + den, num
    return Rational(den, num)


ODD_ODD = ("odd", "odd")
EVEN_ANY_EVEN = ("even", "any", "even")


def _divisor_candidates(pn: int, pd: int, modulus: int) -> list[int]:
    # Residues of pd modulo `modulus`, small enough to be a quotient part.
    d0 = pd % modulus
    return [d0, d0 - modulus]


def expand_as(p: Rational, pattern: tuple[str, ...]) -> list[int] | None:
    """Invert from_partial_quotients for a fixed parity pattern.

    Supported patterns are ODD_ODD ([r, s] with r, s odd) and EVEN_ANY_EVEN
    ([2w, v, 2u]).  Returns the quotient list, or None when no expansion of
    that shape exists.  The solution is found algebraically: the leading
    quotient is pinned down by the requirement that the remaining tail be
    the reciprocal of an integer (resp. an integer plus an even-reciprocal),
    so only two candidate remainders need to be inspected.  Magnitude
    constraints (|w| >= 2 and so on) are deliberately not applied; callers
    filter for their own theorems.
    """
    if p.is_infinity:
        return None
    pn, pd = p.num, p.den
    if pn == 0:
        return None
    if pattern == ODD_ODD:
        # p = [r, s]  <=>  pd/pn = r + 1/s  <=>  s = pn / (pd - r*pn).
        for d in _divisor_candidates(pn, pd, abs(pn)):
            if d == 0 or pn % d != 0:
                continue
            s = pn // d
            r = (pd - d) // pn
            if r % 2 != 0 and s % 2 != 0 and r != 0:
                assert from_partial_quotients([r, s]) == p
                return [r, s]
        return None
    if pattern == EVEN_ANY_EVEN:
        # p = [2a, v, 2c]: pn = 2cv + 1 and pd = 2a*pn + 2c.
        for two_c in _divisor_candidates(pn, pd, 2 * abs(pn)):
            if two_c == 0 or two_c % 2 != 0:
                continue
            if (pn - 1) % two_c != 0:
                continue
            v = (pn - 1) // two_c
            if v == 0:
                continue
            two_a = pd - two_c
            if two_a % (2 * pn) != 0:
                continue
            a2 = two_a // pn
            if a2 == 0:
                continue
            result = [a2, v, two_c]
            assert from_partial_quotients(result) == p
            return result
        return None
    raise DomainError(f"unsupported expansion pattern {pattern!r}")


# ---------------------------------------------------------------------------
# The quadrilateral strip Q_{p/q}
# ---------------------------------------------------------------------------

def validate_rs(r: int, s: int) -> tuple[int, int]:
    """Check (r, s) parameters and return (w, u) with r = 2w+1, s = 2u+1."""
    if r % 2 == 0 or s % 2 == 0:
        raise DomainError(f"r and s must be odd, got ({r}, {s})")
    if r < 3 or abs(s) < 3:
        raise DomainError(
            f"need r >= 3 and |s| >= 3, got ({r}, {s}); "
            "|r| = 1 or |s| = 1 gives a torus link"
        )
    return (r - 1) // 2, (s - 1) // 2


def cf2(r: int, x: int) -> Rational:
    """The vertex [r, x] = x/(rx+1), with [r, 0] = 0/1 and [r, +-1] = 1/(r+-1)."""
    return Rational(x, r * x + 1)


Quad = tuple[Rational, Rational, Rational, Rational]


@dataclass(frozen=True)
class QuadSequence:
    """The strip of quadrilaterals from 1/0 to [r, s].

    quads[0..split_index-1] fan around the vertex 0/1 and the rest around
    1/r; the quadrilateral at split_index - 1 is shared between the two fans
    (it is listed once).
    """

    r: int
    s: int
    quads: tuple[Quad, ...]
    split_index: int


def quad_sequence(r: int, s: int) -> QuadSequence:
    """The w+u+1 (s>0) or w+u'+1 (s<0) quadrilaterals containing all minimal
    edge-paths from 1/0 to [r, s]."""
    w, _ = validate_rs(r, s)
    first = [
        (ZERO, Rational(1, 2 * i - 2), Rational(1, 2 * i - 1), Rational(1, 2 * i))
        for i in range(1, w + 2)
    ]
    hub = Rational(1, r)
    if s > 0:
        u = (s - 1) // 2
        second = [
            (hub, cf2(r, 2 * j - 3), cf2(r, 2 * j - 2), cf2(r, 2 * j - 1))
            for j in range(2, u + 2)
        ]
    else:
        uprime = (-s - 1) // 2
        second = [
            (hub, cf2(r, -2 * j + 3), cf2(r, -2 * j + 2), cf2(r, -2 * j + 1))
            for j in range(2, uprime + 2)
        ]
    return QuadSequence(r, s, tuple(first + second), w + 1)


# ---------------------------------------------------------------------------
# Edge matrices
# ---------------------------------------------------------------------------

FIRST = "first"
SECOND = "second"


def edge_matrix(r: int, s: int, sequence: str, index: int, k: int) -> GMatrix:
    """The G-matrix carrying the model edges onto position k of a quadrilateral.

    For the i-th quadrilateral of the first fan this is f_k(i); for the j-th
    quadrilateral of the second fan it is g_k(j) when s > 0 and h_k(j) when
    s < 0.  Position k in {0,1,2,3} names the four sides of the
    quadrilateral; the images of the four model edges under the returned
    matrix are the A/B halves of that side and the two rectangle edges
    adjacent to it.
    """
    w, u = validate_rs(r, s)
    if k not in (0, 1, 2, 3):
        raise DomainError(f"edge position k must be 0..3, got {k}")
    if sequence == FIRST:
        if not 1 <= index <= w + 1:
            raise DomainError(f"first-fan index {index} out of range 1..{w + 1}")
        i = index
        return (
            GMatrix(1, 0, 2 * i - 2, 1),
            GMatrix(1, 1, 2 * i - 2, 2 * i - 1),
            GMatrix(1, -1, 2 * i, -(2 * i - 1)),
            GMatrix(1, 0, 2 * i, 1),
        )[k]
    if sequence != SECOND:
        raise DomainError(f"sequence must be '{FIRST}' or '{SECOND}'")
    j = index
    if s > 0:
        if not 1 <= index <= u + 1:
            raise DomainError(f"second-fan index {index} out of range 1..{u + 1}")
        return (
            GMatrix(-(2 * j - 3), 2 * j - 2, -((2 * j - 3) * r + 1), (2 * j - 2) * r + 1),
            GMatrix(-(2 * j - 3), 1, -((2 * j - 3) * r + 1), r),
            GMatrix(2 * j - 1, -1, (2 * j - 1) * r + 1, -r),
            GMatrix(2 * j - 1, 2 * j - 2, (2 * j - 1) * r + 1, (2 * j - 2) * r + 1),
        )[k]
    uprime = -u - 1
    if not 1 <= index <= uprime + 1:
        raise DomainError(f"second-fan index {index} out of range 1..{uprime + 1}")
    return (
        GMatrix(2 * j - 1, -2 * j + 2, (2 * j - 1) * r - 1, (-2 * j + 2) * r + 1),
        GMatrix(2 * j - 1, 1, (2 * j - 1) * r - 1, r),
        GMatrix(-2 * j + 3, -1, (-2 * j + 3) * r + 1, -r),
        GMatrix(-2 * j + 3, -2 * j + 2, (-2 * j + 3) * r + 1, (-2 * j + 2) * r + 1),
    )[k]


def t1_c_matrix(r: int) -> GMatrix:
    """Transformation carrying the model C edge onto the t=1 edge from 1/r to 0/1."""
    return GMatrix(1, 0, r - 1, 1)
