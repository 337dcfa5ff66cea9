"""Exact arithmetic foundation: reduced rationals, real quadratic surds,
and 2x2 integer matrices acting as Moebius maps.

Rationals are ``fractions.Fraction`` throughout (always reduced, positive
denominator).  ``QuadIrr`` represents (p + s*sqrt(d))/q over one fixed
positive non-square d; every comparison is decided by integer sign
computations, never by floating point.  All values are immutable and all
operations are pure functions.
"""

import math
import re
from fractions import Fraction
from typing import NamedTuple, Union

ONE_RATIONAL = "one_rational"
INF_RATIONAL = "inf_rational"


def rational_reduce(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator."""
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)


def classify(r) -> str:
    """Parity class of a reduced fraction.

    Both parts odd gives "one_rational"; mixed parity gives "inf_rational".
    A reduced fraction can never have both parts even, so the two classes
    are exhaustive.
    """
    f = Fraction(r)
    if f.numerator % 2 == 1 and f.denominator % 2 == 1:
        return ONE_RATIONAL
    return INF_RATIONAL


def is_one_rational(r) -> bool:
    return classify(r) == ONE_RATIONAL


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_linear(m: int, n: int, d: int) -> int:
    """Sign of m + n*sqrt(d) for integers m, n and positive non-square d.

    Never zero unless m = n = 0: sqrt(d) is irrational, so the mixed case
    reduces to comparing m*m against n*n*d with sign bookkeeping.
    """
    if n == 0:
        return _sign(m)
    if m == 0:
        return _sign(n)
    if (m > 0) == (n > 0):
        return 1 if m > 0 else -1
    s = _sign(m)
    return s if m * m > n * n * d else -s


def _floor_mul_sqrt(s: int, d: int) -> int:
    # floor(s*sqrt(d)); s*sqrt(d) is irrational for s != 0 and non-square d
    if s == 0:
        return 0
    r = math.isqrt(s * s * d)
    return r if s > 0 else -r - 1


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


class QuadIrr:
    """Exact element (p + s*sqrt(d))/q of a real quadratic field.

    Canonical form: q >= 1, gcd(|p|, |s|, q) = 1, s != 0 (a vanishing
    irrational part is a plain Fraction, use that instead), and d a positive
    non-square.  Two values over the same literal d are equal iff their
    canonical forms coincide; mixing different d values is an error.  d is
    deliberately not reduced to a squarefree radicand, so no factorization
    is ever needed.
    """

    __slots__ = ("p", "s", "d", "q")

    def __init__(self, p: int, s: int, d: int, q: int = 1):
        if q == 0:
            raise ValueError("zero denominator")
        if s == 0:
            raise ValueError("zero sqrt coefficient: value is rational, use Fraction")
        if d <= 0 or is_square(d):
            raise ValueError(f"d must be a positive non-square, got {d}")
        if q < 0:
            p, s, q = -p, -s, -q
        g = math.gcd(math.gcd(abs(p), abs(s)), q)
        self.p = p // g
        self.s = s // g
        self.d = d
        self.q = q // g

    # -- coercion -------------------------------------------------------

    def _coerce(self, other):
        """Return (p, s, q) of ``other`` over this value's d, or None."""
        if isinstance(other, QuadIrr):
            if other.d != self.d:
                raise ValueError(f"mixed quadratic fields: sqrt({self.d}) vs sqrt({other.d})")
            return other.p, other.s, other.q
        if isinstance(other, int):
            return other, 0, 1
        if isinstance(other, Fraction):
            return other.numerator, 0, other.denominator
        return None

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p2, s2, q2 = o
        return _make(self.p * q2 + p2 * self.q, self.s * q2 + s2 * self.q,
                     self.d, self.q * q2)

    __radd__ = __add__

    def __neg__(self):
        return QuadIrr(-self.p, -self.s, self.d, self.q)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p2, s2, q2 = o
        return _make(self.p * q2 - p2 * self.q, self.s * q2 - s2 * self.q,
                     self.d, self.q * q2)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p2, s2, q2 = o
        return _make(self.p * p2 + self.s * s2 * self.d,
                     self.p * s2 + self.s * p2, self.d, self.q * q2)

    __rmul__ = __mul__

    def inverse(self) -> "QuadIrr":
        # 1/((p+s*sqrt(d))/q) = q*(p-s*sqrt(d))/(p^2 - s^2*d); the norm is
        # nonzero because d is not a square
        norm = self.p * self.p - self.s * self.s * self.d
        return QuadIrr(self.q * self.p, -self.q * self.s, self.d, norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p2, s2, q2 = o
        if isinstance(other, QuadIrr):
            return self * other.inverse()
        if p2 == 0:
            raise ZeroDivisionError("division by zero")
        return self * Fraction(q2, p2)

    def __rtruediv__(self, other):
        # other / self with other int or Fraction
        return self.inverse() * other

    def conjugate(self) -> "QuadIrr":
        return QuadIrr(self.p, -self.s, self.d, self.q)

    # -- order ----------------------------------------------------------

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p2, s2, q2 = o
        return sign_linear(self.p * q2 - p2 * self.q,
                           self.s * q2 - s2 * self.q, self.d)

    def __eq__(self, other):
        if isinstance(other, QuadIrr):
            return (self.d == other.d and self.p == other.p
                    and self.s == other.s and self.q == other.q)
        if isinstance(other, (int, Fraction)):
            return False  # s != 0 means the value is irrational
        return NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        return hash((self.p, self.s, self.d, self.q))

    # -- misc -----------------------------------------------------------

    def __abs__(self):
        return -self if self._cmp(0) < 0 else self

    def __floor__(self) -> int:
        return (self.p + _floor_mul_sqrt(self.s, self.d)) // self.q

    def __float__(self) -> float:
        return (float(Fraction(self.p, self.q))
                + float(Fraction(self.s, self.q)) * math.sqrt(self.d))

    def __repr__(self):
        return f"QuadIrr({self.p}, {self.s}, {self.d}, {self.q})"

    def __str__(self):
        return format_real(self)


RealInput = Union[Fraction, QuadIrr]


def _make(p: int, s: int, d: int, q: int):
    """Quadratic-field value in canonical form; collapses to Fraction when rational."""
    if s == 0:
        return Fraction(p, q)
    return QuadIrr(p, s, d, q)


def frac_sqrt(d: int) -> QuadIrr:
    """Fractional part of sqrt(d): sqrt(d) - floor(sqrt(d)), for non-square d."""
    return QuadIrr(-math.isqrt(d), 1, d, 1)


# ---------------------------------------------------------------------------
# 2x2 integer matrices acting on the projective line


class Mat2(NamedTuple):
    """Integer matrix [[a, b], [c, d]] acting by z -> (a*z + b)/(c*z + d)."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def apply(self, x):
        """Moebius image (a*x + b)/(c*x + d); raises at the pole."""
        den = self.c * x + self.d
        if den == 0:
            raise ValueError("Moebius map pole: c*x + d = 0")
        return (self.a * x + self.b) / den

    def theta_member(self) -> bool:
        """Membership in the theta group: det 1 and mod-2 reduction equal to
        the identity or to the order-4 rotation [[0,-1],[1,0]]."""
        if self.det() != 1:
            return False
        m = (self.a % 2, self.b % 2, self.c % 2, self.d % 2)
        return m == (1, 0, 0, 1) or m == (0, 1, 1, 0)


IDENTITY = Mat2(1, 0, 0, 1)


def mat_mul(m1: Mat2, m2: Mat2) -> Mat2:
    return m1 @ m2


def mat_apply(m: Mat2, x):
    return m.apply(x)


def theta_coset_member(m: Mat2) -> bool:
    """True when m lies in the theta group or its swap coset: |det| = 1 and
    mod-2 reduction is the identity or the antidiagonal."""
    if m.det() not in (1, -1):
        return False
    r = (m.a % 2, m.b % 2, m.c % 2, m.d % 2)
    return r == (1, 0, 0, 1) or r == (0, 1, 1, 0)


# ---------------------------------------------------------------------------
# Number grammar: "p/q", "(P+S*sqrt(D))/Q", "sqrt(D)"; whitespace-insensitive

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")
_SQRT_RE = re.compile(r"^sqrt\((\d+)\)$")
_QUAD_RE = re.compile(r"^\(([+-]?\d+)([+-]\d+)\*sqrt\((\d+)\)\)/(\d+)$")


def parse_real(text: str) -> RealInput:
    """Parse "p/q", "(P+S*sqrt(D))/Q", or "sqrt(D)" into an exact value."""
    compact = "".join(text.split())
    m = _RAT_RE.match(compact)
    if m:
        den = int(m.group(2)) if m.group(2) is not None else 1
        return rational_reduce(int(m.group(1)), den)
    m = _SQRT_RE.match(compact)
    if m:
        d = int(m.group(1))
        if is_square(d):
            return Fraction(math.isqrt(d))
        return QuadIrr(0, 1, d)
    m = _QUAD_RE.match(compact)
    if m:
        p, s, d, q = (int(m.group(i)) for i in range(1, 5))
        if q == 0:
            raise ValueError("zero denominator")
        if is_square(d):
            return rational_reduce(p + s * math.isqrt(d), q)
        return _make(p, s, d, q)
    raise ValueError(f"cannot parse number {text!r}; expected p/q, "
                     "(P+S*sqrt(D))/Q, or sqrt(D)")


def format_real(x) -> str:
    if isinstance(x, QuadIrr):
        return f"({x.p}{x.s:+d}*sqrt({x.d}))/{x.q}"
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"
