"""Odd-odd continued fraction digit streams.

``expand`` follows the canonical half-open branch convention, so every input
has exactly one digit sequence here; the two-expansion multiplicity of
nonzero rationals is exposed separately by ``all_expansions``.  Expansions
of quadratic irrationals are detected as eventually periodic by exact
repetition of the tail value zeta_n = T^(n-1)(x).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterator, NamedTuple, Optional

from .core import IDENTITY, Mat2, QuadIrr, _make, is_square
from .maps import _check_unit, branch_apply, check_digit, digit_matrix, oocf_branch_of

FINITE = "finite"
TAIL_2M1 = "tail_2m1"
PERIODIC = "periodic"
TRUNCATED = "truncated"

_TERMINATORS = (FINITE, TAIL_2M1, PERIODIC, TRUNCATED)
_HARD_CAP = 10 ** 6


class OocfDigit(NamedTuple):
    a: int
    eps: int


@dataclass(frozen=True)
class OocfExpansion:
    """A digit prefix plus how the tail continues.

    finite      exact value, reached state 1 (value is a one-rational)
    tail_2m1    trailing (2,-1) repeated forever, reached state 0
                (value is an inf-rational)
    periodic    digits repeat from index ``period_start`` onward; the
                stored digits are the preperiod plus one full period
    truncated   a plain prefix, tail unknown
    """

    digits: tuple[OocfDigit, ...]
    terminator: str
    period_start: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "digits",
                           tuple(OocfDigit(int(a), int(e)) for a, e in self.digits))
        for a, e in self.digits:
            check_digit(a, e)
        if self.terminator not in _TERMINATORS:
            raise ValueError(f"unknown terminator {self.terminator!r}")
        if self.terminator == PERIODIC:
            if self.period_start is None or not (0 <= self.period_start < len(self.digits)):
                raise ValueError("periodic expansion needs a period_start inside the digits")
            per = self.digits[self.period_start:]
            n = len(per)
            for step in range(1, n):
                if n % step == 0 and per == per[:step] * (n // step):
                    raise ValueError(f"period {per} is a repetition of a shorter word")
        elif self.period_start is not None:
            raise ValueError("period_start is only meaningful for periodic expansions")

    @property
    def preperiod(self) -> tuple[OocfDigit, ...]:
        if self.terminator != PERIODIC:
            raise ValueError("not a periodic expansion")
        return self.digits[:self.period_start]

    @property
    def period(self) -> tuple[OocfDigit, ...]:
        if self.terminator != PERIODIC:
            raise ValueError("not a periodic expansion")
        return self.digits[self.period_start:]


def digit_stream(x) -> Iterator[OocfDigit]:
    """Canonical digits of x, one per map application, until the orbit
    reaches 0 or 1 (never, for irrational x)."""
    state = x
    while state != 0 and state != 1:
        d = oocf_branch_of(state)
        yield OocfDigit(*d)
        state = branch_apply(d, state)


def expand(x, max_digits: Optional[int] = None) -> OocfExpansion:
    """Canonical expansion of x in [0, 1].

    Stops with terminator ``finite`` when the orbit reaches 1, ``tail_2m1``
    at 0, ``periodic`` when a quadratic tail value repeats, and
    ``truncated`` once ``max_digits`` digits are emitted.
    """
    _check_unit(x)
    digits: list[OocfDigit] = []
    state = x
    seen: Optional[dict] = {} if isinstance(x, QuadIrr) else None
    while True:
        if state == 1:
            return OocfExpansion(tuple(digits), FINITE)
        if state == 0:
            return OocfExpansion(tuple(digits), TAIL_2M1)
        if seen is not None:
            if state in seen:
                return OocfExpansion(tuple(digits), PERIODIC, period_start=seen[state])
            seen[state] = len(digits)
        if max_digits is not None and len(digits) >= max_digits:
            return OocfExpansion(tuple(digits), TRUNCATED)
        if len(digits) >= _HARD_CAP:
            raise RuntimeError("expansion exceeded the hard digit cap")
        d = oocf_branch_of(state)
        digits.append(OocfDigit(*d))
        state = branch_apply(d, state)


def all_expansions(x) -> list[OocfExpansion]:
    """Both expansions of a nonzero rational x in (0, 1).

    A one-rational has two finite expansions differing only in the final
    digit, (k,1) versus (k+1,-1); an inf-rational has two expansions with
    a (2,-1) tail differing where the orbit reaches k/(k+1), canonical
    digit (k+2,-1) versus (k,1).  The canonical expansion comes first.
    """
    if isinstance(x, QuadIrr):
        raise ValueError("irrational input has a unique expansion; use expand()")
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError("two-expansion enumeration needs rational x in (0, 1)")
    canon = expand(x)
    last = canon.digits[-1]
    if canon.terminator == FINITE:
        twin = OocfDigit(last.a + 1, -1)
    else:
        twin = OocfDigit(last.a - 2, 1)
    other = OocfExpansion(canon.digits[:-1] + (twin,), canon.terminator)
    return [canon, other]


def _digit_product(digits) -> Mat2:
    return reduce(lambda m, d: m @ digit_matrix(*d), digits, IDENTITY)


def _orbit_matches_period(z, period) -> bool:
    state = z
    try:
        for d in period:
            if OocfDigit(*oocf_branch_of(state)) != d:
                return False
            state = branch_apply(d, state)
    except ValueError:
        return False
    return state == z


def _periodic_tail_value(period, disc: Optional[int]):
    """Root in [0, 1] of M z = z for the period's matrix M.

    The root is represented over the literal radicand ``disc`` when the
    discriminant times disc is a perfect square (always the case when the
    expansion came from an element of Q(sqrt(disc))); otherwise the raw
    discriminant serves as the radicand.  No integer factorization is used.
    """
    m = _digit_product(period)
    qa, qb, qc = m.c, m.d - m.a, -m.b
    disc0 = qb * qb - 4 * qa * qc
    if disc0 < 0:
        raise ValueError("periodic part has no real fixed point")
    if is_square(disc0):
        r = math.isqrt(disc0)
        roots = [Fraction(-qb + r, 2 * qa), Fraction(-qb - r, 2 * qa)]
    elif disc is not None and is_square(disc0 * disc):
        r = math.isqrt(disc0 * disc)
        roots = [_make(-qb * disc, r, disc, 2 * qa * disc),
                 _make(-qb * disc, -r, disc, 2 * qa * disc)]
    else:
        roots = [_make(-qb, 1, disc0, 2 * qa), _make(-qb, -1, disc0, 2 * qa)]
    candidates = [z for z in roots if 0 <= z <= 1]
    candidates = sorted(set(candidates), key=float)
    if not candidates:
        raise ValueError("periodic part has no fixed point in [0, 1]")
    if len(candidates) > 1:
        candidates = [z for z in candidates if _orbit_matches_period(z, period)]
        if len(candidates) != 1:
            raise ValueError("ambiguous periodic fixed point")
    return candidates[0]


def evaluate(e: OocfExpansion, disc: Optional[int] = None):
    """Exact value of an expansion.

    finite and truncated prefixes evaluate through the digit-matrix product
    applied to 1 (the principal convergent), a (2,-1) tail applies it to 0
    (the stabilized pseudo-convergent), and a periodic expansion applies the
    preperiod matrix to the fixed point of the period matrix.  ``disc``
    names the quadratic field the periodic value should be expressed over.
    """
    if e.terminator in (FINITE, TRUNCATED):
        m = _digit_product(e.digits)
        return Fraction(m.a + m.b, m.c + m.d)
    if e.terminator == TAIL_2M1:
        m = _digit_product(e.digits)
        return Fraction(m.b, m.d)
    z = _periodic_tail_value(e.period, disc)
    pre = _digit_product(e.preperiod)
    if pre == IDENTITY:
        return z
    return pre.apply(z)


def detect_period(x: QuadIrr, cap: int = 10 ** 5) -> tuple[int, int]:
    """Smallest (preperiod length, period length) of the expansion of a
    quadratic irrational in (0, 1), found by exact tail-value hashing."""
    if not isinstance(x, QuadIrr):
        raise ValueError("period detection needs a quadratic irrational")
    if not 0 < x < 1:
        raise ValueError("input must lie in (0, 1)")
    seen: dict = {}
    state = x
    n = 0
    while True:
        if state in seen:
            start = seen[state]
            return start, n - start
        seen[state] = n
        if n > cap:
            raise RuntimeError(f"no repeated tail value within {cap} steps")
        d = oocf_branch_of(state)
        state = branch_apply(d, state)
        n += 1
