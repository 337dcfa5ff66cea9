"""Interval maps on [0,1]: Gauss, Farey, Romik, even-integer CF, odd-odd CF.

The odd-odd map T acts on the partition B(k+1,-1) = [(k-1)/k, (2k-1)/(2k+1)]
and B(k,1) = [(2k-1)/(2k+1), k/(k+1)] by

    T(x) = (k*x - (k-1)) / (k - (k+1)*x)   on B(k+1,-1),
    T(x) = (k - (k+1)*x) / (k*x - (k-1))   on B(k,1),       T(1) = 1.

Branch intervals share endpoints; digit extraction is made single-valued by
the half-open convention k = floor(1/(1-x)), which sends the boundary point
(2k-1)/(2k+1) to the (k,1) branch and k/(k+1) to the (k+2,-1) branch.  The
even-integer map closes branch intervals on the right instead, mirroring
this convention under the conjugacy x -> (1-x)/(1+x).

Both the odd-odd and even-integer maps arise as jump transformations of the
Romik map over the hitting sets E2 = [0,1/2] u {1} and E1 = {0} u [1/3,1].
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Mat2

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

_JUMP_CAP = 10 ** 6


def _check_unit(x) -> None:
    if x < 0 or x > 1:
        raise ValueError(f"input {x!r} outside [0, 1]")


def check_digit(a: int, eps: int) -> None:
    """Digit legality: a >= 1, eps = +-1, and (1,-1) forbidden."""
    if not (isinstance(a, int) and a >= 1 and eps in (1, -1)):
        raise ValueError(f"illegal digit ({a}, {eps})")
    if a == 1 and eps == -1:
        raise ValueError("illegal digit (1, -1)")


# ---------------------------------------------------------------------------
# The classical maps

def gauss(x):
    """G(x) = frac(1/x), G(0) = 0."""
    _check_unit(x)
    if x == 0:
        return ZERO
    r = 1 / x
    return r - math.floor(r)


def farey(x):
    """F(x) = x/(1-x) on [0,1/2], (1-x)/x on [1/2,1]."""
    _check_unit(x)
    if x <= HALF:
        return x / (1 - x)
    return (1 - x) / x


def romik(x):
    """Three-branch Romik map; branch values agree at shared endpoints."""
    _check_unit(x)
    if x <= THIRD:
        return x / (1 - 2 * x)
    if x <= HALF:
        return 1 / x - 2
    return 2 - 1 / x


# ---------------------------------------------------------------------------
# Odd-odd continued fraction map

def oocf_branch_of(x) -> tuple[int, int]:
    """Digit (a, eps) of the canonical branch containing x in [0, 1)."""
    _check_unit(x)
    if x == 1:
        raise ValueError("x = 1 carries no digit (expansion terminator)")
    k = math.floor(1 / (1 - x))
    if x < Fraction(2 * k - 1, 2 * k + 1):
        return (k + 1, -1)
    return (k, 1)


def branch_apply(digit: tuple[int, int], x):
    """Value of the odd-odd branch labelled by ``digit`` at x."""
    a, eps = digit
    check_digit(a, eps)
    if eps == -1:
        k = a - 1
        return (k * x - (k - 1)) / (k - (k + 1) * x)
    k = a
    return (k - (k + 1) * x) / (k * x - (k - 1))


def oocf_map(x):
    """The odd-odd continued fraction map; fixes 0 and 1."""
    _check_unit(x)
    if x == 1:
        return ONE
    return branch_apply(oocf_branch_of(x), x)


def branch_inverse(digit: tuple[int, int], t):
    """Inverse branch f_(a,eps)(t) = 1 - 1/(a + eps/(1+t)), exact."""
    a, eps = digit
    check_digit(a, eps)
    _check_unit(t)
    return 1 - 1 / (a + eps / (1 + t))


def digit_matrix(a: int, eps: int) -> Mat2:
    """Matrix [[a-1, a+eps-1], [a, a+eps]] whose Moebius action is the
    inverse branch f_(a,eps)."""
    check_digit(a, eps)
    return Mat2(a - 1, a + eps - 1, a, a + eps)


def branch_interval(a: int, eps: int) -> tuple[Fraction, Fraction]:
    """Closed endpoints of the branch interval B(a, eps)."""
    check_digit(a, eps)
    if eps == -1:
        k = a - 1
        return Fraction(k - 1, k), Fraction(2 * k - 1, 2 * k + 1)
    k = a
    return Fraction(2 * k - 1, 2 * k + 1), Fraction(k, k + 1)


# ---------------------------------------------------------------------------
# Even-integer continued fraction map

def eicf_branch_of(x) -> tuple[int, int]:
    """Digit (b, eta), b even, of the branch containing x in (0, 1]."""
    _check_unit(x)
    if x == 0:
        raise ValueError("x = 0 carries no even-integer digit (terminator)")
    j = math.floor(1 / x)
    if j % 2 == 0:
        return (j, 1)
    return (j + 1, -1)


def eicf_map(x):
    """T(x) = |1/x - 2k| on the branch around 1/(2k); fixes 0 and 1."""
    _check_unit(x)
    if x == 0:
        return ZERO
    b, eta = eicf_branch_of(x)
    if eta == 1:
        return 1 / x - b
    return b - 1 / x


# ---------------------------------------------------------------------------
# Jump transformations

def in_e1(x) -> bool:
    """Hitting set E1 = {0} u [1/3, 1]."""
    return x == 0 or x >= THIRD


def in_e2(x) -> bool:
    """Hitting set E2 = [0, 1/2] u {1}."""
    return x <= HALF or x == 1


def jump_transform(base_map, hitting_set, x, cap: int = _JUMP_CAP):
    """U^(n+1)(x) where n is the first hitting time of x to the set.

    ``hitting_set`` is an exact membership predicate (see in_e1/in_e2).
    Orbits of rational and quadratic inputs reach the set in finitely many
    steps; the cap only guards against misuse.
    """
    _check_unit(x)
    y = x
    steps = 0
    while not hitting_set(y):
        y = base_map(y)
        steps += 1
        if steps > cap:
            raise RuntimeError(f"jump transform exceeded {cap} iterations")
    return base_map(y)


# ---------------------------------------------------------------------------
# Invariant measure check for the odd-odd map

@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    closed_lo: bool = True
    closed_hi: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")


@dataclass(frozen=True)
class MeasureReport:
    lhs: float
    rhs: float
    abs_diff: float
    passed: bool
    branch_cutoff: int
    tol: float


def measure_check(interval: Interval, branch_cutoff: int = 2000,
                  tol: float = 5e-3) -> MeasureReport:
    """Verify dx/x invariance of the odd-odd map on ``interval``.

    Sums mu(f_branch(I)) over all branches with index k <= branch_cutoff
    against mu(I) = ln(hi/lo).  Branch images are exact rational intervals;
    the logarithms are the only floating-point step.  Branches beyond the
    cutoff have images inside [K/(K+1), 1), so the neglected mass is
    O(1/K) and the default tolerance absorbs it.
    """
    lo, hi = interval.lo, interval.hi
    if lo <= 0:
        raise ValueError("interval must avoid 0 (the density 1/x is not integrable there)")
    if hi > 1:
        raise ValueError("interval endpoints must lie in (0, 1]")
    rhs = math.log(hi / lo)
    lhs = 0.0
    for k in range(1, branch_cutoff + 1):
        for digit in ((k + 1, -1), (k, 1)):
            u = branch_inverse(digit, lo)
            v = branch_inverse(digit, hi)
            lhs += abs(math.log(float(v / u)))
    diff = abs(lhs - rhs)
    return MeasureReport(lhs, rhs, diff, diff <= tol, branch_cutoff, tol)
