"""The three convergent families of an odd-odd digit sequence.

Truncating the continued fraction at a_n, at a_n + eps_n, or at the full
digit gives the sub-convergent p'_n/q'_n, the pseudo-convergent p''_n/q''_n,
and the principal convergent p_n/q_n.  Scalar recursions (seeds p'_0 = 1,
q'_0 = 0, p_0 = q_0 = 1):

    p'_n  = a_n p_(n-1) - p'_(n-1)        q'_n  likewise
    p''_n = p'_n + eps_n p_(n-1)          q''_n likewise
    p_n   = 2 p'_n + eps_n p_(n-1)        q_n   likewise

The matrix route computes the same triple as the Moebius images of 1,
infinity and 0 under the product of digit matrices and serves as an
independent cross-check.  Determinant identities are asserted in absolute
value only (|p'_n q''_n - p''_n q'_n| = 1, |p_(n-1) q_n - p_n q_(n-1)| = 2);
the observed signs carry an extra (-1)^n relative to the bare product
eps_1 ... eps_n, so signed forms are reported, not assumed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .core import IDENTITY
from .maps import check_digit, digit_matrix


@dataclass(frozen=True)
class ConvergentTriple:
    n: int
    p: int
    q: int
    p_sub: int
    q_sub: int
    p_pse: int
    q_pse: int
    eps_prod: int

    @property
    def principal(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def sub(self) -> Optional[Fraction]:
        """p'_n/q'_n; None for the n = 0 seed, whose sub-convergent is 1/0."""
        if self.q_sub == 0:
            return None
        return Fraction(self.p_sub, self.q_sub)

    @property
    def pseudo(self) -> Fraction:
        return Fraction(self.p_pse, self.q_pse)


SEED = ConvergentTriple(0, 1, 1, 1, 0, 0, 1, 1)


def convergent_stream(digits: Iterable[tuple[int, int]]) -> Iterator[ConvergentTriple]:
    """Lazily yield the seed triple and one triple per digit."""
    yield SEED
    p_prev, q_prev = 1, 1
    ps_prev, qs_prev = 1, 0
    eps_prod = 1
    n = 0
    for a, e in digits:
        check_digit(a, e)
        n += 1
        ps = a * p_prev - ps_prev
        qs = a * q_prev - qs_prev
        ppse = ps + e * p_prev
        qpse = qs + e * q_prev
        p = 2 * ps + e * p_prev
        q = 2 * qs + e * q_prev
        eps_prod *= e
        yield ConvergentTriple(n, p, q, ps, qs, ppse, qpse, eps_prod)
        p_prev, q_prev, ps_prev, qs_prev = p, q, ps, qs


def convergent_table(digits) -> list[ConvergentTriple]:
    """Triples for n = 0..len(digits) by the scalar recursions."""
    return list(convergent_stream(digits))


def convergent_table_matrix(digits) -> list[ConvergentTriple]:
    """Same table via digit-matrix products: with M_n the product of the
    first n digit matrices, the principal convergent is M_n(1), the sub
    M_n(inf) and the pseudo M_n(0)."""
    rows = []
    m = IDENTITY
    eps_prod = 1
    rows.append(ConvergentTriple(0, m.a + m.b, m.c + m.d, m.a, m.c, m.b, m.d, 1))
    for n, (a, e) in enumerate(digits, 1):
        m = m @ digit_matrix(a, e)
        eps_prod *= e
        rows.append(ConvergentTriple(n, m.a + m.b, m.c + m.d, m.a, m.c, m.b, m.d, eps_prod))
    return rows


@dataclass(frozen=True)
class BetweennessFlags:
    x_between_principal_pseudo: bool
    principal_between_sub_pseudo: bool
    nested_in_previous: Optional[bool]

    @property
    def all_hold(self) -> bool:
        return (self.x_between_principal_pseudo
                and self.principal_between_sub_pseudo
                and self.nested_in_previous is not False)


def _between_incl(v, e1, e2) -> bool:
    lo, hi = (e1, e2) if e1 <= e2 else (e2, e1)
    return lo <= v <= hi


def betweenness_report(x, curr: ConvergentTriple,
                       prev: Optional[ConvergentTriple] = None) -> BetweennessFlags:
    """Ordering facts for a triple computed from a prefix of x's expansion:
    x sits between principal and pseudo (equality allowed once a rational
    expansion is exhausted), the principal sits between sub and pseudo, and,
    given the previous triple, all three convergents lie in the half-open
    interval from the previous principal (excluded) to the previous pseudo
    (included)."""
    x_between = _between_incl(x, curr.principal, curr.pseudo)
    if curr.q_sub == 0:
        principal_between = curr.pseudo <= curr.principal
    else:
        principal_between = _between_incl(curr.principal, curr.sub, curr.pseudo)
    nested = None
    if prev is not None:
        if prev.n + 1 != curr.n:
            raise ValueError("previous triple does not precede the current one")
        open_end, closed_end = prev.principal, prev.pseudo
        if open_end < closed_end:
            inside = lambda c: open_end < c <= closed_end
        else:
            inside = lambda c: closed_end <= c < open_end
        nested = (inside(curr.principal) and inside(curr.sub)
                  and inside(curr.pseudo))
    return BetweennessFlags(x_between, principal_between, nested)


@dataclass(frozen=True)
class GapReport:
    gap: object
    bound: Fraction
    certified: bool


def convergence_gap(x, t: ConvergentTriple) -> GapReport:
    """Exact |x - p_n/q_n| together with the certificate that it is below
    2/q_n."""
    gap = abs(x - t.principal)
    bound = Fraction(2, t.q)
    return GapReport(gap, bound, gap < bound)
