"""Rational generating functions for tree-count sequences.

The tree counts of a fixed connection pattern, indexed by the group order,
satisfy a linear recurrence; the generating function is therefore rational
with integer coefficients and obeys an x <-> 1/x symmetry after rescaling
by the leading spectral coefficients.  The recurrence is recovered exactly
by Berlekamp-Massey over the rationals and certified on held-out terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import SpectralSystem, closed_count_formal, spectral_system
from .errors import OrderExceeded
from .graphs import ConnectionSpec
from .polynomials import IntPoly

__all__ = [
    "TauSequence",
    "RationalGF",
    "tau_sequence",
    "find_recurrence",
    "genfun",
    "verify_symmetry",
    "symmetry_scale",
    "gf_eval",
    "expand_series",
]


@dataclass(frozen=True)
class TauSequence:
    """Tree counts as a formal sequence from index 1.

    Family 1 stores the count at group order n; families 2-4 store the
    count at group order 2n (vertex count 4n), matching the index at which
    the sequence is defined for every positive n.
    """

    family: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPoly
    denominator: IntPoly
    recurrence: tuple[int, ...]  # e0..eL with sum_i e_i a(n-i) = 0

    @property
    def order(self) -> int:
        return len(self.recurrence) - 1

    def to_dict(self) -> dict:
        return {
            "numerator": list(self.numerator.coeffs),
            "denominator": list(self.denominator.coeffs),
            "order": self.order,
        }


def tau_sequence(spec: ConnectionSpec, count: int) -> TauSequence:
    """First ``count`` terms of the formal tree-count sequence.

    Terms are values of the closed counting formula, which is defined for
    every n >= 1 even when the literal graph at that order would degenerate.
    """
    if count < 1:
        raise ValueError("need at least one term")
    sys = spectral_system(spec)
    return TauSequence(sys.family, tuple(_terms(sys, count)))


def _terms(sys: SpectralSystem, count: int) -> list[int]:
    if sys.family == 1:
        return [closed_count_formal(sys, n).tau for n in range(1, count + 1)]
    return [closed_count_formal(sys, 2 * n).tau for n in range(1, count + 1)]


def find_recurrence(seq, max_order: int = 128) -> tuple[int, ...]:
    """Minimal homogeneous linear recurrence, exactly, via Berlekamp-Massey.

    Returns integer coefficients e0..eL (content-free, e0 > 0) with
    sum_i e_i a(n-i) = 0 for every index the sequence supplies.  Raises
    :class:`OrderExceeded` if the minimal order is larger than
    ``max_order`` or too large to certify from the given terms.
    """
    terms = [Fraction(v) for v in (seq.values if isinstance(seq, TauSequence) else seq)]
    conn = [Fraction(1)]  # connection polynomial C(x)
    prev = [Fraction(1)]
    order = 0
    gap = 1
    prev_discrepancy = Fraction(1)
    for i, term in enumerate(terms):
        discrepancy = term + sum(conn[j] * terms[i - j] for j in range(1, order + 1))
        if discrepancy == 0:
            gap += 1
            continue
        scale = discrepancy / prev_discrepancy
        update = conn[:]
        needed = gap + len(prev)
        if len(update) < needed:
            update.extend([Fraction(0)] * (needed - len(update)))
        for j, c in enumerate(prev):
            update[gap + j] -= scale * c
        if 2 * order <= i:
            prev = conn
            prev_discrepancy = discrepancy
            order = i + 1 - order
            gap = 1
        else:
            gap += 1
        conn = update

    if order > max_order:
        raise OrderExceeded(f"minimal recurrence order {order} exceeds cap {max_order}")
    if 2 * order + 2 > len(terms) + 1:
        raise OrderExceeded(
            f"order {order} cannot be certified from {len(terms)} terms"
        )
    conn = conn[: order + 1]
    for i in range(order, len(terms)):
        check = sum(conn[j] * terms[i - j] for j in range(order + 1))
        assert check == 0, "Berlekamp-Massey output fails on the training terms"

    denom = math.lcm(*(c.denominator for c in conn))
    ints = [int(c * denom) for c in conn]
    content = math.gcd(*ints)
    ints = [c // content for c in ints]
    if ints[0] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def genfun(seq, recurrence) -> RationalGF:
    """Rational generating function sum a(n) x^n from terms and recurrence.

    Denominator is the recurrence polynomial; the numerator is the
    convolution of the initial terms with it, which the recurrence
    truncates to a polynomial.  Integer sequences always normalize to a
    denominator with constant term 1 (Fatou).
    """
    terms = list(seq.values if isinstance(seq, TauSequence) else seq)
    e = list(recurrence)
    order = len(e) - 1
    denominator = IntPoly(e)

    def term(n):  # 1-based series with a(0) = 0
        return terms[n - 1] if 1 <= n <= len(terms) else 0

    numerator = IntPoly(
        [sum(e[i] * term(j - i) for i in range(min(j, order) + 1)) for j in range(order + 1)]
    )
    assert e[0] == 1, "integer sequence must admit a Fatou normalization"
    return RationalGF(numerator, denominator, tuple(e))


def gf_eval(gf: RationalGF, x):
    return Fraction(gf.numerator(Fraction(x)), gf.denominator(Fraction(x)))


def expand_series(gf: RationalGF, count: int) -> list[int]:
    """First ``count`` series coefficients a(1).. of the rational function."""
    num = gf.numerator.coeffs
    den = gf.denominator.coeffs
    assert den and den[0] == 1
    coeffs: list[int] = []  # coeffs[j-1] = a(j); a(0) = 0 by construction
    for j in range(1, count + 1):
        value = num[j] if j < len(num) else 0
        value -= sum(den[i] * coeffs[j - i - 1] for i in range(1, min(j - 1, len(den) - 1) + 1))
        coeffs.append(value)
    return coeffs


def symmetry_scale(spec: ConnectionSpec) -> int:
    """|product of leading spectral coefficients| rescaling the symmetry."""
    sys = spectral_system(spec)
    if sys.family == 1:
        return abs(sys.base_lead)
    return abs(sys.base_lead * sys.family_lead)


def _scaled(p: IntPoly, scale: int) -> IntPoly:
    # p(x/scale) with denominators cleared by scale^deg; the constant factors
    # this introduces cancel in the cross-multiplied symmetry identity
    d = p.degree
    return IntPoly(c * scale ** (d - i) for i, c in enumerate(p.coeffs))


def verify_symmetry(gf: RationalGF, scale: int = 1) -> bool:
    """Exact check of F(x/scale) = F(1/(scale*x)) by cross-multiplication."""
    num = _scaled(gf.numerator, scale)
    den = _scaled(gf.denominator, scale)
    dn, dd = num.degree, den.degree
    # clear negative powers: the identity N(y) D(1/y) = N(1/y) D(y)
    # becomes N(y) rev(D)(y) y^dn = rev(N)(y) D(y) y^dd
    rev_num = IntPoly(reversed(num.coeffs))
    rev_den = IntPoly(reversed(den.coeffs))
    left = (num * rev_den).shift(dn)
    right = (rev_num * den).shift(dd)
    return left == right
