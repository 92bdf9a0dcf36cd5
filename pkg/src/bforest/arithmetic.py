"""Perfect-square structure of the tree counts.

Every bicirculant tree count factors as (cofactor) * (integer witness)^2,
where the cofactor depends only on parity data of the connection sets.
``verify_square_structure`` recovers the witness and checks the claimed
branch exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import TreeCount
from .errors import NonDivisible, NonPositiveStructure, NotAPerfectSquare
from .graphs import ConnectionSpec
from .polynomials import squarefree_part

__all__ = ["ArithmeticProfile", "SquareWitness", "arithmetic_profile", "verify_square_structure"]


@dataclass(frozen=True)
class ArithmeticProfile:
    odd_alphas: int
    even_alphas: int
    odd_betas: int
    even_betas: int
    odd_gammas: int
    even_gammas: int
    structure_odd: int | None  # square-free constant for the odd branch
    structure_even: int | None  # None when the evaluation at z=-1 vanishes


@dataclass(frozen=True)
class SquareWitness:
    branch: str  # "odd" or "even"
    cofactor: Fraction  # tau == cofactor * witness^2 exactly
    witness: int


def _structure_value(raw: int) -> int | None:
    # a vanishing evaluation at z=-1 means the graph is disconnected at the
    # orders that would use this branch, so no constant exists for it
    if raw <= 0:
        return None
    return squarefree_part(raw)


def arithmetic_profile(spec: ConnectionSpec) -> ArithmeticProfile:
    """Parity counts plus the two square-free structure constants.

    The raw values are evaluations of the spectral polynomials at z=-1:
    the even-branch constant comes from the base polynomial, the odd-branch
    constant from the family polynomial (they coincide for family 1).
    """
    k1 = sum(1 for a in spec.alphas if a % 2 == 1)
    m1 = sum(1 for b in spec.betas if b % 2 == 1)
    h1 = sum(1 for g in spec.gammas if g % 2 == 1)
    k2, m2, h2 = spec.r - k1, spec.t - m1, spec.s - h1
    s = spec.s
    spoke_term = (h2 - h1) ** 2
    right_at_minus1 = 4 * k1 + s
    left_at_minus1 = 4 * m1 + s

    base_raw = right_at_minus1 * left_at_minus1 - spoke_term
    family = spec.family
    if family == 1:
        family_raw = base_raw
    elif family == 2:
        family_raw = (right_at_minus1 + 2) * left_at_minus1 - spoke_term
    elif family == 3:
        family_raw = right_at_minus1 * (left_at_minus1 + 2) - spoke_term
    else:
        family_raw = (right_at_minus1 + 2) * (left_at_minus1 + 2) - spoke_term

    return ArithmeticProfile(
        odd_alphas=k1,
        even_alphas=k2,
        odd_betas=m1,
        even_betas=m2,
        odd_gammas=h1,
        even_gammas=h2,
        structure_odd=_structure_value(family_raw),
        structure_even=_structure_value(base_raw),
    )


def verify_square_structure(spec: ConnectionSpec, tau: TreeCount | int) -> SquareWitness:
    """Factor tau as cofactor * witness^2 and return the integer witness.

    Family 1 branches on the parity of n with cofactors n*s and
    n*s*(even structure); families 2-4 branch on the parity of n/2 with
    cofactors n*s*(structure)/4.  Raises :class:`NotAPerfectSquare` or
    :class:`NonDivisible` if the claimed decomposition fails.
    """
    value = tau.tau if isinstance(tau, TreeCount) else int(tau)
    profile = arithmetic_profile(spec)
    n, s = spec.n, spec.s
    def needed(constant: int | None) -> int:
        if constant is None:
            raise NonPositiveStructure(
                "structure constant undefined: the spectral value at z=-1 "
                "vanishes, so the graph is disconnected on this branch"
            )
        return constant

    if spec.family == 1:
        if n % 2 == 1:
            branch, cofactor = "odd", Fraction(n * s)
        else:
            branch, cofactor = "even", Fraction(n * s * needed(profile.structure_even))
    else:
        half = n // 2
        if half % 2 == 1:
            branch, cofactor = "odd", Fraction(n * s * needed(profile.structure_odd), 4)
        else:
            branch, cofactor = "even", Fraction(n * s * needed(profile.structure_even), 4)

    ratio = Fraction(value) / cofactor
    if ratio.denominator != 1:
        raise NonDivisible(f"cofactor {cofactor} does not divide tau={value}")
    square = int(ratio)
    witness = math.isqrt(square)
    if witness * witness != square:
        raise NotAPerfectSquare(
            f"tau/cofactor = {square} is not a perfect square (tau={value})"
        )

    structure = profile.structure_odd if branch == "odd" else profile.structure_even
    if spec.family != 1 and branch == "odd" and (n // 2) % 2 == 1 and s % 2 == 1 and structure % 2 == 1:
        assert witness % 2 == 0, "odd n/2, s and structure force an even witness"
    return SquareWitness(branch, cofactor, witness)
