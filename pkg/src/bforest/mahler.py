"""Mahler measures of the spectral polynomials and tree-count asymptotics.

Tree counts grow geometrically; the growth base is the Mahler measure of
the spectral polynomial (family 1) or of the product of the family and base
polynomials (families 2-4).  The measure is computed two independent ways:
from the root moduli and from the defining log-integral over the circle.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .counting import closed_count_formal, spectral_system
from .errors import NonConvergence, NotConnected, UnitCircleAmbiguity
from .graphs import ConnectionSpec, is_connected
from .polynomials import IntPoly, SymmetricLaurentPoly, is_palindromic, roots_numeric

__all__ = [
    "MahlerEstimate",
    "mahler_root_product",
    "mahler_quadrature",
    "growth_base",
    "asymptotic_prediction",
    "convergence_report",
]

_MAX_DIGITS = 256


@dataclass(frozen=True)
class MahlerEstimate:
    value: float
    method: str
    error_bound: float
    label: str


def _as_poly(p) -> IntPoly:
    if isinstance(p, SymmetricLaurentPoly):
        return p.to_poly()
    return p


def mahler_root_product(p, digits: int = 64) -> MahlerEstimate:
    """|lead| times the product of root moduli outside the unit circle.

    Roots flagged as on-circle contribute a factor 1; that is only safe when
    they genuinely lie on the circle, so for non-palindromic polynomials with
    unexplained near-circle roots the precision is doubled (up to 256 digits)
    before giving up with :class:`UnitCircleAmbiguity`.
    """
    poly = _as_poly(p)
    label = repr(p)
    if poly.degree < 1:
        return MahlerEstimate(abs(float(poly.coeffs[0])), "root-product", 0.0, label)

    working = digits
    while True:
        roots = roots_numeric(poly, digits=working)
        flagged = [r for r, _, on in roots if on]
        if flagged and not is_palindromic(poly):
            explained = all(
                (abs(r - 1) < 1e-6 and poly(1) == 0)
                or (abs(r + 1) < 1e-6 and poly(-1) == 0)
                for r in flagged
            )
            if not explained:
                if working * 2 <= _MAX_DIGITS:
                    working *= 2
                    continue
                raise UnitCircleAmbiguity(
                    f"cannot classify roots {flagged} against the unit circle"
                )
        break

    with mpmath.workdps(working):
        value = mpmath.mpf(abs(poly.lead))
        rel_error = mpmath.mpf(0)
        for root, radius, on_circle in roots:
            modulus = abs(mpmath.mpc(root))
            if not on_circle and modulus > 1:
                value *= modulus
                rel_error += mpmath.mpf(radius) / modulus
        return MahlerEstimate(float(value), "root-product", float(value * rel_error), label)


def _abs_on_circle(p, t: np.ndarray) -> np.ndarray:
    if isinstance(p, SymmetricLaurentPoly):
        total = np.full_like(t, float(p.eta[0]))
        for j, c in enumerate(p.eta[1:], start=1):
            total += 2.0 * c * np.cos(2 * np.pi * j * t)
        return np.abs(total)
    z = np.exp(2j * np.pi * t)
    total = np.zeros_like(z)
    for c in reversed(p.coeffs):
        total = total * z + c
    return np.abs(total)


def mahler_quadrature(p, subdivisions: int = 1 << 20) -> MahlerEstimate:
    """exp of the mean of log|P| over the unit circle, by midpoint rule.

    The midpoint grid never samples t=0, which keeps the integrable log
    singularity of degenerate polynomials off the nodes; any other
    accidental zero hit is excluded from the sum (a measure-zero window).
    Successive grid doublings provide the error estimate.
    """
    if subdivisions < 8:
        raise ValueError("need at least 8 subdivisions")
    estimates = []
    n = max(1024, 8)
    while n <= subdivisions:
        t = (np.arange(n) + 0.5) / n
        values = _abs_on_circle(p, t)
        good = values > 1e-300
        if not np.any(good):
            raise NonConvergence("polynomial vanishes on the whole sample grid")
        integral = float(np.sum(np.log(values[good])) / n)
        estimates.append(integral)
        n *= 2
    if len(estimates) < 2:
        raise NonConvergence("subdivision cap too small for an error estimate")
    last, prev = estimates[-1], estimates[-2]
    error = abs(last - prev)
    value = float(np.exp(last))
    return MahlerEstimate(value, "quadrature", value * (error + 4.0 / subdivisions), repr(p))


def growth_base(spec: ConnectionSpec, digits: int = 64) -> MahlerEstimate:
    """Mahler measure governing the growth of the tree counts."""
    sys = spectral_system(spec)
    if sys.family == 1:
        return mahler_root_product(sys.base_poly, digits)
    return mahler_root_product(sys.family_poly * sys.base_poly, digits)


def asymptotic_prediction(spec: ConnectionSpec, n: int, digits: int = 64):
    """Leading-order prediction of the tree count at order n.

    Family 1 grows like (n s / q) M^n; families 2-4 like
    (n s / 4q) M^(n/2) with M the measure of the product polynomial.
    """
    sys = spectral_system(spec)
    with mpmath.workdps(digits):
        poly = sys.base_poly if sys.family == 1 else sys.family_poly * sys.base_poly
        full = _precise_measure(poly, digits)
        if sys.family == 1:
            return mpmath.mpf(n * sys.spokes) / sys.degeneracy * full**n
        if n % 2 != 0:
            raise ValueError("families 2-4 are defined for even n only")
        return mpmath.mpf(n * sys.spokes) / (4 * sys.degeneracy) * full ** (n // 2)


def _precise_measure(p: SymmetricLaurentPoly, digits: int):
    poly = p.to_poly()
    with mpmath.workdps(digits):
        value = mpmath.mpf(abs(poly.lead))
        if poly.degree >= 1:
            for root, _, on_circle in roots_numeric(poly, digits=digits):
                modulus = abs(mpmath.mpc(root))
                if not on_circle and modulus > 1:
                    value *= modulus
        return value


def convergence_report(spec: ConnectionSpec, n_list, digits: int = 64) -> list[dict]:
    """Table of (n, exact tau, asymptotic prediction, ratio, |ratio-1|)."""
    if not is_connected(spec):
        raise NotConnected(f"spec {spec.to_json()} is not connected")
    sys = spectral_system(spec)
    rows = []
    with mpmath.workdps(digits):
        for n in n_list:
            tau = closed_count_formal(sys, n).tau
            prediction = asymptotic_prediction(spec, n, digits)
            ratio = prediction / mpmath.mpf(tau)
            rows.append(
                {
                    "n": n,
                    "tau": tau,
                    "prediction": float(prediction),
                    "ratio": float(ratio),
                    "deviation": float(abs(ratio - 1)),
                }
            )
    return rows
