"""Exact integer polynomial arithmetic, Chebyshev machinery and resultants.

Two carriers: dense integer polynomials (``IntPoly``) and palindromic
Laurent polynomials stored by their cosine-side coefficients
(``SymmetricLaurentPoly``).  Resultants use a primitive polynomial remainder
sequence over exact integers, with the Sylvester determinant kept as an
independent cross-check (see ``resultant_sylvester``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import InexactDivision, UnitCircleAmbiguity, ZeroPolynomial
from .matrixtree import det_fraction_free

__all__ = [
    "IntPoly",
    "SymmetricLaurentPoly",
    "chebyshev_T",
    "chebyshev_transform",
    "resultant",
    "resultant_sylvester",
    "abs_resultant_with_power",
    "exact_divide",
    "cyclotomic_quotient",
    "squarefree_part",
    "roots_numeric",
]


def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial c0 + c1*x + ... + cd*x^d, canonical form."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


@dataclass(frozen=True)
class SymmetricLaurentPoly:
    """Palindromic Laurent polynomial eta0 + sum_j eta_j (z^j + z^-j)."""

    eta: tuple[int, ...]

    def __init__(self, eta=(0,)):
        coeffs = [int(c) for c in eta] or [0]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "eta", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.eta) - 1

    @property
    def is_zero(self) -> bool:
        return self.eta == (0,)

    @property
    def lead(self) -> int:
        return self.eta[-1]

    def __call__(self, z):
        """Evaluate at a nonzero scalar (Fraction, float or complex)."""
        total = self.eta[0] + 0 * z
        zi = z
        for c in self.eta[1:]:
            total += c * (zi + 1 / zi)
            zi *= z
        return total

    def on_circle(self, theta: float) -> float:
        """Real value at z = exp(i*theta)."""
        total = float(self.eta[0])
        for j, c in enumerate(self.eta[1:], start=1):
            total += 2.0 * c * math.cos(j * theta)
        return total

    def __add__(self, other):
        if isinstance(other, int):
            return SymmetricLaurentPoly((self.eta[0] + other,) + self.eta[1:])
        a, b = self.eta, other.eta
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return SymmetricLaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SymmetricLaurentPoly(tuple(-c for c in self.eta))

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymmetricLaurentPoly(tuple(c * other for c in self.eta))
        # convolve the full coefficient lines indexed -k..k
        ka, kb = self.degree, other.degree
        a = self._full_line()
        b = other._full_line()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        center = ka + kb
        return SymmetricLaurentPoly(tuple(out[center:]))

    __rmul__ = __mul__

    def _full_line(self) -> list[int]:
        k = self.degree
        line = [0] * (2 * k + 1)
        line[k] = self.eta[0]
        for j, c in enumerate(self.eta[1:], start=1):
            line[k + j] = c
            line[k - j] = c
        return line

    def to_poly(self) -> IntPoly:
        """z^k * P(z) as an ordinary polynomial (same nonzero roots)."""
        return IntPoly(self._full_line())

    def value_at_one(self) -> int:
        return self.eta[0] + 2 * sum(self.eta[1:])

    def derivative_at_one(self) -> int:
        # d/dz (z^j + z^-j) at z=1 is j - j = 0 for every term
        return 0

    def second_derivative_at_one(self) -> int:
        # d2/dz2 (z^j + z^-j) at 1 is j(j-1) + j(j+1) = 2 j^2
        return sum(2 * j * j * c for j, c in enumerate(self.eta) if j > 0)

    def __repr__(self) -> str:
        return f"SymmetricLaurentPoly({list(self.eta)})"


def chebyshev_T(n: int, x):
    """Exact Chebyshev value T_n(x) for rational x, in O(log n) steps.

    Uses the doubling identities T_{2m} = 2 T_m^2 - 1 and
    T_{2m+1} = 2 T_{m+1} T_m - x.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    x = Fraction(x)
    # maintain (T_m, T_{m+1}) while scanning bits of n from the top
    tm, tm1 = Fraction(1), x  # m = 0
    for bit in bin(n)[2:]:
        if bit == "0":
            tm, tm1 = 2 * tm * tm - 1, 2 * tm1 * tm - x
        else:
            tm, tm1 = 2 * tm1 * tm - x, 2 * tm1 * tm1 - 1
    return tm


def _chebyshev_basis(k: int) -> list[IntPoly]:
    """Integer coefficient lists of T_0..T_k."""
    basis = [IntPoly([1])]
    if k >= 1:
        basis.append(IntPoly([0, 1]))
    for _ in range(2, k + 1):
        basis.append(IntPoly([0, 2]) * basis[-1] - basis[-2])
    return basis


def chebyshev_transform(p: SymmetricLaurentPoly) -> IntPoly:
    """K(w) with P(z) = K((z + 1/z)/2); deg K = deg P, lead 2^k * eta_k."""
    basis = _chebyshev_basis(p.degree)
    out = IntPoly([p.eta[0]])
    for j, c in enumerate(p.eta[1:], start=1):
        out = out + 2 * c * basis[j]
    return out


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b: rem(lc(b)^(da-db+1) * a, b) over Z."""
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    steps = len(a) - len(b) + 1
    while True:
        while r and r[-1] == 0:
            r.pop()
        if not r or len(r) - 1 < db:
            break
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lead * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= top * bc
        steps -= 1
    if steps > 0 and r:
        mult = lead**steps
        r = [mult * c for c in r]
    return r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact signed resultant via a primitive pseudo-remainder sequence."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial is undefined")
    a = list(f.coeffs)
    b = list(g.coeffs)
    sign = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            sign = -sign
    acc = Fraction(sign)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            acc *= Fraction(b[0]) ** da
            break
        r = _prem(a, b)
        if not r:
            return 0
        dr = len(r) - 1
        lead_b = b[-1]
        # Res(a,b) = (-1)^(da*db) lc(b)^(da - dr - (da-db+1)*db) Res(b, r)
        if da % 2 == 1 and db % 2 == 1:
            acc = -acc
        acc *= Fraction(lead_b) ** (da - dr - (da - db + 1) * db)
        cont = math.gcd(*r)
        if cont > 1:
            r = [c // cont for c in r]
            acc *= Fraction(cont) ** db
        a, b = b, r
    assert acc.denominator == 1, "resultant accumulator must be integral"
    return int(acc)


def sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    n, m = f.degree, g.degree
    size = n + m
    rows = []
    fdesc = list(reversed(f.coeffs))
    gdesc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([0] * i + fdesc + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gdesc + [0] * (size - m - 1 - i))
    return rows


def resultant_sylvester(f: IntPoly, g: IntPoly) -> int:
    """Sylvester-determinant resultant; independent oracle for small degrees."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial is undefined")
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    return det_fraction_free(sylvester_matrix(f, g))


def _frac_poly_mod(a: list[Fraction], f: IntPoly) -> list[Fraction]:
    """Remainder of a (ascending Fractions) modulo f, over Q."""
    lead = Fraction(f.lead)
    df = f.degree
    r = list(a)
    while len(r) - 1 >= df and r:
        if r[-1] == 0:
            r.pop()
            continue
        factor = r[-1] / lead
        shift = len(r) - 1 - df
        for i, c in enumerate(f.coeffs):
            r[shift + i] -= factor * c
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _pow_z_mod(f: IntPoly, m: int) -> list[Fraction]:
    """z^m reduced modulo f, by binary exponentiation over Q."""
    result = [Fraction(1)]
    base = _frac_poly_mod([Fraction(0), Fraction(1)], f)
    e = m
    while e:
        if e & 1:
            prod = [Fraction(0)] * (len(result) + len(base) - 1)
            for i, x in enumerate(result):
                for j, y in enumerate(base):
                    prod[i + j] += x * y
            result = _frac_poly_mod(prod, f)
            if not result:
                return []
        e >>= 1
        if e:
            prod = [Fraction(0)] * (2 * len(base) - 1)
            for i, x in enumerate(base):
                for j, y in enumerate(base):
                    prod[i + j] += x * y
            base = _frac_poly_mod(prod, f)
    return result


def abs_resultant_with_power(f: IntPoly, m: int, c: int) -> Fraction:
    """|Res(f, z^m + c)| for c in {+1, -1}, cheap for huge m.

    z^m is reduced modulo f by square-and-multiply over exact rationals,
    then a low-degree integer resultant finishes the job, with the
    leading-coefficient power correction |lc f|^(m - deg r).
    """
    if f.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial is undefined")
    if m == 0:
        if 1 + c == 0:
            raise ZeroPolynomial("z^0 - 1 is the zero polynomial")
        return Fraction(abs(1 + c)) ** f.degree
    if f.degree == 0:
        return Fraction(abs(f.coeffs[0])) ** m

    reduced = _pow_z_mod(f, m)
    reduced = reduced + [Fraction(0)] * (1 - len(reduced))
    reduced[0] += c
    while reduced and reduced[-1] == 0:
        reduced.pop()
    if not reduced:
        return Fraction(0)
    denom = math.lcm(*(q.denominator for q in reduced))
    cleared = IntPoly([q * denom for q in reduced])
    res = resultant(f, cleared)
    lead = abs(f.lead)
    return (
        Fraction(abs(res))
        * Fraction(lead) ** (m - cleared.degree)
        / Fraction(denom) ** f.degree
    )


def exact_divide(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient f/g when g divides f exactly over the integers."""
    if g.is_zero:
        raise ZeroPolynomial("division by the zero polynomial")
    if f.is_zero:
        return IntPoly()
    if f.degree < g.degree:
        raise InexactDivision("divisor degree exceeds dividend degree")
    r = [Fraction(c) for c in f.coeffs]
    lead = Fraction(g.lead)
    dq = f.degree - g.degree
    quot = [Fraction(0)] * (dq + 1)
    for pos in range(dq, -1, -1):
        coef = r[pos + g.degree] / lead
        quot[pos] = coef
        if coef:
            for i, c in enumerate(g.coeffs):
                r[pos + i] -= coef * c
    if any(c != 0 for c in r) or any(q.denominator != 1 for q in quot):
        raise InexactDivision(f"{g!r} does not divide {f!r} over the integers")
    return IntPoly(int(q) for q in quot)


def cyclotomic_quotient(n: int) -> IntPoly:
    """(z^n - 1)/(z - 1) = 1 + z + ... + z^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return IntPoly([1] * n)


def squarefree_part(u: int) -> int:
    """The unique square-free v with u = v * r^2, by trial division."""
    if u < 1:
        raise ValueError("square-free part is defined for positive integers")
    v = 1
    d = 2
    while d * d <= u:
        if u % d == 0:
            count = 0
            while u % d == 0:
                u //= d
                count += 1
            if count % 2 == 1:
                v *= d
        d += 1 if d == 2 else 2
    return v * u


def roots_numeric(f: IntPoly, digits: int = 64, max_iters: int = 400):
    """All complex roots by Aberth-Ehrlich simultaneous iteration.

    Returns a list of ``(root, radius, on_circle)`` triples where ``radius``
    is an a-posteriori error bound and ``on_circle`` marks roots that cannot
    be classified against the unit circle at this precision.
    """
    if f.is_zero or f.degree < 1:
        raise ZeroPolynomial("root finding needs degree >= 1")
    deg = f.degree
    with mpmath.workdps(digits + 10):
        coeffs = [mpmath.mpf(c) for c in f.coeffs]
        lead = coeffs[-1]

        def poly(x):
            acc = mpmath.mpc(0)
            for c in reversed(coeffs):
                acc = acc * x + c
            return acc

        def dpoly(x):
            acc = mpmath.mpc(0)
            for i in range(deg, 0, -1):
                acc = acc * x + i * coeffs[i]
            return acc

        bound = 1 + max(abs(c) / abs(lead) for c in coeffs[:-1])
        approx = [
            bound * mpmath.expjpi(mpmath.mpf(2 * i + 1) / deg + mpmath.mpf("0.41"))
            for i in range(deg)
        ]
        tol = mpmath.mpf(10) ** (-digits)
        for _ in range(max_iters):
            moved = mpmath.mpf(0)
            new = list(approx)
            for i, x in enumerate(approx):
                p = poly(x)
                dp = dpoly(x)
                if dp == 0:
                    new[i] = x + tol
                    moved = max(moved, tol)
                    continue
                newton = p / dp
                repulse = mpmath.fsum(
                    (1 / (x - y) for j, y in enumerate(approx) if j != i)
                )
                denom = 1 - newton * repulse
                step = newton if denom == 0 else newton / denom
                new[i] = x - step
                moved = max(moved, abs(step))
            approx = new
            if moved < tol:
                break

        results = []
        circle_tol = mpmath.mpf(10) ** (-(digits // 2))
        for x in approx:
            dp = dpoly(x)
            if dp != 0:
                radius = deg * abs(poly(x) / dp)
            else:
                radius = deg * (abs(poly(x)) / abs(lead)) ** (mpmath.mpf(1) / deg)
            distance = abs(abs(x) - 1)
            on_circle = distance <= max(radius, circle_tol)
            # keep the full-precision mpc; callers may round to complex
            results.append((mpmath.mpc(x), float(radius), bool(on_circle)))
        return results


def is_palindromic(f: IntPoly) -> bool:
    """Self-reciprocal up to sign: coefficients read the same both ways."""
    c = f.coeffs
    rev = tuple(reversed(c))
    return c == rev or c == tuple(-x for x in rev)
