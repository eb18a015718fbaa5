"""Classical Jacobi polynomials with exact coefficients and certified zeros.

The radial parts of the polynomial family this package constructs are
Jacobi polynomials in disguise (in the variable 2t - 1 with the first
parameter 0), so the identification, zero radii, and interlacing
statements all reduce to classical facts checked here.  Coefficients
are exact rationals; zeros are located by degree-by-degree interlacing
brackets refined with bisection, then certified by exact sign changes.

Verified contract (runtime checks live in :mod:`cliffleg.verify`):

- the exact coefficients satisfy the Jacobi differential equation;
- the radial parts match shifted Jacobi polynomials after clearing scales;
- zero radii of consecutive degrees interlace cyclically;
- every reported zero is certified by an exact sign change beside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .radial import RationalPoly

BRACKET_WIDTH = 1e-14


@dataclass(frozen=True)
class JacobiPoly:
    """Jacobi polynomial of one degree and parameter pair, monomial basis."""

    n: int
    alpha: Fraction
    beta: Fraction
    poly: RationalPoly

    def __call__(self, x):
        return self.poly(x)


def _check_params(alpha: Fraction, beta: Fraction) -> None:
    if alpha <= -1 or beta <= -1:
        raise ValueError("Jacobi parameters must exceed -1")


def _jacobi_coeff_sequence(n: int, alpha: Fraction, beta: Fraction) -> list[RationalPoly]:
    """Exact monomial coefficients for degrees 0..n by the three-term recurrence."""
    polys = [RationalPoly.one()]
    if n >= 1:
        polys.append(
            RationalPoly((Fraction(alpha - beta, 2), Fraction(alpha + beta + 2, 2)))
        )
    x_poly = RationalPoly.monomial(1)
    for j in range(2, n + 1):
        s = alpha + beta
        lead = 2 * j * (j + s) * (2 * j + s - 2)
        mid = (2 * j + s - 1) * (
            (2 * j + s) * (2 * j + s - 2) * x_poly
            + RationalPoly(((alpha - beta) * (alpha + beta),))
        )
        tail = 2 * (j + alpha - 1) * (j + beta - 1) * (2 * j + s)
        nxt = (mid * polys[j - 1] - tail * polys[j - 2]) * Fraction(1, lead)
        polys.append(nxt)
    return polys


def jacobi_build(n: int, alpha, beta) -> JacobiPoly:
    """Build one Jacobi polynomial with exact rational coefficients."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check_params(alpha, beta)
    return JacobiPoly(n, alpha, beta, _jacobi_coeff_sequence(n, alpha, beta)[n])


def jacobi_ode_residual(p: JacobiPoly) -> RationalPoly:
    """(1-x^2) y'' + [b-a-(a+b+2)x] y' + n(n+a+b+1) y; contract: zero."""
    y = p.poly
    one_minus_x2 = RationalPoly((1, 0, -1))
    drift = RationalPoly((p.beta - p.alpha, -(p.alpha + p.beta + 2)))
    eig = p.n * (p.n + p.alpha + p.beta + 1)
    return one_minus_x2 * y.derivative().derivative() + drift * y.derivative() + eig * y


def _exact_sign(poly: RationalPoly, x: float) -> int:
    v = poly(Fraction(x))
    return (v > 0) - (v < 0)


def _float_bisect(fpoly, lo: float, hi: float, width: float) -> tuple[float, float]:
    """Plain floating-point bisection, trusted only down to the given width."""
    flo = fpoly(lo)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = fpoly(mid)
        if (flo < 0) != (fmid < 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi

# float polynomial values stay sign-reliable well above this bracket width
FLOAT_TRUST_WIDTH = 1e-10


def _bisect_root(
    poly: RationalPoly, fpoly, lo: float, hi: float
) -> tuple[float, float, float]:
    """Shrink a sign-change bracket to BRACKET_WIDTH; returns (root, lo, hi).

    Floating-point bisection handles the bulk of the shrinking; the last
    few halvings use exact rational sign evaluation, because near the
    root the float values are pure rounding noise.  The returned bracket
    has exactly confirmed opposite signs at its ends.
    """
    lo, hi = _float_bisect(fpoly, lo, hi, FLOAT_TRUST_WIDTH)
    slo, shi = _exact_sign(poly, lo), _exact_sign(poly, hi)
    if slo == 0:
        return _certify_exact_root(poly, lo)
    if shi == 0:
        return _certify_exact_root(poly, hi)
    if slo * shi > 0:
        raise ArithmeticError("bisection lost the sign change; bracket invalid")
    while hi - lo > BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        smid = _exact_sign(poly, mid)
        if smid == 0:
            return _certify_exact_root(poly, mid)
        if smid == slo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), lo, hi


def _certify_exact_root(poly: RationalPoly, root: float) -> tuple[float, float, float]:
    """The bisection landed exactly on a root; certify a tiny bracket around it."""
    eps = max(abs(root), 1.0) * 2**-50
    lo, hi = root - eps, root + eps
    if _exact_sign(poly, lo) * _exact_sign(poly, hi) >= 0:
        raise ArithmeticError("exact root is not a simple sign change")
    return root, lo, hi


def jacobi_zeros(n: int, alpha, beta) -> list[float]:
    """All n zeros of one Jacobi polynomial, strictly increasing in (-1, 1).

    Brackets come from the classical interlacing of consecutive degrees:
    the zeros of each degree separate those of the next, so working up
    from degree 1 every root sits in a known sign-change interval.
    """
    if n < 1:
        raise ValueError("need degree at least 1 for zeros")
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check_params(alpha, beta)
    polys = _jacobi_coeff_sequence(n, alpha, beta)
    roots: list[float] = []
    for j in range(1, n + 1):
        p = polys[j]
        coeffs = p.float_coeffs()

        def fpoly(x, _c=coeffs):
            acc = 0.0
            for c in reversed(_c):
                acc = acc * x + c
            return acc

        brackets = [-1.0] + roots + [1.0]
        new_roots = []
        final = j == n
        for lo, hi in zip(brackets, brackets[1:]):
            if final:
                root, blo, bhi = _bisect_root(p, fpoly, lo, hi)
                if bhi - blo > 1e-13:
                    raise ArithmeticError("bracket did not shrink below tolerance")
            else:
                # seed brackets only; coarse roots keep the next degree's
                # sign changes isolated because the root gap is far larger
                blo, bhi = _float_bisect(fpoly, lo, hi, 1e-9)
                root = 0.5 * (blo + bhi)
            new_roots.append(root)
        if len(new_roots) != j or any(
            b <= a for a, b in zip(new_roots, new_roots[1:])
        ):
            raise ArithmeticError(f"expected {j} increasing roots, got {new_roots}")
        roots = new_roots
    if any(not -1.0 < r < 1.0 for r in roots):
        raise ArithmeticError("root escaped the open interval")
    return roots


def interlacing_check(xs, ts, ys) -> bool:
    """Strict alternation x_1 < t_1 < y_1 < x_2 < ... for equal-length lists."""
    if not len(xs) == len(ts) == len(ys):
        raise ValueError("interlacing check needs three lists of equal length")
    merged = []
    for triple in zip(xs, ts, ys):
        merged.extend(triple)
    return all(a < b for a, b in zip(merged, merged[1:]))


def radial_jacobi_parameters(n: int, k: int, m: int) -> tuple[int, Fraction]:
    """Degree and second parameter of the Jacobi polynomial hiding in degree n.

    The even member of degree 2N reduces to P_N^(0, k+m/2-1) and the odd
    member of degree 2N+1 to P_N^(0, k+m/2), both in the variable 2t-1.
    """
    big_n = n // 2
    if n % 2 == 0:
        return big_n, k + Fraction(m, 2) - 1
    return big_n, k + Fraction(m, 2)


def zero_radii(n: int, k: int, m: int) -> list[float]:
    """Radii in (0,1) of the vanishing spheres of the degree-n member.

    These are sqrt((s+1)/2) over the zeros s of the identified Jacobi
    polynomial; odd degrees additionally vanish at the origin, which is
    not part of this list (see vanishes_at_origin).
    """
    big_n, beta = radial_jacobi_parameters(n, k, m)
    if big_n == 0:
        return []
    return [math.sqrt((s + 1.0) / 2.0) for s in jacobi_zeros(big_n, 0, beta)]


def vanishes_at_origin(n: int) -> bool:
    """Odd-degree members carry a factor x and vanish at r = 0."""
    return n % 2 == 1


_SUCCESSOR = {0: 1, 1: 2, 2: 0}


def radii_interlacing_check(first, second, third) -> bool:
    """Cyclic interlacing of the sphere radii of three consecutive degrees.

    The three lists have lengths differing by at most one, so instead of
    the equal-length alternation this checks the merged sequence is
    strictly increasing and each radius is followed by one from the next
    family in cyclic order (first -> second -> third -> first).
    """
    labelled = (
        [(r, 0) for r in first] + [(r, 1) for r in second] + [(r, 2) for r in third]
    )
    labelled.sort()
    for (ra, la), (rb, lb) in zip(labelled, labelled[1:]):
        if not ra < rb:
            return False
        if lb != _SUCCESSOR[la]:
            return False
    return True
