"""Legendre-type Clifford polynomial families on the unit ball.

Bundles a radial form with a concrete spherical monogenic and an exact
scale, and provides the closed-form coefficients, norms, normalization,
Bonnet multiplication coefficients, the Jacobi reduction of the radial
part, the closed-form Fourier transform, and the plane-specific
degeneracy between consecutive even and odd members.  Everything except
the Fourier evaluation stays in exact arithmetic.

Verified contract (runtime checks live in :mod:`cliffleg.verify`):

- the explicit, operator, and Rodrigues constructions agree;
- the normalized family is orthonormal over the unit ball;
- even members stay ball-orthogonal after an x insertion;
- the x image of a member expands over adjacent degrees only;
- members are eigenfunctions of the stated second-order operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import ComplexMultivector, Multivector, embed_vector
from .jacobi import JacobiPoly, jacobi_build, radial_jacobi_parameters
from .monogenics import MonogenicBasis, MonogenicPolynomial, build_basis, m2_basis, monogenic_space_dim
from .radial import (
    Parity,
    ParityRadialForm,
    RationalPoly,
    SqrtScale,
    even_form,
    gegenbauer_by_operators,
    mul_x,
    odd_form,
)


@lru_cache(maxsize=None)
def canonical_basis(m: int, k: int) -> MonogenicBasis:
    """Orthonormal degree-k basis used by every polynomial constructor.

    The plane gets the closed trigonometric family, whose members
    satisfy the termwise shift x*Y_k = e_1*Y_{k+1} that the degeneracy
    relation needs; higher dimensions use the nullspace construction.
    Cached: repeated construction is pure, and sharing the basis objects
    lets the sphere inner product cache take effect across members.
    """
    if m == 2:
        return m2_basis(k)
    return build_basis(m, k)


def _rising(start: Fraction, steps: int) -> Fraction:
    prod = Fraction(1)
    for j in range(steps):
        prod *= start + j
    return prod


@dataclass(frozen=True)
class CliffordPolynomial:
    """One member of the family: scale * radial form * concrete monogenic.

    The radial form carries the polynomial-in-|x|^2 data and the parity
    (an odd member has one loose vector factor x); the basis element
    pins down which degree-k monogenic multiplies it.  The scale stays
    a rational times a square root so normalized members remain exactly
    comparable.
    """

    n: int
    m: int
    k: int
    alpha: Fraction
    i: int
    normalized: bool
    radial: ParityRadialForm
    basis: MonogenicPolynomial
    scale: SqrtScale

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree must be nonnegative")
        if not 1 <= self.i <= monogenic_space_dim(self.m, self.k):
            raise ValueError("basis index out of range")
        if (self.radial.m, self.radial.k) != (self.m, self.k):
            raise ValueError("radial form parameters disagree")
        if (self.basis.m, self.basis.k) != (self.m, self.k):
            raise ValueError("basis element parameters disagree")
        expected = Parity.EVEN if self.n % 2 == 0 else Parity.ODD
        if self.radial.parity is not expected:
            raise ValueError("radial parity must match the degree")
        if self.radial.poly.degree != self.n // 2:
            raise ValueError("radial degree must be half the total degree")
        if self.normalized and self.alpha != 0:
            raise ValueError("only the alpha = 0 family can be normalized")

    def evaluate(self, point: Sequence[float]) -> Multivector:
        """Float value at a point, scale and monogenic prefactor included."""
        coords = [float(c) for c in point]
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coords)}")
        t = sum(c * c for c in coords)
        value = (float(self.scale) * self.radial.poly(t)) * self.basis.evaluate(coords)
        if self.radial.parity is Parity.ODD:
            value = embed_vector(coords) * value
        return value


def clifford_gegenbauer(n: int, k: int, m: int, alpha=0, i: int = 1) -> CliffordPolynomial:
    """Degree-n member built by the first-order operator product."""
    alpha = Fraction(alpha)
    basis = canonical_basis(m, k)
    if not 1 <= i <= basis.dimension:
        raise ValueError("basis index out of range")
    return CliffordPolynomial(
        n=n,
        m=m,
        k=k,
        alpha=alpha,
        i=i,
        normalized=False,
        radial=gegenbauer_by_operators(n, k, m, alpha),
        basis=basis[i - 1],
        scale=SqrtScale(Fraction(1)),
    )


def clifford_legendre(n: int, k: int, m: int, i: int = 1) -> CliffordPolynomial:
    return clifford_gegenbauer(n, k, m, 0, i)


def explicit_even(big_n: int, k: int, m: int) -> ParityRadialForm:
    """Closed-form radial part of the even member of degree 2N.

    The coefficient of t^l is binom(N,l) (-1)^l times the N-step rising
    product from l + k + m/2, all scaled by 2^(2N) (2N)! / N!; the
    rising products keep half-integer arguments exact for odd m.
    """
    if big_n < 0:
        raise ValueError("degree index must be nonnegative")
    front = Fraction(2 ** (2 * big_n) * math.factorial(2 * big_n), math.factorial(big_n))
    base = k + Fraction(m, 2)
    coeffs = [
        front * math.comb(big_n, l) * (-1) ** l * _rising(base + l, big_n)
        for l in range(big_n + 1)
    ]
    return even_form(m, k, RationalPoly(coeffs))


def explicit_odd(big_n: int, k: int, m: int) -> ParityRadialForm:
    """Closed-form radial part of the odd member of degree 2N+1.

    Same shape as the even case with the rising products started one
    step higher and a leading minus sign on the whole sum.
    """
    if big_n < 0:
        raise ValueError("degree index must be nonnegative")
    front = -Fraction(
        2 ** (2 * big_n + 1) * math.factorial(2 * big_n + 1), math.factorial(big_n)
    )
    base = k + Fraction(m, 2) + 1
    coeffs = [
        front * math.comb(big_n, l) * (-1) ** l * _rising(base + l, big_n)
        for l in range(big_n + 1)
    ]
    return odd_form(m, k, RationalPoly(coeffs))


def explicit_radial(n: int, k: int, m: int) -> ParityRadialForm:
    if n % 2 == 0:
        return explicit_even(n // 2, k, m)
    return explicit_odd(n // 2, k, m)


def norm_sq(n: int, k: int, m: int) -> Fraction:
    """Squared ball norm of the unnormalized degree-n member."""
    return Fraction(2 ** (2 * n) * math.factorial(n) ** 2, 2 * k + 2 * n + m)


def normalization_scale(n: int, k: int, m: int) -> SqrtScale:
    """sqrt(2k + 2n + m) / (2^n n!), the reciprocal square root of the norm."""
    return SqrtScale.from_square(Fraction(2 * k + 2 * n + m, (2**n * math.factorial(n)) ** 2))


def normalize(p: CliffordPolynomial) -> CliffordPolynomial:
    """Unit-norm rescaling of an alpha = 0 member; already-normalized input passes through."""
    if p.alpha != 0:
        raise ValueError("no norm formula is available away from alpha = 0")
    if p.normalized:
        return p
    return CliffordPolynomial(
        n=p.n,
        m=p.m,
        k=p.k,
        alpha=p.alpha,
        i=p.i,
        normalized=True,
        radial=p.radial,
        basis=p.basis,
        scale=p.scale * normalization_scale(p.n, p.k, p.m),
    )


def bonnet_odd(big_n: int, k: int, m: int) -> tuple[Fraction, Fraction]:
    """Coefficients writing x times the degree-(2N+1) member as a two-term sum.

    x C_{2N+1} = alpha C_{2N+2} + beta C_{2N}; the shared denominator
    m/2 + 2N + k + 1 is at least 2, so the pair is always defined.
    """
    h = Fraction(m, 2) + 2 * big_n + k + 1
    alpha = Fraction(-1, 4) / h
    beta = 2 * (2 * big_n + 1) * (Fraction(m, 2) + big_n + k) / h
    return alpha, beta


def bonnet_even(big_n: int, k: int, m: int) -> tuple[Fraction, Fraction]:
    """Coefficients writing x times the degree-2N member as a two-term sum.

    x C_{2N} = alpha' C_{2N+1} + beta' C_{2N-1}; at N = 0 the second
    coefficient is zero and the lower neighbour is absent.
    """
    g = Fraction(m, 2) + 2 * big_n + k
    alpha = -(Fraction(m, 2) + big_n + k) / (2 * (2 * big_n + 1) * g)
    beta = Fraction(4 * big_n * big_n) / g
    return alpha, beta


def bonnet_residual(n: int, k: int, m: int) -> ParityRadialForm:
    """x C_n minus its two-term expansion; contract: the zero form."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    big_n = n // 2
    radial_n = gegenbauer_by_operators(n, k, m, 0)
    if n % 2 == 1:
        alpha, beta = bonnet_odd(big_n, k, m)
        lower = gegenbauer_by_operators(n - 1, k, m, 0)
    else:
        alpha, beta = bonnet_even(big_n, k, m)
        lower = (
            gegenbauer_by_operators(n - 1, k, m, 0)
            if n >= 1
            else odd_form(m, k, RationalPoly.zero())
        )
    upper = gegenbauer_by_operators(n + 1, k, m, 0)
    return mul_x(radial_n) - upper.scale(alpha) - lower.scale(beta)


def bonnet_normalized(n: int, k: int, m: int) -> tuple[SqrtScale, SqrtScale]:
    """Two-term coefficients for x times a normalized member.

    Rescaling the plain Bonnet pair by the neighbouring normalization
    constants turns the rationals into rational multiples of square
    roots; both are returned exactly.
    """
    big_n = n // 2
    if n % 2 == 0:
        g = Fraction(m, 2) + 2 * big_n + k
        first = (-(Fraction(m, 2) + big_n + k) / g) * SqrtScale.from_square(
            Fraction(m + 4 * big_n + 2 * k, m + 4 * big_n + 2 * k + 2)
        )
        if big_n == 0:
            second = SqrtScale(Fraction(0))
        else:
            second = (Fraction(big_n) / g) * SqrtScale.from_square(
                Fraction(m + 4 * big_n + 2 * k, m + 4 * big_n + 2 * k - 2)
            )
        return first, second
    h = Fraction(m, 2) + 2 * big_n + k + 1
    first = (Fraction(-(big_n + 1)) / h) * SqrtScale.from_square(
        Fraction(m + 4 * big_n + 2 * k + 2, m + 4 * big_n + 2 * k + 4)
    )
    second = ((Fraction(m, 2) + big_n + k) / h) * SqrtScale.from_square(
        Fraction(m + 4 * big_n + 2 * k + 2, m + 4 * big_n + 2 * k)
    )
    return first, second


def _combine_same_radical(terms: list[tuple[SqrtScale, ParityRadialForm]]) -> ParityRadialForm:
    """Sum of scale * form contributions sharing one square-root class.

    The common radical factors out, leaving an exact rational
    combination; a mismatched nonzero radical would make the sum leave
    the representable set, so it raises instead.
    """
    live = [(s, f) for s, f in terms if s.rational != 0]
    if not live:
        raise ValueError("no nonzero terms to combine")
    radical = live[0][0].radical
    total = None
    for s, f in live:
        if s.radical != radical:
            raise ValueError("terms mix incompatible square-root classes")
        piece = f.scale(s.rational)
        total = piece if total is None else total + piece
    return total


def bonnet_normalized_residual(n: int, k: int, m: int) -> ParityRadialForm:
    """Radical-cleared residual of the normalized two-term expansion; contract: zero."""
    first, second = bonnet_normalized(n, k, m)
    s_n = normalization_scale(n, k, m)
    terms = [
        (s_n, mul_x(gegenbauer_by_operators(n, k, m, 0))),
        (-first * normalization_scale(n + 1, k, m), gegenbauer_by_operators(n + 1, k, m, 0)),
    ]
    if second.rational != 0:
        terms.append(
            (-second * normalization_scale(n - 1, k, m), gegenbauer_by_operators(n - 1, k, m, 0))
        )
    return _combine_same_radical(terms)


def jacobi_radial_id(n: int, k: int, m: int) -> tuple[int, Fraction, JacobiPoly]:
    """Identify the normalized radial part with a shifted Jacobi polynomial.

    Returns (sign, squared scale, Jacobi polynomial): the normalized
    radial part equals sign * sqrt(scale^2) * P(2t - 1).  The sign is
    fixed by comparing leading coefficients, since the identification
    leaves it undetermined.
    """
    big_n, beta = radial_jacobi_parameters(n, k, m)
    scale_sq = Fraction(2 * k + 2 * n + m)
    jac = jacobi_build(big_n, 0, beta)
    lead_radial = explicit_radial(n, k, m).poly.coefficient(big_n)
    lead_jacobi = jac.poly.coefficient(big_n)
    sign = 1 if (lead_radial > 0) == (lead_jacobi > 0) else -1
    return sign, scale_sq, jac


def jacobi_radial_residual(n: int, k: int, m: int) -> RationalPoly:
    """Coefficientwise residual of the Jacobi identification; contract: zero.

    The normalization constant divided by the identification scale is
    exactly 1 / (2^n n!), so the comparison happens in the rationals.
    """
    sign, scale_sq, jac = jacobi_radial_id(n, k, m)
    s_n = normalization_scale(n, k, m)
    ratio = s_n.rational / SqrtScale.from_square(scale_sq).rational
    shifted = jac.poly.compose(RationalPoly((-1, 2)))
    return explicit_radial(n, k, m).poly * ratio - sign * shifted


def fourier_transform(p: CliffordPolynomial, xi: Sequence[float]) -> ComplexMultivector:
    """Closed-form Fourier transform of the ball restriction at one frequency.

    Evaluates the Bessel-profile expression: a power of the frequency
    vector under the geometric product, a first-kind Bessel factor of
    order k + m/2 + n, and the monogenic at the frequency, with the
    power of the imaginary unit routed between real and imaginary
    parts.  Only the alpha = 0, unnormalized members are covered.
    """
    if p.alpha != 0:
        raise ValueError("transform formula covers only the alpha = 0 family")
    if p.normalized:
        raise ValueError("transform formula covers the unnormalized members")
    coords = [float(c) for c in xi]
    if len(coords) != p.m:
        raise ValueError(f"expected {p.m} coordinates, got {len(coords)}")
    radius = math.hypot(*coords)
    if radius == 0.0:
        raise ValueError("frequency zero is outside the formula's domain")

    from .analysis import bessel_j

    n, k, m = p.n, p.k, p.m
    order = k + Fraction(m, 2) + n
    profile = (
        2**n
        * math.factorial(n)
        * bessel_j(order, 2 * math.pi * radius)
        / radius ** (m / 2 + n + k)
    )
    # xi^n under the geometric product: pairs of vector factors give -|xi|^2.
    magnitude = profile * (-1.0) ** (n // 2) * radius ** (2 * (n // 2))
    value = magnitude * p.basis.evaluate(coords)
    if n % 2 == 1:
        value = embed_vector(coords) * value
    phase = (n + k) % 4
    sign = -1.0 if k % 2 == 1 else 1.0
    zero = Multivector.zero(m)
    if phase == 0:
        return ComplexMultivector(sign * value, zero)
    if phase == 1:
        return ComplexMultivector(zero, sign * value)
    if phase == 2:
        return ComplexMultivector(-sign * value, zero)
    return ComplexMultivector(zero, -sign * value)


def degeneracy_radial_collapse(big_n: int, k: int, m: int) -> RationalPoly:
    """Scale-weighted sum of the radial parts on both sides of the degeneracy.

    This combination vanishes in every dimension, because the odd
    radial part at monogenic degree k is the even radial part at degree
    k+1 scaled by -2(2N+1), which the normalization ratio cancels.  The
    degeneracy identity itself is therefore exactly as strong as the
    termwise shift x Y_k = e_1 Y_{k+1}, which holds only in the plane.
    """
    s_odd = normalization_scale(2 * big_n + 1, k, m)
    s_even = normalization_scale(2 * big_n, k + 1, m)
    if s_odd.radical != s_even.radical:
        raise ValueError("normalization radicals unexpectedly differ")
    odd_poly = gegenbauer_by_operators(2 * big_n + 1, k, m, 0).poly
    even_poly = gegenbauer_by_operators(2 * big_n, k + 1, m, 0).poly
    return s_odd.rational * odd_poly + s_even.rational * even_poly


def degeneracy_m2(big_n: int, k: int) -> tuple[ParityRadialForm, ParityRadialForm]:
    """Both-sided residual forms of the plane degeneracy; contract: both zero.

    Rewriting the normalized odd member of degree 2N+1 at monogenic
    degree k through the shift x Y_k = e_1 Y_{k+1} lands it on the
    normalized even member of degree 2N at monogenic degree k+1, up to
    the radial residual returned here, rendered once against x Y_k and
    once against Y_{k+1}.
    """
    residual = degeneracy_radial_collapse(big_n, k, 2)
    return odd_form(2, k, residual), even_form(2, k + 1, residual)


def degeneracy_defect(
    big_n: int, k: int, m: int, point: Sequence[float], i: int = 1, i_up: int = 1
) -> Multivector:
    """Pointwise value of normalized C_{2N+1}(Y_k) plus e_1 times normalized C_{2N}(Y_{k+1}).

    Vanishes identically in the plane and generically not elsewhere,
    which makes it the numeric side of the degeneracy statement: use it
    to confirm collapse at m = 2 and failure at m = 3.
    """
    odd_value = normalize(clifford_legendre(2 * big_n + 1, k, m, i)).evaluate(point)
    even_value = normalize(clifford_legendre(2 * big_n, k + 1, m, i_up)).evaluate(point)
    return odd_value + Multivector.blade(m, 1) * even_value
