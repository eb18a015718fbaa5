"""Floating-point verification layer for the polynomial families.

Provides first-kind Bessel functions (ascending series, normalized
downward recurrence, and large-argument asymptotics, with closed
spherical forms for half-integer orders), product quadrature rules over
the unit ball and sphere, a brute-force Fourier integral that serves as
the independent check on the closed-form transform, exact and numeric
ball inner products, Gram-matrix orthogonality reports, and a truncated
Parseval check of the transform's profile.  Accumulations go through
numpy reductions, whose pairwise summation keeps results reproducible
for a fixed rule.

Verified contract (runtime checks live in :mod:`cliffleg.verify`):

- quadrature rules integrate monomials up to their declared degree;
- the closed-form transform matches the quadrature integral;
- the truncated profile energy matches the closed-form norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import ComplexMultivector, Multivector, blade_product
from .legendre import CliffordPolynomial, norm_sq
from .monogenics import sphere_inner_raw, sphere_inner_vector_raw, sphere_moment
from .radial import Parity, SqrtScale

BESSEL_MAX_ORDER = 40
BESSEL_MAX_ARG = 1000.0

# Regime boundaries: the ascending series is safe while the largest term
# stays small enough for 1e-12 cancellation headroom; the asymptotic
# expansion needs the argument well past the order's turning point.
_SERIES_CUTOFF = 9.0
_ASYMPTOTIC_FLOOR = 300.0


@dataclass(frozen=True)
class BesselOrder:
    """Exact Bessel order k + m/2 + n: an integer or half-integer rational."""

    nu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "nu", Fraction(self.nu))
        if (2 * self.nu).denominator != 1:
            raise ValueError("order must be an integer or half-integer")
        if not 0 <= self.nu <= BESSEL_MAX_ORDER:
            raise ValueError(f"order must lie in [0, {BESSEL_MAX_ORDER}]")

    @classmethod
    def from_indices(cls, n: int, k: int, m: int) -> "BesselOrder":
        order = cls(k + Fraction(m, 2) + n)
        if order.nu < 1:
            raise ValueError("profile orders start at 1 for dimension 2 and up")
        return order

    def is_half_integer(self) -> bool:
        return (2 * self.nu).numerator % 2 == 1


def _series_j(nu: float, x: float) -> float:
    # Leading coefficient via lgamma so half-integer orders share the path.
    half = x / 2.0
    term = math.exp(nu * math.log(half) - math.lgamma(nu + 1.0))
    total = term
    s = 0
    while s < 500:
        s += 1
        term *= -(half * half) / (s * (nu + s))
        total += term
        if abs(term) <= 1e-18 * max(abs(total), 1e-300):
            break
    return total


def _miller_integer_j(nu: int, x: float) -> float:
    # Downward recurrence seeded far above both order and argument,
    # normalized through J_0 + 2 J_2 + 2 J_4 + ... = 1.
    top = max(nu, int(x))
    start = top + 20 + int(math.sqrt(40.0 * max(top, 1)))
    if start % 2 == 1:
        start += 1
    plus = 0.0
    here = 1e-30
    norm = 0.0
    result = 0.0
    for s in range(start, 0, -1):
        lower = (2.0 * s / x) * here - plus
        plus, here = here, lower
        if s - 1 == nu:
            result = here
        if (s - 1) % 2 == 0 and s - 1 > 0:
            norm += 2.0 * here
        if abs(here) > 1e250:
            here *= 1e-250
            plus *= 1e-250
            norm *= 1e-250
            result *= 1e-250
    norm += here
    if nu == 0:
        result = here
    return result / norm


def _asymptotic_j(nu: float, x: float) -> float:
    mu = 4.0 * nu * nu
    omega = x - nu * math.pi / 2.0 - math.pi / 4.0
    even_sum, odd_sum = 0.0, 0.0
    c = 1.0
    for j in range(0, 40):
        contribution = c if j % 4 in (0, 1) else -c
        if j % 2 == 0:
            even_sum += contribution
        else:
            odd_sum += contribution
        nxt = c * (mu - (2 * j + 1) ** 2) / ((j + 1) * 8.0 * x)
        if abs(nxt) >= abs(c) or abs(nxt) < 1e-17:
            break
        c = nxt
    amplitude = math.sqrt(2.0 / (math.pi * x))
    return amplitude * (even_sum * math.cos(omega) - odd_sum * math.sin(omega))


def _spherical_j(l: int, x: float) -> float:
    """Spherical Bessel j_l by the stable recurrence direction."""
    j0 = math.sin(x) / x
    if l == 0:
        return j0
    j1 = j0 / x - math.cos(x) / x
    if l == 1:
        return j1
    if x >= l:
        below, here = j0, j1
        for s in range(1, l):
            below, here = here, (2 * s + 1) / x * here - below
        return here
    # Downward recurrence, anchored on the closed j_0.
    start = l + 20 + int(x)
    above = 0.0
    here = 1e-30
    value = 0.0
    for s in range(start, 0, -1):
        lower = (2 * s + 1) / x * here - above
        above, here = here, lower
        if s - 1 == l:
            value = here
        if abs(here) > 1e250:
            above *= 1e-250
            here *= 1e-250
            value *= 1e-250
    return value * (j0 / here)


def _bessel_by_regime(order: BesselOrder, x: float) -> float:
    value = float(order.nu)
    if x == 0.0:
        return 1.0 if value == 0.0 else 0.0
    if x <= _SERIES_CUTOFF:
        return _series_j(value, x)
    if x >= max(_ASYMPTOTIC_FLOOR, 3.0 * value * value):
        return _asymptotic_j(value, x)
    if order.is_half_integer():
        l = (2 * order.nu - 1) // 2
        return _spherical_j(int(l), x) * math.sqrt(2.0 * x / math.pi)
    return _miller_integer_j(int(order.nu), x)


def bessel_j(nu, x: float) -> float:
    """First-kind Bessel function for integer and half-integer orders.

    Ascending series below the small-argument cutoff, normalized
    downward recurrence in the middle, and the large-argument expansion
    once the argument clears both the fixed floor and the order's
    turning point; half-integer orders reduce to closed spherical
    forms outside the series regime.
    """
    order = nu if isinstance(nu, BesselOrder) else BesselOrder(Fraction(nu))
    x = float(x)
    if not 0.0 <= x <= BESSEL_MAX_ARG:
        raise ValueError(f"argument must lie in [0, {BESSEL_MAX_ARG}]")
    return _bessel_by_regime(order, x)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Product quadrature over the unit ball in dimension 2 or 3.

    Radial direction: Gauss-Legendre on [0,1] with the r^(m-1) volume
    factor absorbed into the weights.  Angular direction: equispaced
    trapezoid on the circle, or a Gauss-Legendre-in-height times
    trapezoid product on the 2-sphere.  The declared exactness is the
    largest total monomial degree the rule integrates exactly over the
    ball (up to roundoff).
    """

    m: int
    exactness: int
    radial_nodes: np.ndarray
    radial_weights: np.ndarray
    sphere_points: np.ndarray
    sphere_weights: np.ndarray

    def sphere_integral(self, values: np.ndarray) -> float:
        return float(np.dot(self.sphere_weights, values))

    def ball_points(self) -> tuple[np.ndarray, np.ndarray]:
        """Full product grid over the ball with combined weights."""
        pts = self.radial_nodes[:, None, None] * self.sphere_points[None, :, :]
        weights = np.outer(self.radial_weights, self.sphere_weights)
        return pts.reshape(-1, self.m), weights.reshape(-1)


def build_rule(m: int, exactness: int) -> QuadratureRule:
    if m not in (2, 3):
        raise ValueError("quadrature rules cover dimensions 2 and 3 only")
    if exactness < 1:
        raise ValueError("exactness must be positive")
    radial_count = (exactness + m + 1) // 2 + 1
    raw_nodes, raw_weights = np.polynomial.legendre.leggauss(radial_count)
    radial_nodes = (raw_nodes + 1.0) / 2.0
    radial_weights = (raw_weights / 2.0) * radial_nodes ** (m - 1)
    angular_count = exactness + 2
    theta = 2.0 * np.pi * np.arange(angular_count) / angular_count
    if m == 2:
        points = np.column_stack([np.cos(theta), np.sin(theta)])
        weights = np.full(angular_count, 2.0 * np.pi / angular_count)
    else:
        height_count = exactness // 2 + 1
        z, vz = np.polynomial.legendre.leggauss(height_count)
        s = np.sqrt(1.0 - z * z)
        points = np.concatenate(
            [
                np.column_stack([si * np.cos(theta), si * np.sin(theta), np.full(angular_count, zi)])
                for zi, si in zip(z, s)
            ]
        )
        weights = np.concatenate(
            [np.full(angular_count, wi * 2.0 * np.pi / angular_count) for wi in vz]
        )
    return QuadratureRule(
        m=m,
        exactness=exactness,
        radial_nodes=radial_nodes,
        radial_weights=radial_weights,
        sphere_points=points,
        sphere_weights=weights,
    )


def evaluate_on_points(p: CliffordPolynomial, pts: np.ndarray) -> dict[int, np.ndarray]:
    """Blade-component arrays of a polynomial's values on a point grid."""
    count = pts.shape[0]
    radial = np.zeros(count)
    t = np.einsum("ij,ij->i", pts, pts)
    for c in reversed(p.radial.poly.float_coeffs()):
        radial = radial * t + c
    accum: dict[int, np.ndarray] = {}
    for expo, mv in p.basis.items():
        mono = np.ones(count)
        for j, e in enumerate(expo):
            if e:
                mono = mono * pts[:, j] ** e
        for mask, coeff in mv.items():
            current = accum.get(mask)
            piece = float(coeff) * mono
            accum[mask] = piece if current is None else current + piece
    if p.radial.parity is Parity.ODD:
        shifted: dict[int, np.ndarray] = {}
        for j in range(p.m):
            for mask, arr in accum.items():
                sign, out = blade_product(1 << j, mask, p.m)
                piece = sign * pts[:, j] * arr
                current = shifted.get(out)
                shifted[out] = piece if current is None else current + piece
        accum = shifted
    prefactor = float(p.scale) * p.basis.float_scale()
    return {mask: prefactor * radial * arr for mask, arr in accum.items()}


def numeric_fourier(p: CliffordPolynomial, xi: Sequence[float], rule: QuadratureRule) -> ComplexMultivector:
    """Brute-force Fourier integral of the ball restriction at one frequency.

    Direct quadrature of the plane-wave kernel against the polynomial;
    this is the independent check on the closed-form transform, so it
    shares no code with it beyond point evaluation.
    """
    if p.m != rule.m:
        raise ValueError("rule dimension does not match the polynomial")
    freq = np.asarray([float(c) for c in xi])
    if freq.shape != (p.m,):
        raise ValueError(f"expected {p.m} coordinates")
    radius = float(np.linalg.norm(freq))
    if radius > 10.0:
        raise ValueError("frequencies beyond radius 10 are not supported")
    if len(rule.radial_nodes) < 10.0 * radius:
        raise ValueError("rule too coarse: need at least ten radial nodes per period")
    pts, weights = rule.ball_points()
    kernel = weights * np.exp(-2j * np.pi * (pts @ freq))
    real = [0.0] * (1 << p.m)
    imag = [0.0] * (1 << p.m)
    for mask, arr in evaluate_on_points(p, pts).items():
        z = complex(np.sum(kernel * arr))
        real[mask] = z.real
        imag[mask] = z.imag
    return ComplexMultivector(Multivector(p.m, real), Multivector(p.m, imag))


def radial_ball_integral(f, g) -> Fraction:
    """Exact radial factor of a ball inner product of two parity forms.

    Integrates the product of the two radial polynomials over [0,1]
    against r^(k+k'+e+m-1), where e counts the odd members; the loose
    vectors they carry contribute one radial power each.
    """
    if f.m != g.m:
        raise ValueError("forms live in different dimensions")
    extra = (1 if f.parity is Parity.ODD else 0) + (1 if g.parity is Parity.ODD else 0)
    base = f.k + g.k + extra + f.m - 1
    product = f.poly * g.poly
    total = Fraction(0)
    for j, c in enumerate(product.coeffs):
        if c:
            total += Fraction(c, 2 * j + base + 1)
    return total


def ball_inner_exact(p: CliffordPolynomial, q: CliffordPolynomial) -> tuple[Multivector, SqrtScale]:
    """Exact ball inner product, factored as rational multivector times scale.

    Splits into the exact radial integral and the exact sphere moment
    integral of the monogenic pair; one loose vector factor per odd
    member is routed into the radial exponent and, for mixed parity,
    into the vector-insertion sphere integral.  The pi powers of the
    moments cancel against the basis normalizations, so only a single
    square-root scale remains.
    """
    if p.m != q.m:
        raise ValueError("polynomials live in different dimensions")
    p_odd = p.radial.parity is Parity.ODD
    q_odd = q.radial.parity is Parity.ODD
    vector_inserted = p_odd != q_odd
    # Conjugating the left member's loose vector flips its sign.
    sign = -1 if p_odd and not q_odd else 1
    if vector_inserted:
        sphere, moment_power = sphere_inner_vector_raw(p.basis, q.basis)
    else:
        sphere, moment_power = sphere_inner_raw(p.basis, q.basis)
    if p.basis.scale_pi_power + q.basis.scale_pi_power + 2 * moment_power != 0:
        raise ValueError("basis normalizations carry unexpected pi powers")
    radial = sign * radial_ball_integral(p.radial, q.radial)
    scale = p.scale * q.scale * SqrtScale.from_square(p.basis.scale_sq * q.basis.scale_sq)
    return radial * sphere, scale


def ball_inner(p: CliffordPolynomial, q: CliffordPolynomial, rule: QuadratureRule | None = None) -> Multivector:
    """Clifford-valued ball inner product; exact path when no rule is given."""
    if rule is None:
        mv, scale = ball_inner_exact(p, q)
        factor = float(scale)
        return mv.map_coeffs(lambda c: factor * float(c))
    if p.m != q.m or p.m != rule.m:
        raise ValueError("polynomials and rule must share one dimension")
    pts, weights = rule.ball_points()
    left = evaluate_on_points(p, pts)
    right = evaluate_on_points(q, pts)
    out = [0.0] * (1 << p.m)
    for mask_a, arr_a in left.items():
        # Hermitian conjugation flips each blade by a grade-dependent sign.
        grade = mask_a.bit_count()
        conj_sign = -1.0 if (grade * (grade + 1) // 2) % 2 else 1.0
        for mask_b, arr_b in right.items():
            sign, mask = blade_product(mask_a, mask_b, p.m)
            out[mask] += conj_sign * sign * float(np.sum(weights * arr_a * arr_b))
    return Multivector(p.m, out)


@dataclass(frozen=True)
class GramReport:
    """Pairwise scalar inner products of a family, with summary deviations."""

    matrix: tuple[tuple[float, ...], ...]
    max_off_diagonal: float
    max_diagonal_deviation: float


def gram_report(family: Sequence[CliffordPolynomial], rule: QuadratureRule | None = None) -> GramReport:
    """Scalar Gram matrix with the largest deviations from orthogonality.

    The expected diagonal is 1 for normalized members and the closed
    norm formula otherwise, so a mis-scaled member shows up directly in
    the diagonal deviation.
    """
    members = list(family)
    if members:
        m = members[0].m
        for member in members:
            if member.m != m:
                raise ValueError("family members live in different dimensions")
    count = len(members)
    values = [[0.0] * count for _ in range(count)]
    if rule is None:
        for a in range(count):
            for b in range(a, count):
                # The scalar part of the hermitian pairing is symmetric.
                value = ball_inner(members[a], members[b]).coeffs[0]
                values[a][b] = values[b][a] = value
    else:
        pts, weights = rule.ball_points()
        evaluations = [evaluate_on_points(p, pts) for p in members]
        for a in range(count):
            left = evaluations[a]
            for b in range(a, count):
                right = evaluations[b]
                # Only matching blades reach the scalar part, and the
                # conjugation sign cancels the blade's square there.
                value = 0.0
                for mask, arr in left.items():
                    other = right.get(mask)
                    if other is not None:
                        value += float(np.sum(weights * arr * other))
                values[a][b] = values[b][a] = value
    max_off = 0.0
    max_diag = 0.0
    for a, member in enumerate(members):
        expected = 1.0 if member.normalized else float(norm_sq(member.n, member.k, member.m))
        max_diag = max(max_diag, abs(values[a][a] - expected))
        for b in range(count):
            if b != a:
                max_off = max(max_off, abs(values[a][b]))
    return GramReport(tuple(tuple(row) for row in values), max_off, max_diag)


def plancherel_radial_check(
    n: int, k: int, m: int = 2, big_r: float = 200.0, nodes_per_period: int = 12
) -> tuple[float, float]:
    """Truncated Parseval integral of the transform profile vs the norm formula.

    Integrates the squared Bessel profile radially out to the cutoff by
    composite Gauss-Legendre panels two per oscillation period, then
    adds the smooth tail estimate (2^n n!)^2 / (2 pi^2 R) obtained from
    the envelope of the squared Bessel function.  Returns the estimate
    and the exact norm as floats.
    """
    order = BesselOrder.from_indices(n, k, m)
    front = float(2 ** (2 * n) * math.factorial(n) ** 2)
    nodes, weights = np.polynomial.legendre.leggauss(nodes_per_period // 2)
    panel_width = 0.25
    total = 0.0
    edge = 0.0
    while edge < big_r - 1e-12:
        upper = min(edge + panel_width, big_r)
        mid, half = (edge + upper) / 2.0, (upper - edge) / 2.0
        for node, weight in zip(nodes, weights):
            r = mid + half * node
            # Arguments run past the public cap; far out they sit deep in
            # the asymptotic regime, so the regime router is used directly.
            j = _bessel_by_regime(order, 2.0 * math.pi * r)
            total += weight * half * front * j * j / r
        edge = upper
    tail = front / (2.0 * math.pi**2 * big_r)
    return total + tail, float(norm_sq(n, k, m))
