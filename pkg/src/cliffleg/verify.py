"""Named runtime checks behind the command-line verification suites.

Each check re-runs one documented identity of the library on a
representative index grid and reports the largest residual it saw;
exact checks report 0.0 on success.  Checks are grouped into suites for
the command line, and MODULE_COVERAGE records which checks witness the
documented invariants of each library module, so a test can assert the
registry leaves none of them uncovered.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .algebra import Multivector
from .analysis import (
    build_rule,
    gram_report,
    numeric_fourier,
    plancherel_radial_check,
    radial_ball_integral,
)
from .jacobi import (
    jacobi_build,
    jacobi_ode_residual,
    jacobi_zeros,
    radial_jacobi_parameters,
    zero_radii,
    radii_interlacing_check,
)
from .legendre import (
    bonnet_even,
    bonnet_normalized_residual,
    bonnet_odd,
    bonnet_residual,
    canonical_basis,
    clifford_legendre,
    degeneracy_defect,
    degeneracy_m2,
    degeneracy_radial_collapse,
    explicit_radial,
    fourier_transform,
    jacobi_radial_residual,
    norm_sq,
    normalize,
)
from .monogenics import (
    MonogenicPolynomial,
    dirac_on_polynomial,
    m2_basis,
    sphere_inner_raw,
    sphere_inner_vector_raw,
    sphere_moment,
    x_times,
)
from .radial import (
    Parity,
    ParityRadialForm,
    RationalPoly,
    dirac,
    euler,
    euler_identity_residual,
    even_form,
    gegenbauer_by_operators,
    gegenbauer_eigenvalue,
    gegenbauer_operator,
    gegenbauer_recurrence_residual,
    legendre_recurrence_residual,
    mul_x,
    rodrigues_integer_alpha,
    three_term_residual,
    weight_split_residual,
)

import numpy as np


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check: pass flag plus the worst residual seen."""

    name: str
    passed: bool
    max_residual: float
    detail: str = ""


def _exact(name: str, all_zero: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, all_zero, 0.0 if all_zero else float("nan"), detail)


def _bounded(name: str, worst: float, tolerance: float, detail: str = "") -> CheckResult:
    return CheckResult(name, worst <= tolerance, worst, detail or f"tolerance {tolerance:g}")


def _random_multivector(rng: random.Random, m: int) -> Multivector:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(1 << m)]
    return Multivector(m, coeffs)


def _random_vector(rng: random.Random, m: int) -> Multivector:
    return Multivector.from_dict(
        m, {1 << j: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for j in range(m)}
    )


def _random_form(rng: random.Random, m: int, k: int, parity: Parity) -> ParityRadialForm:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5)]
    return ParityRadialForm(m, k, parity, RationalPoly(coeffs))


def _max_abs(mv: Multivector) -> float:
    return max((abs(float(c)) for _, c in mv.items()), default=0.0)


def check_associativity() -> CheckResult:
    rng = random.Random(101)
    ok = True
    for m in (2, 3, 5):
        for _ in range(5):
            u, v, w = (_random_multivector(rng, m) for _ in range(3))
            ok = ok and (u * v) * w == u * (v * w)
    return _exact("associativity", ok, "rational triples, dimensions 2, 3, 5")


def check_generator_relations() -> CheckResult:
    ok = True
    for m in range(2, 13):
        for i in range(m):
            ei = Multivector.blade(m, 1 << i)
            if ei * ei != Multivector.scalar(m, Fraction(-1)):
                ok = False
            for j in range(i + 1, m):
                ej = Multivector.blade(m, 1 << j)
                if not (ei * ej + ej * ei).is_zero():
                    ok = False
    return _exact("generator_relations", ok, "squares and anticommutators up to dimension 12")


def check_vector_reflection() -> CheckResult:
    rng = random.Random(103)
    ok = True
    for m in range(2, 7):
        x = _random_vector(rng, m)
        for j in range(m):
            ej = Multivector.blade(m, 1 << j)
            twice_component = Multivector.scalar(m, 2 * x.coeffs[1 << j])
            ok = ok and (ej * x + x * ej + twice_component).is_zero()
    return _exact("vector_reflection", ok, "e_j x = -2 x_j - x e_j on random vectors")


def check_conjugation_reversal() -> CheckResult:
    rng = random.Random(104)
    ok = True
    for m in (2, 3, 4):
        for _ in range(5):
            u, v = _random_multivector(rng, m), _random_multivector(rng, m)
            ok = ok and (u * v).conjugate() == v.conjugate() * u.conjugate()
    return _exact("conjugation_reversal", ok, "conj(uv) = conj(v) conj(u)")


def check_grade_projection() -> CheckResult:
    rng = random.Random(105)
    ok = True
    for m in (2, 3, 5):
        u = _random_multivector(rng, m)
        total = Multivector.zero(m)
        for g in range(m + 1):
            part = u.grade(g)
            total = total + part
            ok = ok and part.grade(g) == part
            for h in range(m + 1):
                if h != g and not part.grade(h).is_zero():
                    ok = False
        ok = ok and total == u
    return _exact("grade_projection", ok, "projections idempotent, orthogonal, summing back")


def check_monogenicity() -> CheckResult:
    ok = True
    for m, kmax in ((2, 3), (3, 3), (4, 2)):
        for k in range(kmax + 1):
            for y in canonical_basis(m, k):
                ok = ok and dirac_on_polynomial(y).is_zero()
    return _exact("monogenicity", ok, "Dirac operator annihilates every basis element")


def check_vector_sphere_orthogonality() -> CheckResult:
    ok = True
    for m in (2, 3):
        for k in range(3):
            for k2 in range(3):
                for y in canonical_basis(m, k):
                    for y2 in canonical_basis(m, k2):
                        mv, _ = sphere_inner_vector_raw(y, y2)
                        ok = ok and mv.is_zero()
    return _exact("vector_sphere_orthogonality", ok, "conj(Y) theta Y' integrates to zero")


def check_sphere_cross_degree() -> CheckResult:
    ok = True
    for m in (2, 3):
        for k in range(4):
            for k2 in range(4):
                if k == k2:
                    continue
                for y in canonical_basis(m, k):
                    for y2 in canonical_basis(m, k2):
                        mv, _ = sphere_inner_raw(y, y2)
                        ok = ok and mv.is_zero()
    return _exact("sphere_cross_degree", ok, "different degrees integrate to zero on the sphere")


def _times_t(p: MonogenicPolynomial) -> MonogenicPolynomial:
    acc: dict[tuple[int, ...], Multivector] = {}
    for expo, mv in p.items():
        for j in range(p.m):
            shifted = tuple(e + 2 if i == j else e for i, e in enumerate(expo))
            acc[shifted] = acc.get(shifted, Multivector.zero(p.m)) + mv
    return MonogenicPolynomial(p.m, p.k + 2, acc, p.scale_sq, p.scale_pi_power)


def _realize_monomial(f: ParityRadialForm, y: MonogenicPolynomial) -> MonogenicPolynomial | None:
    """Coordinate polynomial for c t^r Y or c x t^r Y; None when zero."""
    if f.poly.is_zero():
        return None
    nonzero = [(r, c) for r, c in enumerate(f.poly.coeffs) if c]
    if len(nonzero) != 1:
        raise ValueError("realization covers radial monomials only")
    r, c = nonzero[0]
    out = y
    for _ in range(r):
        out = _times_t(out)
    out = MonogenicPolynomial(
        out.m, out.k, {e: mv * c for e, mv in out.items()}, out.scale_sq, out.scale_pi_power
    )
    if f.parity is Parity.ODD:
        out = x_times(out)
    return out


def _same_polynomial(a: MonogenicPolynomial | None, b: MonogenicPolynomial | None) -> bool:
    a_zero = a is None or a.is_zero()
    b_zero = b is None or b.is_zero()
    if a_zero or b_zero:
        return a_zero and b_zero
    return a == b


def check_coordinate_operator_agreement() -> CheckResult:
    ok = True
    for m in (2, 3):
        for k in range(3):
            y = canonical_basis(m, k)[0]
            for r in range(3):
                for parity in (Parity.EVEN, Parity.ODD):
                    f = ParityRadialForm(m, k, parity, RationalPoly.monomial(r))
                    realized = _realize_monomial(f, y)
                    coordinate = dirac_on_polynomial(realized) if realized else None
                    ok = ok and _same_polynomial(coordinate, _realize_monomial(dirac(f), y))
                    degree = k + 2 * r + (1 if parity is Parity.ODD else 0)
                    ok = ok and euler(f) == f.scale(degree)
    return _exact(
        "coordinate_operator_agreement", ok, "form-level Dirac and Euler match coordinates"
    )


def check_plane_degree_shift() -> CheckResult:
    e1 = Multivector.blade(2, 1)
    ok = True
    for k in range(7):
        lower = m2_basis(k)[0]
        upper = m2_basis(k + 1)[0]
        ok = ok and x_times(lower) == upper.left_multiplied(e1)
    return _exact("plane_degree_shift", ok, "x Y_k = e_1 Y_{k+1} in the plane")


def check_product_commutation() -> CheckResult:
    rng = random.Random(201)
    ok = True
    for m in (2, 3, 4):
        for k in range(3):
            for parity in (Parity.EVEN, Parity.ODD):
                f = _random_form(rng, m, k, parity)
                residual = dirac(mul_x(f)) + f.scale(m) + mul_x(dirac(f)) + euler(f).scale(2)
                ok = ok and residual.is_zero()
    return _exact("product_commutation", ok, "Dirac past x picks up -m - 2E")


def check_euler_commutation() -> CheckResult:
    rng = random.Random(202)
    ok = True
    for m in (2, 3, 4):
        for k in range(3):
            for parity in (Parity.EVEN, Parity.ODD):
                f = _random_form(rng, m, k, parity)
                residual = dirac(euler(f)) - dirac(f) - euler(dirac(f))
                ok = ok and residual.is_zero()
    return _exact("euler_commutation", ok, "Dirac past the Euler operator shifts by one")


def check_euler_eigen_relation() -> CheckResult:
    ok = True
    for m in (2, 3, 4):
        for k in range(3):
            for n in range(9):
                ok = ok and euler_identity_residual(n, k, m).is_zero()
    return _exact("euler_eigen_relation", ok, "Euler action on the constructed family")


def check_lowering_product_rule() -> CheckResult:
    rng = random.Random(203)
    ok = True
    for m in (2, 3):
        for k in range(3):
            for parity in (Parity.EVEN, Parity.ODD):
                for l in range(2, 7):
                    f = _random_form(rng, m, k, parity)
                    ok = ok and weight_split_residual(l, f).is_zero()
    return _exact("lowering_product_rule", ok, "iterated Dirac through the weight, l up to 6")


def check_rodrigues_divisibility() -> CheckResult:
    from .radial import ONE_MINUS_T, InexactDivisionError

    ok = True
    for m in (2, 3, 4):
        for k in range(3):
            for n in range(1, 6):
                f = even_form(m, k, ONE_MINUS_T**n)
                for l in range(1, n + 1):
                    f = dirac(f)
                    try:
                        remaining = f.poly
                        for _ in range(n - l):
                            remaining = remaining.divide_exact(ONE_MINUS_T)
                    except InexactDivisionError:
                        ok = False
    return _exact("rodrigues_divisibility", ok, "weight power survives each Dirac application")


def check_triple_construction() -> CheckResult:
    ok = True
    for m in range(2, 7):
        for k in range(4):
            for n in range(7):
                closed = explicit_radial(n, k, m)
                operators = gegenbauer_by_operators(n, k, m)
                rodrigues = rodrigues_integer_alpha(n, k, m)
                ok = ok and closed == operators == rodrigues
    return _exact("triple_construction", ok, "closed form, operator product, Rodrigues agree")


def check_eigenvalue_relation() -> CheckResult:
    ok = True
    for m in (2, 3, 4, 5):
        for k in range(4):
            for n in range(8):
                f = gegenbauer_by_operators(n, k, m)
                residual = gegenbauer_operator(f, 0) - f.scale(gegenbauer_eigenvalue(0, n, m, k))
                ok = ok and residual.is_zero()
    return _exact("eigenvalue_relation", ok, "operator square acts by the stated scalar")


def check_three_term_recurrence() -> CheckResult:
    ok = True
    for m in range(2, 6):
        for k in range(3):
            for n in range(1, 11):
                ok = ok and three_term_residual(n, k, m).is_zero()
    return _exact("three_term_recurrence", ok, "Dirac image satisfies the three-term relation")


def check_derivative_recurrence_general() -> CheckResult:
    ok = True
    for m in (2, 3, 4):
        for k in range(3):
            for alpha in (0, 1, 2):
                for n in range(1, 9):
                    ok = ok and gegenbauer_recurrence_residual(n, k, m, alpha).is_zero()
    return _exact(
        "derivative_recurrence_general", ok, "weight-cleared derivative relation, three weights"
    )


def check_derivative_recurrence_base() -> CheckResult:
    ok = True
    for m in range(2, 6):
        for k in range(3):
            for n in range(1, 11):
                ok = ok and legendre_recurrence_residual(n, k, m).is_zero()
    return _exact("derivative_recurrence_base", ok, "weight-free derivative relation")


def check_bonnet_coefficients() -> CheckResult:
    ok = True
    for m in range(2, 6):
        for k in range(4):
            for n in range(10):
                ok = ok and bonnet_residual(n, k, m).is_zero()
    return _exact("bonnet_coefficients", ok, "x times a member is the stated two-term sum")


def check_bonnet_normalized() -> CheckResult:
    ok = True
    for m in range(2, 6):
        for k in range(4):
            for n in range(10):
                ok = ok and bonnet_normalized_residual(n, k, m).is_zero()
    return _exact("bonnet_normalized", ok, "normalized two-term sum with closed-form scales")


def check_x_orthogonality() -> CheckResult:
    ok = True
    for m in (2, 3):
        for k in range(3):
            for k2 in range(3):
                bases = canonical_basis(m, k)
                bases2 = canonical_basis(m, k2)
                for n in (0, 2, 4):
                    for n2 in (0, 2, 4):
                        left = clifford_legendre(n, k, m).radial
                        right = mul_x(clifford_legendre(n2, k2, m).radial)
                        factor = radial_ball_integral(left, right)
                        for y in bases:
                            for y2 in bases2:
                                mv, _ = sphere_inner_vector_raw(y, y2)
                                ok = ok and (factor * mv).is_zero()
    return _exact("x_orthogonality", ok, "even members stay orthogonal after an x insertion")


def check_expansion_support() -> CheckResult:
    ok = True
    for m in (2, 3, 4):
        for k in range(3):
            for n in range(1, 7):
                shifted = mul_x(clifford_legendre(n, k, m).radial)
                big_n = n // 2
                alpha, beta = (
                    bonnet_odd(big_n, k, m) if n % 2 else bonnet_even(big_n, k, m)
                )
                for j in range(n + 3):
                    if j % 2 == n % 2:
                        continue
                    member = clifford_legendre(j, k, m).radial
                    coeff = radial_ball_integral(shifted, member) / norm_sq(j, k, m)
                    if j == n + 1:
                        ok = ok and coeff == alpha
                    elif j == n - 1:
                        ok = ok and coeff == beta
                    else:
                        ok = ok and coeff == 0
    return _exact("expansion_support", ok, "x image meets the family at adjacent degrees only")


def check_ball_orthogonality() -> CheckResult:
    worst = 0.0
    for m in (2, 3):
        family = []
        for k in range(3):
            dims = len(canonical_basis(m, k))
            for n in range(6):
                for i in range(1, dims + 1):
                    family.append(normalize(clifford_legendre(n, k, m, i)))
        report = gram_report(family)
        if report.max_off_diagonal != 0.0:
            return CheckResult(
                "ball_orthogonality", False, report.max_off_diagonal, "exact off-diagonal leak"
            )
        worst = max(worst, report.max_diagonal_deviation)
    return _bounded("ball_orthogonality", worst, 1e-12, "normalized family vs identity")


def check_jacobi_ode() -> CheckResult:
    ok = True
    for m in (2, 3, 4):
        for k in range(4):
            for n in range(11):
                big_n, beta = radial_jacobi_parameters(n, k, m)
                ok = ok and jacobi_ode_residual(jacobi_build(big_n, 0, beta)).is_zero()
    return _exact("jacobi_ode", ok, "hypergeometric equation holds coefficientwise")


def check_jacobi_identification() -> CheckResult:
    ok = True
    for m in range(2, 6):
        for k in range(4):
            for n in range(11):
                ok = ok and jacobi_radial_residual(n, k, m).is_zero()
    return _exact("jacobi_identification", ok, "radial part is a shifted Jacobi polynomial")


def check_zero_interlacing() -> CheckResult:
    ok = True
    for m in (2, 3):
        for k in range(5):
            for n in range(2, 11):
                triple = [zero_radii(n + d, k, m) for d in range(3)]
                ok = ok and radii_interlacing_check(*triple)
    return _exact("zero_interlacing", ok, "consecutive-degree sphere radii alternate")


def check_root_certification() -> CheckResult:
    width = 2e-13
    ok = True
    for big_n in range(1, 9):
        for beta in (Fraction(0), Fraction(1), Fraction(3, 2), Fraction(3)):
            p = jacobi_build(big_n, 0, beta)
            for root in jacobi_zeros(big_n, 0, beta):
                lo = p.poly(Fraction(root - width))
                hi = p.poly(Fraction(root + width))
                ok = ok and lo * hi < 0
    return _exact("root_certification", ok, "sign change confirmed beside every root")


def check_quadrature_exactness() -> CheckResult:
    import itertools

    worst = 0.0
    for m in (2, 3):
        rule = build_rule(m, 8)
        pts, weights = rule.ball_points()
        for degree in range(rule.exactness + 1):
            for expo in itertools.product(range(degree + 1), repeat=m):
                if sum(expo) != degree:
                    continue
                approx = float(np.dot(weights, np.prod(pts ** np.array(expo), axis=1)))
                moment = sphere_moment(expo)
                exact = float(moment.rational) * math.pi**moment.pi_power / (degree + m)
                worst = max(worst, abs(approx - exact))
    return _bounded("quadrature_exactness", worst, 1e-12, "monomials up to declared degree")


def check_fourier_oracle_agreement() -> CheckResult:
    rule = build_rule(2, 100)
    worst = 0.0
    for n in range(4):
        for k in range(3):
            p = clifford_legendre(n, k, 2)
            for radius in (0.5, 1.0, 2.0, 5.0):
                xi = (0.6 * radius, 0.8 * radius)
                closed = fourier_transform(p, xi)
                numeric = numeric_fourier(p, xi, rule)
                scale = max(
                    max(abs(c) for c in closed.re.coeffs),
                    max(abs(c) for c in closed.im.coeffs),
                )
                err = max(
                    max(abs(a - b) for a, b in zip(closed.re.coeffs, numeric.re.coeffs)),
                    max(abs(a - b) for a, b in zip(closed.im.coeffs, numeric.im.coeffs)),
                )
                worst = max(worst, err / scale)
    return _bounded("fourier_oracle_agreement", worst, 1e-6, "closed form vs quadrature")


def check_parseval_truncated() -> CheckResult:
    worst = 0.0
    for n in range(3):
        for k in range(2):
            estimate, exact = plancherel_radial_check(n, k, 2)
            worst = max(worst, abs(estimate - exact) / max(1.0, exact))
    return _bounded("parseval_truncated", worst, 1e-4, "profile energy vs closed norm")


def check_radial_collapse() -> CheckResult:
    ok = True
    for m in range(2, 7):
        for k in range(5):
            for big_n in range(6):
                ok = ok and degeneracy_radial_collapse(big_n, k, m).is_zero()
    return _exact("radial_collapse", ok, "normalized odd and shifted even radial parts cancel")


def check_plane_collapse() -> CheckResult:
    ok = True
    for k in range(7):
        for big_n in range(7):
            first, second = degeneracy_m2(big_n, k)
            ok = ok and first.is_zero() and second.is_zero()
    worst = 0.0
    for k in range(3):
        for big_n in range(3):
            for point in ((0.3, 0.4), (-0.7, 0.2), (0.5, -0.5)):
                worst = max(worst, _max_abs(degeneracy_defect(big_n, k, 2, point)))
    if not ok:
        return CheckResult("plane_collapse", False, float("nan"), "radial residual nonzero")
    return _bounded("plane_collapse", worst, 1e-12, "plane members collapse pairwise")


def check_space_defect_control() -> CheckResult:
    smallest = float("inf")
    point = (0.3, -0.4, 0.5)
    for k in range(2):
        for big_n in range(2):
            smallest = min(smallest, _max_abs(degeneracy_defect(big_n, k, 3, point)))
    passed = smallest > 1e-3
    return CheckResult(
        "space_defect_control",
        passed,
        smallest,
        "three-dimensional defect must stay away from zero",
    )


CHECKS: dict[str, Callable[[], CheckResult]] = {
    fn.__name__.removeprefix("check_"): fn
    for fn in (
        check_associativity,
        check_generator_relations,
        check_vector_reflection,
        check_conjugation_reversal,
        check_grade_projection,
        check_monogenicity,
        check_vector_sphere_orthogonality,
        check_sphere_cross_degree,
        check_coordinate_operator_agreement,
        check_plane_degree_shift,
        check_product_commutation,
        check_euler_commutation,
        check_euler_eigen_relation,
        check_lowering_product_rule,
        check_rodrigues_divisibility,
        check_triple_construction,
        check_eigenvalue_relation,
        check_three_term_recurrence,
        check_derivative_recurrence_general,
        check_derivative_recurrence_base,
        check_bonnet_coefficients,
        check_bonnet_normalized,
        check_x_orthogonality,
        check_expansion_support,
        check_ball_orthogonality,
        check_jacobi_ode,
        check_jacobi_identification,
        check_zero_interlacing,
        check_root_certification,
        check_quadrature_exactness,
        check_fourier_oracle_agreement,
        check_parseval_truncated,
        check_radial_collapse,
        check_plane_collapse,
        check_space_defect_control,
    )
}

SUITES: dict[str, tuple[str, ...]] = {
    "algebra": (
        "associativity",
        "generator_relations",
        "vector_reflection",
        "conjugation_reversal",
        "grade_projection",
        "monogenicity",
        "vector_sphere_orthogonality",
        "sphere_cross_degree",
        "coordinate_operator_agreement",
        "plane_degree_shift",
    ),
    "radial": (
        "product_commutation",
        "euler_commutation",
        "euler_eigen_relation",
        "lowering_product_rule",
        "rodrigues_divisibility",
        "triple_construction",
        "eigenvalue_relation",
    ),
    "recurrence": (
        "three_term_recurrence",
        "derivative_recurrence_general",
        "derivative_recurrence_base",
    ),
    "bonnet": (
        "bonnet_coefficients",
        "bonnet_normalized",
        "x_orthogonality",
        "expansion_support",
        "ball_orthogonality",
    ),
    "jacobi": (
        "jacobi_ode",
        "jacobi_identification",
        "zero_interlacing",
        "root_certification",
    ),
    "fourier": (
        "quadrature_exactness",
        "fourier_oracle_agreement",
        "parseval_truncated",
    ),
    "degeneracy": (
        "radial_collapse",
        "plane_collapse",
        "space_defect_control",
    ),
}

# Which checks witness the documented invariants of each library module.
# Every invariant stated in a module docstring's contract corresponds to
# at least one check here, and a test holds this map against the registry.
MODULE_COVERAGE: dict[str, tuple[str, ...]] = {
    "algebra": (
        "associativity",
        "generator_relations",
        "vector_reflection",
        "conjugation_reversal",
        "grade_projection",
    ),
    "radial": (
        "product_commutation",
        "euler_commutation",
        "euler_eigen_relation",
        "lowering_product_rule",
        "three_term_recurrence",
        "derivative_recurrence_general",
        "derivative_recurrence_base",
        "rodrigues_divisibility",
    ),
    "monogenics": (
        "monogenicity",
        "vector_sphere_orthogonality",
        "sphere_cross_degree",
        "coordinate_operator_agreement",
        "plane_degree_shift",
    ),
    "legendre": (
        "triple_construction",
        "ball_orthogonality",
        "x_orthogonality",
        "expansion_support",
        "eigenvalue_relation",
    ),
    "jacobi": (
        "jacobi_ode",
        "jacobi_identification",
        "zero_interlacing",
        "root_certification",
    ),
    "analysis": (
        "quadrature_exactness",
        "fourier_oracle_agreement",
        "parseval_truncated",
    ),
}


def suite_names() -> tuple[str, ...]:
    return tuple(SUITES) + ("all",)


def run_suite(suite: str) -> list[CheckResult]:
    """Run one named suite, or every check once for the full sweep."""
    if suite == "all":
        names: Iterable[str] = CHECKS
    elif suite in SUITES:
        names = SUITES[suite]
    else:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(suite_names())}")
    return [CHECKS[name]() for name in names]
