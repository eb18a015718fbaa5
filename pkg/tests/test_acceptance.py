"""Acceptance run: the eleven headline guarantees, one line each.

Every test exercises one guarantee end to end at its stated scale and
prints a single PASS or FAIL line (run with -s to watch them stream).
Exact guarantees assert zero residuals in rational arithmetic; the
floating-point guarantees carry explicit numeric budgets, and the timed
guarantees assert a wall-clock budget as well.
"""

import math
import random
import time
from fractions import Fraction

from cliffleg.analysis import (
    ball_inner,
    ball_inner_exact,
    build_rule,
    gram_report,
    numeric_fourier,
    plancherel_radial_check,
    radial_ball_integral,
)
from cliffleg.jacobi import radii_interlacing_check, vanishes_at_origin, zero_radii
from cliffleg.legendre import (
    bonnet_normalized_residual,
    bonnet_odd,
    bonnet_residual,
    canonical_basis,
    clifford_legendre,
    degeneracy_defect,
    degeneracy_m2,
    explicit_radial,
    fourier_transform,
    jacobi_radial_id,
    jacobi_radial_residual,
    norm_sq,
    normalize,
)
from cliffleg.monogenics import (
    monogenic_space_dim,
    sphere_inner_raw,
    sphere_inner_vector_raw,
)
from cliffleg.radial import (
    RationalPoly,
    euler_identity_residual,
    even_form,
    gegenbauer_by_operators,
    gegenbauer_eigenvalue,
    gegenbauer_operator,
    gegenbauer_recurrence_residual,
    gegenbauer_recurrence_residual_literal,
    legendre_recurrence_residual,
    mul_x,
    odd_form,
    rodrigues_integer_alpha,
    three_term_residual,
    weight_split_residual,
)


def report(tag: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} {tag}: {detail}")
    assert ok, f"{tag}: {detail}"


def normalized_family(m: int):
    return [
        normalize(clifford_legendre(n, k, m, i))
        for n in range(7)
        for k in range(4)
        for i in range(1, monogenic_space_dim(m, k) + 1)
    ]


def test_criterion_01_triple_construction():
    start = time.perf_counter()
    ok = True
    for m in range(2, 7):
        for k in range(5):
            for n in range(9):
                explicit = explicit_radial(n, k, m)
                operators = gegenbauer_by_operators(n, k, m, 0)
                rodrigues = rodrigues_integer_alpha(n, k, m, 0)
                ok = ok and explicit == operators == rodrigues
                for alpha in (1, 2):
                    ok = ok and (
                        gegenbauer_by_operators(n, k, m, alpha)
                        == rodrigues_integer_alpha(n, k, m, alpha)
                    )
    elapsed = time.perf_counter() - start
    report(
        "criterion 1",
        ok and elapsed < 10.0,
        "explicit, operator, and Rodrigues constructions agree exactly "
        f"for n<=8, k<=4, m<=6, weights 0..2 ({elapsed:.1f}s)",
    )


def test_criterion_02_eigenvalue_identity():
    ok = gegenbauer_eigenvalue(0, 1, 2, 0) == 4
    ok = ok and gegenbauer_eigenvalue(0, 2, 2, 0) == 8
    for m in range(2, 7):
        for k in range(5):
            for n in range(9):
                for alpha in (0, 1, 2):
                    member = gegenbauer_by_operators(n, k, m, alpha)
                    value = gegenbauer_eigenvalue(alpha, n, m, k)
                    residual = gegenbauer_operator(member, alpha) - member.scale(value)
                    ok = ok and residual.is_zero()
    report(
        "criterion 2",
        ok,
        "second-order operator eigenvalue identity exact on the full grid, "
        "odd/even spot values 4 and 8",
    )


def test_criterion_03_bonnet_formulas():
    start = time.perf_counter()
    ok = bonnet_odd(0, 0, 2) == (Fraction(-1, 8), Fraction(1))
    for m in range(2, 7):
        for k in range(5):
            # degrees 0..11 cover both parity branches through N = 5
            for n in range(12):
                ok = ok and bonnet_residual(n, k, m).is_zero()
                ok = ok and bonnet_normalized_residual(n, k, m).is_zero()
    elapsed = time.perf_counter() - start
    report(
        "criterion 3",
        ok and elapsed < 5.0,
        "plain and normalized two-term multiplication formulas exact for "
        f"N<=5, k<=4, m<=6; spot pair (-1/8, 1) ({elapsed:.1f}s)",
    )


def test_criterion_04_recurrences():
    ok = True
    for m in (2, 3, 4):
        for k in range(3):
            for n in range(1, 11):
                ok = ok and three_term_residual(n, k, m).is_zero()
                ok = ok and legendre_recurrence_residual(n, k, m).is_zero()
                main, off = gegenbauer_recurrence_residual_literal(n, k, m, 0)
                ok = ok and main.is_zero() and off.is_zero()
                for alpha in (0, 1, 2):
                    ok = ok and gegenbauer_recurrence_residual(
                        n, k, m, alpha
                    ).is_zero()
            for n in range(11):
                ok = ok and euler_identity_residual(n, k, m).is_zero()
    rng = random.Random(20260822)
    for level in range(2, 7):
        for m in (2, 3, 5):
            for parity_odd in (False, True):
                coeffs = [
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)
                ]
                form = (odd_form if parity_odd else even_form)(
                    m, 1, RationalPoly(coeffs)
                )
                ok = ok and weight_split_residual(level, form).is_zero()
    report(
        "criterion 4",
        ok,
        "three-term, derivative (general and denominator-cleared), and "
        "homogeneity recurrences exact for n<=10; operator split exact on "
        "random forms through level 6",
    )


def test_criterion_05_norm_formula():
    ok = True
    for m in range(2, 7):
        for k in range(4):
            for n in range(7):
                member = clifford_legendre(n, k, m)
                mv, scale = ball_inner_exact(member, member)
                ok = ok and scale.radical == 1
                ok = ok and scale.rational * mv.coeffs[0] == norm_sq(n, k, m)
    worst = 0.0
    for m in (2, 3):
        rule = build_rule(m, 24)
        for k in range(4):
            for n in range(7):
                member = clifford_legendre(n, k, m)
                expected = float(norm_sq(n, k, m))
                got = ball_inner(member, member, rule).coeffs[0]
                worst = max(worst, abs(got - expected) / max(1.0, abs(expected)))
    ok = ok and worst < 1e-10
    report(
        "criterion 5",
        ok,
        "closed norm reproduced exactly for n<=6, m<=6; quadrature relative "
        f"error {worst:.1e}",
    )


def test_criterion_06_orthogonality():
    ok = True
    for m in range(2, 7):
        family = normalized_family(m)
        for a, pa in enumerate(family):
            for b in range(a, len(family)):
                mv, scale = ball_inner_exact(pa, family[b])
                if b == a:
                    ok = ok and scale.radical == 1
                    ok = ok and scale.rational * mv.coeffs[0] == 1
                else:
                    ok = ok and mv.is_zero()
    worst = 0.0
    for m in (2, 3):
        rule = build_rule(m, 24)
        rep = gram_report(normalized_family(m), rule)
        worst = max(worst, rep.max_off_diagonal, rep.max_diagonal_deviation)
    ok = ok and worst < 1e-10
    # the x image of an even member integrates to zero against the even
    # family: the radial factor is finite, the sphere factor vanishes
    for m in (2, 3, 4):
        for k in range(3):
            for k2 in range(3):
                for n in (0, 2, 4):
                    for n2 in (0, 2, 4):
                        factor = radial_ball_integral(
                            clifford_legendre(n, k, m).radial,
                            mul_x(clifford_legendre(n2, k2, m).radial),
                        )
                        for y in canonical_basis(m, k):
                            for y2 in canonical_basis(m, k2):
                                mv, _ = sphere_inner_vector_raw(y, y2)
                                ok = ok and (factor * mv).is_zero()
    report(
        "criterion 6",
        ok,
        "normalized family Gram is the identity: exactly on the moment path "
        f"for m<=6, to {worst:.1e} by quadrature; x insertion stays "
        "orthogonal exactly",
    )


def test_criterion_07_jacobi_identification():
    ok = True
    for m in range(2, 7):
        for k in range(5):
            # degrees 0..17 cover Jacobi degrees through N = 8
            for n in range(18):
                ok = ok and jacobi_radial_residual(n, k, m).is_zero()
            sign, scale_sq, _ = jacobi_radial_id(0, k, m)
            ok = ok and sign == 1
            ok = ok and scale_sq == 2 * k + m
    report(
        "criterion 7",
        ok,
        "normalized radial parts match shifted Jacobi polynomials with the "
        "squared scale cleared, N<=8; recorded sign at N=0 is +",
    )


def test_criterion_08_fourier_transform():
    start = time.perf_counter()
    rule = build_rule(2, 108)
    worst = 0.0
    for n in range(4):
        for k in range(3):
            member = clifford_legendre(n, k, 2)
            for radius in (0.5, 1.0, 2.0, 5.0):
                xi = (0.6 * radius, 0.8 * radius)
                closed = fourier_transform(member, xi)
                oracle = numeric_fourier(member, xi, rule)
                err = 0.0
                scale = 0.0
                for mine, other in (
                    (closed.re.coeffs, oracle.re.coeffs),
                    (closed.im.coeffs, oracle.im.coeffs),
                ):
                    for c_mine, c_other in zip(mine, other):
                        err = max(err, abs(c_mine - c_other))
                        scale = max(scale, abs(c_mine))
                worst = max(worst, err / max(scale, 1e-30))
    ok = worst < 1e-6
    worst_energy = 0.0
    for n in range(3):
        for k in range(2):
            estimate, exact = plancherel_radial_check(n, k)
            worst_energy = max(
                worst_energy, abs(estimate - exact) / max(1.0, exact)
            )
    ok = ok and worst_energy < 1e-4
    elapsed = time.perf_counter() - start
    report(
        "criterion 8",
        ok and elapsed < 60.0,
        f"closed transform vs quadrature oracle rel {worst:.1e}; truncated "
        f"profile energy vs closed norm rel {worst_energy:.1e} ({elapsed:.1f}s)",
    )


def test_criterion_09_zeros_and_interlacing():
    ok = abs(zero_radii(2, 0, 2)[0] - 1.0 / math.sqrt(2.0)) < 1e-12
    for m in (2, 3):
        for k in range(5):
            for n in range(13):
                radii = zero_radii(n, k, m)
                ok = ok and len(radii) == n // 2
                ok = ok and vanishes_at_origin(n) == (n % 2 == 1)
                ok = ok and radii_interlacing_check(
                    radii,
                    zero_radii(n + 1, k, m),
                    zero_radii(n + 2, k, m),
                )
    report(
        "criterion 9",
        ok,
        "members vanish on floor(n/2) spheres (origin for odd n); radii of "
        "three consecutive degrees interlace for n<=12, k<=4; spot radius "
        "1/sqrt(2)",
    )


def test_criterion_10_plane_degeneracy():
    ok = True
    for big_n in range(7):
        for k in range(7):
            first, second = degeneracy_m2(big_n, k)
            ok = ok and first.is_zero() and second.is_zero()
    point = (0.3, -0.4, 0.5)
    for big_n, k in ((0, 0), (1, 2), (2, 1)):
        defect = degeneracy_defect(big_n, k, 3, point)
        size = math.sqrt(sum(float(c) ** 2 for c in defect.coeffs))
        ok = ok and size > 1e-3
    report(
        "criterion 10",
        ok,
        "normalized odd member cancels the shifted even member exactly in "
        "the plane, N<=6, k<=6; three-dimensional control stays nonzero",
    )


def test_criterion_11_monogenic_bases():
    ok = True
    for m in range(2, 7):
        for k in range(9):
            ok = ok and monogenic_space_dim(m, k) == math.comb(m + k - 2, k)
    for m, kmax in ((2, 6), (3, 4)):
        for k in range(kmax + 1):
            basis = canonical_basis(m, k)
            ok = ok and basis.dimension == math.comb(m + k - 2, k)
            elements = list(basis)
            for a, ya in enumerate(elements):
                for b, yb in enumerate(elements):
                    mv, pi_power = sphere_inner_raw(ya, yb)
                    if a == b:
                        ok = ok and mv.is_scalar()
                        ok = ok and ya.scale_pi_power == -pi_power
                        ok = ok and mv.coeffs[0] * ya.scale_sq == 1
                    else:
                        ok = ok and mv.is_zero()
    for m in (2, 3):
        elements = [el for k in range(4) for el in canonical_basis(m, k)]
        for ya in elements:
            for yb in elements:
                mv, _ = sphere_inner_vector_raw(ya, yb)
                ok = ok and mv.is_zero()
    report(
        "criterion 11",
        ok,
        "space dimensions match the binomial count; orthonormality is exact "
        "(so within 1e-12 a fortiori); vector-inserted sphere integrals "
        "vanish exactly",
    )
