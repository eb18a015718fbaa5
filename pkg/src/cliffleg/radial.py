"""Exact calculus on radial-times-monogenic forms.

Every polynomial this package constructs is either P(|x|^2) Y_k(x) or
x Q(|x|^2) Y_k(x) with Y_k a degree-k spherical monogenic.  Writing
t = |x|^2, the Dirac and Euler operators, multiplication by x, and the
weighted Dirac operators act on the radial polynomial alone, with the
action depending only on the parity tag, k, and m.  This module keeps
that radial polynomial over exact rationals and implements the whole
operator calculus plus the recurrence and eigenvalue formulas, so every
identity can be checked with no floating-point tolerance at all.

The Gegenbauer-type polynomials (weight parameter alpha, alpha = 0 the
Legendre case) are built here as radial forms; attaching a concrete
monogenic basis and evaluating on coordinates happens in
:mod:`cliffleg.monogenics` and :mod:`cliffleg.legendre`.

Verified contract (runtime checks live in :mod:`cliffleg.verify`):

- the Dirac operator obeys the product rule across multiplication by x;
- the Dirac and Euler operators commute up to one Dirac application;
- the Euler eigenvalue relation routes through the derivative member;
- the weight-lowering operator product splits as stated;
- the three-term recurrence holds exactly;
- the derivative recurrence holds for every weight parameter;
- the base-weight derivative recurrence holds after clearing denominators;
- Dirac powers of (1 - t)^n stay divisible by the remaining power.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

NEG_INF = float("-inf")


class InexactDivisionError(ArithmeticError):
    """A polynomial division expected to be exact left a remainder."""


class RationalPoly:
    """Univariate polynomial in t over exact rationals.

    Coefficients are stored lowest degree first with trailing zeros
    trimmed, and the zero polynomial has degree -inf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls()

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, r: int, c=1) -> "RationalPoly":
        return cls([0] * r + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coefficient(self, r: int) -> Fraction:
        if 0 <= r < len(self.coeffs):
            return self.coeffs[r]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            [self.coefficient(r) + other.coefficient(r) for r in range(n)]
        )

    def __sub__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            [self.coefficient(r) - other.coefficient(r) for r in range(n)]
        )

    def __neg__(self):
        return RationalPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, RationalPoly):
            if not self.coeffs or not other.coeffs:
                return RationalPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return RationalPoly(out)
        return RationalPoly([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return RationalPoly([other * c for c in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = RationalPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "RationalPoly":
        return RationalPoly([r * c for r, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0 * x if not self.coeffs else self.coeffs[-1]
        if not self.coeffs:
            return acc
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, inner: "RationalPoly") -> "RationalPoly":
        acc = RationalPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + RationalPoly((c,))
        return acc

    def divide_exact(self, divisor: "RationalPoly") -> "RationalPoly":
        """Quotient self / divisor, raising if the remainder is nonzero."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        lead = divisor.coeffs[-1]
        if len(rem) - 1 < dd:
            if any(rem):
                raise InexactDivisionError("degree too small for exact quotient")
            return RationalPoly()
        q = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + dd] / lead
            q[i] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    rem[i + j] -= c * b
        if any(rem):
            raise InexactDivisionError("nonzero remainder in exact division")
        return RationalPoly(q)

    def __eq__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "RationalPoly(0)"
        terms = []
        for r, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if r == 0 else f"{c}*t^{r}")
        return "RationalPoly(" + " + ".join(terms) + ")"


ONE_MINUS_T = RationalPoly((1, -1))


def squarefree_split(n: int) -> tuple[int, int]:
    """Write a positive integer as s^2 * r with r squarefree."""
    if n <= 0:
        raise ValueError("positive integer required")
    s, r = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
            if e & 1:
                r *= d
        d += 1 if d == 2 else 2
    return s, r * n


@dataclass(frozen=True)
class SqrtScale:
    """Exact scale of the form rational * sqrt(radical).

    The radical is kept positive and squarefree, so equality of scales is
    literal field equality and squaring lands back in the rationals.
    Normalization constants and the coefficients of normalized
    recurrences all live in this set, which is what lets the normalized
    identities be checked exactly.
    """

    rational: Fraction
    radical: int = 1

    def __post_init__(self):
        if self.radical <= 0:
            raise ValueError("radical must be positive")
        _, r = squarefree_split(self.radical)
        if r != self.radical:
            raise ValueError("radical must be squarefree; use from_square")

    @classmethod
    def from_square(cls, q) -> "SqrtScale":
        """The nonnegative square root of a rational, kept exact."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("cannot take a real square root of a negative")
        if q == 0:
            return cls(Fraction(0), 1)
        s, r = squarefree_split(q.numerator * q.denominator)
        return cls(Fraction(s, q.denominator), r)

    def __mul__(self, other):
        if isinstance(other, SqrtScale):
            s, r = squarefree_split(self.radical * other.radical)
            return SqrtScale(self.rational * other.rational * s, r)
        return SqrtScale(self.rational * Fraction(other), self.radical)

    __rmul__ = __mul__

    def __neg__(self):
        return SqrtScale(-self.rational, self.radical)

    def square(self) -> Fraction:
        return self.rational * self.rational * self.radical

    def is_rational(self) -> bool:
        return self.radical == 1 or self.rational == 0

    def __float__(self):
        return float(self.rational) * math.sqrt(self.radical)


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    def flip(self) -> "Parity":
        return Parity.ODD if self is Parity.EVEN else Parity.EVEN


@dataclass(frozen=True)
class ParityRadialForm:
    """Radial polynomial with a parity tag against a degree-k monogenic.

    Denotes poly(t) * Y_k(x) when parity is Even and x * poly(t) * Y_k(x)
    when parity is Odd, with t = |x|^2.  The monogenic itself is symbolic
    here; m and k are carried because the operator actions depend on
    them.
    """

    m: int
    k: int
    parity: Parity
    poly: RationalPoly

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("dimension must be at least 2")
        if self.k < 0:
            raise ValueError("monogenic degree must be nonnegative")

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def total_degree(self):
        d = self.poly.degree
        if d == NEG_INF:
            return NEG_INF
        return 2 * d + self.k + (1 if self.parity is Parity.ODD else 0)

    def _require_compatible(self, other: "ParityRadialForm") -> None:
        if (self.m, self.k, self.parity) != (other.m, other.k, other.parity):
            raise ValueError("forms differ in dimension, degree, or parity")

    def __add__(self, other):
        if not isinstance(other, ParityRadialForm):
            return NotImplemented
        self._require_compatible(other)
        return ParityRadialForm(self.m, self.k, self.parity, self.poly + other.poly)

    def __sub__(self, other):
        if not isinstance(other, ParityRadialForm):
            return NotImplemented
        self._require_compatible(other)
        return ParityRadialForm(self.m, self.k, self.parity, self.poly - other.poly)

    def __neg__(self):
        return ParityRadialForm(self.m, self.k, self.parity, -self.poly)

    def scale(self, c) -> "ParityRadialForm":
        return ParityRadialForm(self.m, self.k, self.parity, self.poly * c)

    def scale_poly(self, p: RationalPoly) -> "ParityRadialForm":
        return ParityRadialForm(self.m, self.k, self.parity, self.poly * p)


def even_form(m: int, k: int, poly: RationalPoly) -> ParityRadialForm:
    return ParityRadialForm(m, k, Parity.EVEN, poly)


def odd_form(m: int, k: int, poly: RationalPoly) -> ParityRadialForm:
    return ParityRadialForm(m, k, Parity.ODD, poly)


def unit_form(m: int, k: int) -> ParityRadialForm:
    """The monogenic itself: Even with radial polynomial 1."""
    return even_form(m, k, RationalPoly.one())


def dirac(f: ParityRadialForm) -> ParityRadialForm:
    """Dirac operator sum e_j d/dx_j on a radial form; parity flips.

    On even monomials x^s Y_k the operator gives -s x^(s-1) Y_k and on
    odd ones -(s+2k+m-1) x^(s-1) Y_k; with x^2 = -t those two cases
    collapse to the closed forms below.
    """
    p = f.poly
    if f.parity is Parity.EVEN:
        return odd_form(f.m, f.k, 2 * p.derivative())
    q = RationalPoly.monomial(1, 2) * p.derivative() + (2 * f.k + f.m) * p
    return even_form(f.m, f.k, -q)


def euler(f: ParityRadialForm) -> ParityRadialForm:
    """Euler operator sum x_j d/dx_j; scales each homogeneous piece by its degree."""
    base = f.k + (1 if f.parity is Parity.ODD else 0)
    out = RationalPoly(
        [(2 * r + base) * c for r, c in enumerate(f.poly.coeffs)]
    )
    return ParityRadialForm(f.m, f.k, f.parity, out)


def mul_x(f: ParityRadialForm) -> ParityRadialForm:
    """Left multiplication by the vector variable x; parity flips, x^2 = -t."""
    if f.parity is Parity.EVEN:
        return odd_form(f.m, f.k, f.poly)
    return even_form(f.m, f.k, RationalPoly.monomial(1, -1) * f.poly)


def weighted_dirac(f: ParityRadialForm, alpha) -> ParityRadialForm:
    """Dirac operator conjugated by powers of the weight 1 - |x|^2.

    Acts as (1-t)^(-alpha) after differentiating the weight-multiplied
    form; the result is polynomial for every rational alpha > -1 because
    the non-polynomial factors cancel in closed form.
    """
    alpha = Fraction(alpha)
    if alpha <= -1:
        raise ValueError("weight exponent must exceed -1")
    p = f.poly
    core = ONE_MINUS_T * p.derivative() - (alpha + 1) * p
    if f.parity is Parity.EVEN:
        return odd_form(f.m, f.k, 2 * core)
    q = RationalPoly.monomial(1, 2) * core + (2 * f.k + f.m) * ONE_MINUS_T * p
    return even_form(f.m, f.k, -q)


def gegenbauer_by_operators(n: int, k: int, m: int, alpha=0) -> ParityRadialForm:
    """Degree-n Gegenbauer-type radial form from the operator product.

    Applies the weighted Dirac operators with parameters alpha+n-1 down
    to alpha, innermost first, to the bare monogenic.  alpha = 0 gives
    the Legendre family.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha = Fraction(alpha)
    f = unit_form(m, k)
    for j in range(n - 1, -1, -1):
        f = weighted_dirac(f, alpha + j)
    return f


def rodrigues_integer_alpha(n: int, k: int, m: int, alpha: int = 0) -> ParityRadialForm:
    """Rodrigues construction (1-t)^(-alpha) dirac^n [(1-t)^(alpha+n) Y_k].

    Restricted to integer alpha >= 0 so the weight power stays in the
    polynomial ring; the final division must be exact and raises
    InexactDivisionError otherwise.
    """
    if alpha < 0 or int(alpha) != alpha:
        raise ValueError("Rodrigues path requires integer alpha >= 0")
    alpha = int(alpha)
    f = even_form(m, k, ONE_MINUS_T ** (alpha + n))
    for _ in range(n):
        f = dirac(f)
    quotient = f.poly.divide_exact(ONE_MINUS_T**alpha)
    return ParityRadialForm(f.m, f.k, f.parity, quotient)


def gegenbauer_eigenvalue(alpha, n: int, m: int, k: int) -> Fraction:
    """Eigenvalue of the weighted second-order operator on the degree-n form."""
    alpha = Fraction(alpha)
    if n % 2 == 0:
        return Fraction(n) * (2 * alpha + n + m + 2 * k)
    return (2 * alpha + n + 1) * Fraction(n + m + 2 * k - 1)


def gegenbauer_operator(f: ParityRadialForm, alpha) -> ParityRadialForm:
    """The second-order operator whose eigenfunctions the family is: weighted Dirac after Dirac."""
    return weighted_dirac(dirac(f), alpha)


def weight_commutation_coeffs(l: int, m: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients for commuting the weight 1 - |x|^2 past l Dirac applications.

    dirac^l[(1-t) f] decomposes as A_l dirac^(l-2) f + B_l euler(dirac^(l-2) f)
    + C_l x dirac^(l-1) f + (1-t) dirac^l f; this returns (A_l, B_l, C_l).
    """
    if l < 0:
        raise ValueError("order must be nonnegative")
    sign = -1 if l & 1 else 1
    a = Fraction(l * l + l * (m - 2)) + Fraction((1 - m) * (1 - sign), 2)
    b = Fraction(2 * l - 1 + sign)
    c = Fraction(sign - 1)
    return a, b, c


def weight_split_residual(l: int, f: ParityRadialForm) -> ParityRadialForm:
    """Residual of the weight commutation decomposition applied to f; contract: zero."""
    lhs = ParityRadialForm(f.m, f.k, f.parity, ONE_MINUS_T * f.poly)
    for _ in range(l):
        lhs = dirac(lhs)
    a, b, c = weight_commutation_coeffs(l, f.m)
    d1 = f
    for _ in range(max(l - 1, 0)):
        d1 = dirac(d1)
    rhs = ParityRadialForm(lhs.m, lhs.k, lhs.parity, RationalPoly.zero())
    if l >= 2:
        d2 = f
        for _ in range(l - 2):
            d2 = dirac(d2)
        rhs = rhs + d2.scale(a) + euler(d2).scale(b)
    elif a or b:
        raise AssertionError("low-order coefficients expected to vanish")
    if l >= 1:
        rhs = rhs + mul_x(d1).scale(c)
    dl = dirac(d1) if l >= 1 else f
    rhs = rhs + ParityRadialForm(dl.m, dl.k, dl.parity, ONE_MINUS_T * dl.poly)
    return lhs - rhs


def derivative_recurrence_coeffs(n: int, k: int, m: int) -> tuple[Fraction, Fraction]:
    """Coefficient pair for the three-term Dirac-derivative recurrence at weight 0."""
    a_next, b_next, c_next = weight_commutation_coeffs(n + 1, m)
    alpha = (
        a_next
        + (n + k + 1) * b_next
        - (m + 2 * n + 2 * k) * c_next
        + gegenbauer_eigenvalue(0, n, m, k)
    )
    beta = 2 * n * (2 * c_next - b_next)
    return alpha, beta


def three_term_residual(n: int, k: int, m: int) -> ParityRadialForm:
    """Residual of the three-term Dirac-derivative recurrence; contract: zero.

    dirac(C_{n+1}) = alpha C_n + beta dirac(C_{n-1}) - C^w_{n+1} x dirac(C_n)
    with C^w the third weight-commutation coefficient.
    """
    if n < 1:
        raise ValueError("recurrence needs degree at least 1")
    c_n = gegenbauer_by_operators(n, k, m)
    c_prev = gegenbauer_by_operators(n - 1, k, m)
    c_next = gegenbauer_by_operators(n + 1, k, m)
    alpha, beta = derivative_recurrence_coeffs(n, k, m)
    _, _, c_w = weight_commutation_coeffs(n + 1, m)
    rhs = c_n.scale(alpha) + dirac(c_prev).scale(beta) - mul_x(dirac(c_n)).scale(c_w)
    return dirac(c_next) - rhs


def legendre_recurrence_residual(n: int, k: int, m: int) -> ParityRadialForm:
    """Residual of the weight-0 derivative recurrence; contract: zero.

    dirac(C_{n+1}) = 4(n+1)[(n+k+m/2) C_n - n dirac(C_{n-1})].
    """
    if n < 1:
        raise ValueError("recurrence needs degree at least 1")
    c_n = gegenbauer_by_operators(n, k, m)
    c_prev = gegenbauer_by_operators(n - 1, k, m)
    c_next = gegenbauer_by_operators(n + 1, k, m)
    coef = 2 * (n + 1) * Fraction(2 * n + 2 * k + m)
    rhs = c_n.scale(coef) - dirac(c_prev).scale(4 * (n + 1) * n)
    return dirac(c_next) - rhs


def gegenbauer_recurrence_residual(n: int, k: int, m: int, alpha) -> ParityRadialForm:
    """Residual of the corrected general-weight derivative recurrence; contract: zero.

    dirac(C^a_{n+1}) = 4(n+a+1)(n+a+k+m/2)[C^a_n + 2a x C^(a+1)_{n-1}]
                       - 4(n+a+1)(n+a) dirac(C^a_{n-1}).
    The middle term raises the weight by one; that keeps every term at
    the same parity, which the weight-preserving variant cannot do.
    """
    if n < 1:
        raise ValueError("recurrence needs degree at least 1")
    alpha = Fraction(alpha)
    c_n = gegenbauer_by_operators(n, k, m, alpha)
    c_prev = gegenbauer_by_operators(n - 1, k, m, alpha)
    c_next = gegenbauer_by_operators(n + 1, k, m, alpha)
    c_prev_up = gegenbauer_by_operators(n - 1, k, m, alpha + 1)
    lead = 4 * (n + alpha + 1) * (n + alpha + k + Fraction(m, 2))
    bracket = c_n + mul_x(c_prev_up).scale(2 * alpha)
    rhs = bracket.scale(lead) - dirac(c_prev).scale(4 * (n + alpha + 1) * (n + alpha))
    return dirac(c_next) - rhs


def gegenbauer_recurrence_residual_literal(
    n: int, k: int, m: int, alpha
) -> tuple[ParityRadialForm, ParityRadialForm]:
    """Residual of the weight-preserving recurrence, cleared of its denominator.

    (1-t) dirac(C^a_{n+1}) = 4(n+a+1)(n+a+k+m/2)[(1-t) C^a_n + 2a C^a_{n-1}]
                             - 4(n+a+1)(n+a)(1-t) dirac(C^a_{n-1}).
    The terms split across two parities, so the residual comes back as a
    (same-parity, opposite-parity) pair; both vanish exactly at a = 0,
    where the relation reduces to the weight-0 recurrence.  For a >= 1
    the relation does not hold (see the general-weight variant for the
    identity that does).
    """
    if n < 1:
        raise ValueError("recurrence needs degree at least 1")
    alpha = Fraction(alpha)
    c_n = gegenbauer_by_operators(n, k, m, alpha)
    c_prev = gegenbauer_by_operators(n - 1, k, m, alpha)
    c_next = gegenbauer_by_operators(n + 1, k, m, alpha)
    lead = 4 * (n + alpha + 1) * (n + alpha + k + Fraction(m, 2))
    tail = 4 * (n + alpha + 1) * (n + alpha)
    main = (
        dirac(c_next).scale_poly(ONE_MINUS_T)
        - c_n.scale_poly(ONE_MINUS_T).scale(lead)
        + dirac(c_prev).scale_poly(ONE_MINUS_T).scale(tail)
    )
    off = c_prev.scale(-2 * alpha * lead)
    return main, off


def euler_identity_residual(n: int, k: int, m: int) -> ParityRadialForm:
    """Residual of the Euler-operator identity on the weight-0 family; contract: zero.

    E[C_n] = (n+k) C_n - 2n dirac(C_{n-1}).  The derivative lands on the
    degree-(n-1) member; that index keeps both sides at one parity and
    is what the derivation actually produces.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    c_n = gegenbauer_by_operators(n, k, m)
    rhs = c_n.scale(Fraction(n + k))
    if n >= 1:
        c_prev = gegenbauer_by_operators(n - 1, k, m)
        rhs = rhs - dirac(c_prev).scale(2 * n)
    return euler(c_n) - rhs


def radial_ode_residual(f: ParityRadialForm, n: int) -> RationalPoly:
    """Residual of the radial second-order equation for an even-degree member.

    For the radial polynomial P of the even form, returns
    t(1-t) P'' + [(m/2+k) - (1+m/2+k) t] P' + (eigenvalue/4) P,
    which vanishes identically on the weight-0 family.
    """
    if f.parity is not Parity.EVEN:
        raise ValueError("the radial equation applies to even forms")
    p = f.poly
    t_poly = RationalPoly.monomial(1)
    first = RationalPoly(
        (Fraction(f.m, 2) + f.k,)
    ) - RationalPoly.monomial(1, 1 + Fraction(f.m, 2) + f.k)
    out = t_poly * ONE_MINUS_T * p.derivative().derivative()
    out = out + first * p.derivative()
    out = out + (gegenbauer_eigenvalue(0, n, f.m, f.k) / 4) * p
    return out
