"""Independent coordinate-level oracles shared by the test modules.

Everything here works on explicit multivariate polynomials with
multivector coefficients, term by term, with none of the radial-form
shortcuts the library uses.  Slow and obviously correct; the library
must agree with it.
"""

from fractions import Fraction

from cliffleg.algebra import Multivector, geometric_product


class CoordPoly:
    """Polynomial in x_1..x_m with multivector coefficients.

    Terms map an exponent tuple to a Multivector coefficient.
    """

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {}
        if terms:
            for expo, mv in terms.items():
                self._add_term(expo, mv)

    def _add_term(self, expo, mv):
        if mv.is_zero():
            return
        if expo in self.terms:
            total = self.terms[expo] + mv
            if total.is_zero():
                del self.terms[expo]
            else:
                self.terms[expo] = total
        else:
            self.terms[expo] = mv

    @classmethod
    def constant(cls, m, mv):
        return cls(m, {(0,) * m: mv})

    def __add__(self, other):
        out = CoordPoly(self.m, dict(self.terms))
        for expo, mv in other.terms.items():
            out._add_term(expo, mv)
        return out

    def __sub__(self, other):
        return self + other.scale(Fraction(-1))

    def scale(self, c):
        return CoordPoly(self.m, {e: mv * c for e, mv in self.terms.items()})

    def left_mul(self, mv):
        out = CoordPoly(self.m)
        for expo, coef in self.terms.items():
            out._add_term(expo, geometric_product(mv, coef))
        return out

    def right_mul(self, mv):
        out = CoordPoly(self.m)
        for expo, coef in self.terms.items():
            out._add_term(expo, geometric_product(coef, mv))
        return out

    def mul_coordinate(self, j, power=1):
        out = CoordPoly(self.m)
        for expo, mv in self.terms.items():
            new = list(expo)
            new[j] += power
            out._add_term(tuple(new), mv)
        return out

    def mul_poly(self, other):
        out = CoordPoly(self.m)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                out._add_term(expo, geometric_product(c1, c2))
        return out

    def partial(self, j):
        out = CoordPoly(self.m)
        for expo, mv in self.terms.items():
            if expo[j]:
                new = list(expo)
                new[j] -= 1
                out._add_term(tuple(new), mv * Fraction(expo[j]))
        return out

    def is_zero(self):
        return not self.terms

    def evaluate(self, point):
        acc = Multivector.zero(self.m)
        for expo, mv in self.terms.items():
            c = Fraction(1)
            for x, e in zip(point, expo):
                c *= Fraction(x) ** e
            acc = acc + mv * c
        return acc

    def __eq__(self, other):
        return self.m == other.m and (self - other).is_zero()


def coord_dirac(f: CoordPoly) -> CoordPoly:
    out = CoordPoly(f.m)
    for j in range(f.m):
        ej = Multivector.blade(f.m, 1 << j, Fraction(1))
        out = out + f.partial(j).left_mul(ej)
    return out


def coord_euler(f: CoordPoly) -> CoordPoly:
    out = CoordPoly(f.m)
    for j in range(f.m):
        out = out + f.partial(j).mul_coordinate(j)
    return out


def coord_mul_x(f: CoordPoly) -> CoordPoly:
    out = CoordPoly(f.m)
    for j in range(f.m):
        ej = Multivector.blade(f.m, 1 << j, Fraction(1))
        out = out + f.left_mul(ej).mul_coordinate(j)
    return out


def norm_sq_poly(m: int) -> CoordPoly:
    out = CoordPoly(m)
    one = Multivector.scalar(m, Fraction(1))
    for j in range(m):
        out = out + CoordPoly.constant(m, one).mul_coordinate(j, 2)
    return out


def degree_one_monogenic(m: int) -> CoordPoly:
    """x_1 e_1 - x_2 e_2, a degree-1 monogenic in any dimension."""
    e1 = Multivector.blade(m, 0b01, Fraction(1))
    e2 = Multivector.blade(m, 0b10, Fraction(1))
    f = CoordPoly.constant(m, e1).mul_coordinate(0)
    return f + CoordPoly.constant(m, e2).mul_coordinate(1).scale(Fraction(-1))


def realize_form(form, monogenic: CoordPoly) -> CoordPoly:
    """Expand a radial form into coordinates against a concrete monogenic."""
    m = form.m
    t = norm_sq_poly(m)
    out = CoordPoly(m)
    t_power = CoordPoly.constant(m, Multivector.scalar(m, Fraction(1)))
    for c in form.poly.coeffs:
        if c:
            out = out + t_power.mul_poly(monogenic).scale(c)
        t_power = t_power.mul_poly(t)
    from cliffleg.radial import Parity

    if form.parity is Parity.ODD:
        out = coord_mul_x(out)
    return out


def ball_radial_factor(f, g) -> Fraction:
    """Exact radial factor of a unit-ball inner product of two parity forms.

    For forms P(t) [x] Y_a and Q(t) [x] Y_b the ball integral splits
    into a sphere factor times the radial integral of P(r^2) Q(r^2)
    r^(a + b + m - 1), with one extra power of r for each loose vector
    factor (two odd forms contribute r^2 through conj(x) x = |x|^2, a
    mixed pair contributes the single inserted vector).  This returns
    the radial integral alone, exactly.
    """
    from cliffleg.radial import Parity

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
