"""Clifford algebra with negative-definite generators.

The algebra over R^m is generated by e_1, ..., e_m with e_j^2 = -1 and
e_i e_j = -e_j e_i for i != j.  A basis blade e_A is encoded as a bitmask
over the generators (bit j-1 set means e_j divides the blade), so the
scalar unit is mask 0 and the pseudoscalar is mask 2^m - 1.  Multivectors
store a dense list of 2^m coefficients; the scalar type is whatever the
caller puts in (``fractions.Fraction`` for exact work, ``float`` for
numeric paths), and products only iterate over nonzero entries.

Verified contract (runtime checks live in :mod:`cliffleg.verify`):

- products associate;
- generator squares and anticommutation hold in every supported dimension;
- a vector reflects through each generator, e_j x + x e_j = -2 x_j;
- conjugation reverses products;
- grade projections split every element into a direct sum.
"""

from __future__ import annotations

from fractions import Fraction

MAX_DIM = 12


def _check_dim(m: int) -> None:
    if not 2 <= m <= MAX_DIM:
        raise ValueError(f"dimension must be between 2 and {MAX_DIM}, got {m}")


def _check_mask(mask: int, m: int) -> None:
    if not 0 <= mask < (1 << m):
        raise ValueError(f"blade mask {mask} out of range for dimension {m}")


def blade_grade(mask: int) -> int:
    """Number of generators in the blade."""
    return mask.bit_count()


def blade_product(a: int, b: int, m: int) -> tuple[int, int]:
    """Multiply two basis blades.

    Returns ``(sign, mask)`` with e_A e_B = sign * e_{A xor B}.  The sign
    counts the transpositions needed to interleave the two sorted
    generator strings, plus one factor -1 for every shared generator
    (e_j^2 = -1).
    """
    _check_mask(a, m)
    _check_mask(b, m)
    swaps = 0
    rest = b
    while rest:
        j = (rest & -rest).bit_length() - 1
        swaps += (a >> (j + 1)).bit_count()
        rest &= rest - 1
    sign = -1 if swaps & 1 else 1
    if (a & b).bit_count() & 1:
        sign = -sign
    return sign, a ^ b


def conjugation_sign(grade: int) -> int:
    """Sign of Hermitian conjugation on a blade of the given grade.

    Reversing a grade-g blade contributes (-1)^(g(g-1)/2) and negating
    each generator contributes (-1)^g, for (-1)^(g(g+1)/2) total.
    """
    return -1 if (grade * (grade + 1) // 2) & 1 else 1


def blade_label(mask: int) -> str:
    """Human-readable blade name: ``1``, ``e1``, ``e12``, ...

    Generator indices are comma-separated once any of them needs two
    digits, so labels stay unambiguous up to the dimension cap.
    """
    if mask == 0:
        return "1"
    idx = [j + 1 for j in range(MAX_DIM) if mask >> j & 1]
    sep = "," if idx[-1] > 9 else ""
    return "e" + sep.join(str(j) for j in idx)


class Multivector:
    """Dense element of the Clifford algebra over R^m.

    Parameters
    ----------
    m : int
        Dimension of the underlying vector space, 2 <= m <= 12.
    coeffs : sequence, optional
        2^m scalars indexed by blade mask.  Defaults to the zero element.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=None):
        _check_dim(m)
        self.m = m
        if coeffs is None:
            self.coeffs = [0] * (1 << m)
        else:
            coeffs = list(coeffs)
            if len(coeffs) != 1 << m:
                raise ValueError(f"expected {1 << m} coefficients, got {len(coeffs)}")
            self.coeffs = coeffs

    @classmethod
    def zero(cls, m: int) -> "Multivector":
        return cls(m)

    @classmethod
    def scalar(cls, m: int, value) -> "Multivector":
        u = cls(m)
        u.coeffs[0] = value
        return u

    @classmethod
    def blade(cls, m: int, mask: int, coeff=1) -> "Multivector":
        _check_dim(m)
        _check_mask(mask, m)
        u = cls(m)
        u.coeffs[mask] = coeff
        return u

    @classmethod
    def from_dict(cls, m: int, comps: dict) -> "Multivector":
        u = cls(m)
        for mask, c in comps.items():
            _check_mask(mask, m)
            u.coeffs[mask] = u.coeffs[mask] + c
        return u

    def items(self):
        """Iterate ``(mask, coefficient)`` over nonzero components."""
        for mask, c in enumerate(self.coeffs):
            if c:
                yield mask, c

    @property
    def scalar_part(self):
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_scalar(self) -> bool:
        return not any(self.coeffs[1:])

    def grades(self) -> set[int]:
        return {blade_grade(mask) for mask, _ in self.items()}

    def _require_same_dim(self, other: "Multivector") -> None:
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: {self.m} vs {other.m}")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._require_same_dim(other)
        return Multivector(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._require_same_dim(other)
        return Multivector(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Multivector(self.m, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return Multivector(self.m, [a * other for a in self.coeffs])

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return NotImplemented
        return Multivector(self.m, [other * a for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.m == other.m and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.m, tuple(self.coeffs)))

    def map_coeffs(self, fn) -> "Multivector":
        return Multivector(self.m, [fn(a) for a in self.coeffs])

    def to_float(self) -> "Multivector":
        return self.map_coeffs(float)

    def conjugate(self) -> "Multivector":
        return hermitian_conjugate(self)

    def grade(self, k: int) -> "Multivector":
        return grade_project(self, k)

    def abs_sq(self):
        """Squared norm, the scalar part of conj(u) u; equals sum of squares."""
        return sum((c * c for _, c in self.items()), start=0 * self.coeffs[0])

    def __repr__(self):
        terms = [f"{c}*{blade_label(mask)}" for mask, c in self.items()]
        body = " + ".join(terms) if terms else "0"
        return f"Multivector(m={self.m}: {body})"


def geometric_product(u: Multivector, v: Multivector) -> Multivector:
    """Clifford product of two multivectors of the same dimension."""
    u._require_same_dim(v)
    out = [0] * (1 << u.m)
    for a, ca in u.items():
        for b, cb in v.items():
            sign, mask = blade_product(a, b, u.m)
            term = ca * cb
            out[mask] = out[mask] + (term if sign > 0 else -term)
    return Multivector(u.m, out)


def grade_project(u: Multivector, k: int) -> Multivector:
    """Keep only the grade-k part of u."""
    if not 0 <= k <= u.m:
        raise ValueError(f"grade {k} out of range for dimension {u.m}")
    out = Multivector(u.m)
    for mask, c in u.items():
        if blade_grade(mask) == k:
            out.coeffs[mask] = c
    return out


def hermitian_conjugate(u: Multivector) -> Multivector:
    """Apply the conjugation with conj(e_j) = -e_j, conj(ab) = conj(b)conj(a)."""
    out = Multivector(u.m)
    for mask, c in u.items():
        out.coeffs[mask] = c if conjugation_sign(blade_grade(mask)) > 0 else -c
    return out


def clifford_inner(u: Multivector, v: Multivector) -> tuple[Multivector, object]:
    """Clifford-valued pairing conj(u) v and its scalar part.

    The scalar part is the real inner product; for v = u it equals the
    sum of squared coefficients.
    """
    u._require_same_dim(v)
    full = geometric_product(hermitian_conjugate(u), v)
    return full, full.scalar_part


def embed_vector(coords, m: int | None = None) -> Multivector:
    """Represent a coordinate tuple as the grade-1 element sum x_j e_j."""
    coords = list(coords)
    if m is None:
        m = len(coords)
    if len(coords) != m:
        raise ValueError(f"expected {m} coordinates, got {len(coords)}")
    u = Multivector(m)
    for j, x in enumerate(coords):
        u.coeffs[1 << j] = x
    return u


def pseudoscalar(m: int) -> Multivector:
    return Multivector.blade(m, (1 << m) - 1)


class ComplexMultivector:
    """Multivector with complex scalar coefficients, stored as re + i*im.

    Needed wherever the complex exponential kernel multiplies algebra
    elements; the two components share a dimension and combine by the
    usual complex bilinearity.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Multivector, im: Multivector | None = None):
        if im is None:
            im = Multivector.zero(re.m)
        re._require_same_dim(im)
        self.re = re
        self.im = im

    @property
    def m(self) -> int:
        return self.re.m

    @classmethod
    def from_complex_scalar(cls, m: int, z: complex) -> "ComplexMultivector":
        return cls(Multivector.scalar(m, z.real), Multivector.scalar(m, z.imag))

    def __add__(self, other):
        if not isinstance(other, ComplexMultivector):
            return NotImplemented
        return ComplexMultivector(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, ComplexMultivector):
            return NotImplemented
        return ComplexMultivector(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexMultivector(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, ComplexMultivector):
            return ComplexMultivector(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, Multivector):
            return ComplexMultivector(self.re * other, self.im * other)
        if isinstance(other, complex):
            return ComplexMultivector(
                self.re * other.real - self.im * other.imag,
                self.re * other.imag + self.im * other.real,
            )
        return ComplexMultivector(self.re * other, self.im * other)

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return ComplexMultivector(other * self.re, other * self.im)
        if isinstance(other, complex):
            return self.__mul__(other)
        return ComplexMultivector(other * self.re, other * self.im)

    def __eq__(self, other):
        if not isinstance(other, ComplexMultivector):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def conjugate(self) -> "ComplexMultivector":
        """Hermitian conjugation combined with complex conjugation."""
        return ComplexMultivector(self.re.conjugate(), -self.im.conjugate())

    def abs_sq(self):
        return self.re.abs_sq() + self.im.abs_sq()

    def component(self, mask: int) -> complex:
        return complex(self.re.coeffs[mask], self.im.coeffs[mask])

    def __repr__(self):
        return f"ComplexMultivector(re={self.re!r}, im={self.im!r})"


def rational_multivector(m: int, comps: dict[int, Fraction | int]) -> Multivector:
    """Build an exact multivector, coercing entries to Fraction."""
    return Multivector.from_dict(m, {a: Fraction(c) for a, c in comps.items()})
