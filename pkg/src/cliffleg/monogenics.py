"""Spherical monogenics and exact sphere integration.

Monogenic polynomials are homogeneous solutions of the Dirac equation
``sum_j e_j d/dx_j (p) = 0`` with values in the Clifford algebra R_{0,m}.
For each degree k they form a free right module of rank
binomial(m + k - 2, k); this module builds exact orthonormal bases for
that module.  The plane has a closed-form family; higher dimensions go
through an integer nullspace of the Dirac constraint and a right-module
Gram-Schmidt driven by exact monomial moments over the unit sphere, so
orthonormality certificates are rational identities rather than float
comparisons.

Verified contract (runtime checks live in :mod:`cliffleg.verify`):

- every basis member solves the Dirac equation;
- a monogenic is sphere-orthogonal to any vector-inserted monogenic;
- members of distinct degrees are sphere-orthogonal;
- form-level operators agree with the coordinate-level operators;
- the plane family satisfies the degree shift x Y_k = e_1 Y_{k+1}.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .algebra import Multivector, blade_product, geometric_product, hermitian_conjugate

# Default size caps for basis construction; beyond them the exact linear
# algebra still terminates but stops being interactive.
BUILD_MAX_M = 6
BUILD_MAX_K = 8

Exponent = tuple[int, ...]


class GramNotScalar(ArithmeticError):
    """Orthonormalization failed to certify a scalar, unit Gram matrix."""

    def __init__(self, m: int, k: int, detail: str) -> None:
        super().__init__(f"basis for m={m}, k={k} failed the Gram check: {detail}")
        self.m = m
        self.k = k


class PiRational(NamedTuple):
    """Exact real number of the form rational * pi**pi_power."""

    rational: Fraction
    pi_power: int

    def __float__(self) -> float:
        return float(self.rational) * math.pi**self.pi_power

    def is_zero(self) -> bool:
        return self.rational == 0


def _gamma_half_over_sqrt_pi(twice: int) -> Fraction:
    """Gamma(twice / 2) / sqrt(pi) for odd positive ``twice``."""
    n = (twice - 1) // 2
    return Fraction(math.factorial(2 * n), 4**n * math.factorial(n))


@lru_cache(maxsize=None)
def _sphere_moment_cached(exponents: Exponent) -> PiRational:
    if any(a % 2 for a in exponents):
        return PiRational(Fraction(0), 0)
    m = len(exponents)
    numerator = Fraction(2)
    for a in exponents:
        numerator *= _gamma_half_over_sqrt_pi(a + 1)
    # Twice the total Gamma argument; its parity decides whether a stray
    # sqrt(pi) survives in the denominator.
    twice_total = sum(exponents) + m
    if twice_total % 2 == 0:
        denominator = Fraction(math.factorial(twice_total // 2 - 1))
    else:
        denominator = _gamma_half_over_sqrt_pi(twice_total)
    return PiRational(numerator / denominator, m // 2)


def sphere_moment(exponents: Sequence[int]) -> PiRational:
    """Integrate the monomial ``theta**exponents`` over the unit sphere.

    Any odd exponent gives zero.  Otherwise the value is
    2 * prod_j Gamma((a_j + 1) / 2) / Gamma(sum_j (a_j + 1) / 2), an exact
    rational multiple of pi**(m // 2).
    """
    expo = tuple(int(a) for a in exponents)
    if len(expo) < 2:
        raise ValueError("sphere moments need at least two coordinates")
    if any(a < 0 for a in expo):
        raise ValueError("exponents must be nonnegative")
    return _sphere_moment_cached(expo)


def unit_sphere_area(m: int) -> PiRational:
    """Surface measure of S^{m-1} as an exact rational times a pi power."""
    return sphere_moment((0,) * m)


def monogenic_space_dim(m: int, k: int) -> int:
    """Rank of the right module of degree-k monogenics on R^m."""
    if m < 2:
        raise ValueError("need at least two dimensions")
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return math.comb(m + k - 2, k)


class MonogenicPolynomial:
    """Homogeneous Clifford-valued polynomial with an exact prefactor.

    Coefficients map exponent multi-indices of total degree k to exact
    multivectors.  The prefactor sqrt(scale_sq * pi**scale_pi_power) is
    carried symbolically so sphere-normalized elements keep rational
    coefficient data.  The container itself does not assert monogenicity;
    basis constructors only hand out instances whose Dirac image is zero,
    and ``is_monogenic`` checks the property for anything else.
    """

    __slots__ = ("m", "k", "_coefficients", "scale_sq", "scale_pi_power", "_hash")

    def __init__(
        self,
        m: int,
        k: int,
        coefficients: dict[Exponent, Multivector] | None = None,
        scale_sq: Fraction | int = 1,
        scale_pi_power: int = 0,
    ) -> None:
        if m < 2:
            raise ValueError("need at least two dimensions")
        if k < 0:
            raise ValueError("degree must be nonnegative")
        scale_sq = Fraction(scale_sq)
        if scale_sq <= 0:
            raise ValueError("squared prefactor must be positive")
        cleaned: dict[Exponent, Multivector] = {}
        for expo, mv in (coefficients or {}).items():
            expo = tuple(int(a) for a in expo)
            if len(expo) != m:
                raise ValueError(f"exponent {expo} does not have {m} entries")
            if any(a < 0 for a in expo):
                raise ValueError(f"exponent {expo} has a negative entry")
            if sum(expo) != k:
                raise ValueError(f"exponent {expo} is not of total degree {k}")
            if not isinstance(mv, Multivector):
                raise TypeError("coefficients must be Multivector values")
            if mv.m != m:
                raise ValueError("coefficient lives in a different algebra")
            if not mv.is_zero():
                cleaned[expo] = mv
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "_coefficients", cleaned)
        object.__setattr__(self, "scale_sq", scale_sq)
        object.__setattr__(self, "scale_pi_power", int(scale_pi_power))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MonogenicPolynomial is immutable")

    def items(self) -> list[tuple[Exponent, Multivector]]:
        return sorted(self._coefficients.items())

    def coefficient(self, expo: Sequence[int]) -> Multivector:
        return self._coefficients.get(tuple(expo), Multivector.zero(self.m))

    def is_zero(self) -> bool:
        return not self._coefficients

    def is_monogenic(self) -> bool:
        return dirac_on_polynomial(self).is_zero()

    def float_scale(self) -> float:
        return math.sqrt(float(self.scale_sq) * math.pi**self.scale_pi_power)

    def with_scale(self, scale_sq: Fraction | int, scale_pi_power: int) -> "MonogenicPolynomial":
        return MonogenicPolynomial(self.m, self.k, dict(self._coefficients), scale_sq, scale_pi_power)

    def left_multiplied(self, const: Multivector) -> "MonogenicPolynomial":
        coeffs = {expo: geometric_product(const, mv) for expo, mv in self._coefficients.items()}
        return MonogenicPolynomial(self.m, self.k, coeffs, self.scale_sq, self.scale_pi_power)

    def right_multiplied(self, const: Multivector) -> "MonogenicPolynomial":
        coeffs = {expo: geometric_product(mv, const) for expo, mv in self._coefficients.items()}
        return MonogenicPolynomial(self.m, self.k, coeffs, self.scale_sq, self.scale_pi_power)

    def evaluate_raw(self, point: Sequence[object]) -> Multivector:
        """Evaluate the coefficient polynomial alone, without the prefactor.

        Exact when handed exact coordinates.
        """
        if len(point) != self.m:
            raise ValueError(f"expected {self.m} coordinates")
        total = Multivector.zero(self.m)
        for expo, mv in self._coefficients.items():
            weight = 1
            for x, a in zip(point, expo):
                weight *= x**a
            total = total + weight * mv
        return total

    def evaluate(self, point: Sequence[float]) -> Multivector:
        """Evaluate at float coordinates, prefactor included."""
        raw = self.evaluate_raw([float(x) for x in point])
        return (self.float_scale() * raw).to_float()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonogenicPolynomial):
            return NotImplemented
        return (
            self.m == other.m
            and self.k == other.k
            and self._coefficients == other._coefficients
            and self.scale_sq == other.scale_sq
            and self.scale_pi_power == other.scale_pi_power
        )

    def __hash__(self) -> int:
        # Computed on first use so the cached inner products can key on
        # polynomials; shared basis objects make later lookups cheap.
        if self._hash is None:
            data = tuple(
                (expo, tuple(mv.coeffs)) for expo, mv in self.items()
            )
            object.__setattr__(
                self,
                "_hash",
                hash((self.m, self.k, self.scale_sq, self.scale_pi_power, data)),
            )
        return self._hash

    def __repr__(self) -> str:
        return (
            f"MonogenicPolynomial(m={self.m}, k={self.k}, "
            f"terms={len(self._coefficients)}, scale_sq={self.scale_sq})"
        )


class MonogenicBasis:
    """Immutable orthonormal family spanning the degree-k monogenics."""

    __slots__ = ("m", "k", "elements")

    def __init__(self, m: int, k: int, elements: Iterable[MonogenicPolynomial]) -> None:
        elems = tuple(elements)
        for el in elems:
            if el.m != m or el.k != k:
                raise ValueError("basis element has mismatched dimension or degree")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "elements", elems)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MonogenicBasis is immutable")

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[MonogenicPolynomial]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> MonogenicPolynomial:
        return self.elements[i]

    def __repr__(self) -> str:
        return f"MonogenicBasis(m={self.m}, k={self.k}, dimension={len(self.elements)})"


def dirac_on_polynomial(p: MonogenicPolynomial) -> MonogenicPolynomial:
    """Coordinate-level Dirac operator sum_j e_j d/dx_j, degree drops by one."""
    acc: dict[Exponent, Multivector] = {}
    for expo, mv in p.items():
        for j, a in enumerate(expo):
            if a == 0:
                continue
            dropped = expo[:j] + (a - 1,) + expo[j + 1 :]
            term = a * geometric_product(Multivector.blade(p.m, 1 << j), mv)
            prev = acc.get(dropped)
            acc[dropped] = term if prev is None else prev + term
    return MonogenicPolynomial(p.m, max(p.k - 1, 0), acc, p.scale_sq, p.scale_pi_power)


def x_times(p: MonogenicPolynomial) -> MonogenicPolynomial:
    """Left multiplication by the vector variable x, degree rises by one."""
    acc: dict[Exponent, Multivector] = {}
    for expo, mv in p.items():
        for j in range(p.m):
            raised = expo[:j] + (expo[j] + 1,) + expo[j + 1 :]
            term = geometric_product(Multivector.blade(p.m, 1 << j), mv)
            prev = acc.get(raised)
            acc[raised] = term if prev is None else prev + term
    return MonogenicPolynomial(p.m, p.k + 1, acc, p.scale_sq, p.scale_pi_power)


def _require_same_algebra(p: MonogenicPolynomial, q: MonogenicPolynomial) -> None:
    if p.m != q.m:
        raise ValueError("polynomials live on different spaces")


def _parity_groups(p: MonogenicPolynomial) -> dict[int, list[tuple[Exponent, Multivector]]]:
    groups: dict[int, list[tuple[Exponent, Multivector]]] = {}
    for expo, mv in p.items():
        groups.setdefault(_parity_mask(expo), []).append((expo, mv))
    return groups


@lru_cache(maxsize=None)
def sphere_inner_raw(p: MonogenicPolynomial, q: MonogenicPolynomial) -> tuple[Multivector, int]:
    """Integrate conj(p) q over the unit sphere, prefactors excluded.

    Returns the exact multivector value together with the pi power shared
    by every nonzero monomial moment, namely m // 2.  Cached: ball Gram
    matrices reuse one sphere factor across every radial degree pair.
    """
    _require_same_algebra(p, q)
    m = p.m
    acc: dict[int, Fraction] = {}
    # A nonzero moment needs every exponent even, so only monomial pairs
    # with matching parity patterns contribute.  Accumulating per blade
    # pair avoids dense multivector arithmetic in the hot loop.
    groups = _parity_groups(q)
    for ea, ca in p.items():
        conj_items = list(hermitian_conjugate(ca).items())
        for eb, cb in groups.get(_parity_mask(ea), ()):
            mom = _sphere_moment_cached(tuple(x + y for x, y in zip(ea, eb)))
            if not mom.rational:
                continue
            for mask_a, va in conj_items:
                weight = mom.rational * va
                for mask_b, vb in cb.items():
                    sign, mask = blade_product(mask_a, mask_b, m)
                    acc[mask] = acc.get(mask, Fraction(0)) + sign * weight * vb
    return Multivector.from_dict(m, acc), m // 2


@lru_cache(maxsize=None)
def sphere_inner_vector_raw(p: MonogenicPolynomial, q: MonogenicPolynomial) -> tuple[Multivector, int]:
    """Integrate conj(p) theta q over the unit sphere, prefactors excluded."""
    _require_same_algebra(p, q)
    m = p.m
    acc: dict[int, Fraction] = {}
    # The inserted coordinate shifts one exponent by one, so contributing
    # pairs have parity patterns differing in exactly that coordinate.
    groups = _parity_groups(q)
    for ea, ca in p.items():
        conj_ca = hermitian_conjugate(ca)
        parity_a = _parity_mask(ea)
        for j in range(m):
            partner = groups.get(parity_a ^ (1 << j))
            if not partner:
                continue
            middle = list(geometric_product(conj_ca, Multivector.blade(m, 1 << j)).items())
            for eb, cb in partner:
                base = tuple(x + y for x, y in zip(ea, eb))
                bumped = base[:j] + (base[j] + 1,) + base[j + 1 :]
                mom = _sphere_moment_cached(bumped)
                if not mom.rational:
                    continue
                for mask_a, va in middle:
                    weight = mom.rational * va
                    for mask_b, vb in cb.items():
                        sign, mask = blade_product(mask_a, mask_b, m)
                        acc[mask] = acc.get(mask, Fraction(0)) + sign * weight * vb
    return Multivector.from_dict(m, acc), m // 2


def _verify_orthonormal(basis: MonogenicBasis) -> None:
    """Reject a basis whose scaled sphere Gram is not exactly the identity."""
    for i, p in enumerate(basis.elements):
        for j in range(i, len(basis.elements)):
            q = basis.elements[j]
            value, power = sphere_inner_raw(p, q)
            if i == j:
                if not value.is_scalar():
                    raise GramNotScalar(basis.m, basis.k, f"self inner product {i} is not scalar")
                norm = value.scalar_part
                if norm <= 0:
                    raise GramNotScalar(basis.m, basis.k, f"self inner product {i} is not positive")
                if p.scale_sq * norm != 1 or power + p.scale_pi_power != 0:
                    raise GramNotScalar(basis.m, basis.k, f"element {i} is not unit-normalized")
            elif not value.is_zero():
                raise GramNotScalar(basis.m, basis.k, f"elements {i} and {j} are not orthogonal")


@lru_cache(maxsize=None)
def m2_basis(k: int) -> MonogenicBasis:
    """Closed-form plane basis: the single element of degree k on R^2.

    The coefficient polynomial is e_1 u_k - e_2 v_k where u_k + i v_k
    expands (x_1 + i x_2)**k, and the prefactor squares to 1 / (2 pi).
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    u: dict[Exponent, Fraction] = {(0, 0): Fraction(1)}
    v: dict[Exponent, Fraction] = {}
    for _ in range(k):
        nu: dict[Exponent, Fraction] = {}
        nv: dict[Exponent, Fraction] = {}
        for (a, b), c in u.items():
            nu[(a + 1, b)] = nu.get((a + 1, b), Fraction(0)) + c
            nv[(a, b + 1)] = nv.get((a, b + 1), Fraction(0)) + c
        for (a, b), c in v.items():
            nu[(a, b + 1)] = nu.get((a, b + 1), Fraction(0)) - c
            nv[(a + 1, b)] = nv.get((a + 1, b), Fraction(0)) + c
        u, v = nu, nv
    coeffs: dict[Exponent, Multivector] = {}
    for expo in set(u) | set(v):
        comps = {0b01: u.get(expo, Fraction(0)), 0b10: -v.get(expo, Fraction(0))}
        coeffs[expo] = Multivector.from_dict(2, comps)
    element = MonogenicPolynomial(2, k, coeffs, Fraction(1, 2), -1)
    basis = MonogenicBasis(2, k, (element,))
    _verify_orthonormal(basis)
    return basis


def _monomial_exponents(m: int, k: int) -> list[Exponent]:
    """All degree-k exponent tuples on m coordinates, in a fixed order."""
    out: list[Exponent] = []
    for cuts in itertools.combinations(range(k + m - 1), m - 1):
        prev = -1
        expo = []
        for c in cuts:
            expo.append(c - prev - 1)
            prev = c
        expo.append(k + m - 2 - prev)
        out.append(tuple(expo))
    return sorted(out)


def _parity_mask(expo: Exponent) -> int:
    mask = 0
    for j, a in enumerate(expo):
        if a % 2:
            mask |= 1 << j
    return mask


def _blade_sign(j: int, mask: int, m: int) -> int:
    # Sign of e_j e_mask; the product mask itself is mask ^ (1 << j).
    sign, _ = blade_product(1 << j, mask, m)
    return sign


def _dirac_block_rows(m: int, k: int, columns: list[Exponent]) -> list[dict[int, int]]:
    """Dirac constraint on the slice whose blade equals the exponent parity.

    Right multiplication by any blade carries this slice onto the one with
    a shifted blade pattern, so its solutions generate the full solution
    space as a right module.
    """
    col_index = {expo: i for i, expo in enumerate(columns)}
    rows: list[dict[int, int]] = []
    for beta in _monomial_exponents(m, k - 1):
        row: dict[int, int] = {}
        for j in range(m):
            alpha = beta[:j] + (beta[j] + 1,) + beta[j + 1 :]
            sign = _blade_sign(j, _parity_mask(alpha), m)
            row[col_index[alpha]] = (beta[j] + 1) * sign
        rows.append(row)
    return rows


def _nullspace(rows: list[dict[int, int]], ncols: int) -> list[dict[int, int]]:
    """Integer basis of the kernel, one vector per free column."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        for pc in sorted(set(row) & set(pivots)):
            factor = row.pop(pc)
            for c, v in pivots[pc].items():
                if c == pc:
                    continue
                nv = row.get(c, Fraction(0)) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        reduced = {c: v * inv for c, v in row.items()}
        for other in pivots.values():
            if lead in other:
                factor = other.pop(lead)
                for c, v in reduced.items():
                    if c == lead:
                        continue
                    nv = other.get(c, Fraction(0)) - factor * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        pivots[lead] = reduced
    vectors: list[dict[int, int]] = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec: dict[int, Fraction] = {free: Fraction(1)}
        for pc, prow in pivots.items():
            if free in prow:
                vec[pc] = -prow[free]
        vectors.append(_integerize(vec))
    return vectors


def _integerize(vec: dict) -> dict:
    """Clear denominators, divide out the content, and fix the leading sign."""
    scale = math.lcm(*(v.denominator for v in vec.values()))
    ints = {c: int(v * scale) for c, v in vec.items() if v}
    common = math.gcd(*ints.values())
    ints = {c: v // common for c, v in ints.items()}
    if ints[min(ints)] < 0:
        ints = {c: -v for c, v in ints.items()}
    return ints


def _candidate_gram(
    m: int, candidates: list[dict[Exponent, int]]
) -> list[list[Fraction]]:
    """Pairwise sphere inner products of parity-slice candidates.

    Matching parity forces matching blades, and conj(e_A) e_A = 1, so each
    entry is the plain scalar sum of coefficient products against moments.
    """
    grouped: list[dict[int, list[tuple[Exponent, int]]]] = []
    for cand in candidates:
        groups: dict[int, list[tuple[Exponent, int]]] = {}
        for expo, coeff in cand.items():
            groups.setdefault(_parity_mask(expo), []).append((expo, coeff))
        grouped.append(groups)
    d = len(candidates)
    gram = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            total = Fraction(0)
            for mask, left in grouped[i].items():
                right = grouped[j].get(mask)
                if not right:
                    continue
                for ea, ca in left:
                    for eb, cb in right:
                        mom = _sphere_moment_cached(tuple(x + y for x, y in zip(ea, eb)))
                        total += ca * cb * mom.rational
            gram[i][j] = total
            gram[j][i] = total
    return gram


def _gram_schmidt(m: int, k: int, gram: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact Gram-space orthogonalization; returns combination rows and norms."""
    d = len(gram)
    rows: list[list[Fraction]] = []
    images: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for i in range(d):
        u = [Fraction(0)] * d
        u[i] = Fraction(1)
        for uj, gj, sj in zip(rows, images, norms):
            c = gj[i] / sj
            if c:
                for t in range(d):
                    if uj[t]:
                        u[t] -= c * uj[t]
        gu = [sum(gram[r][t] * u[t] for t in range(d) if u[t]) for r in range(d)]
        s = sum(u[t] * gu[t] for t in range(d) if u[t])
        if s <= 0:
            raise GramNotScalar(m, k, f"candidate {i} has nonpositive residual norm {s}")
        rows.append(u)
        images.append(gu)
        norms.append(s)
    return rows, norms


def _materialize(
    m: int,
    k: int,
    candidates: list[dict[Exponent, int]],
    combo: list[Fraction],
    norm: Fraction,
) -> MonogenicPolynomial:
    merged: dict[Exponent, Fraction] = {}
    for weight, cand in zip(combo, candidates):
        if not weight:
            continue
        for expo, coeff in cand.items():
            nv = merged.get(expo, Fraction(0)) + weight * coeff
            if nv:
                merged[expo] = nv
            else:
                merged.pop(expo, None)
    ints = _integerize(merged)
    # Rescaling the raw coefficients by f multiplies the raw norm by f**2.
    factor = ints[min(ints)] / merged[min(ints)]
    scaled_norm = norm * factor * factor
    coeffs = {
        expo: Multivector.blade(m, _parity_mask(expo), coeff) for expo, coeff in ints.items()
    }
    return MonogenicPolynomial(m, k, coeffs, 1 / scaled_norm, -(m // 2))


@lru_cache(maxsize=None)
def build_basis(m: int, k: int) -> MonogenicBasis:
    """Exact orthonormal basis of the degree-k monogenics on R^m.

    Solves the Dirac constraint on homogeneous polynomials restricted to
    the parity slice described in ``_dirac_block_rows``, checks that the
    kernel rank equals binomial(m + k - 2, k), orthonormalizes with exact
    sphere moments, and certifies the resulting Gram matrix symbolically.
    """
    if not 2 <= m <= BUILD_MAX_M:
        raise ValueError(f"dimension must lie in [2, {BUILD_MAX_M}]")
    if not 0 <= k <= BUILD_MAX_K:
        raise ValueError(f"degree must lie in [0, {BUILD_MAX_K}]")
    columns = _monomial_exponents(m, k)
    rows = _dirac_block_rows(m, k, columns) if k else []
    vectors = _nullspace(rows, len(columns))
    expected = monogenic_space_dim(m, k)
    if len(vectors) != expected:
        raise RuntimeError(
            f"Dirac kernel rank {len(vectors)} does not match the module rank {expected}"
        )
    candidates = [
        {columns[c]: v for c, v in vec.items()} for vec in vectors
    ]
    gram = _candidate_gram(m, candidates)
    combos, norms = _gram_schmidt(m, k, gram)
    elements = tuple(
        _materialize(m, k, candidates, combo, norm) for combo, norm in zip(combos, norms)
    )
    basis = MonogenicBasis(m, k, elements)
    _verify_orthonormal(basis)
    return basis
