"""Exact Clifford-Legendre and Clifford-Gegenbauer polynomials.

The package constructs the weighted orthogonal polynomial families on
the unit ball of R^m with values in the real Clifford algebra with
negative-definite signature, entirely in rational arithmetic, and
verifies their structural identities (construction equivalences,
eigenvalue equation, recurrences, multiplication formulas, classical
Jacobi identification, Fourier profile, zero sets, and the plane
degeneracy).

Most users want:

- :func:`clifford_legendre` / :func:`clifford_gegenbauer` to build a
  family member, :func:`normalize` and :func:`norm_sq` for unit-norm
  scaling,
- :func:`fourier_transform` for the closed-form transform,
- :func:`zero_radii` for the vanishing spheres,
- :func:`run_suite` (or the ``cliffleg verify`` command) to execute the
  runtime checks,
- :class:`Multivector` and :func:`blade_label` to inspect values.
"""

from .algebra import ComplexMultivector, Multivector, blade_label
from .analysis import (
    ball_inner,
    ball_inner_exact,
    bessel_j,
    build_rule,
    gram_report,
    numeric_fourier,
)
from .jacobi import radii_interlacing_check, vanishes_at_origin, zero_radii
from .legendre import (
    CliffordPolynomial,
    canonical_basis,
    clifford_gegenbauer,
    clifford_legendre,
    fourier_transform,
    jacobi_radial_id,
    norm_sq,
    normalize,
)
from .monogenics import MonogenicBasis, MonogenicPolynomial, monogenic_space_dim
from .radial import ParityRadialForm, RationalPoly, SqrtScale, gegenbauer_eigenvalue
from .verify import run_suite, suite_names

__version__ = "1.0.0"

__all__ = [
    "CliffordPolynomial",
    "ComplexMultivector",
    "MonogenicBasis",
    "MonogenicPolynomial",
    "Multivector",
    "ParityRadialForm",
    "RationalPoly",
    "SqrtScale",
    "__version__",
    "ball_inner",
    "ball_inner_exact",
    "bessel_j",
    "blade_label",
    "build_rule",
    "canonical_basis",
    "clifford_gegenbauer",
    "clifford_legendre",
    "fourier_transform",
    "gegenbauer_eigenvalue",
    "gram_report",
    "jacobi_radial_id",
    "monogenic_space_dim",
    "norm_sq",
    "normalize",
    "numeric_fourier",
    "radii_interlacing_check",
    "run_suite",
    "suite_names",
    "vanishes_at_origin",
    "zero_radii",
]
