"""Command-line surface: verification suites, tables, grids, and profiles.

Five subcommands cover the library.  ``verify`` runs a named suite of
runtime checks and prints one PASS/FAIL line per check.  ``table``
prints exact norm, eigenvalue, recurrence-coefficient, or dimension
tables.  ``zeros`` lists the vanishing-sphere radii of one member with
an interlacing verdict against its neighbors.  ``plotgrid`` samples one
blade component of a normalized plane member on a square grid.  ``ft``
tabulates the closed-form frequency profile, optionally against the
quadrature oracle.  Tables are RFC 4180 CSV or a JSON array of row
objects, with rationals as ``p/q`` strings beside 17-significant-digit
decimals; repeated runs with the same arguments are byte-identical.
Exit status: 0 success, 1 failed check, 2 usage error.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import blade_label
from .analysis import bessel_j, build_rule, evaluate_on_points, numeric_fourier
from .jacobi import radii_interlacing_check, vanishes_at_origin, zero_radii
from .legendre import (
    bonnet_even,
    bonnet_odd,
    clifford_legendre,
    fourier_transform,
    norm_sq,
    normalize,
)
from .monogenics import monogenic_space_dim
from .radial import gegenbauer_eigenvalue
from .verify import run_suite, suite_names

MAX_DIMENSION = 6
MAX_DEGREE = 20
MAX_ANGULAR_DEGREE = 8
MAX_RESOLUTION = 2048

TABLE_KINDS = ("norms", "eigenvalues", "bonnet", "dims")
PLANE_COMPONENTS = {"scalar": 0, "e1": 1, "e2": 2, "e12": 3}

Cell = int | float | str | bool | None


class UsageError(ValueError):
    """Bad argument or argument combination, reported as exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    """Numeric arguments shared by the subcommands, range-checked on build."""

    m: int = 2
    n: int = 4
    k: int = 2
    alpha: int = 0
    i: int = 1
    resolution: int = 65
    tolerance: float = 1e-6

    def __post_init__(self):
        if not 2 <= self.m <= MAX_DIMENSION:
            raise UsageError(f"dimension must lie in 2..{MAX_DIMENSION}, got {self.m}")
        if not 0 <= self.n <= MAX_DEGREE:
            raise UsageError(f"degree must lie in 0..{MAX_DEGREE}, got {self.n}")
        if not 0 <= self.k <= MAX_ANGULAR_DEGREE:
            raise UsageError(
                f"monogenic degree must lie in 0..{MAX_ANGULAR_DEGREE}, got {self.k}"
            )
        if self.alpha < 0:
            raise UsageError("the family parameter must be nonnegative")
        if self.i < 1:
            raise UsageError("basis indices start at 1")
        if not 1 <= self.resolution <= MAX_RESOLUTION:
            raise UsageError(
                f"resolution must lie in 1..{MAX_RESOLUTION}, got {self.resolution}"
            )
        if not self.tolerance > 0:
            raise UsageError("tolerance must be positive")

    def require_basis_index(self) -> None:
        dim = monogenic_space_dim(self.m, self.k)
        if self.i > dim:
            raise UsageError(
                f"basis index {self.i} exceeds the space dimension {dim}"
            )


@dataclass(frozen=True)
class Report:
    """Column names plus rows of plain cells, ready for either renderer."""

    columns: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]


def _format_cell(value: Cell) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_format_cell(cell) for cell in row])
    return buf.getvalue()


def render_json(report: Report) -> str:
    objects = [dict(zip(report.columns, row)) for row in report.rows]
    return json.dumps(objects, indent=2) + "\n"


def render(report: Report, fmt: str) -> str:
    return render_csv(report) if fmt == "csv" else render_json(report)


def _rational_cells(value: Fraction) -> tuple[str, float]:
    return str(value), float(value)


def run_verify(suite: str) -> tuple[int, str]:
    """PASS/FAIL lines for one suite; exit 0 only when every check holds."""
    try:
        results = run_suite(suite)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    lines = []
    failures = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        if not result.passed:
            failures += 1
        tail = f"  [{result.detail}]" if result.detail else ""
        lines.append(
            f"{status} {result.name:<34} max residual {result.max_residual:.3e}{tail}"
        )
    lines.append(f"{len(results) - failures} passed, {failures} failed")
    return (0 if failures == 0 else 1, "\n".join(lines) + "\n")


def run_table(cfg: RunConfig, kind: str) -> Report:
    """Exact-value tables; the n and k arguments act as inclusive bounds."""
    rows: list[tuple[Cell, ...]] = []
    if kind == "norms":
        columns = ("n", "k", "m", "norm_sq", "norm_sq_decimal")
        for n in range(cfg.n + 1):
            for k in range(cfg.k + 1):
                rows.append((n, k, cfg.m, *_rational_cells(norm_sq(n, k, cfg.m))))
    elif kind == "eigenvalues":
        columns = ("alpha", "n", "m", "k", "eigenvalue", "eigenvalue_decimal")
        for n in range(cfg.n + 1):
            for k in range(cfg.k + 1):
                value = gegenbauer_eigenvalue(Fraction(cfg.alpha), n, cfg.m, k)
                rows.append((cfg.alpha, n, cfg.m, k, *_rational_cells(value)))
    elif kind == "bonnet":
        columns = (
            "n",
            "k",
            "m",
            "step_up",
            "step_up_decimal",
            "step_down",
            "step_down_decimal",
        )
        for n in range(cfg.n + 1):
            for k in range(cfg.k + 1):
                if n % 2 == 1:
                    up, down = bonnet_odd(n // 2, k, cfg.m)
                else:
                    up, down = bonnet_even(n // 2, k, cfg.m)
                rows.append(
                    (n, k, cfg.m, *_rational_cells(up), *_rational_cells(down))
                )
    elif kind == "dims":
        columns = ("m", "k", "dimension")
        for m in range(2, cfg.m + 1):
            for k in range(cfg.k + 1):
                rows.append((m, k, monogenic_space_dim(m, k)))
    else:
        raise UsageError(f"unknown table kind {kind!r}")
    return Report(columns, tuple(rows))


def run_zeros(cfg: RunConfig) -> Report:
    """Vanishing-sphere radii with a cyclic interlacing verdict.

    The verdict compares against the radii of the neighboring degrees;
    degrees 0 and 1 have no sphere radii, so their tables are empty.
    """
    columns = ("index", "radius", "origin_zero", "interlaced")
    radii = zero_radii(cfg.n, cfg.k, cfg.m)
    origin = vanishes_at_origin(cfg.n)
    rows: list[tuple[Cell, ...]] = []
    if radii:
        interlaced = radii_interlacing_check(
            zero_radii(cfg.n - 1, cfg.k, cfg.m),
            radii,
            zero_radii(cfg.n + 1, cfg.k, cfg.m),
        )
        for index, radius in enumerate(radii):
            rows.append((index, radius, origin, interlaced))
    return Report(columns, tuple(rows))


def run_plotgrid(cfg: RunConfig, component: str, plot_path: str | None) -> Report:
    """One blade component of a normalized plane member on [-1, 1]^2.

    Points outside the closed unit disk get an empty value field.  Even
    degrees take values on e1 and e2 only, odd degrees on the scalar
    and e12 parts; asking for a component the parity rules out is a
    usage error.
    """
    if cfg.m != 2:
        raise UsageError("plot grids cover dimension 2 only")
    cfg.require_basis_index()
    mask = PLANE_COMPONENTS[component]
    allowed = (1, 2) if cfg.n % 2 == 0 else (0, 3)
    if mask not in allowed:
        names = " and ".join(
            name for name, bit in PLANE_COMPONENTS.items() if bit in allowed
        )
        raise UsageError(
            f"component {component} vanishes at degree {cfg.n}: "
            f"this parity occupies {names}"
        )
    member = normalize(clifford_legendre(cfg.n, cfg.k, 2, cfg.i))
    axis = np.linspace(-1.0, 1.0, cfg.resolution)
    xs, ys = np.meshgrid(axis, axis, indexing="ij")
    pts = np.column_stack([xs.ravel(), ys.ravel()])
    inside = np.einsum("ij,ij->i", pts, pts) <= 1.0
    values = np.full(len(pts), np.nan)
    components = evaluate_on_points(member, pts[inside])
    arr = components.get(mask)
    values[inside] = 0.0 if arr is None else arr
    rows: list[tuple[Cell, ...]] = []
    for point, value, ok in zip(pts, values, inside):
        cell = float(value) if ok else None
        rows.append((float(point[0]), float(point[1]), cell))
    if plot_path is not None:
        _save_grid_plot(plot_path, axis, values.reshape(xs.shape), component, cfg)
    return Report(("x1", "x2", "value"), tuple(rows))


def _save_grid_plot(
    path: str, axis: np.ndarray, grid: np.ndarray, component: str, cfg: RunConfig
) -> None:
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib import pyplot as plt

    fig, ax = plt.subplots(figsize=(5.4, 4.6))
    shown = np.ma.masked_invalid(grid.T)
    bound = float(np.nanmax(np.abs(grid))) or 1.0
    image = ax.imshow(
        shown,
        origin="lower",
        extent=(-1.0, 1.0, -1.0, 1.0),
        cmap="RdBu_r",
        vmin=-bound,
        vmax=bound,
    )
    ax.set_xlabel("x1")
    ax.set_ylabel("x2")
    ax.set_title(
        f"degree {cfg.n}, monogenic degree {cfg.k}: {component} component"
    )
    fig.colorbar(image, ax=ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _parse_span(span: str) -> tuple[float, float]:
    try:
        lo_text, hi_text = span.split(":", 1)
        lo, hi = float(lo_text), float(hi_text)
    except ValueError as exc:
        raise UsageError(f"span must look like LOW:HIGH, got {span!r}") from exc
    if lo <= 0.0:
        raise UsageError("frequency grid must exclude zero")
    if hi <= lo:
        raise UsageError("span must increase")
    return lo, hi


def run_ft(
    cfg: RunConfig, span: str, check: bool, plot_path: str | None
) -> tuple[int, Report]:
    """Closed-form transform components along the first frequency axis.

    The profile column is the scalar radial factor shared by every
    component; the re/im columns give the full blade values at the
    frequency (r, 0, ...).  With --check a quadrature oracle is
    appended per point and the exit status reflects agreement within
    the tolerance.
    """
    if cfg.m not in (2, 3):
        raise UsageError("frequency profiles cover dimensions 2 and 3")
    cfg.require_basis_index()
    lo, hi = _parse_span(span)
    member = clifford_legendre(cfg.n, cfg.k, cfg.m, cfg.i)
    order = Fraction(cfg.k) + Fraction(cfg.m, 2) + cfg.n
    front = float(2**cfg.n * math.factorial(cfg.n))
    power = cfg.m / 2 + cfg.n + cfg.k
    masks = tuple(range(1 << cfg.m))
    columns = ["xi", "profile"]
    for mask in masks:
        columns += [f"re_{blade_label(mask)}", f"im_{blade_label(mask)}"]
    if check:
        for mask in masks:
            columns += [
                f"oracle_re_{blade_label(mask)}",
                f"oracle_im_{blade_label(mask)}",
            ]
        columns.append("check_error")
        # Quadrature needs about ten radial nodes per oscillation at the
        # far end of the span; the node count grows with the exactness.
        rule = build_rule(cfg.m, max(16, math.ceil(20.0 * hi) + 8))
    grid = np.linspace(lo, hi, cfg.resolution)
    worst = 0.0
    rows: list[tuple[Cell, ...]] = []
    for radius in grid:
        radius = float(radius)
        xi = (radius,) + (0.0,) * (cfg.m - 1)
        closed = fourier_transform(member, xi)
        profile = front * bessel_j(order, 2.0 * math.pi * radius) / radius**power
        cells: list[Cell] = [radius, profile]
        for mask in masks:
            cells += [closed.re.coeffs[mask], closed.im.coeffs[mask]]
        if check:
            oracle = numeric_fourier(member, xi, rule)
            error = 0.0
            scale = 1.0
            for mask in masks:
                error = max(
                    error,
                    abs(closed.re.coeffs[mask] - oracle.re.coeffs[mask]),
                    abs(closed.im.coeffs[mask] - oracle.im.coeffs[mask]),
                )
                scale = max(
                    scale, abs(closed.re.coeffs[mask]), abs(closed.im.coeffs[mask])
                )
                cells += [oracle.re.coeffs[mask], oracle.im.coeffs[mask]]
            relative = error / scale
            worst = max(worst, relative)
            cells.append(relative)
        rows.append(tuple(cells))
    if plot_path is not None:
        _save_profile_plot(plot_path, grid, [row[1] for row in rows], cfg)
    code = 1 if check and worst > cfg.tolerance else 0
    return code, Report(tuple(columns), tuple(rows))


def _save_profile_plot(
    path: str, grid: np.ndarray, profile: Sequence[float], cfg: RunConfig
) -> None:
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib import pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    ax.plot(grid, profile, lw=1.4)
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.set_xlabel("|xi|")
    ax.set_ylabel("profile")
    ax.set_title(
        f"frequency profile: degree {cfg.n}, monogenic degree {cfg.k}, "
        f"dimension {cfg.m}"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--m", type=int, default=2, help="ambient dimension, 2..6")
    shared.add_argument(
        "--n", type=int, default=4, help="polynomial degree (or bound), 0..20"
    )
    shared.add_argument(
        "--k", type=int, default=2, help="monogenic degree (or bound), 0..8"
    )
    shared.add_argument("--alpha", type=int, default=0, help="family parameter")
    shared.add_argument("--i", type=int, default=1, help="basis index, starting at 1")
    shared.add_argument(
        "--res", type=int, default=65, help="points per axis or per span"
    )
    shared.add_argument(
        "--format", choices=("csv", "json"), default="csv", dest="fmt",
        help="table format",
    )
    shared.add_argument(
        "--out", metavar="PATH", default=None, help="write output to a file"
    )
    shared.add_argument(
        "--tol", type=float, default=1e-6, help="tolerance for --check"
    )
    shared.add_argument(
        "--check", action="store_true", help="append quadrature-oracle columns"
    )
    shared.add_argument(
        "--plot", metavar="PATH", default=None, help="also render a figure here"
    )

    parser = argparse.ArgumentParser(
        prog="cliffleg",
        description="tables, grids, and verification runs for the polynomial families",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser(
        "verify", parents=[shared], help="run one named check suite"
    )
    verify.add_argument("suite", choices=suite_names())
    table = sub.add_parser("table", parents=[shared], help="print an exact table")
    table.add_argument("kind", choices=TABLE_KINDS)
    sub.add_parser("zeros", parents=[shared], help="list vanishing-sphere radii")
    plotgrid = sub.add_parser(
        "plotgrid", parents=[shared], help="sample a plane member on a square grid"
    )
    plotgrid.add_argument("component", choices=tuple(PLANE_COMPONENTS))
    ft = sub.add_parser(
        "ft", parents=[shared], help="tabulate the closed-form frequency profile"
    )
    ft.add_argument("span", help="frequency range LOW:HIGH, zero excluded")
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    # newline="" keeps the CSV writer's own line endings intact.
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            m=args.m,
            n=args.n,
            k=args.k,
            alpha=args.alpha,
            i=args.i,
            resolution=args.res,
            tolerance=args.tol,
        )
        if args.command == "verify":
            code, text = run_verify(args.suite)
        elif args.command == "table":
            code, text = 0, render(run_table(cfg, args.kind), args.fmt)
        elif args.command == "zeros":
            code, text = 0, render(run_zeros(cfg), args.fmt)
        elif args.command == "plotgrid":
            report = run_plotgrid(cfg, args.component, args.plot)
            code, text = 0, render(report, args.fmt)
        else:
            code, report = run_ft(cfg, args.span, args.check, args.plot)
            text = render(report, args.fmt)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
