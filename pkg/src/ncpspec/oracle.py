"""Finite-difference eigensolvers used to check the closed forms.

Both the radial and the polar equations are Sturm-Liouville problems with
inverse-square endpoint singularities.  Near such an endpoint the solution
behaves like ``x**a`` with ``a = 1/2 + sqrt(sigma + 1/4)``, ``sigma`` being
the local inverse-square strength (a Frobenius exponent read off the ODE,
not off its spectrum).  Writing ``y = g F`` with ``g`` carrying those powers
turns the problem into

    -(g**2 F')' + g**2 U_eff F = lambda g**2 F,     U_eff = U - g''/g,

where ``U_eff`` is bounded and ``F`` is smooth.  A cell-centred three-point
discretization of this weighted form is symmetric tridiagonal after a
diagonal rescaling, converges at second order, and its eigenvalues are
located by Sturm-sequence bisection.  Three successively halved grids are
then combined by Romberg (Richardson) extrapolation.

The unfactored three-point scheme on the radial equation is kept as
``scheme="plain"``; it is second order only when ``mu3`` is a half-integer.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np
from numba import njit

from .angular import l_eff_for
from .errors import DomainError, StateNotCapturedError
from .potentials import (
    Family,
    PotentialKind,
    PotentialParams,
    QuantumNumbers,
    RadialProblem,
    decompose,
)
from .spectra import as_printed_energy, energy

PASS_RTOL = 1e-5


# ---------------------------------------------------------------------------
# Sturm-sequence bisection on symmetric tridiagonal matrices


@njit(cache=True, nogil=True)
def _sturm_count(d, e2, x):
    # number of eigenvalues strictly below x; e2 holds squared off-diagonals
    count = 0
    q = d[0] - x
    if q < 0.0:
        count += 1
    for i in range(1, d.shape[0]):
        if q == 0.0:
            q = 1e-300
        q = d[i] - x - e2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


@njit(cache=True, nogil=True)
def _bisect(d, e2, k, lo, hi, tol):
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _sturm_count(d, e2, mid) > k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def gershgorin_bounds(d, e2):
    e = np.sqrt(e2)
    radius = np.zeros_like(d)
    radius[:-1] += e
    radius[1:] += e
    return float(np.min(d - radius)), float(np.max(d + radius))


def sturm_count(d, e2, x: float) -> int:
    """Number of eigenvalues below ``x`` of the tridiagonal matrix ``(d, sqrt(e2))``."""
    return int(_sturm_count(np.ascontiguousarray(d, dtype=float),
                            np.ascontiguousarray(e2, dtype=float), float(x)))


def kth_eigenvalue(d, e2, k: int, tol: float = 1e-12) -> float:
    """``k``-th smallest eigenvalue (0-based) by bisection on the Sturm count."""
    d = np.ascontiguousarray(d, dtype=float)
    e2 = np.ascontiguousarray(e2, dtype=float)
    if not 0 <= k < d.shape[0]:
        raise ValueError(f"k={k} outside 0..{d.shape[0] - 1}")
    lo, hi = gershgorin_bounds(d, e2)
    pad = 1e-9 * max(1.0, abs(lo), abs(hi))
    return float(_bisect(d, e2, int(k), lo - pad, hi + pad, tol))


# ---------------------------------------------------------------------------
# Richardson extrapolation


@dataclass(frozen=True)
class Estimate:
    """Eigenvalue estimates on successively halved grids and their extrapolation."""

    levels: tuple
    extrapolated: float
    order: float

    @property
    def order_ok(self) -> bool:
        # nan means the level differences sit at the rounding floor
        return math.isnan(self.order) or 1.5 <= self.order <= 2.5


def richardson(values, noise: float = 0.0) -> Estimate:
    """Romberg extrapolation of an ``h**2, h**4, ...`` error expansion.

    ``values`` come from grids whose step halves from one entry to the next.
    ``noise`` is the absolute rounding floor of the finest level.  When every
    level difference is below it the discretization error is already
    invisible, so the coarsest (least rounding-contaminated) value is
    returned and the order is ``nan``.
    """
    vals = [float(v) for v in values]
    diffs = [vals[j] - vals[j + 1] for j in range(len(vals) - 1)]
    if diffs and all(abs(x) <= noise for x in diffs):
        return Estimate(levels=tuple(vals), extrapolated=vals[0], order=float("nan"))
    table = [vals[:]]
    for i in range(1, len(vals)):
        prev = table[-1]
        factor = 4.0 ** i - 1.0
        table.append([prev[j + 1] + (prev[j + 1] - prev[j]) / factor for j in range(len(prev) - 1)])
    order = float("nan")
    if len(vals) >= 3:
        d1, d2 = diffs[-2], diffs[-1]
        if abs(d2) > noise and abs(d1) > noise and d1 * d2 > 0:
            order = math.log2(d1 / d2)
    return Estimate(levels=tuple(vals), extrapolated=table[-1][0], order=order)


def _rounding_floor(d) -> float:
    # Sturm counts are exact for a matrix perturbed by about one ulp of its entries
    return 2.0 * np.finfo(float).eps * float(np.max(np.abs(d)))


# ---------------------------------------------------------------------------
# Radial discretization


@dataclass(frozen=True)
class GridSpec:
    """Uniform radial grid on ``(0, r_max)``.

    ``points`` counts the cells of the coarsest level; each refinement level
    halves the step.  Cell centres start at ``r_min = step / 2``.
    """

    r_max: float
    points: int = 4000
    refinement_levels: int = 3

    def __post_init__(self):
        if not self.r_max > 0:
            raise DomainError(f"r_max must be positive, got {self.r_max!r}")
        if self.points < 3 or self.refinement_levels < 1:
            raise DomainError("need points >= 3 and refinement_levels >= 1")

    @property
    def step(self) -> float:
        return self.r_max / self.points

    @property
    def r_min(self) -> float:
        return 0.5 * self.step

    def cells(self, level: int) -> int:
        return self.points * 2 ** level


def _log_power_cell(q, lo, hi):
    """``log integral_lo^hi x**q dx`` for ``0 <= lo < hi`` and ``q > -1``."""
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    with np.errstate(divide="ignore"):
        ratio_log = np.log1p(-(hi - lo) / hi)
        frac = -np.expm1((q + 1.0) * ratio_log)
        return (q + 1.0) * np.log(hi) + np.log(frac) - math.log(q + 1.0)


def radial_matrix(M: float, prob: RadialProblem, r_max: float, cells: int, scheme: str = "frobenius"):
    """Symmetric tridiagonal ``(d, e2)`` whose eigenvalues are ``M E``.

    ``frobenius`` factors ``r**(mu3 + 1/2)`` out of ``R`` and uses exact cell
    integrals of the resulting power weights; ``plain`` is the ordinary
    three-point stencil on nodes ``r_i = i h`` with ``R = 0`` at both ends.
    """
    h = r_max / cells
    if scheme == "plain":
        r = h * np.arange(1, cells)
        d = 2.0 / h ** 2 + prob.effective_potential(M, r)
        e2 = np.full(cells - 2, 1.0 / h ** 4)
        return d, e2
    if scheme != "frobenius":
        raise ValueError(f"unknown scheme {scheme!r}")
    a = prob.mu3 + 0.5
    faces = h * np.arange(cells + 1)
    lo, hi = faces[:-1], faces[1:]
    logW = _log_power_cell(2 * a, lo, hi) - math.log(h)
    with np.errstate(divide="ignore"):
        logG = 2 * a * np.log(faces)
    logG[0] = -np.inf
    if prob.family is Family.COULOMB_LIKE:
        coef = M * prob.E0 + M * prob.A * np.exp(_log_power_cell(2 * a - 1, lo, hi) - math.log(h) - logW)
    else:
        coef = M * prob.kappa * np.exp(_log_power_cell(2 * a + 2, lo, hi) - math.log(h) - logW)
    left = np.exp(logG[:-1] - logW)
    right = np.exp(logG[1:] - logW)
    right[-1] *= 2.0  # Dirichlet at r_max through a mirrored ghost cell
    d = (left + right) / h ** 2 + coef
    e2 = np.exp(2 * logG[1:-1] - logW[:-1] - logW[1:]) / h ** 4
    return d, e2


def _radial_level(M, prob, k, r_max, cells, scheme):
    """Return ``(E, rounding floor in energy units)`` on one grid."""
    d, e2 = radial_matrix(M, prob, r_max, cells, scheme)
    if k >= d.shape[0]:
        raise StateNotCapturedError(f"state k={k} not captured; enlarge grid")
    lam = kth_eigenvalue(d, e2, k)
    if prob.family is Family.COULOMB_LIKE:
        ceiling = M * prob.E0
    else:
        ceiling = float(prob.effective_potential(M, r_max))
    if not lam < ceiling:
        raise StateNotCapturedError(
            f"only {sturm_count(d, e2, ceiling)} bound eigenvalues in a box of r_max={r_max:g}; "
            f"state k={k} not captured; enlarge grid")
    return lam / M, _rounding_floor(d) / M


def radial_estimate(M: float, prob: RadialProblem, k: int, grid: GridSpec | None = None,
                    scheme: str = "frobenius") -> Estimate:
    """Per-level and extrapolated ``k``-th energy of a canonical radial problem."""
    if prob.family is Family.COULOMB_LIKE and not prob.A < 0:
        raise DomainError(f"no bound states for A={prob.A!r}")
    if prob.family is Family.OSCILLATOR_LIKE and not prob.kappa > 0:
        raise DomainError(f"kappa must be positive, got {prob.kappa!r}")
    if grid is None:
        grid = suggest_radial_grid(M, prob, k)
    runs = [_radial_level(M, prob, k, grid.r_max, grid.cells(j), scheme)
            for j in range(grid.refinement_levels)]
    return richardson([v for v, _ in runs], noise=runs[-1][1])


def radial_eigenvalue(M: float, prob: RadialProblem, k: int, grid: GridSpec | None = None,
                      scheme: str = "frobenius") -> float:
    """Extrapolated ``k``-th bound-state energy; see :func:`radial_estimate`."""
    return radial_estimate(M, prob, k, grid, scheme).extrapolated


def _turning_and_needed(M, prob, lam):
    if prob.family is Family.COULOMB_LIKE:
        kap2 = M * prob.E0 - lam
        if not kap2 > 0:
            return None
        disc = (M * prob.A) ** 2 - 4.0 * kap2 * prob.Lambda
        r_t = (-M * prob.A + math.sqrt(max(disc, 0.0))) / (2.0 * kap2)
        return max(3.0 * r_t, r_t + 25.0 / math.sqrt(kap2))
    mk = M * prob.kappa
    disc = lam * lam - 4.0 * mk * prob.Lambda
    r_t2 = (lam + math.sqrt(max(disc, 0.0))) / (2.0 * mk)
    return max(3.0 * math.sqrt(r_t2), math.sqrt(r_t2 + 50.0 / math.sqrt(mk)))


def suggest_radial_grid(M: float, prob: RadialProblem, k: int, points: int = 4000,
                        refinement_levels: int = 3) -> GridSpec:
    """Pick ``r_max`` from a coarse solve so the box holds state ``k`` and its tail."""
    if prob.family is Family.COULOMB_LIKE:
        r_max = 8.0 * (k + 1.0 + prob.mu3) ** 2 / (M * abs(prob.A))
    else:
        r_max = 3.0 * math.sqrt((4.0 * k + 2.0 + 2.0 * prob.mu3) / math.sqrt(M * prob.kappa))
    for _ in range(40):
        d, e2 = radial_matrix(M, prob, r_max, 1000)
        lam = kth_eigenvalue(d, e2, k)
        needed = _turning_and_needed(M, prob, lam)
        if needed is not None and needed <= r_max:
            return GridSpec(r_max=needed, points=points, refinement_levels=refinement_levels)
        r_max = 1.5 * (needed if needed is not None else 2.0 * r_max)
    raise StateNotCapturedError(f"could not size a box for state k={k}")


# ---------------------------------------------------------------------------
# Polar discretization


@dataclass(frozen=True)
class AngularGrid:
    """Uniform polar grid; ``points`` cells on the coarsest level."""

    points: int = 4000
    refinement_levels: int = 3

    def cells(self, level: int) -> int:
        return self.points * 2 ** level


@dataclass(frozen=True)
class PolarProblem:
    """``-Theta'' + U(theta) Theta = l**2 Theta`` on ``(0, length)``.

    ``sigma_left`` and ``sigma_right`` are the inverse-square strengths of
    ``U`` at the two ends.
    """

    kind: PotentialKind
    xi_beta: float
    gamma: float
    length: float
    sigma_left: float
    sigma_right: float
    offset: float = 0.0

    def U(self, theta):
        theta = np.asarray(theta, dtype=float)
        if self.kind in (PotentialKind.MAKAROV, PotentialKind.MODIFIED_NON_CENTRAL):
            return (self.xi_beta + self.gamma * np.cos(theta)) / np.sin(theta) ** 2
        if self.kind is PotentialKind.DOUBLE_RING_KRATZER:
            return self.xi_beta / np.sin(theta) ** 2 + self.gamma / np.cos(theta) ** 2
        return self.xi_beta / np.sin(theta) ** 2 + self.offset


def polar_problem(kind: PotentialKind | str, M: float, beta: float, gamma: float, m: int) -> PolarProblem:
    kind = PotentialKind(kind)
    xb = m * m - 0.25 + M * beta
    if kind in (PotentialKind.MAKAROV, PotentialKind.MODIFIED_NON_CENTRAL):
        prob = PolarProblem(kind, xb, M * gamma, math.pi, xb + M * gamma, xb - M * gamma)
    elif kind is PotentialKind.MOD_KRATZER_RING:
        prob = PolarProblem(kind, xb, 0.0, math.pi, xb, xb, offset=-M * beta)
    elif kind is PotentialKind.DOUBLE_RING_KRATZER:
        prob = PolarProblem(kind, xb, M * gamma, 0.5 * math.pi, xb, M * gamma)
    elif kind is PotentialKind.RING_OSCILLATOR:
        prob = PolarProblem(kind, xb, 0.0, math.pi, xb, xb)
    else:
        raise TypeError(kind)
    if prob.sigma_left < -0.25 or prob.sigma_right < -0.25:
        raise DomainError("complex angular eigenvalue: endpoint inverse-square strength below -1/4")
    return prob


def angular_matrix(prob: PolarProblem, cells: int):
    """Symmetric tridiagonal ``(d, e2)`` whose eigenvalues are ``l**2``."""
    L = prob.length
    a = 0.5 + math.sqrt(prob.sigma_left + 0.25)
    b = 0.5 + math.sqrt(prob.sigma_right + 0.25)
    k = math.pi / (2.0 * L)
    h = L / cells
    faces = h * np.arange(cells + 1)
    lo, hi = faces[:-1], faces[1:]
    c = 0.5 * (lo + hi)
    S, C = np.sin(k * c), np.cos(k * c)
    # weight g**2 = sin(k t)**(2a) cos(k t)**(2b): exact power integral towards
    # the nearer endpoint, smooth remainder at the cell centre
    left_half = c <= 0.5 * L
    logW = np.empty(cells)
    cl = c[left_half]
    logW[left_half] = (_log_power_cell(2 * a, lo[left_half], hi[left_half])
                       + 2 * a * np.log(np.sin(k * cl) / cl) + 2 * b * np.log(np.cos(k * cl)))
    rh = ~left_half
    x_lo = np.clip(L - hi[rh], 0.0, None)
    x_hi = L - lo[rh]
    cr = c[rh]
    logW[rh] = (_log_power_cell(2 * b, x_lo, x_hi)
                + 2 * a * np.log(np.sin(k * cr)) + 2 * b * np.log(np.cos(k * cr) / (L - cr)))
    logW -= math.log(h)
    logG = np.full(cells + 1, -np.inf)
    inner = faces[1:-1]
    logG[1:-1] = 2 * a * np.log(np.sin(k * inner)) + 2 * b * np.log(np.cos(k * inner))
    dlog = k * (a * C / S - b * S / C)
    d2log = -k * k * (a / S ** 2 + b / C ** 2)
    U_eff = prob.U(c) - (d2log + dlog ** 2)
    d = (np.exp(logG[:-1] - logW) + np.exp(logG[1:] - logW)) / h ** 2 + U_eff
    e2 = np.exp(2 * logG[1:-1] - logW[:-1] - logW[1:]) / h ** 4
    return d, e2


def angular_estimate(M: float, kind: PotentialKind | str, beta: float, gamma: float, m: int, s: int,
                     grid: AngularGrid | None = None) -> Estimate:
    """Per-level and extrapolated ``s``-th polar eigenvalue ``l**2``."""
    if s < 0 or int(s) != s:
        raise DomainError(f"s must be a non-negative integer, got {s!r}")
    grid = grid or AngularGrid()
    prob = polar_problem(kind, M, beta, gamma, m)
    vals = []
    for j in range(grid.refinement_levels):
        d, e2 = angular_matrix(prob, grid.cells(j))
        vals.append(kth_eigenvalue(d, e2, int(s)))
    return richardson(vals, noise=_rounding_floor(d))


def angular_eigenvalue(M: float, kind: PotentialKind | str, beta: float, gamma: float, m: int, s: int,
                       grid: AngularGrid | None = None) -> float:
    """Extrapolated ``s``-th eigenvalue ``l**2`` of the polar equation."""
    return angular_estimate(M, kind, beta, gamma, m, s, grid).extrapolated


# ---------------------------------------------------------------------------
# Verification


def _rel_dev(value, reference):
    if reference == 0:
        return abs(value)
    return abs(value - reference) / abs(reference)


@dataclass(frozen=True)
class Comparison:
    """One eigenvalue: the extrapolated oracle value against its closed form."""

    quantity: str
    levels: tuple
    extrapolated: float
    closed_form: float
    rel_deviation: float
    order: float

    @property
    def passed(self) -> bool:
        return self.rel_deviation <= PASS_RTOL


@dataclass(frozen=True)
class OracleReport:
    potential: str
    n: int
    s: int
    m: int
    angular: Comparison
    radial: Comparison
    as_printed_E: float
    grid: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.angular.passed and self.radial.passed

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("angular", "radial"):
            out[key]["levels"] = list(out[key]["levels"])
            out[key]["passed"] = getattr(self, key).passed
        out["passed"] = self.passed
        return out


def _comparison(quantity, est: Estimate, closed: float) -> Comparison:
    return Comparison(quantity=quantity, levels=est.levels, extrapolated=est.extrapolated,
                      closed_form=closed, rel_deviation=_rel_dev(est.extrapolated, closed),
                      order=est.order)


def verify(p: PotentialParams, M: float, qn: QuantumNumbers, grid: GridSpec | None = None,
           angular_grid: AngularGrid | None = None, points: int = 4000,
           refinement_levels: int = 3) -> OracleReport:
    """Check ``l_eff`` and the energy of one state against both eigensolvers.

    The radial oracle is fed the oracle's own ``l**2``, so the two checks
    chain without reusing the closed-form angular number.  Grids not given
    explicitly use ``points`` cells and ``refinement_levels`` levels; the
    radial box is sized by :func:`suggest_radial_grid`.
    """
    angular_grid = angular_grid or AngularGrid(points, refinement_levels)
    le = l_eff_for(p, M, qn)
    try:
        ang = angular_estimate(M, p.kind, p.beta, getattr(p, "gamma", 0.0), qn.m, qn.s, angular_grid)
    except DomainError as exc:
        raise DomainError(f"angular oracle for {p.kind.value} {qn}: {exc}") from exc
    closed = energy(p, M, qn)
    try:
        prob = decompose(p, M, math.sqrt(max(ang.extrapolated, 0.0)))
        if grid is None:
            grid = suggest_radial_grid(M, prob, qn.n, points, refinement_levels)
        rad = radial_estimate(M, prob, qn.n, grid)
    except (DomainError, StateNotCapturedError) as exc:
        raise type(exc)(f"radial oracle for {p.kind.value} {qn}: {exc}") from exc
    return OracleReport(
        potential=p.kind.value, n=qn.n, s=qn.s, m=qn.m,
        angular=_comparison("l_eff^2", ang, le.squared),
        radial=_comparison("E", rad, closed.E),
        as_printed_E=as_printed_energy(p, M, qn),
        grid={"r_max": grid.r_max, "points": grid.points,
              "refinement_levels": grid.refinement_levels,
              "angular_points": angular_grid.points},
    )
