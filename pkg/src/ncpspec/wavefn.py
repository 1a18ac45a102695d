"""Kummer polynomials and normalized radial eigenfunctions.

Both families share one shape once written in the scaled variable ``z``::

    Coulomb-like:    z = 2 mu1 r,     R = N r**(mu3 + 1/2) exp(-mu1 r) 1F1(-n, 2 mu3 + 1, z)
    oscillator-like: z = mu1 r**2,    R = N u**((tau + 1)/2) exp(-mu1 u / 2) 1F1(-n, tau + 3/2, z)

and ``integral R**2 dr`` becomes a constant times ``integral z**p exp(-z) P(z)**2 dz``.
Everything is evaluated in log space so that very large ``mu3`` (molecular
parameter sets) neither overflows nor underflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize, special

from .errors import ContractError, DomainError
from .potentials import Family, PotentialParams, QuantumNumbers, RadialProblem, decompose
from .spectra import SpectrumResult, solve_radial

TAIL_RTOL = 1e-12


def kummer_coefficients(n: int, b: float) -> np.ndarray:
    """Power-series coefficients of ``1F1(-n, b, z)``, lowest order first."""
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if b <= 0 and float(b).is_integer():
        raise DomainError(f"b must not be a non-positive integer, got {b!r}")
    coef = np.empty(n + 1)
    coef[0] = 1.0
    for k in range(n):
        coef[k + 1] = coef[k] * (k - n) / ((b + k) * (k + 1))
    return coef


def kummer_poly(n: int, b: float, z):
    """Terminating confluent hypergeometric series ``1F1(-n, b, z)``.

    Terms are generated by the running ratio
    ``t[k+1] = t[k] * (k - n) z / ((b + k)(k + 1))`` so no gamma functions
    are evaluated.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if b <= 0 and float(b).is_integer():
        raise DomainError(f"b must not be a non-positive integer, got {b!r}")
    z = np.asarray(z, dtype=float)
    term = np.ones_like(z)
    total = np.ones_like(z)
    for k in range(n):
        term = term * ((k - n) * z / ((b + k) * (k + 1)))
        total = total + term
    return total if total.ndim else float(total)


def _log_gamma_moment(q, x=0.0):
    """``log integral_x^inf z**q exp(-z) dz``."""
    if x <= 0:
        return special.gammaln(q + 1)
    tail = special.gammaincc(q + 1, x)
    if tail <= 0:
        return -np.inf
    return math.log(tail) + special.gammaln(q + 1)


@dataclass(frozen=True)
class RadialWavefunction:
    """Normalized reduced radial eigenfunction.

    Attributes
    ----------
    family : Family
    n : int
        Radial quantum number (degree of the Kummer polynomial).
    mu1 : float
        Decay constant; per length (Coulomb) or per length squared (oscillator).
    mu3_or_tau : float
        ``mu3`` (Coulomb) or ``tau`` (oscillator).
    log_norm : float
        Natural log of the normalization constant.
    energy : float
    M : float
    problem : RadialProblem
    z_cut : float
        Scaled-variable cutoff past which the analytic tail bound is below
        ``TAIL_RTOL`` of the norm integral.
    """

    family: Family
    n: int
    mu1: float
    mu3_or_tau: float
    log_norm: float
    energy: float
    M: float
    problem: RadialProblem
    z_cut: float

    @property
    def norm(self) -> float:
        return math.exp(self.log_norm)

    @property
    def kummer_b(self) -> float:
        if self.family is Family.COULOMB_LIKE:
            return 2.0 * self.mu3_or_tau + 1.0
        return self.mu3_or_tau + 1.5

    @property
    def r_cut(self) -> float:
        return self.r_of_z(self.z_cut)

    @property
    def length_scale(self) -> float:
        """Width of the probability density, in length units."""
        p = _weight_power(self.family, self.mu3_or_tau)
        zc = p + 2 * self.n + 1.0
        zs = math.sqrt(p + 1.0) + self.n
        return self.r_of_z(zc + zs) - self.r_of_z(max(zc - zs, 0.0))

    def z_of_r(self, r):
        r = np.asarray(r, dtype=float)
        if self.family is Family.COULOMB_LIKE:
            return 2.0 * self.mu1 * r
        return self.mu1 * r * r

    def r_of_z(self, z):
        z = np.asarray(z, dtype=float)
        if self.family is Family.COULOMB_LIKE:
            out = z / (2.0 * self.mu1)
        else:
            out = np.sqrt(z / self.mu1)
        return out if out.ndim else float(out)

    def log_envelope(self, r):
        """``log`` of the normalized prefactor multiplying the Kummer polynomial."""
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore"):
            logr = np.log(r)
        if self.family is Family.COULOMB_LIKE:
            return self.log_norm + (self.mu3_or_tau + 0.5) * logr - self.mu1 * r
        return self.log_norm + (self.mu3_or_tau + 1.0) * logr - 0.5 * self.mu1 * r * r

    def polynomial(self, r):
        return kummer_poly(self.n, self.kummer_b, self.z_of_r(r))

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        out = np.exp(self.log_envelope(r)) * self.polynomial(r)
        return out if out.ndim else float(out)


def _weight_power(family: Family, mu3_or_tau: float) -> float:
    # R**2 dr  ->  const * z**p exp(-z) P(z)**2 dz
    if family is Family.COULOMB_LIKE:
        return 2.0 * mu3_or_tau + 1.0
    return mu3_or_tau + 0.5


def _polynomial_roots(n: int, b: float) -> np.ndarray:
    """Positive zeros of ``1F1(-n, b, z)`` by scanning plus bisection."""
    if n == 0:
        return np.empty(0)
    coef = kummer_coefficients(n, b)
    bound = 1.0 + np.max(np.abs(coef[:-1] / coef[-1]))
    # zeros lie below the Cauchy bound; the scan is fine enough to separate
    # neighbouring Laguerre zeros, whose spacing is >= O(1 / (n + b)) near z = 0
    pts = 400 * (n + 1)
    z = np.unique(np.concatenate([
        np.geomspace(bound * 1e-8, bound, pts),
        np.linspace(0.0, bound, pts)[1:],
    ]))
    vals = kummer_poly(n, b, z)
    idx = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
    roots = [optimize.brentq(lambda x: kummer_poly(n, b, x), z[i], z[i + 1], xtol=1e-14, rtol=1e-15)
             for i in idx]
    return np.array(roots)


def _normalization(family: Family, n: int, mu1: float, mu3_or_tau: float):
    """Return ``(log_norm, z_cut)`` from adaptive quadrature plus an analytic tail bound."""
    p = _weight_power(family, mu3_or_tau)
    b = 2.0 * mu3_or_tau + 1.0 if family is Family.COULOMB_LIKE else mu3_or_tau + 1.5
    coef = kummer_coefficients(n, b)
    # peak of z**p exp(-z) used to keep the integrand O(1)
    shift = p * math.log(p) - p if p > 0 else 0.0
    roots = _polynomial_roots(n, b)

    def integrand(z):
        if z <= 0.0:
            return 0.0
        poly = kummer_poly(n, b, z)
        return math.exp(p * math.log(z) - z - shift) * poly * poly

    abs_sq = np.convolve(np.abs(coef), np.abs(coef))

    def log_tail(zc):
        terms = [math.log(c) + _log_gamma_moment(p + j, zc) - shift
                 for j, c in enumerate(abs_sq) if c > 0]
        return special.logsumexp(terms)

    width = math.sqrt(p + 1.0)
    z_cut = max(p + 2 * n + 1 + 12.0 * width, 2.0 * (roots[-1] if len(roots) else 0.0), 10.0)
    breaks = sorted({*roots.tolist(), max(p, 0.0), max(p - 3 * width, 0.0), p + 3 * width})
    while True:
        pts = [x for x in breaks if 0.0 < x < z_cut]
        total, _ = integrate.quad(integrand, 0.0, z_cut, points=pts or None,
                                  limit=500, epsabs=0.0, epsrel=1e-13)
        if log_tail(z_cut) < math.log(TAIL_RTOL * total):
            break
        z_cut *= 1.5
    log_J = math.log(total) + shift
    if family is Family.COULOMB_LIKE:
        log_int = log_J - (p + 1.0) * math.log(2.0 * mu1)
    else:
        log_int = log_J - (p + 1.0) * math.log(mu1) - math.log(2.0)
    return -0.5 * log_int, z_cut


def wavefunction_from_problem(M: float, prob: RadialProblem, result: SpectrumResult) -> RadialWavefunction:
    """Eigenfunction of a canonical radial problem for an already solved energy."""
    if result.family is not prob.family:
        raise ContractError("spectrum and radial problem belong to different families")
    log_norm, z_cut = _normalization(prob.family, result.n, result.mu1, result.mu3_or_tau)
    return RadialWavefunction(family=prob.family, n=result.n, mu1=result.mu1,
                              mu3_or_tau=result.mu3_or_tau, log_norm=log_norm,
                              energy=result.E, M=M, problem=prob, z_cut=z_cut)


def radial_wavefunction(p: PotentialParams, M: float, qn: QuantumNumbers,
                        spectrum: SpectrumResult) -> RadialWavefunction:
    """Normalized radial eigenfunction of potential ``p``.

    Raises
    ------
    ContractError
        If ``spectrum`` was not produced for this ``(p, M, qn)``.
    """
    if spectrum.potential and spectrum.potential != p.kind.value:
        raise ContractError(f"spectrum is for {spectrum.potential!r}, potential is {p.kind.value!r}")
    if (spectrum.n, spectrum.s, spectrum.m) != (qn.n, qn.s, qn.m):
        raise ContractError(f"spectrum quantum numbers {(spectrum.n, spectrum.s, spectrum.m)} "
                            f"do not match {(qn.n, qn.s, qn.m)}")
    prob = decompose(p, M, spectrum.l_eff)
    check = solve_radial(M, prob, qn.n, spectrum.l_eff)
    if not math.isclose(check.E, spectrum.E, rel_tol=1e-10, abs_tol=1e-300):
        raise ContractError(f"spectrum energy {spectrum.E!r} does not solve this problem "
                            f"(expected {check.E!r})")
    return wavefunction_from_problem(M, prob, spectrum)


def node_positions(w: RadialWavefunction) -> np.ndarray:
    """Radii of the sign changes of ``R`` on ``(0, inf)``."""
    return np.atleast_1d(w.r_of_z(_polynomial_roots(w.n, w.kummer_b)))


def node_count(w: RadialWavefunction) -> int:
    return int(len(node_positions(w)))


def ode_residual(w: RadialWavefunction, r, h: float):
    """Residual of the generating radial equation with a central-difference ``R''``.

    Returns
    -------
    residual, second_derivative : ndarray
    """
    r = np.asarray(r, dtype=float)
    R = w(r)
    d2 = (w(r + h) - 2.0 * R + w(r - h)) / (h * h)
    prob, M = w.problem, w.M
    if prob.family is Family.COULOMB_LIKE:
        bracket = M * (w.energy - prob.E0) - M * prob.A / r - prob.Lambda / r ** 2
    else:
        bracket = M * w.energy - M * prob.kappa * r ** 2 - prob.Lambda / r ** 2
    return d2 + bracket * R, d2


def overlap(w1: RadialWavefunction, w2: RadialWavefunction) -> float:
    """``integral_0^inf R1 R2 dr`` by adaptive quadrature."""
    r_hi = max(w1.r_cut, w2.r_cut)
    pts = sorted({*node_positions(w1).tolist(), *node_positions(w2).tolist()})

    def f(r):
        if r <= 0.0:
            return 0.0
        return w1(r) * w2(r)

    val, _ = integrate.quad(f, 0.0, r_hi, points=[x for x in pts if 0 < x < r_hi] or None,
                            limit=500, epsabs=1e-14, epsrel=1e-12)
    return val


def laplace_image(w: RadialWavefunction, t: float) -> float:
    """Numerical Laplace transform of ``g(r) = r**(2 mu3) exp(-mu1 r) 1F1(-n, 2 mu3 + 1, 2 mu1 r)``.

    ``g`` is the eigenfunction with ``r**(1/2 - mu3)`` divided back out and
    the normalization dropped.  Requires ``t > -mu1``; Coulomb-like family only.
    """
    if w.family is not Family.COULOMB_LIKE:
        raise DomainError("the Laplace image is defined for the Coulomb-like family")
    mu1, mu3 = w.mu1, w.mu3_or_tau
    s = t + mu1
    if not s > 0:
        raise DomainError("t must exceed -mu1")
    q = 2.0 * mu3
    shift = q * math.log(q) - q if q > 0 else 0.0

    def f(x):
        # x = (t + mu1) r
        if x <= 0.0:
            return 0.0 if q > 0 else kummer_poly(w.n, w.kummer_b, 0.0)
        return math.exp(q * math.log(x) - x - shift) * kummer_poly(w.n, w.kummer_b, 2.0 * mu1 * x / s)

    x_hi = q + 60.0 + 20.0 * math.sqrt(q + 1.0) + 10.0 * w.n
    val, _ = integrate.quad(f, 0.0, x_hi, points=[max(q, 1e-3)], limit=500, epsabs=0.0, epsrel=1e-13)
    return val * math.exp(shift - (q + 1.0) * math.log(s))


def laplace_image_closed_form(w: RadialWavefunction, t: float) -> float:
    """``(t + mu1)**-(2 mu3 + 1) ((t + mu1)/(t - mu1))**(mu2**2/(2 mu1) + (2 mu3 + 1)/2)``.

    The exponent is evaluated from ``mu2**2 = M A`` rather than assumed to be
    ``-n``.  Valid for ``t > mu1``; defined up to an overall constant.
    """
    if w.family is not Family.COULOMB_LIKE:
        raise DomainError("the Laplace image is defined for the Coulomb-like family")
    mu1, mu3 = w.mu1, w.mu3_or_tau
    if not t > mu1:
        raise DomainError("closed-form image needs t > mu1")
    mu2_sq = w.M * w.problem.A
    expo = mu2_sq / (2.0 * mu1) + (2.0 * mu3 + 1.0) / 2.0
    return (t + mu1) ** -(2.0 * mu3 + 1.0) * ((t + mu1) / (t - mu1)) ** expo
