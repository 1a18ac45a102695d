"""Bound-state energies from the two terminating-series quantization rules.

Coulomb-like problems quantize through

    mu2**2 / (2 mu1) + (2 mu3 + 1) / 2 = -n,    mu1**2 = M (E0 - E), mu2**2 = M A,

giving ``E = E0 - M A**2 / (4 (n + 1/2 + mu3)**2)``.  Oscillator-like
problems quantize through ``mu2**2 / (4 mu1) - (tau + 3/2) / 2 = n`` with
``mu1 = sqrt(M kappa)``, ``mu2**2 = M E`` and ``tau = mu3 - 1/2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .angular import l_eff_for
from .errors import DomainError, NoBoundStateError
from .potentials import (
    DoubleRingKratzer,
    Family,
    Makarov,
    ModifiedNonCentral,
    ModKratzerRing,
    PotentialParams,
    QuantumNumbers,
    RadialProblem,
    RingOscillator,
    decompose,
)


@dataclass(frozen=True)
class SpectrumResult:
    """Energy of one bound state and the quantities that build its eigenfunction.

    ``mu1`` is the decay constant: ``sqrt(M (E0 - E))`` for the Coulomb-like
    family (per unit length) and ``sqrt(M kappa)`` for the oscillator family
    (per unit length squared, acting on ``u = r**2``).  ``mu3_or_tau`` is
    ``mu3`` or ``tau`` respectively.
    """

    E: float
    l_eff: float
    mu1: float
    mu3_or_tau: float
    family: Family
    n: int
    s: int = 0
    m: int = 0
    potential: str = ""
    boundary: bool = False

    @property
    def mu3(self) -> float:
        if self.family is Family.COULOMB_LIKE:
            return self.mu3_or_tau
        return self.mu3_or_tau + 0.5

    def record(self) -> dict:
        """Serializable row ``{potential, n, s, m, l_eff, E, family, mu1, mu3}``."""
        return {
            "potential": self.potential,
            "n": self.n,
            "s": self.s,
            "m": self.m,
            "l_eff": self.l_eff,
            "E": self.E,
            "family": self.family.value,
            "mu1": self.mu1,
            "mu3": self.mu3_or_tau,
        }


RECORD_FIELDS = ("potential", "n", "s", "m", "l_eff", "E", "family", "mu1", "mu3")


def _check_n(n):
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")


def coulomb_like_energy(M: float, prob: RadialProblem, n: int, l_eff: float = float("nan")) -> SpectrumResult:
    if prob.family is not Family.COULOMB_LIKE:
        raise DomainError("coulomb_like_energy needs a Coulomb-like radial problem")
    _check_n(n)
    if not prob.A < 0:
        raise NoBoundStateError(f"repulsive or free tail: A={prob.A!r} must be negative")
    mu3 = prob.mu3
    denom = n + 0.5 + mu3
    E = prob.E0 - M * prob.A ** 2 / (4.0 * denom ** 2)
    mu1 = -M * prob.A / (2.0 * denom)
    return SpectrumResult(E=E, l_eff=l_eff, mu1=mu1, mu3_or_tau=mu3,
                          family=Family.COULOMB_LIKE, n=int(n))


def oscillator_like_energy(M: float, prob: RadialProblem, n: int, l_eff: float = float("nan")) -> SpectrumResult:
    if prob.family is not Family.OSCILLATOR_LIKE:
        raise DomainError("oscillator_like_energy needs an oscillator-like radial problem")
    _check_n(n)
    if not prob.kappa > 0:
        raise DomainError(f"kappa must be positive, got {prob.kappa!r}")
    root = prob.mu3
    E = 2.0 * math.sqrt(prob.kappa / M) * (2 * n + 1 + root)
    return SpectrumResult(E=E, l_eff=l_eff, mu1=math.sqrt(M * prob.kappa),
                          mu3_or_tau=root - 0.5, family=Family.OSCILLATOR_LIKE, n=int(n))


def solve_radial(M: float, prob: RadialProblem, n: int, l_eff: float = float("nan")) -> SpectrumResult:
    if prob.family is Family.COULOMB_LIKE:
        return coulomb_like_energy(M, prob, n, l_eff)
    return oscillator_like_energy(M, prob, n, l_eff)


def quantization_residual(M: float, prob: RadialProblem, result: SpectrumResult) -> float:
    """Left side minus right side of the quantization rule that produced ``result``."""
    if prob.family is Family.COULOMB_LIKE:
        mu1 = math.sqrt(M * (prob.E0 - result.E))
        mu3 = prob.mu3
        return M * prob.A / (2.0 * mu1) + (2.0 * mu3 + 1.0) / 2.0 + result.n
    mu1 = math.sqrt(M * prob.kappa)
    tau = prob.mu3 - 0.5
    return M * result.E / (4.0 * mu1) - 0.5 * (tau + 1.5) - result.n


def energy(p: PotentialParams, M: float, qn: QuantumNumbers) -> SpectrumResult:
    """Bound-state energy of potential ``p`` for quantum numbers ``qn``."""
    le = l_eff_for(p, M, qn)
    prob = decompose(p, M, le.value)
    res = solve_radial(M, prob, qn.n, le.value)
    return SpectrumResult(E=res.E, l_eff=le.value, mu1=res.mu1, mu3_or_tau=res.mu3_or_tau,
                          family=res.family, n=qn.n, s=qn.s, m=qn.m,
                          potential=p.kind.value, boundary=le.boundary)


class SpecialCase(enum.Enum):
    HARTMANN = "hartmann"
    MODIFIED_KRATZER = "modified-kratzer"
    RING_OSCILLATOR_PURE = "ring-oscillator-pure"


def special_case_energy(kind: SpecialCase | str, params: PotentialParams, M: float,
                        qn: QuantumNumbers) -> float:
    """Energy from the reduced closed forms of the three special cases.

    ``HARTMANN`` takes a :class:`Makarov` record with ``gamma == 0``,
    ``MODIFIED_KRATZER`` a :class:`ModKratzerRing` with ``beta == 0`` and
    ``RING_OSCILLATOR_PURE`` a :class:`RingOscillator` with ``omega == 0``.
    """
    kind = SpecialCase(kind)
    m, s, n = qn.m, qn.s, qn.n
    if kind is SpecialCase.HARTMANN:
        if not isinstance(params, Makarov) or params.gamma != 0:
            raise DomainError("Hartmann case needs a Makarov record with gamma == 0")
        lp = 2.0 * math.sqrt(M * params.beta + m * m) + 2 * s + 1
        return -M * params.alpha ** 2 / (2 * n + lp + 1) ** 2
    if kind is SpecialCase.MODIFIED_KRATZER:
        if not isinstance(params, ModKratzerRing) or params.beta != 0:
            raise DomainError("modified Kratzer case needs a ModKratzerRing record with beta == 0")
        D0, r0 = params.D0, params.r0
        # script-L (script-L + 1) = l**2 - 1/4 with l = |m| + s + 1/2
        LL = abs(m) + s
        root = math.sqrt(4.0 * M * D0 * r0 ** 2 + 4.0 * LL * (LL + 1) + 1.0)
        return D0 - 4.0 * M * D0 ** 2 * r0 ** 2 / (2 * n + 1 + root) ** 2
    if kind is SpecialCase.RING_OSCILLATOR_PURE:
        if not isinstance(params, RingOscillator) or params.omega != 0:
            raise DomainError("pure ring oscillator case needs a RingOscillator record with omega == 0")
        lprime = (math.sqrt(M * params.beta + m * m) + s + 0.5) / 2.0
        return math.sqrt(16.0 * params.kappa / M) * (n + lprime + 0.5)
    raise TypeError(kind)


def as_printed_energy(p: PotentialParams, M: float, qn: QuantumNumbers) -> float:
    """Energy from the per-potential formulas in their originally published shape.

    The angular number is always the unified ``l_eff``.  Only the
    modified-Kratzer-plus-ring formula differs from :func:`energy`: its
    published form carries ``(2 M D0 r0)**2`` where ``M D0**2 r0**2 * 4`` is
    needed and drops the factor 4 inside the square root.
    """
    le = l_eff_for(p, M, qn).value
    n = qn.n
    if isinstance(p, Makarov):
        return -M * p.alpha ** 2 / (4.0 * (n + 0.5 + le) ** 2)
    if isinstance(p, ModKratzerRing):
        bracket = (2 * n + 1 + math.sqrt(M * p.D0 * p.r0 ** 2 + le ** 2)) / (2.0 * M * p.D0 * p.r0)
        return p.D0 - bracket ** -2
    if isinstance(p, DoubleRingKratzer):
        return -M * (p.D0 * p.r0 / (n + 0.5 + math.sqrt(le ** 2 + M * p.D0 * p.r0 ** 2))) ** 2
    if isinstance(p, ModifiedNonCentral):
        lq = le - 0.5
        root = math.sqrt(4.0 * M * p.D * p.a ** 2 + 4.0 * lq * (lq + 1) + 1.0)
        return p.D - (2.0 * math.sqrt(M) * p.D * p.a / (2 * n + 1 + root)) ** 2
    if isinstance(p, RingOscillator):
        return 2.0 * math.sqrt(p.kappa / M) * (2 * n + math.sqrt(le ** 2 + M * p.omega) + 1)
    raise TypeError(f"unsupported potential record {type(p).__name__}")
