"""Parameter records for the five potentials and their radial reduction.

After separating variables, every radial equation handled here takes one of
two canonical shapes::

    R'' + [M (E - E0) - M A / r - Lambda / r**2] R = 0      (Coulomb-like)
    R'' + [M E - M kappa r**2 - Lambda / r**2] R = 0        (oscillator-like)

:func:`decompose` maps a potential plus its effective angular quantum number
onto a :class:`RadialProblem` holding ``(E0, A, Lambda, kappa)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import ClassVar, Union

import numpy as np

from .errors import DomainError


class PotentialKind(enum.Enum):
    MAKAROV = "makarov"
    MOD_KRATZER_RING = "mod-kratzer-ring"
    DOUBLE_RING_KRATZER = "double-ring-kratzer"
    MODIFIED_NON_CENTRAL = "modified-non-central"
    RING_OSCILLATOR = "ring-oscillator"


class Family(enum.Enum):
    COULOMB_LIKE = "coulomb-like"
    OSCILLATOR_LIKE = "oscillator-like"


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial ``n``, polar ``s`` and azimuthal ``m`` quantum numbers."""

    n: int
    s: int = 0
    m: int = 0

    def __post_init__(self):
        for name in ("n", "s", "m"):
            value = getattr(self, name)
            if int(value) != value:
                raise DomainError(f"quantum number {name} must be an integer, got {value!r}")
        if self.n < 0 or self.s < 0:
            raise DomainError(f"n and s must be non-negative, got n={self.n}, s={self.s}")


def _require_positive(**values):
    for name, value in values.items():
        if not value > 0:
            raise DomainError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class Makarov:
    """``alpha/r + (beta + gamma cos(theta)) / (r**2 sin(theta)**2)``."""

    alpha: float
    beta: float = 0.0
    gamma: float = 0.0
    kind: ClassVar[PotentialKind] = PotentialKind.MAKAROV

    def radial(self, r):
        return self.alpha / np.asarray(r, dtype=float)

    def polar(self, theta):
        theta = np.asarray(theta, dtype=float)
        return (self.beta + self.gamma * np.cos(theta)) / np.sin(theta) ** 2


@dataclass(frozen=True)
class ModKratzerRing:
    """``D0 (1 - r0/r)**2 + beta cot(theta)**2 / r**2``."""

    D0: float
    r0: float
    beta: float = 0.0
    kind: ClassVar[PotentialKind] = PotentialKind.MOD_KRATZER_RING

    def __post_init__(self):
        _require_positive(D0=self.D0, r0=self.r0)

    @property
    def gamma(self) -> float:
        return 0.0

    def radial(self, r):
        r = np.asarray(r, dtype=float)
        return self.D0 * (1.0 - self.r0 / r) ** 2

    def polar(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.beta / np.tan(theta) ** 2


@dataclass(frozen=True)
class DoubleRingKratzer:
    """``-2 D0 (r0/r - r0**2 / (2 r**2)) + (beta/sin**2 + gamma/cos**2) / r**2``."""

    D0: float
    r0: float
    beta: float = 0.0
    gamma: float = 0.0
    kind: ClassVar[PotentialKind] = PotentialKind.DOUBLE_RING_KRATZER

    def __post_init__(self):
        _require_positive(D0=self.D0, r0=self.r0)

    def radial(self, r):
        r = np.asarray(r, dtype=float)
        return -2.0 * self.D0 * (self.r0 / r - 0.5 * self.r0 ** 2 / r ** 2)

    def polar(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.beta / np.sin(theta) ** 2 + self.gamma / np.cos(theta) ** 2


@dataclass(frozen=True)
class ModifiedNonCentral:
    """``D (1 - a/r)**2 + (beta + gamma cos(theta)) / (r**2 sin(theta)**2)``."""

    D: float
    a: float
    beta: float = 0.0
    gamma: float = 0.0
    kind: ClassVar[PotentialKind] = PotentialKind.MODIFIED_NON_CENTRAL

    def __post_init__(self):
        _require_positive(D=self.D, a=self.a)

    def radial(self, r):
        r = np.asarray(r, dtype=float)
        return self.D * (1.0 - self.a / r) ** 2

    def polar(self, theta):
        theta = np.asarray(theta, dtype=float)
        return (self.beta + self.gamma * np.cos(theta)) / np.sin(theta) ** 2


@dataclass(frozen=True)
class RingOscillator:
    """``kappa r**2 + omega / r**2 + beta / (r**2 sin(theta)**2)``."""

    kappa: float
    omega: float = 0.0
    beta: float = 0.0
    kind: ClassVar[PotentialKind] = PotentialKind.RING_OSCILLATOR

    def __post_init__(self):
        _require_positive(kappa=self.kappa)
        if self.omega < 0 or self.beta < 0:
            raise DomainError(
                f"omega and beta must be non-negative, got omega={self.omega!r}, beta={self.beta!r}")

    @property
    def gamma(self) -> float:
        return 0.0

    def radial(self, r):
        r = np.asarray(r, dtype=float)
        return self.kappa * r ** 2 + self.omega / r ** 2

    def polar(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.beta / np.sin(theta) ** 2


PotentialParams = Union[Makarov, ModKratzerRing, DoubleRingKratzer, ModifiedNonCentral, RingOscillator]

POTENTIAL_CLASSES: dict[PotentialKind, type] = {
    cls.kind: cls
    for cls in (Makarov, ModKratzerRing, DoubleRingKratzer, ModifiedNonCentral, RingOscillator)
}


def make_potential(kind: PotentialKind | str, **params) -> PotentialParams:
    """Build a parameter record from a kind name and keyword parameters."""
    kind = PotentialKind(kind)
    return POTENTIAL_CLASSES[kind](**params)


def evaluate(p: PotentialParams, r, theta):
    """Full potential ``V(r) + V(theta) / r**2``."""
    r = np.asarray(r, dtype=float)
    return p.radial(r) + p.polar(theta) / r ** 2


@dataclass(frozen=True)
class RadialProblem:
    """Canonical reduced radial equation.

    ``Lambda`` is the full inverse-square coefficient, already multiplied by
    ``M`` where the potential contributes to it.  ``A`` and ``E0`` are zero
    for the oscillator family, ``kappa`` is zero for the Coulomb family.
    """

    family: Family
    Lambda: float
    E0: float = 0.0
    A: float = 0.0
    kappa: float = 0.0

    def __post_init__(self):
        if self.Lambda < -0.25:
            raise DomainError(
                f"sub-critical inverse-square coupling: Lambda={self.Lambda!r} < -1/4")

    @property
    def mu3(self) -> float:
        """``sqrt(Lambda + 1/4)``; the small-r behaviour is ``r**(mu3 + 1/2)``."""
        return math.sqrt(self.Lambda + 0.25)

    def effective_potential(self, M: float, r):
        """``M V_eff(r)`` so that the radial equation reads ``-R'' + M V_eff R = M E R``."""
        r = np.asarray(r, dtype=float)
        if self.family is Family.COULOMB_LIKE:
            return M * self.E0 + M * self.A / r + self.Lambda / r ** 2
        return M * self.kappa * r ** 2 + self.Lambda / r ** 2


def decompose(p: PotentialParams, M: float, l_eff: float) -> RadialProblem:
    """Reduce a potential to its canonical radial problem.

    Parameters
    ----------
    p : PotentialParams
        One of the five parameter records.
    M : float
        Mass parameter ``2m / hbar**2``.
    l_eff : float
        Effective angular quantum number; enters through ``l_eff**2 - 1/4``.
    """
    l_eff = float(l_eff)
    if l_eff < 0:
        raise DomainError(f"l_eff must be non-negative, got {l_eff!r}")
    L = l_eff ** 2 - 0.25
    if isinstance(p, Makarov):
        return RadialProblem(Family.COULOMB_LIKE, Lambda=L, E0=0.0, A=p.alpha)
    if isinstance(p, ModKratzerRing):
        return RadialProblem(Family.COULOMB_LIKE, Lambda=L + M * p.D0 * p.r0 ** 2,
                             E0=p.D0, A=-2.0 * p.D0 * p.r0)
    if isinstance(p, DoubleRingKratzer):
        return RadialProblem(Family.COULOMB_LIKE, Lambda=L + M * p.D0 * p.r0 ** 2,
                             E0=0.0, A=-2.0 * p.D0 * p.r0)
    if isinstance(p, ModifiedNonCentral):
        return RadialProblem(Family.COULOMB_LIKE, Lambda=L + M * p.D * p.a ** 2,
                             E0=p.D, A=-2.0 * p.D * p.a)
    if isinstance(p, RingOscillator):
        return RadialProblem(Family.OSCILLATOR_LIKE, Lambda=L + M * p.omega, kappa=p.kappa)
    raise TypeError(f"unsupported potential record {type(p).__name__}")
