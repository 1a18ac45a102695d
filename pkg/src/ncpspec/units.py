"""Physical constants and the mass parameter ``M = 2m / hbar**2``.

Two unit systems are supported.  In the dimensionless system ``M`` is fixed
to one; in the molecular system energies are in eV, lengths in angstrom and
masses in unified atomic mass units, so ``M`` carries units of eV^-1 A^-2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError


class UnitSystem(enum.Enum):
    DIMENSIONLESS = "dimensionless"
    MOLECULAR = "molecular"

    @property
    def energy_unit(self) -> str:
        return "eV" if self is UnitSystem.MOLECULAR else "1"

    @property
    def length_unit(self) -> str:
        return "angstrom" if self is UnitSystem.MOLECULAR else "1"


@dataclass(frozen=True)
class PhysicalConstants:
    """A pinned constant set.

    Attributes
    ----------
    hbar_c : float
        Reduced Planck constant times the speed of light, eV * angstrom.
    amu_c2 : float
        Atomic mass constant energy equivalent, eV.
    release : str
        Name of the adjustment the values were taken from.
    """

    hbar_c: float
    amu_c2: float
    release: str

    def table(self) -> list[tuple[str, float, str, str]]:
        """Rows of ``(name, value, unit, release)``."""
        return [
            ("hbar_c", self.hbar_c, "eV*angstrom", self.release),
            ("amu_c2", self.amu_c2, "eV", self.release),
        ]


# hbar*c = 197.3269804 MeV fm (exact given the 2019 SI), m_u c^2 = 931.49410242(28) MeV
CODATA_2018 = PhysicalConstants(
    hbar_c=1973.269804,
    amu_c2=931.49410242e6,
    release="CODATA 2018",
)

CONSTANTS = CODATA_2018


def mass_parameter(mu: float, system: UnitSystem = UnitSystem.MOLECULAR,
                   constants: PhysicalConstants = CONSTANTS) -> float:
    """Return ``M = 2 mu / hbar**2`` in the requested unit system.

    Parameters
    ----------
    mu : float
        Reduced mass in amu.  Must be positive unless the system is
        dimensionless, in which case it is ignored.
    system : UnitSystem
        ``DIMENSIONLESS`` returns exactly 1.

    Returns
    -------
    float
        ``M`` in eV^-1 A^-2 (molecular) or 1 (dimensionless).
    """
    if system is UnitSystem.DIMENSIONLESS:
        return 1.0
    if not mu > 0:
        raise DomainError(f"reduced mass must be positive, got mu={mu!r}")
    return 2.0 * mu * constants.amu_c2 / constants.hbar_c ** 2
