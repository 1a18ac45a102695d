"""Bound states of non-central potentials in closed form, with a numerical oracle.

The library covers five separable potentials (Makarov, modified Kratzer plus
ring, double-ring Kratzer, modified non-central and ring-shaped oscillator).
Each one is reduced to a canonical radial problem whose spectrum and
eigenfunctions are known in closed form.  An independent finite-difference
eigensolver checks the closed forms.
"""

from .angular import EffectiveL, l_eff, l_eff_for
from .errors import ContractError, DomainError, NoBoundStateError, StateNotCapturedError
from .oracle import (
    AngularGrid,
    GridSpec,
    OracleReport,
    angular_eigenvalue,
    radial_eigenvalue,
    verify,
)
from .potentials import (
    DoubleRingKratzer,
    Family,
    Makarov,
    ModifiedNonCentral,
    ModKratzerRing,
    PotentialKind,
    QuantumNumbers,
    RadialProblem,
    RingOscillator,
    decompose,
    make_potential,
)
from .spectra import (
    SpecialCase,
    SpectrumResult,
    coulomb_like_energy,
    energy,
    oscillator_like_energy,
    special_case_energy,
)
from .units import CONSTANTS, PhysicalConstants, UnitSystem, mass_parameter
from .wavefn import RadialWavefunction, kummer_poly, node_count, radial_wavefunction

__version__ = "0.1.0"

__all__ = [
    "AngularGrid", "CONSTANTS", "ContractError", "DomainError", "DoubleRingKratzer",
    "EffectiveL", "Family", "GridSpec", "Makarov", "ModKratzerRing", "ModifiedNonCentral",
    "NoBoundStateError", "OracleReport", "PhysicalConstants", "PotentialKind",
    "QuantumNumbers", "RadialProblem", "RadialWavefunction", "RingOscillator",
    "SpecialCase", "SpectrumResult", "StateNotCapturedError", "UnitSystem",
    "angular_eigenvalue", "coulomb_like_energy", "decompose", "energy", "kummer_poly",
    "l_eff", "l_eff_for", "make_potential", "mass_parameter", "node_count",
    "oscillator_like_energy", "radial_eigenvalue", "radial_wavefunction",
    "special_case_energy", "verify",
]
