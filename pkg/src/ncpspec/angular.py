"""Closed-form effective angular quantum numbers.

Every value returned here follows one convention: the polar equation has
eigenvalue ``l_eff**2`` and the radial equation sees ``L = l_eff**2 - 1/4``.
All strengths enter multiplied by the mass parameter, ``c = M beta + m**2``
and ``d = M gamma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .potentials import PotentialKind, PotentialParams, QuantumNumbers


@dataclass(frozen=True)
class EffectiveL:
    """Effective angular quantum number.

    ``boundary`` marks the degenerate Makarov-type case ``c == |d| > 0``
    where one endpoint exponent collapses to its critical value.
    """

    value: float
    boundary: bool = False

    def __float__(self):
        return self.value

    @property
    def squared(self) -> float:
        return self.value ** 2


def l_eff(kind: PotentialKind | str, M: float, beta: float, gamma: float,
          m: int, s: int) -> EffectiveL:
    """Effective angular quantum number for a potential kind.

    Raises
    ------
    DomainError
        If the polar eigenvalue would be complex for these parameters.
    """
    kind = PotentialKind(kind)
    if s < 0 or int(s) != s:
        raise DomainError(f"s must be a non-negative integer, got {s!r}")
    c = M * beta + m * m
    d = M * gamma
    if kind in (PotentialKind.MAKAROV, PotentialKind.MODIFIED_NON_CENTRAL):
        if c < abs(d):
            raise DomainError(
                f"complex angular eigenvalue: M*beta + m^2 = {c!r} < |M*gamma| = {abs(d)!r}")
        core = 0.5 * (math.sqrt(c + d) + math.sqrt(c - d))
        return EffectiveL(core + s + 0.5, boundary=(c == abs(d) and c > 0))
    if c < 0:
        raise DomainError(f"complex angular eigenvalue: M*beta + m^2 = {c!r} < 0")
    if kind is PotentialKind.MOD_KRATZER_RING:
        sq = (math.sqrt(c) + s + 0.5) ** 2 - M * beta
        if sq < 0:
            raise DomainError(f"complex angular eigenvalue: l^2 = {sq!r} < 0")
        return EffectiveL(math.sqrt(sq))
    if kind is PotentialKind.DOUBLE_RING_KRATZER:
        if d < -0.25:
            raise DomainError(f"complex angular eigenvalue: M*gamma = {d!r} < -1/4")
        return EffectiveL(math.sqrt(c) + math.sqrt(0.25 + d) + 2 * s + 1)
    if kind is PotentialKind.RING_OSCILLATOR:
        return EffectiveL(math.sqrt(c) + s + 0.5)
    raise TypeError(f"unsupported kind {kind!r}")


def l_eff_for(p: PotentialParams, M: float, qn: QuantumNumbers) -> EffectiveL:
    """:func:`l_eff` with the angular parameters read from a potential record."""
    return l_eff(p.kind, M, p.beta, getattr(p, "gamma", 0.0), qn.m, qn.s)
