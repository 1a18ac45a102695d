"""
One radial problem for five potentials
======================================

Every potential here separates in spherical coordinates.  The polar equation
fixes an effective angular number l_eff, and the radial equation then takes
one of two canonical forms: Coulomb-like (a 1/r tail) or oscillator-like (an
r**2 well).  Both are solved by a terminating Kummer series.
"""

from ncpspec import (
    DoubleRingKratzer,
    Makarov,
    ModifiedNonCentral,
    ModKratzerRing,
    QuantumNumbers,
    RingOscillator,
    decompose,
    energy,
    l_eff_for,
)

M = 1.0
qn = QuantumNumbers(n=1, s=1, m=1)

potentials = [
    Makarov(alpha=-2.0, beta=0.5, gamma=0.3),
    ModKratzerRing(D0=1.0, r0=1.0, beta=0.5),
    DoubleRingKratzer(D0=1.0, r0=1.0, beta=0.5, gamma=0.3),
    ModifiedNonCentral(D=1.0, a=1.0, beta=0.5, gamma=0.3),
    RingOscillator(kappa=1.0, omega=0.5, beta=0.5),
]

# Reduction to the canonical problem: E0 is the dissociation limit, A the
# strength of the 1/r tail and Lambda the full 1/r**2 coefficient.
for p in potentials:
    le = l_eff_for(p, M, qn)
    prob = decompose(p, M, le.value)
    print(f"{p.kind.value:<22} l_eff={le.value:8.5f}  {prob.family.value:<16}"
          f" E0={prob.E0:5.2f} A={prob.A:6.2f} Lambda={prob.Lambda:8.4f} kappa={prob.kappa:4.2f}")

# Energies follow from the quantization rule of each family.
print()
for p in potentials:
    res = energy(p, M, qn)
    print(f"{p.kind.value:<22} E = {res.E:+.9f}   mu1 = {res.mu1:.6f}")

# The hydrogen atom is the Makarov potential with the ring terms switched off:
# E = -1/N**2 with N = n + s + |m| + 1.
hydrogen = Makarov(alpha=-2.0)
for n, s, m in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 1, 2)]:
    N = n + s + abs(m) + 1
    print(f"hydrogen (n,s,m)=({n},{s},{m})  E = {energy(hydrogen, 1.0, QuantumNumbers(n, s, m)).E:+.9f}"
          f"  -1/N^2 = {-1 / N ** 2:+.9f}")

# A ring term breaks the m degeneracy but keeps E even in m.
ring = Makarov(alpha=-2.0, beta=0.4)
print([round(energy(ring, 1.0, QuantumNumbers(0, 0, m)).E, 6) for m in range(-2, 3)])
