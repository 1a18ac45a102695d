"""
Normalized radial eigenfunctions
================================

Each bound state is an exponential envelope times a power of r times a Kummer
polynomial.  For N2 the power is about 219, so the functions are evaluated in
log space to stay finite.
"""

import numpy as np

from ncpspec import Makarov, ModifiedNonCentral, QuantumNumbers, energy, mass_parameter
from ncpspec.wavefn import (
    laplace_image,
    laplace_image_closed_form,
    node_positions,
    overlap,
    radial_wavefunction,
)


def state(p, M, n, s=0, m=0):
    qn = QuantumNumbers(n, s, m)
    return radial_wavefunction(p, M, qn, energy(p, M, qn))


# Hydrogen 1s: R(r) = 2 r exp(-r).
w = state(Makarov(alpha=-2.0), 1.0, 0)
print(f"hydrogen 1s: norm {w.norm:.12f}, R(1) = {w(1.0):.9f}, 2/e = {2 / np.e:.9f}")

# Nodes sit at the roots of the Kummer polynomial.
w2 = state(Makarov(alpha=-2.0), 1.0, 2)
print("hydrogen n=2 nodes:", node_positions(w2), " expected", (3 - np.sqrt(3)) * 1.5, (3 + np.sqrt(3)) * 1.5)

# N2 vibrational states are narrow peaks around the bond length.
M = mass_parameter(7.00335)
n2 = ModifiedNonCentral(D=11.9384, a=1.0940)
ws = [state(n2, M, n) for n in range(3)]
r = np.linspace(0.9, 1.3, 9)
print("\n   r (A)   " + "  ".join(f"R_{n}(r)".rjust(10) for n in range(3)))
for x in r:
    print(f"  {x:6.3f}  " + "  ".join(f"{w(x):10.5f}" for w in ws))
print("nodes of n=1, n=2:", node_positions(ws[1]), node_positions(ws[2]))

# Different n at the same angular state are orthogonal.
print(f"<0|1> = {overlap(ws[0], ws[1]):.1e}, <1|2> = {overlap(ws[1], ws[2]):.1e}, "
      f"<2|2> = {overlap(ws[2], ws[2]):.12f}")

# The Laplace image of the stripped function g(r) = r**(2 mu3) exp(-mu1 r) 1F1(...)
# agrees with its closed form up to one constant.
wr = state(Makarov(alpha=-1.5, beta=0.7, gamma=-0.4), 1.0, 3, 1, 1)
for t in (2, 3, 5):
    t = t * wr.mu1
    print(f"t = {t:.4f}: numeric / closed = {laplace_image(wr, t) / laplace_image_closed_form(wr, t):.12e}")
