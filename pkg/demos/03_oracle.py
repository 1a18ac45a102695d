"""
Checking closed forms with a finite-difference eigensolver
==========================================================

The oracle discretizes the radial and polar equations on uniform grids,
finds eigenvalues by Sturm-sequence bisection, and extrapolates over three
successively halved grids.  None of it uses the closed forms.
"""

import math

from ncpspec import Family, Makarov, QuantumNumbers, RadialProblem, RingOscillator, verify
from ncpspec.oracle import GridSpec, angular_estimate, radial_estimate, suggest_radial_grid

# A Coulomb problem with a non-integer small-r exponent.
prob = RadialProblem(Family.COULOMB_LIKE, Lambda=0.3, A=-2.0)
exact = -1.0 / (0.5 + math.sqrt(0.55)) ** 2
grid = suggest_radial_grid(1.0, prob, k=0)
print(f"box r_max = {grid.r_max:.2f}, {grid.points} cells, {grid.refinement_levels} levels")

# The default scheme factors r**(mu3 + 1/2) out of the solution, so every level
# is second-order accurate and the extrapolation removes the error.
est = radial_estimate(1.0, prob, 0, grid)
for level, value in enumerate(est.levels):
    print(f"  level {level}: {value:.12f}  error {value - exact:+.2e}")
print(f"  extrapolated {est.extrapolated:.12f}  error {est.extrapolated - exact:+.2e}, order {est.order:.3f}")

# The plain three-point scheme loses its order when mu3 + 1/2 is not an integer.
plain = radial_estimate(1.0, prob, 0, grid, scheme="plain")
print(f"plain scheme: extrapolated error {plain.extrapolated - exact:+.2e}, order {plain.order:.3f}")

# Doubling the box leaves a bound state untouched.
wide = GridSpec(2 * grid.r_max, 2 * grid.points)
print(f"box doubled: change {radial_estimate(1.0, prob, 0, wide).extrapolated - est.extrapolated:+.1e}")

# The polar equation is handled the same way and returns l**2.
ang = angular_estimate(1.0, "makarov", beta=1.0, gamma=1.0, m=0, s=0)
print(f"\nMakarov polar l^2 = {ang.extrapolated:.10f}, closed form {(math.sqrt(0.5) + 0.5) ** 2:.10f}")

# verify() chains both: the radial oracle is fed the oracle's own l**2.
for p, qn in [(Makarov(-2.0), QuantumNumbers(0)),
              (RingOscillator(kappa=1.0, omega=1.0, beta=2.0), QuantumNumbers(2, 1, 1))]:
    r = verify(p, 1.0, qn)
    print(f"{r.potential:<16} {qn}: l^2 dev {r.angular.rel_deviation:.1e}, "
          f"E dev {r.radial.rel_deviation:.1e} -> {'PASS' if r.passed else 'FAIL'}")
