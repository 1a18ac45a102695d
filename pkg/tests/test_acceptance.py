"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for just the lines, or
through pytest, which also repeats them in the terminal summary.
"""

import itertools
import math
import subprocess
import sys
import time

import numpy as np

from designated import (
    LAPLACE_STATES,
    ORTHO_FAMILIES,
    STATES,
    build,
    norm_by_mpmath,
    residual_ratios,
)
from ncpspec.oracle import PASS_RTOL, verify
from ncpspec.potentials import (
    DoubleRingKratzer,
    Makarov,
    ModifiedNonCentral,
    ModKratzerRing,
    QuantumNumbers,
    RingOscillator,
)
from ncpspec.spectra import SpecialCase, energy, special_case_energy
from ncpspec.units import mass_parameter
from ncpspec.wavefn import laplace_image, laplace_image_closed_form, node_count, overlap

LINES = []


def report(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}"
    LINES.append(line)
    print(line)
    return ok


def rel(a, b):
    return abs(a - b) / abs(b)


# 1. Table reproduction

TABLE_ROWS = [
    ((0, 0, 0), 0.05443703), ((1, 0, 0), 0.16207785), ((1, 1, 1), 0.16354346),
    ((2, 0, 0), 0.26826281), ((2, 1, 1), 0.26970864), ((2, 2, 2), 0.27308086),
    ((3, 0, 0), 0.37301804), ((3, 1, 1), 0.37444445), ((3, 2, 2), 0.37777137),
    ((3, 3, 3), 0.38299550),
]


def criterion_table():
    t0 = time.perf_counter()
    M = mass_parameter(7.00335)
    p = ModifiedNonCentral(D=11.9384, a=1.0940)
    worst = max(abs(energy(p, M, QuantumNumbers(*qn)).E - printed) for qn, printed in TABLE_ROWS)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-3 and elapsed < 1.0
    return report(1, "N2 table, beta=gamma=0 column", ok,
                  f"10 rows, max |dE| = {worst:.2e} eV (tol 1e-3), {elapsed:.3f} s (limit 1 s)")


# 2. Closed forms against the finite-difference oracle, M = 1

ORACLE_MATRIX = [
    (Makarov(alpha=-2.0), (0, 0, 0)),
    (Makarov(alpha=-2.0, beta=1.0, gamma=1.0), (1, 0, 0)),
    (Makarov(alpha=-1.5, beta=0.7, gamma=-0.4), (2, 1, 1)),
    (Makarov(alpha=-3.0, beta=0.3, gamma=0.9), (3, 2, -2)),
    (Makarov(alpha=-1.0, beta=2.0, gamma=0.5), (1, 1, 2)),
    (ModKratzerRing(D0=1.0, r0=1.0), (0, 0, 0)),
    (ModKratzerRing(D0=1.0, r0=1.0, beta=1.0), (0, 0, 1)),
    (ModKratzerRing(D0=2.0, r0=1.5, beta=0.5), (2, 1, -1)),
    (ModKratzerRing(D0=0.8, r0=2.0, beta=1.2), (3, 2, 2)),
    (ModKratzerRing(D0=3.0, r0=0.7, beta=0.0), (1, 2, 0)),
    (DoubleRingKratzer(D0=1.0, r0=1.0), (0, 0, 0)),
    (DoubleRingKratzer(D0=1.0, r0=1.0, beta=0.3, gamma=0.2), (3, 2, -2)),
    (DoubleRingKratzer(D0=2.0, r0=0.8, beta=1.0, gamma=-0.2), (1, 0, 1)),
    (DoubleRingKratzer(D0=0.5, r0=2.0, beta=0.0, gamma=1.5), (2, 1, 0)),
    (DoubleRingKratzer(D0=1.5, r0=1.2, beta=0.6, gamma=0.4), (0, 1, 2)),
    (ModifiedNonCentral(D=1.0, a=1.0), (0, 0, 0)),
    (ModifiedNonCentral(D=1.0, a=1.0, beta=1.0, gamma=0.5), (1, 1, 0)),
    (ModifiedNonCentral(D=2.5, a=0.9, beta=0.4, gamma=-0.3), (2, 0, 1)),
    (ModifiedNonCentral(D=0.7, a=1.8, beta=1.5, gamma=1.0), (3, 2, -1)),
    (ModifiedNonCentral(D=1.2, a=1.1, beta=0.2, gamma=0.2), (0, 1, 2)),
    (RingOscillator(kappa=0.25), (0, 0, 0)),
    (RingOscillator(kappa=1.0, omega=1.0, beta=2.0), (2, 1, 1)),
    (RingOscillator(kappa=0.5, omega=0.3, beta=0.0), (3, 0, -2)),
    (RingOscillator(kappa=2.0, omega=0.0, beta=0.8), (1, 2, 0)),
    (RingOscillator(kappa=0.75, omega=2.5, beta=1.1), (0, 1, 2)),
]


def criterion_oracle():
    t0 = time.perf_counter()
    reports = [verify(p, 1.0, QuantumNumbers(*q), points=4000, refinement_levels=3)
               for p, q in ORACLE_MATRIX]
    elapsed = time.perf_counter() - t0
    kinds = {r.potential for r in reports}
    worst_l2 = max(r.angular.rel_deviation for r in reports)
    worst_E = max(r.radial.rel_deviation for r in reports)
    failed = [f"{r.potential}{(r.n, r.s, r.m)}" for r in reports if not r.passed]
    ok = (not failed and len(reports) >= 20 and len(kinds) == 5
          and worst_l2 <= PASS_RTOL and worst_E <= PASS_RTOL and elapsed < 60.0)
    detail = (f"{len(reports)} cases over {len(kinds)} potentials, max rel dev l^2 {worst_l2:.1e}, "
              f"E {worst_E:.1e} (tol 1e-5), {elapsed:.2f} s (limit 60 s)")
    if failed:
        detail += f"; failing: {', '.join(failed)}"
    return report(2, "closed forms vs finite-difference oracle", ok, detail)


# 3. Special-case identities


def criterion_special_cases():
    qns = [QuantumNumbers(n, s, m) for n, s, m in itertools.product(range(4), range(3), range(-2, 3))]
    worst = {}
    cases = {
        SpecialCase.HARTMANN: (
            [(Makarov(alpha=a, beta=b), 1.0) for a in (-2.0, -0.7) for b in (0.0, 1.0, 3.3)],
            lambda p: Makarov(p.alpha, p.beta, 0.0)),
        SpecialCase.MODIFIED_KRATZER: (
            [(ModKratzerRing(D0=d, r0=r), 1.0) for d in (1.0, 2.5) for r in (0.6, 1.0)]
            + [(ModKratzerRing(D0=11.9384, r0=1.0940), mass_parameter(7.00335))],
            lambda p: ModKratzerRing(p.D0, p.r0, 0.0)),
        SpecialCase.RING_OSCILLATOR_PURE: (
            [(RingOscillator(kappa=w * w / 4, beta=b), 1.0) for w in (0.5, 1.0, 2.0) for b in (0.0, 0.4)],
            lambda p: RingOscillator(p.kappa, 0.0, p.beta)),
    }
    for kind, (records, parent) in cases.items():
        devs = [rel(special_case_energy(kind, p, M, qn), energy(parent(p), M, qn).E)
                for p, M in records for qn in qns]
        worst[kind.value] = max(devs)
    ok = all(v <= 1e-12 for v in worst.values())
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items()) + " (max rel dev, tol 1e-12)"
    return report(3, "special-case identities", ok, detail)


# 4. Hydrogen ladder and isotropic oscillator


def criterion_ladders():
    hyd = [rel(energy(Makarov(-2.0), 1.0, QuantumNumbers(n, s, m)).E, -1.0 / (n + s + abs(m) + 1) ** 2)
           for n in range(6) for s in range(6) for m in range(-5, 6) if n + s + abs(m) + 1 <= 6]
    osc = [rel(energy(RingOscillator(0.25), 1.0, QuantumNumbers(n, s, m)).E, 2 * n + abs(m) + s + 1.5)
           for n in range(6) for s in range(6) for m in range(-5, 6)]
    ok = max(hyd) <= 1e-12 and max(osc) <= 1e-12
    return report(4, "hydrogen ladder and isotropic oscillator", ok,
                  f"{len(hyd)} hydrogen states (N <= 6) max rel dev {max(hyd):.1e}, "
                  f"{len(osc)} oscillator states max rel dev {max(osc):.1e} (tol 1e-12)")


# 5. Wavefunction suite


def criterion_wavefunctions():
    problems = []
    worst_norm = worst_res = worst_ortho = worst_lap = 0.0
    orders = []
    for label, p, M, q in STATES:
        w = build(p, M, q)
        if node_count(w) != q[0]:
            problems.append(f"{label} nodes {node_count(w)} != {q[0]}")
        worst_norm = max(worst_norm, abs(norm_by_mpmath(w) - 1.0))
        ratios = residual_ratios(w)
        worst_res = max(worst_res, ratios[-1])
        orders.extend(np.log2(np.array(ratios[:-1]) / np.array(ratios[1:])).tolist())
    for label, p, M, sm, ns in ORTHO_FAMILIES:
        ws = [build(p, M, (n, *sm)) for n in ns]
        for a, b in itertools.combinations(ws, 2):
            worst_ortho = max(worst_ortho, abs(overlap(a, b)))
    for label, p, q in LAPLACE_STATES:
        w = build(p, 1.0, q)
        ratios = [laplace_image(w, t) / laplace_image_closed_form(w, t) for t in (2 * w.mu1, 3 * w.mu1, 5 * w.mu1)]
        worst_lap = max(worst_lap, max(rel(r, ratios[0]) for r in ratios[1:]))
    order_lo, order_hi = min(orders), max(orders)
    ok = (not problems and worst_norm <= 1e-8 and worst_res <= 1e-5 and 1.5 <= order_lo
          and order_hi <= 2.5 and worst_ortho <= 1e-7 and worst_lap <= 1e-6)
    detail = (f"{len(STATES)} states: nodes ok, |norm - 1| {worst_norm:.1e} (tol 1e-8), "
              f"ODE residual {worst_res:.1e} (tol 1e-5) with order {order_lo:.2f}..{order_hi:.2f}, "
              f"orthogonality {worst_ortho:.1e} (tol 1e-7), Laplace image {worst_lap:.1e} (tol 1e-6)")
    if problems:
        detail += "; " + "; ".join(problems)
    return report(5, "wavefunction suite", ok, detail)


# 6. Determinism


def criterion_determinism():
    cmd = [sys.executable, "-m", "ncpspec", "table", "--preset", "n2-table1"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    ok = runs[0] == runs[1] and runs[0].count(b"\n") == 11
    return report(6, "deterministic table output", ok,
                  f"two separate processes, {len(runs[0])} bytes each, identical={runs[0] == runs[1]}")


def test_table_reproduction():
    assert criterion_table()


def test_closed_forms_against_oracle():
    assert criterion_oracle()


def test_special_case_identities():
    assert criterion_special_cases()


def test_hydrogen_and_oscillator_ladders():
    assert criterion_ladders()


def test_wavefunction_suite():
    assert criterion_wavefunctions()


def test_deterministic_table():
    assert criterion_determinism()


if __name__ == "__main__":
    results = [criterion_table(), criterion_oracle(), criterion_special_cases(),
               criterion_ladders(), criterion_wavefunctions(), criterion_determinism()]
    sys.exit(0 if all(results) else 1)
