import math

import pytest
from hypothesis import given, strategies as st

from ncpspec.errors import DomainError, NoBoundStateError
from ncpspec.potentials import (
    DoubleRingKratzer,
    Family,
    Makarov,
    ModifiedNonCentral,
    ModKratzerRing,
    QuantumNumbers,
    RadialProblem,
    RingOscillator,
    decompose,
)
from ncpspec.spectra import (
    RECORD_FIELDS,
    SpecialCase,
    as_printed_energy,
    coulomb_like_energy,
    energy,
    oscillator_like_energy,
    quantization_residual,
    solve_radial,
    special_case_energy,
)
from ncpspec.units import mass_parameter

# radial finite-difference oracle, 4000 x 3 levels, Richardson-extrapolated
ORACLE_HYDROGEN_L1 = -0.38196601124315316
ORACLE_OSC_K1 = 10.000000000447201
ORACLE_DOUBLE_RING = -0.18858048465817082

N2 = ModifiedNonCentral(D=11.9384, a=1.0940)
N2_ROWS = [
    ((0, 0, 0), 0.05443703), ((1, 0, 0), 0.16207785), ((1, 1, 1), 0.16354346),
    ((2, 0, 0), 0.26826281), ((2, 1, 1), 0.26970864), ((2, 2, 2), 0.27308086),
    ((3, 0, 0), 0.37301804), ((3, 1, 1), 0.37444445), ((3, 2, 2), 0.37777137),
    ((3, 3, 3), 0.38299550),
]


def coulomb(Lambda, A, E0=0.0):
    return RadialProblem(Family.COULOMB_LIKE, Lambda=Lambda, E0=E0, A=A)


def oscillator(Lambda, kappa):
    return RadialProblem(Family.OSCILLATOR_LIKE, Lambda=Lambda, kappa=kappa)


def test_hydrogen_ground_state():
    res = coulomb_like_energy(1.0, coulomb(0.0, -2.0), 0)
    assert res.E == -1.0
    assert res.mu1 == 1.0
    assert res.mu3 == 0.5


def test_coulomb_against_frozen_oracle():
    res = coulomb_like_energy(1.0, coulomb(1.0, -2.0), 0)
    assert res.E == pytest.approx(-1.0 / (0.5 + math.sqrt(5) / 2) ** 2, rel=1e-15)
    assert res.E == pytest.approx(ORACLE_HYDROGEN_L1, rel=1e-9)


@pytest.mark.parametrize("n, expected", [(0, 1.5), (2, 5.5)])
def test_isotropic_oscillator(n, expected):
    assert oscillator_like_energy(1.0, oscillator(0.0, 0.25), n).E == pytest.approx(expected, rel=1e-15)


def test_oscillator_against_frozen_oracle():
    res = oscillator_like_energy(1.0, oscillator(3.75, 1.0), 1)
    assert res.E == 10.0
    assert res.E == pytest.approx(ORACLE_OSC_K1, rel=1e-9)
    assert res.mu3_or_tau == 1.5
    assert res.mu3 == 2.0


def test_double_ring_example_follows_l_eff_formula():
    # l_eff = 3/2 here, so Lambda = 3 and the oracle lands on -1/(1/2 + sqrt(13)/2)**2
    res = energy(DoubleRingKratzer(D0=1.0, r0=1.0), 1.0, QuantumNumbers(0))
    assert res.l_eff == 1.5
    assert res.E == pytest.approx(-1.0 / (0.5 + math.sqrt(13) / 2) ** 2, rel=1e-15)
    assert res.E == pytest.approx(ORACLE_DOUBLE_RING, rel=1e-9)


@pytest.mark.parametrize("qn, printed", N2_ROWS)
def test_n2_table_column(qn, printed):
    M = mass_parameter(7.00335)
    assert energy(N2, M, QuantumNumbers(*qn)).E == pytest.approx(printed, abs=1e-5)


def test_hydrogen_via_energy():
    res = energy(Makarov(alpha=-2.0), 1.0, QuantumNumbers(0, 0, 0))
    assert res.E == -1.0
    assert res.potential == "makarov"
    assert res.family is Family.COULOMB_LIKE


@pytest.mark.parametrize("n, s, m", [(n, s, m) for n in range(6) for s in range(6) for m in range(-5, 6)
                                     if n + s + abs(m) + 1 <= 6])
def test_hydrogen_ladder(n, s, m):
    N = n + s + abs(m) + 1
    assert energy(Makarov(alpha=-2.0), 1.0, QuantumNumbers(n, s, m)).E == pytest.approx(-1.0 / N ** 2, rel=1e-12)


@given(A=st.floats(-20.0, -0.01), L=st.floats(-0.25, 50.0), E0=st.floats(-5, 5),
       M=st.floats(0.1, 1e4), n=st.integers(0, 30))
def test_coulomb_quantization_residual(A, L, E0, M, n):
    prob = coulomb(L, A, E0)
    res = coulomb_like_energy(M, prob, n)
    assert res.E < E0
    scale = n + 0.5 + prob.mu3
    # mu1 is rebuilt from E0 - E, which loses digits when the binding is tiny next to E0
    conditioning = 1.0 + abs(E0) / (E0 - res.E)
    assert abs(quantization_residual(M, prob, res)) <= 1e-10 * max(1.0, scale) * conditioning


@given(A=st.floats(-20.0, -0.01), L=st.floats(-0.25, 50.0), M=st.floats(0.1, 1e4), n=st.integers(0, 30))
def test_coulomb_quantization_residual_without_offset(A, L, M, n):
    prob = coulomb(L, A)
    res = coulomb_like_energy(M, prob, n)
    assert abs(quantization_residual(M, prob, res)) <= 1e-10


@given(k=st.floats(0.01, 50.0), L=st.floats(-0.25, 50.0), M=st.floats(0.1, 1e4), n=st.integers(0, 30))
def test_oscillator_quantization_residual(k, L, M, n):
    prob = oscillator(L, k)
    res = oscillator_like_energy(M, prob, n)
    assert res.E > 0
    assert abs(quantization_residual(M, prob, res)) <= 1e-10 * max(1.0, n + prob.mu3)


@given(A=st.floats(-10.0, -0.01), L=st.floats(-0.25, 20.0), c=st.floats(0.01, 100.0), n=st.integers(0, 10))
def test_coulomb_scaling(A, L, c, n):
    base = coulomb_like_energy(1.0, coulomb(L, A), n).E
    assert coulomb_like_energy(1.0, coulomb(L, c * A), n).E == pytest.approx(c * c * base, rel=1e-12)


def test_monotone_in_n():
    prob = coulomb(2.0, -1.0, E0=0.3)
    Es = [coulomb_like_energy(2.0, prob, n).E for n in range(20)]
    assert all(a < b < 0.3 for a, b in zip(Es, Es[1:]))
    prob = oscillator(1.2, 0.7)
    Es = [oscillator_like_energy(2.0, prob, n).E for n in range(20)]
    steps = [b - a for a, b in zip(Es, Es[1:])]
    assert steps == pytest.approx([4 * math.sqrt(0.7 / 2.0)] * 19, rel=1e-12)


def test_hartmann_special_case():
    p = Makarov(alpha=-2.0, beta=1.0)
    qn = QuantumNumbers(0, 0, 1)
    got = special_case_energy(SpecialCase.HARTMANN, p, 1.0, qn)
    assert got == pytest.approx(energy(p, 1.0, qn).E, rel=1e-12)


def test_modified_kratzer_special_case_matches_table():
    M = mass_parameter(7.00335)
    p = ModKratzerRing(D0=11.9384, r0=1.0940)
    qn = QuantumNumbers(1, 0, 0)
    got = special_case_energy("modified-kratzer", p, M, qn)
    assert got == pytest.approx(energy(p, M, qn).E, rel=1e-12)
    assert got == pytest.approx(0.16207785, abs=1e-5)


def test_pure_ring_oscillator_special_case():
    p = RingOscillator(kappa=0.25)
    qn = QuantumNumbers(1, 0, 0)
    got = special_case_energy(SpecialCase.RING_OSCILLATOR_PURE, p, 1.0, qn)
    assert got == pytest.approx(energy(p, 1.0, qn).E, rel=1e-12)
    assert got == pytest.approx(3.5, rel=1e-15)


@pytest.mark.parametrize("kind, p", [
    ("hartmann", Makarov(-2.0, 1.0, gamma=0.1)),
    ("modified-kratzer", ModKratzerRing(1.0, 1.0, beta=0.1)),
    ("ring-oscillator-pure", RingOscillator(1.0, omega=0.1)),
    ("hartmann", RingOscillator(1.0)),
])
def test_special_case_preconditions(kind, p):
    with pytest.raises(DomainError):
        special_case_energy(kind, p, 1.0, QuantumNumbers(0))


def test_no_bound_states_for_repulsive_tail():
    with pytest.raises(NoBoundStateError, match="repulsive"):
        energy(Makarov(alpha=1.0), 1.0, QuantumNumbers(0))
    with pytest.raises(NoBoundStateError):
        coulomb_like_energy(1.0, coulomb(0.0, 0.0), 0)


def test_family_and_n_checks():
    with pytest.raises(DomainError):
        coulomb_like_energy(1.0, oscillator(0.0, 1.0), 0)
    with pytest.raises(DomainError):
        oscillator_like_energy(1.0, coulomb(0.0, -1.0), 0)
    with pytest.raises(DomainError):
        solve_radial(1.0, coulomb(0.0, -1.0), -1)


def test_record_layout():
    rec = energy(Makarov(alpha=-2.0), 1.0, QuantumNumbers(1)).record()
    assert tuple(rec) == RECORD_FIELDS
    assert rec["family"] == "coulomb-like"
    assert rec["E"] == -0.25


def test_boundary_flag_propagates():
    assert energy(Makarov(-2.0, 1.0, 1.0), 1.0, QuantumNumbers(0)).boundary


def test_as_printed_agrees_except_mod_kratzer_ring():
    M = mass_parameter(7.00335)
    qn = QuantumNumbers(2, 1, 1)
    for p in (Makarov(-2.0, 0.3, 0.1), DoubleRingKratzer(1.0, 1.0, 0.2, 0.1),
              ModifiedNonCentral(1.0, 1.0, 0.4, 0.2), RingOscillator(1.0, 0.5, 0.2)):
        assert as_printed_energy(p, 1.0, qn) == pytest.approx(energy(p, 1.0, qn).E, rel=1e-12)
    assert as_printed_energy(N2, M, qn) == pytest.approx(energy(N2, M, qn).E, rel=1e-12)
    p = ModKratzerRing(11.9384, 1.0940)
    assert abs(as_printed_energy(p, M, qn) - energy(p, M, qn).E) > 1.0


def test_decompose_feeds_same_energy():
    p = ModKratzerRing(2.0, 1.5, 0.5)
    qn = QuantumNumbers(2, 1, -1)
    res = energy(p, 1.0, qn)
    direct = solve_radial(1.0, decompose(p, 1.0, res.l_eff), qn.n)
    assert direct.E == res.E
