
import numpy as np
import pytest

from cnotdihedral.group import GroupParams, group_order, sample_uniform
from cnotdihedral.sim import (
    KrausChannel,
    LiouvilleRep,
    PauliChannel,
    PauliString,
    SimulationBudgetError,
    apply_element,
    apply_liouville,
    block_values,
    channel_from_json,
    cx_orbit_sizes,
    element_to_unitary,
    enumerate_group,
    expectation,
    liouville_of,
    orbits_by_closure,
    orbits_cx,
    orbits_cz,
    pauli_twirl,
    plus_state,
    twirl_full,
    twirl_sequential,
    twirl_stages,
    zero_state,
)
from cnotdihedral.sim.pauli import pauli_matrices
from cnotdihedral.sim.twirl import cx_generators, cz_generators, wbar_classes

I2 = np.eye(2)
PX = np.array([[0, 1], [1, 0]], dtype=complex)
PY = np.array([[0, -1j], [1j, 0]])
PZ = np.diag([1.0, -1.0]).astype(complex)
SINGLE = {"I": I2, "X": PX, "Y": PY, "Z": PZ}


def kron_label(label):
    # qubit 1 is the least significant bit of the basis index, so it goes last
    out = np.eye(1)
    for ch in reversed(label):
        out = np.kron(out, SINGLE[ch])
    return out


def random_density(n, rng):
    A = rng.normal(size=(1 << n, 1 << n)) + 1j * rng.normal(size=(1 << n, 1 << n))
    rho = A @ A.conj().T
    return rho / np.trace(rho)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pauli_matrices_match_kronecker_products(n):
    P = pauli_matrices(n)
    for idx in range(4 ** n):
        label = PauliString.from_index(n, idx).label()
        assert np.allclose(P[idx], kron_label(label))
        assert PauliString.from_label(label).index == idx


def test_commutation():
    a, b = PauliString.from_label("XZ"), PauliString.from_label("ZX")
    assert a.commutes(b)
    assert not PauliString.from_label("XI").commutes(PauliString.from_label("ZI"))


def test_pauli_channel_apply_matches_kraus():
    rng = np.random.default_rng(0)
    for n in (1, 2):
        ch = PauliChannel.random(n, rng)
        P = pauli_matrices(n)
        kraus = KrausChannel(n, tuple(np.sqrt(p) * P[i] for i, p in enumerate(ch.probs)))
        rho = random_density(n, rng)
        assert np.allclose(ch.apply(rho), kraus.apply(rho))
        assert np.allclose(ch.liouville(), liouville_of(kraus))


def test_depolarizing_liouville():
    R = liouville_of(PauliChannel.depolarizing(2, 0.9))
    assert np.allclose(R, np.diag([1] + [0.9] * 15))
    rho = random_density(2, np.random.default_rng(1))
    out = PauliChannel.depolarizing(2, 0.9).apply(rho)
    assert np.allclose(out, 0.9 * rho + 0.1 * np.eye(4) / 4)


def test_z_dephasing_probabilities():
    ch = PauliChannel.z_dephasing(2, 0.05)
    d = ch.as_dict()
    assert d["II"] == pytest.approx(0.95 ** 2)
    assert d["ZI"] == pytest.approx(0.05 * 0.95)
    assert d["ZZ"] == pytest.approx(0.05 ** 2)


def test_liouville_entry_definition():
    rng = np.random.default_rng(2)
    kc = KrausChannel.random(2, rng)
    R = liouville_of(kc)
    P = pauli_matrices(2)
    for p, q in [(0, 0), (3, 7), (10, 5), (15, 15)]:
        assert R[p, q] == pytest.approx(np.trace(P[p] @ kc.apply(P[q])).real / 4)
    assert R[0, 0] == pytest.approx(1)
    assert np.allclose(R[0, 1:], 0)  # trace preserving
    rho = random_density(2, rng)
    assert np.allclose(apply_liouville(R, rho), kc.apply(rho))


def test_unitary_liouville_is_orthogonal():
    g = sample_uniform(GroupParams(2, 3), np.random.default_rng(3))
    R = liouville_of(g)
    assert np.allclose(R @ R.T, np.eye(16))


def test_pauli_twirl_routes_agree():
    rng = np.random.default_rng(4)
    kc = KrausChannel.random(2, rng)
    a = pauli_twirl(kc)
    b = pauli_twirl(liouville_of(kc))
    assert np.allclose(a.probs, b.probs)
    assert a.probs.sum() == pytest.approx(1)
    # brute-force Pauli twirl of the Liouville matrix keeps the diagonal only
    R = liouville_of(kc)
    assert np.allclose(a.liouville(), np.diag(np.diag(R)))


def test_apply_element_matches_unitary():
    rng = np.random.default_rng(5)
    g = sample_uniform(GroupParams(3, 3), rng)
    U = element_to_unitary(g)
    rho = random_density(3, rng)
    assert np.allclose(apply_element(rho, g), U @ rho @ U.conj().T)


def test_expectation_checks():
    rho = zero_state(1)
    assert expectation(rho, rho) == 1.0
    assert expectation(plus_state(1), rho) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        expectation(np.array([[0, 1], [0, 0]], dtype=complex), rho)


def test_channel_json():
    ch = PauliChannel.z_dephasing(2, 0.1)
    back = channel_from_json(ch.to_json())
    assert np.allclose(back.probs, ch.probs)
    kc = KrausChannel.random(1, np.random.default_rng(6))
    assert np.allclose(liouville_of(channel_from_json(kc.to_json())), liouville_of(kc))
    dep = channel_from_json({"type": "depolarizing", "n": 1, "alpha": 0.5})
    assert np.allclose(dep.probs, [0.625, 0.125, 0.125, 0.125])
    with pytest.raises(ValueError):
        channel_from_json({"type": "bogus", "n": 1})


def test_liouville_rep_json():
    R = liouville_of(PauliChannel.depolarizing(1, 0.5))
    doc = LiouvilleRep(1, R).to_json()
    assert doc["labels"] == ["I", "Z", "X", "Y"]
    assert np.allclose(LiouvilleRep.from_json(doc).matrix, R)


# enumeration -----------------------------------------------------------------

@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (1, 8), (2, 1), (2, 2), (2, 3), (2, 8), (3, 2)])
def test_enumeration_matches_formula(n, m):
    assert enumerate_group(n, m).count == group_order(n, m)


def test_enumeration_contains_sampled_elements():
    en = enumerate_group(2, 8)
    rng = np.random.default_rng(7)
    for _ in range(50):
        assert en.contains_element(sample_uniform(GroupParams(2, 3), rng))


def test_enumeration_budget():
    with pytest.raises(SimulationBudgetError):
        enumerate_group(3, 5)
    with pytest.raises(SimulationBudgetError):
        enumerate_group(2, 8, budget=1000)


# orbits ------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_cx_orbit_sizes(n):
    sizes = sorted(len(o) for o in orbits_cx(n))
    assert sizes == sorted(cx_orbit_sizes(n).values())
    assert sum(sizes) == 4 ** n


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cx_orbits_by_closure(n):
    assert sorted(orbits_cx(n)) == orbits_by_closure(n, cx_generators(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cz_orbits_by_closure(n):
    assert sorted(orbits_cz(n)) == orbits_by_closure(n, cz_generators(n))


def test_cz_orbit_count_grows_exponentially():
    # 2^n fixed Z-type strings, then two parity classes per nonzero X support
    for n in range(1, 5):
        assert len(orbits_cz(n)) == 2 ** n + 2 * (2 ** n - 1)


def test_wbar_class_sizes():
    for n in (1, 2, 3):
        for cls in wbar_classes(n):
            x = cls[0] >> n
            assert len(cls) == 2 ** bin(x).count("1")


# twirls --------------------------------------------------------------------------

@pytest.mark.parametrize("n,k", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_twirl_structure_random_channel(n, k):
    rng = np.random.default_rng(10 * n + k)
    R = twirl_full(KrausChannel.random(n, rng), GroupParams(n, k))
    v = block_values(R, n)
    assert v["offdiag_max"] < 1e-10
    assert v["identity_entry"] == pytest.approx(1)
    assert v["z_block_spread"] < 1e-10 and v["r_block_spread"] < 1e-10
    assert v["z_block_size"] == 2 ** n - 1
    assert v["r_block_size"] == 4 ** n - 2 ** n


def test_twirl_block_values_from_probabilities():
    rng = np.random.default_rng(11)
    n = 2
    ch = PauliChannel.random(n, rng)
    R = twirl_full(ch, GroupParams(n, 2))
    v = block_values(R, n)
    probs = ch.probs
    d = 1 << n
    beta_z = probs[1:d].sum() / (d - 1)  # Z-type, non-identity
    beta_r = probs[d:].sum() / (d * d - d)
    assert v["alpha_Z"] == pytest.approx(1 - 4 ** n * beta_r)
    assert v["alpha_R"] == pytest.approx(1 - 2 ** n * beta_z - (4 ** n - 2 ** n) * beta_r)


def test_k1_keeps_more_parameters():
    # G_2 has no CZ, so the X-type and Y-type blocks stay separate
    rng = np.random.default_rng(12)
    R = twirl_full(KrausChannel.random(2, rng), GroupParams(2, 1))
    assert block_values(R, 2)["r_block_spread"] > 1e-6


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)])
def test_sequential_matches_full(n, k):
    rng = np.random.default_rng(20 + 10 * n + k)
    for _ in range(3):
        ch = PauliChannel.random(n, rng)
        assert np.max(np.abs(twirl_sequential(ch, GroupParams(n, k)) - twirl_full(ch, GroupParams(n, k)))) < 1e-10


def test_twirl_stages_reduce_parameters():
    ch = PauliChannel.random(2, np.random.default_rng(13))
    stages = twirl_stages(ch, GroupParams(2, 3))
    assert [s.name for s in stages] == ["pauli", "cx", "cz", "wbar/z"]
    assert stages[-1].distinct() == 3


def test_twirl_threads_identical():
    ch = KrausChannel.random(2, np.random.default_rng(14))
    a = twirl_full(ch, GroupParams(2, 2), threads=1)
    b = twirl_full(ch, GroupParams(2, 2), threads=4)
    assert np.array_equal(a, b)


def test_twirl_budget():
    with pytest.raises(SimulationBudgetError):
        twirl_full(PauliChannel.identity(3), GroupParams(3, 1))


def test_depolarizing_invariant_under_twirl():
    R = twirl_full(PauliChannel.depolarizing(2, 0.93), GroupParams(2, 2))
    v = block_values(R, 2)
    assert v["alpha_Z"] == pytest.approx(0.93) and v["alpha_R"] == pytest.approx(0.93)
    assert v["r"] == pytest.approx(3 * 0.07 / 4)
