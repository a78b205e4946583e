import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnotdihedral.group import (
    CNOTDihedralElement,
    GroupParams,
    all_elements,
    compose,
    equal,
    group_order,
    identity,
    inverse,
    multiply,
    sample_uniform,
)
from cnotdihedral.sim import element_to_unitary, equal_up_to_phase

# Group orders of G_m, rows n = 1, 2, 3 and columns m = 1..8
TABLE = {
    1: [2, 4, 6, 8, 10, 12, 14, 16],
    2: [24, 96, 648, 768, 3000, 2592, 8232, 6144],
    3: [1344, 10752, 2939328, 688128, 105000000, 23514624, 1106841792, 88080384],
}


@st.composite
def elements(draw, count=1, max_n=3, max_k=3):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    rng = np.random.default_rng(draw(st.integers(0, 2 ** 32 - 1)))
    params = GroupParams(n, k)
    return [sample_uniform(params, rng) for _ in range(count)]


@pytest.mark.parametrize("n,m", [(n, m) for n in TABLE for m in range(1, 9)])
def test_group_order_table(n, m):
    assert group_order(n, m) == TABLE[n][m - 1]


def test_group_order_small_examples():
    assert group_order(1, 8) == 16
    assert group_order(2, 8) == 6144
    assert group_order(3, 8) == 88080384
    assert group_order(3, 5) == 105000000


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)])
def test_all_elements_distinct_and_counted(n, k):
    els = list(all_elements(GroupParams(n, k)))
    assert len(els) == group_order(n, 1 << k)
    assert len({g.key() for g in els}) == len(els)


@settings(max_examples=100)
@given(elements(count=2))
def test_multiply_is_matrix_product(pair):
    g1, g2 = pair
    U = element_to_unitary(multiply(g2, g1))
    V = element_to_unitary(g2) @ element_to_unitary(g1)
    assert equal_up_to_phase(U, V) < 1e-12


@settings(max_examples=100)
@given(elements(count=3))
def test_associative(triple):
    a, b, c = triple
    assert equal(multiply(a, multiply(b, c)), multiply(multiply(a, b), c))


@settings(max_examples=100)
@given(elements())
def test_inverse(single):
    (g,) = single
    e = identity(g.params)
    assert equal(multiply(inverse(g), g), e)
    assert equal(multiply(g, inverse(g)), e)
    assert equal(inverse(inverse(g)), g)
    assert equal_up_to_phase(element_to_unitary(inverse(g)), element_to_unitary(g).conj().T) < 1e-12


def test_identity_acts_trivially():
    p = GroupParams(3, 2)
    assert identity(p).is_identity()
    assert np.allclose(element_to_unitary(identity(p)), np.eye(8))


def test_compose_acting_order():
    rng = np.random.default_rng(1)
    p = GroupParams(2, 3)
    a, b, c = (sample_uniform(p, rng) for _ in range(3))
    assert equal(compose(a, b, c), multiply(c, multiply(b, a)))


def test_parameter_mismatch():
    rng = np.random.default_rng(2)
    with pytest.raises(ValueError):
        multiply(sample_uniform(GroupParams(2, 2), rng), sample_uniform(GroupParams(2, 3), rng))


def test_json_roundtrip():
    rng = np.random.default_rng(3)
    g = sample_uniform(GroupParams(3, 3), rng)
    doc = g.to_json()
    assert doc["schema"] == "cnotdihedral.element/1"
    assert equal(CNOTDihedralElement.from_json(doc), g)


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (1, 3), (2, 1)])
def test_sampling_uniform(n, k):
    from scipy.stats import chisquare

    params = GroupParams(n, k)
    index = {g.key(): i for i, g in enumerate(all_elements(params))}
    rng = np.random.default_rng(100 + 10 * n + k)
    counts = np.zeros(len(index))
    for _ in range(200 * len(index)):
        counts[index[sample_uniform(params, rng).key()]] += 1
    assert chisquare(counts).pvalue > 1e-3


def test_closure_under_multiplication_small_group():
    params = GroupParams(1, 2)
    els = list(all_elements(params))
    keys = {g.key() for g in els}
    for a, b in itertools.product(els, repeat=2):
        assert multiply(a, b).key() in keys
