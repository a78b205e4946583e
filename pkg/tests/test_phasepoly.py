import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnotdihedral import gf2
from cnotdihedral.gf2 import GF2Matrix, GF2Vector
from cnotdihedral.phasepoly import (
    PhasePolynomial,
    all_w_polynomials,
    evaluate,
    monomial_basis_poly,
    quotient,
    random_w_polynomial,
    substitute_affine,
    w_order,
)


@st.composite
def poly_and_affine(draw, max_n=4, max_k=3):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    rng = np.random.default_rng(draw(st.integers(0, 2 ** 32 - 1)))
    return random_w_polynomial(n, k, rng), gf2.random_invertible(n, rng), gf2.random_vector(n, rng)


def brute_eval(coeffs, b, m):
    return sum(c for mask, c in coeffs.items() if b & mask == mask) % m


def test_str_and_constructors():
    p = PhasePolynomial.from_dict(2, 3, {0b01: 1, 0b10: 1, 0b11: 6})
    assert str(p) == "x1 + x2 + 6*x1*x2"
    assert p.degree() == 2
    assert PhasePolynomial.monomial(2, 3, [1], 7).coeffs == {0b10: 7}
    assert PhasePolynomial.from_dict(2, 3, {0b01: 8}).is_zero()


@pytest.mark.parametrize(
    "n,k,terms",
    [
        (2, 3, ((0b11, 1),)),  # degree-2 coefficient must be even
        (3, 2, ((0b111, 4),)),  # degree above k
        (2, 2, ((0b01, 4),)),  # not reduced
        (2, 2, ((0b100, 1),)),  # variable out of range
    ],
)
def test_invalid_polynomials_rejected(n, k, terms):
    with pytest.raises(ValueError):
        PhasePolynomial(n, k, terms)


def test_constant_term_rejected():
    with pytest.raises(ValueError):
        PhasePolynomial.from_dict(2, 2, {0: 1})


def test_evaluate_matches_brute_force():
    rng = np.random.default_rng(0)
    for n, k in itertools.product(range(1, 5), range(1, 4)):
        p = random_w_polynomial(n, k, rng)
        vals = p.evaluate_all()
        for b in range(1 << n):
            assert vals[b] == brute_eval(p.coeffs, b, 1 << k) == evaluate(p, b) == p(GF2Vector(n, b))


@pytest.mark.parametrize("n,k", [(3, 3), (4, 2), (4, 4), (5, 3)])
def test_basis_polynomial_is_parity(n, k):
    for J in range(1, 1 << n):
        p = monomial_basis_poly(J, n, k)
        parity = np.array([(b & J).bit_count() & 1 for b in range(1 << n)])
        assert np.array_equal(p.evaluate_all(), parity)


def test_basis_polynomial_small_case():
    # x1 xor x2 = x1 + x2 - 2 x1 x2
    assert monomial_basis_poly([0, 1], 2, 3).coeffs == {0b01: 1, 0b10: 1, 0b11: 6}


@settings(max_examples=200)
@given(poly_and_affine())
def test_substitution_matches_evaluation(args):
    p, B, c = args
    q = substitute_affine(p, B, c)
    m = 1 << p.k
    pv = p.evaluate_all()
    qv = q.evaluate_all()
    # q(x) equals p(Bx + c) up to the constant p(c), which is dropped
    shift = int(pv[c.bits])
    for x in range(1 << p.n):
        assert qv[x] == (pv[gf2.apply_bits(B, x) ^ c.bits] - shift) % m


@settings(max_examples=100)
@given(poly_and_affine())
def test_addition_is_pointwise(args):
    p, B, c = args
    q = substitute_affine(p, B, c)
    m = 1 << p.k
    assert np.array_equal((p + q).evaluate_all(), (p.evaluate_all() + q.evaluate_all()) % m)
    assert (p - p).is_zero()
    assert (p + (-p)).is_zero()
    assert np.array_equal(p.scale(3).evaluate_all(), 3 * p.evaluate_all() % m)


def test_quotient():
    # degree-2 coefficient 6 mod 8 is (-2) * 1
    assert quotient(6, 2, 3) == 1
    assert quotient(2, 2, 3) == 3
    assert quotient(4, 3, 3) == 1
    assert quotient(5, 1, 3) == 5
    for k in range(1, 5):
        for t in range(1, k + 1):
            for c in range(0, 1 << k, 1 << (t - 1)):
                a = quotient(c, t, k)
                assert 0 <= a < 1 << (k - t + 1)
                assert (a * (-2) ** (t - 1) - c) % (1 << k) == 0
    with pytest.raises(ValueError):
        quotient(3, 2, 3)


def affine_span_vectors(n, k):
    """Z_{2^k}-span of the 0/1 indicator vectors of affine boolean functions.

    These are the phase vectors of conjugates of a single-qubit phase gate by
    permutations; vectors are compared modulo a constant (global phase).
    """
    m = 1 << k
    dim = 1 << n
    gens = []
    for J in range(1 << n):
        for c in (0, 1):
            v = np.array([((b & J).bit_count() + c) & 1 for b in range(dim)])
            if v.any():
                gens.append(v)
    start = tuple([0] * dim)
    seen = {start}
    frontier = [np.zeros(dim, dtype=int)]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = (v + g) % m
                w = tuple((w - w[0]) % m)
                if w not in seen:
                    seen.add(w)
                    nxt.append(np.array(w))
        frontier = nxt
    return seen


@pytest.mark.parametrize("n,k", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_w_equals_span_of_conjugated_phases(n, k):
    polys = list(all_w_polynomials(n, k))
    assert len(polys) == w_order(n, k)
    vectors = {tuple(int(x) for x in p.evaluate_all()) for p in polys}
    assert len(vectors) == len(polys)
    assert vectors == affine_span_vectors(n, k)


def test_json_roundtrip():
    p = random_w_polynomial(4, 3, np.random.default_rng(5))
    assert PhasePolynomial.from_json(p.to_json()) == p


def test_substitution_identity_is_noop():
    p = random_w_polynomial(3, 3, np.random.default_rng(6))
    assert substitute_affine(p, GF2Matrix.identity(3), GF2Vector.zeros(3)) == p
