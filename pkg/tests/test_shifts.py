import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chaingray.chain_ring import RingError, all_words, make_ring
from chaingray.gray_map import gray
from chaingray.polynomial import poly_mul
from chaingray.shifts import (
    UnitSpec,
    beta,
    constacyclic_shift,
    mu_bar,
    mu_bar_sq,
    mu_poly,
    nechaev_perm,
    pi_block,
    quasi_shift,
)

from oracles import RefTrunc, RefZpe, ref_gray


def _ref_quasi_shift(w, p, n):
    out = []
    for start in range(0, len(w), p * n):
        block = list(w[start : start + p * n])
        out += block[-1:] + block[:-1]
    return out


def _ref_pi(w, p, n, n_prime):
    out = []
    for start in range(0, len(w), p * n):
        block = w[start : start + p * n]
        out += [block[((i // n + (i % n) * n_prime) % p) * n + i % n] for i in range(p * n)]
    return out


def test_unit_parsing(z8, f4u3):
    assert UnitSpec.parse("1").resolve(z8) == 1
    assert UnitSpec.parse("1-g^e").resolve(z8) == 5
    assert UnitSpec.parse("one_plus_gamma_e").resolve(z8) == 5
    assert UnitSpec.parse("custom:3").resolve(z8) == 3
    assert UnitSpec.parse({"custom": 7}).value == 7
    assert UnitSpec.parse("1-g^e").resolve(make_ring("z27")) == 19
    assert UnitSpec.parse("1+g^e").resolve(make_ring("z27")) == 10
    # characteristic 2: 1 - u^2 = 1 + u^2
    assert UnitSpec.parse("1-g^e").resolve(f4u3) == UnitSpec.parse("1+g^e").resolve(f4u3) == 17
    with pytest.raises(RingError):
        UnitSpec.parse("custom:2").resolve(z8)
    with pytest.raises(RingError):
        UnitSpec.parse("two")
    assert str(UnitSpec.parse("custom:3")) == "custom:3"


def test_constacyclic_shift_examples(z8):
    assert constacyclic_shift(z8, [1, 2], "1-g^e").tolist() == [2 * 5 % 8, 1]
    assert constacyclic_shift(z8, [1, 2, 3], 1).tolist() == [3, 1, 2]
    batch = constacyclic_shift(z8, [[1, 2], [3, 4]], 5)
    assert batch.tolist() == [[2, 1], [4, 3]]


@pytest.mark.parametrize("name,n", [("z8", 3), ("z27", 2), ("f4u3", 2)])
def test_shift_to_the_n_is_scaling(name, n):
    ring = make_ring(name)
    lam = UnitSpec.parse("1-g^e").resolve(ring)
    x = all_words(ring, n)[::5]
    y = x
    for _ in range(n):
        y = constacyclic_shift(ring, y, lam)
    assert np.array_equal(y, ring.mul(x, lam))


def test_quasi_shift_example(z8):
    assert quasi_shift(gray(z8, [1, 2]), 2, 1, 2, 2).tolist() == [0, 0, 0, 1, 1, 0, 1, 1]
    assert quasi_shift([0, 0, 1, 0, 0, 1, 1, 1], 2, 1, 2, 2).tolist() == gray(z8, constacyclic_shift(z8, [1, 2], 5)).tolist()
    with pytest.raises(ValueError):
        quasi_shift([0, 1, 0], 2, 1, 2, 1)


@pytest.mark.parametrize("p,k,e,n", [(2, 1, 2, 3), (3, 1, 2, 2), (2, 2, 2, 2)])
def test_quasi_shift_matches_reference(p, k, e, n):
    rng = np.random.default_rng(3)
    w = rng.integers(0, p**k, size=p ** (k * e) * n)
    assert quasi_shift(w, p, k, e, n).tolist() == _ref_quasi_shift(w.tolist(), p, n)
    y = w
    for _ in range(p * n):
        y = quasi_shift(y, p, k, e, n)
    assert np.array_equal(y, w)


def test_nechaev_examples():
    assert nechaev_perm(2, 3, 2).tolist() == [0, 5, 2, 1, 4, 3]
    assert nechaev_perm(3, 2, 1).tolist() == [0, 4, 2, 3, 1, 5]
    with pytest.raises(ValueError):
        nechaev_perm(3, 2, 2)


@pytest.mark.parametrize("n,p", [(1, 2), (3, 2), (5, 2), (2, 3), (4, 3), (3, 5)])
def test_nechaev_is_a_permutation(n, p):
    tau = nechaev_perm(n, p, pow(n, -1, p))
    assert sorted(tau.tolist()) == list(range(p * n))
    # it preserves the residue class mod n
    assert np.array_equal(tau % n, np.arange(p * n) % n)


@pytest.mark.parametrize("p,k,e,n", [(2, 1, 2, 3), (3, 1, 2, 2), (2, 2, 2, 3)])
def test_pi_block_matches_reference(p, k, e, n):
    rng = np.random.default_rng(4)
    w = rng.integers(0, p**k, size=p ** (k * e) * n)
    assert pi_block(w, p, k, e, n).tolist() == _ref_pi(w.tolist(), p, n, pow(n, -1, p))
    with pytest.raises(ValueError):
        pi_block(w, p, k, e, n, n_prime=(pow(n, -1, p) + 1) % p)


def test_pi_rejects_n_divisible_by_p():
    with pytest.raises(RingError):
        pi_block(np.zeros(18), 3, 1, 2, 3)


def test_beta_and_mu_examples(z27, z8):
    assert beta(z27, 2) == (2, 19)
    assert mu_bar(z27, [1, 1]).tolist() == [1, 19]
    assert mu_bar_sq(z27, [1, 1]).tolist() == [1, 10]
    assert beta(z8, 3) == (1, 5)
    assert mu_bar(z8, [1, 1, 1]).tolist() == [1, 5, 1]
    with pytest.raises(RingError):
        beta(z27, 3)


def test_beta_order(z27, f4u3):
    # beta^p = 1 since (n' gamma^e)^2 = 0
    for ring in (z27, f4u3):
        _, b = beta(ring, 1)
        assert b != 1 and ring.power(b, ring.p) == 1


@pytest.mark.parametrize("name,n", [("z8", 3), ("z27", 2), ("f4u3", 3), ("z27", 4)])
def test_mu_poly_of_xn_minus_one(name, n):
    # X^n - 1 becomes (1 + g^e)(X^n - (1 - g^e))
    ring = make_ring(name)
    c = np.zeros(n + 1, dtype=np.int64)
    c[0], c[n] = ring.neg(1), 1
    lhs = mu_poly(ring, c, n)
    plus = UnitSpec.parse("1+g^e").resolve(ring)
    minus = UnitSpec.parse("1-g^e").resolve(ring)
    target = np.zeros(n + 1, dtype=np.int64)
    target[0], target[n] = ring.neg(minus), 1
    assert np.array_equal(lhs, poly_mul(ring, target, [plus]))


@pytest.mark.parametrize("name,n", [("z8", 3), ("z27", 2)])
def test_mu_bar_sq_of_xn_minus_plus(name, n):
    # beta^(2n) (1 - g^e) = 1 + g^e, which links the two constacyclic moduli
    ring = make_ring(name)
    plus = UnitSpec.parse("1+g^e").resolve(ring)
    minus = UnitSpec.parse("1-g^e").resolve(ring)
    _, b = beta(ring, n)
    assert ring.mul(ring.power(b, 2 * n), minus) == plus


def _reference(ring):
    if ring.family == "zpe":
        return RefZpe(ring.p, ring.e), lambda v: v
    ref = RefTrunc(ring.p, ring.k, ring.e, list(ring.field.modulus))
    return ref, ref.decode


@pytest.mark.parametrize("name,n", [("z8", 3), ("z27", 2), ("f4u3", 2), ("z4", 3)])
def test_commutation_against_reference(name, n):
    ring = make_ring(name)
    ref, dec = _reference(ring)
    p = ring.p
    rng = np.random.default_rng(11)
    n_prime = pow(n, -1, p) if n % p else None
    for x in rng.integers(0, ring.order, size=(25, n)):
        img = ref_gray(ref, [dec(int(v)) for v in x])
        shifted = constacyclic_shift(ring, x, "1-g^e")
        assert gray(ring, shifted).tolist() == _ref_quasi_shift(img, p, n)
        if n_prime is not None:
            assert gray(ring, mu_bar(ring, x)).tolist() == _ref_pi(img, p, n, n_prime)
            twice = _ref_pi(_ref_pi(img, p, n, n_prime), p, n, n_prime)
            assert gray(ring, mu_bar_sq(ring, x)).tolist() == twice


def test_left_rotation_breaks_commutation(z8):
    x = np.array([1, 2, 3])
    img = gray(z8, x)
    left = np.roll(img.reshape(2, 6), -1, axis=-1).ravel()
    assert not np.array_equal(gray(z8, constacyclic_shift(z8, x, 5)), left)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([("z8", 3), ("z27", 2), ("f4u3", 1), ("f3u3", 2), ("z9", 4)]), st.data())
def test_phi_nu_property(case, data):
    name, n = case
    ring = make_ring(name)
    x = np.array(data.draw(st.lists(st.integers(0, ring.order - 1), min_size=n, max_size=n)))
    lhs = gray(ring, constacyclic_shift(ring, x, "1-g^e"))
    assert np.array_equal(lhs, quasi_shift(gray(ring, x), ring.p, ring.k, ring.e, n))
