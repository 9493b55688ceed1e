import numpy as np
import pytest

from chaingray.chain_ring import make_ring
from chaingray.polynomial import poly_add, poly_eval_monomial, poly_mul, poly_mulmod, poly_reduce


def _ref_mulmod(ring, a, b, n, lam):
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            d, term = i + j, ring.mul(int(x), int(y))
            while d >= n:
                d -= n
                term = ring.mul(lam, term)
            out[d] = ring.add(out[d], term)
    return out


def test_add_pads(z8):
    assert poly_add(z8, [1, 2], [7]).tolist() == [0, 2]


def test_mul_example(z8):
    # (1 + X)(1 + X) = 1 + 2X + X^2
    assert poly_mul(z8, [1, 1], [1, 1]).tolist() == [1, 2, 1]
    batch = poly_mul(z8, [[1, 1], [2, 0]], [3, 1])
    assert batch.tolist() == [[3, 4, 1], [6, 2, 0]]


def test_reduce(z27):
    # X^2 = 19 modulo X^2 - 19
    assert poly_reduce(z27, [0, 0, 1], 2, 19).tolist() == [19, 0]
    assert poly_reduce(z27, [1, 2], 3, 19).tolist() == [1, 2, 0]


@pytest.mark.parametrize("name,n,lam", [("z8", 3, 5), ("z27", 2, 10), ("f4u3", 3, 17)])
def test_mulmod_matches_reference(name, n, lam):
    ring = make_ring(name)
    rng = np.random.default_rng(5)
    for _ in range(30):
        a, b = rng.integers(0, ring.order, size=(2, n))
        assert poly_mulmod(ring, a, b, n, lam).tolist() == _ref_mulmod(ring, a, b, n, lam)


def test_x_acts_as_constacyclic_shift(z8):
    from chaingray.shifts import constacyclic_shift

    x = np.array([[1, 2, 3], [4, 5, 6]])
    assert np.array_equal(poly_mulmod(z8, x, poly_eval_monomial(3, 1), 3, 5), constacyclic_shift(z8, x, 5))
