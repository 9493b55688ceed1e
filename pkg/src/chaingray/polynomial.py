"""Polynomials over a chain ring and the quotients R[X]/(X^n - lam).

A polynomial is a coefficient array, lowest degree first.  Batches are 2-D
arrays with one polynomial per row.
"""

from __future__ import annotations

import numpy as np

from .chain_ring import ChainRing


def poly_add(ring: ChainRing, a, b) -> np.ndarray:
    a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
    size = max(a.shape[-1], b.shape[-1])
    return ring.add(_pad(a, size), _pad(b, size))


def _pad(a, size):
    extra = size - a.shape[-1]
    if extra <= 0:
        return a
    width = [(0, 0)] * (a.ndim - 1) + [(0, extra)]
    return np.pad(a, width)


def poly_mul(ring: ChainRing, a, b) -> np.ndarray:
    """Schoolbook product; ``a`` may be a batch, ``b`` a single polynomial."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    da, db = a.shape[-1], b.shape[-1]
    out = np.zeros(a.shape[:-1] + (da + db - 1,), dtype=np.int64)
    for i in range(db):
        if b[i] == 0:
            continue
        term = ring.mul(a, int(b[i]))
        out[..., i : i + da] = ring.add(out[..., i : i + da], term)
    return out


def poly_reduce(ring: ChainRing, c, n: int, lam: int) -> np.ndarray:
    """Remainder modulo X^n - lam, i.e. rewrite X^n as lam."""
    c = np.array(c, dtype=np.int64)
    for d in range(c.shape[-1] - 1, n - 1, -1):
        top = c[..., d]
        c[..., d - n] = ring.add(c[..., d - n], ring.mul(lam, top))
        c[..., d] = 0
    return _pad(c, n)[..., :n]


def poly_mulmod(ring: ChainRing, a, b, n: int, lam: int) -> np.ndarray:
    return poly_reduce(ring, poly_mul(ring, a, b), n, lam)


def poly_eval_monomial(n: int, degree: int) -> np.ndarray:
    """Coefficient vector of X^degree, length n (degree < n)."""
    out = np.zeros(n, dtype=np.int64)
    out[degree] = 1
    return out
