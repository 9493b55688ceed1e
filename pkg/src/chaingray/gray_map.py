"""Gray map R^n -> F_{p^k}^{p^{ke} n}, homogeneous and Hamming weights.

Words over R are integer arrays of canonical elements, field words are
integer arrays of field encodings.  Functions accept a single word (1-D) or a
batch of words (2-D, one word per row).

The image coordinate for chunk index t = w*p^k + eps and ring coordinate j
sits at flat position t*n + j and equals

    alpha_eps * res(a_0) + sum_{l=1}^{e-1} alpha_{w_{l-1}} * res(a_l) + res(a_e)

where w_0, ..., w_{e-2} are the base-p^k digits of w.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import _kernels
from .chain_ring import ChainRing


def hom_weight(ring: ChainRing, r):
    """Homogeneous weight of ring elements (elementwise)."""
    r = np.asarray(r, dtype=np.int64)
    q, e = ring.q, ring.e
    off_socle = q ** (e - 1) * (q - 1)
    w = np.where(r % q**e == 0, q**e, off_socle)
    w = np.where(r == 0, 0, w)
    return int(w) if w.ndim == 0 else w


def hom_word_weight(ring: ChainRing, x):
    """Sum of coordinate homogeneous weights along the last axis."""
    w = np.asarray(hom_weight(ring, x)).sum(axis=-1)
    return int(w) if np.ndim(w) == 0 else w


def hom_distance(ring: ChainRing, x, y):
    x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
    if x.shape[-1] != y.shape[-1]:
        raise ValueError(f"length mismatch: {x.shape[-1]} vs {y.shape[-1]}")
    ring.check(x)
    ring.check(y)
    return hom_word_weight(ring, ring.sub(x, y))


def hamming_weight(w):
    c = np.count_nonzero(np.asarray(w), axis=-1)
    return int(c) if np.ndim(c) == 0 else c


def hamming_distance(w, v):
    w, v = np.asarray(w), np.asarray(v)
    if w.shape[-1] != v.shape[-1]:
        raise ValueError(f"length mismatch: {w.shape[-1]} vs {v.shape[-1]}")
    return hamming_weight(w != v)


def image_length(ring: ChainRing, n: int) -> int:
    return ring.q**ring.e * n


@lru_cache(maxsize=32)
def gray_table(ring: ChainRing) -> np.ndarray:
    """Row r holds the Gray image of the single element r (length p^{ke})."""
    q, e = ring.q, ring.e
    F = ring.field
    digits = ring.digits(ring.elements())  # field encodings of a_0..a_e
    table = np.zeros((ring.order, q**e), dtype=np.int64)
    for t in range(q**e):
        w, eps = divmod(t, q)
        b = F.mul(F.alpha_eps(eps), digits[:, 0])
        wd = w
        for l in range(1, e):
            wd, xi = divmod(wd, q)
            b = F.add(b, F.mul(F.alpha_eps(xi), digits[:, l]))
        if e >= 1:
            b = F.add(b, digits[:, e])
        table[:, t] = b
    table.setflags(write=False)
    return table


def gray(ring: ChainRing, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    ring.check(x)
    if x.ndim == 1:
        return _kernels.gray_gather(gray_table(ring), x[None, :])[0]
    if x.ndim != 2:
        raise ValueError("expected a word or a 2-D batch of words")
    return _kernels.gray_gather(gray_table(ring), x)


def gray_inverse(ring: ChainRing, w, n: int):
    """The unique preimage of a field word, or None when it is not an image."""
    w = np.asarray(w, dtype=np.int64)
    if w.ndim != 1 or w.shape[0] != image_length(ring, n):
        raise ValueError(f"expected a field word of length {image_length(ring, n)}")
    if w.size and (w.min() < 0 or w.max() >= ring.q):
        return None
    q, e = ring.q, ring.e
    F = ring.field
    chunks = w.reshape(q**e, n)
    last = chunks[0]  # w = 0, eps = 0
    digits = np.zeros((n, e + 1), dtype=np.int64)
    digits[:, e] = last
    digits[:, 0] = F.sub(chunks[1], last)  # w = 0, eps = 1
    for l in range(1, e):
        digits[:, l] = F.sub(chunks[q**l], last)  # w = q^{l-1}
    x = ring.from_digits(digits)
    x = np.atleast_1d(np.asarray(x, dtype=np.int64))
    if not np.array_equal(gray(ring, x), w):
        return None
    return x

