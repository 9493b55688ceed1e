"""Hot inner loops, in two interchangeable implementations.

Every kernel exists as a pure-numpy function (``np_*``) and as a numba
``@njit`` function (``nb_*``).  The public names bind to numba unless it is
unavailable or ``CHAINGRAY_NUMBA`` is set to ``0``/``false``/``off``.  Both
paths must return identical integer arrays; the test suite checks this.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("CHAINGRAY_NUMBA", "1").lower() not in ("0", "false", "off", "no")
BACKEND = "numba" if USE_NUMBA else "numpy"

# bound on the temporary (rows x rows x length) block in the numpy fallback
_CHUNK_ELEMS = 1 << 22


# -- numpy --------------------------------------------------------------------


def np_gray_gather(table, words):
    # image index (w*q + eps) * n + j  ->  table[word[j], w*q + eps]
    b, n = words.shape
    m = table.shape[1]
    return table[words].transpose(0, 2, 1).reshape(b, m * n)


def np_hamming_rows(a, b):
    return np.count_nonzero(a != b, axis=-1).astype(np.int64)


def np_distance_histograms(words):
    m, length = words.shape
    out = np.zeros((m, length + 1), dtype=np.int64)
    step = max(1, _CHUNK_ELEMS // max(1, m * length))
    for start in range(0, m, step):
        block = words[start : start + step]
        d = np.count_nonzero(block[:, None, :] != words[None, :, :], axis=-1)
        rows = np.repeat(np.arange(block.shape[0]), m)
        np.add.at(out, (start + rows, d.ravel()), 1)
    return out


def np_row_keys(words, base):
    n = words.shape[1]
    powers = base ** np.arange(n, dtype=np.int64)
    return words.astype(np.int64) @ powers


# -- numba --------------------------------------------------------------------


def _gray_gather_loop(table, words):
    b, n = words.shape
    m = table.shape[1]
    out = np.empty((b, m * n), dtype=np.int64)
    for r in range(b):
        for j in range(n):
            row = table[words[r, j]]
            for t in range(m):
                out[r, t * n + j] = row[t]
    return out


def _hamming_rows_loop(a, b):
    rows, length = a.shape
    out = np.zeros(rows, dtype=np.int64)
    for r in range(rows):
        c = 0
        for i in range(length):
            if a[r, i] != b[i]:
                c += 1
        out[r] = c
    return out


def _distance_histograms_loop(words):
    m, length = words.shape
    out = np.zeros((m, length + 1), dtype=np.int64)
    for r in range(m):
        out[r, 0] += 1
        for s in range(r + 1, m):
            c = 0
            for i in range(length):
                if words[r, i] != words[s, i]:
                    c += 1
            out[r, c] += 1
            out[s, c] += 1
    return out


def _row_keys_loop(words, base):
    rows, n = words.shape
    out = np.zeros(rows, dtype=np.int64)
    for r in range(rows):
        acc = 0
        for j in range(n - 1, -1, -1):
            acc = acc * base + words[r, j]
        out[r] = acc
    return out


if HAVE_NUMBA:
    nb_gray_gather = numba.njit(cache=True)(_gray_gather_loop)
    nb_hamming_rows = numba.njit(cache=True)(_hamming_rows_loop)
    nb_distance_histograms = numba.njit(cache=True)(_distance_histograms_loop)
    nb_row_keys = numba.njit(cache=True)(_row_keys_loop)
else:  # pragma: no cover
    nb_gray_gather = _gray_gather_loop
    nb_hamming_rows = _hamming_rows_loop
    nb_distance_histograms = _distance_histograms_loop
    nb_row_keys = _row_keys_loop


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def gray_gather(table, words):
    if USE_NUMBA:
        return nb_gray_gather(_i64(table), _i64(words))
    return np_gray_gather(table, words)


def hamming_rows(a, b):
    """Hamming distance of each row of ``a`` to the single word ``b``."""
    a = np.atleast_2d(a)
    if USE_NUMBA:
        return nb_hamming_rows(_i64(a), _i64(b))
    return np_hamming_rows(a, b)


def distance_histograms(words):
    """Row r counts, for each d, the words at Hamming distance d from word r."""
    if USE_NUMBA:
        return nb_distance_histograms(_i64(words))
    return np_distance_histograms(words)


def row_keys(words, base):
    """Integer key sum(word[j] * base**j); caller ensures base**n < 2**63."""
    if USE_NUMBA:
        return nb_row_keys(_i64(words), int(base))
    return np_row_keys(words, base)


KERNELS = {
    "gray_gather": (np_gray_gather, nb_gray_gather),
    "hamming_rows": (np_hamming_rows, nb_hamming_rows),
    "distance_histograms": (np_distance_histograms, nb_distance_histograms),
    "row_keys": (np_row_keys, nb_row_keys),
}
