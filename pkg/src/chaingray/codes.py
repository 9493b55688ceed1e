"""Codes over chain rings as explicit word sets, and their Gray images.

A ``Code`` is either the R-submodule spanned by its generators (materialized
on demand by closure) or an explicitly given word set, which need not be
linear.  Word sets are kept as 2-D arrays of unique rows in a canonical
(sorted) order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _kernels
from .chain_ring import ChainRing, RingError, all_words, make_ring
from .gray_map import gray, hom_word_weight, image_length
from .polynomial import poly_add, poly_mulmod
from .shifts import UnitSpec, constacyclic_shift, quasi_shift

DEFAULT_CAP = 1 << 24

# keys are exact integers below this bound
_KEY_LIMIT = 1 << 62
_BLOCK = 1 << 20


class CapExceeded(RuntimeError):
    def __init__(self, reached: int, cap: int):
        super().__init__(f"code enumeration exceeded cap {cap} (reached {reached} words)")
        self.reached = reached
        self.cap = cap


class WordIndex:
    """Membership tests against a fixed set of equal-length integer rows."""

    def __init__(self, words: np.ndarray, base: int):
        self.base = base
        self.n = words.shape[1]
        self.exact = base**self.n < _KEY_LIMIT
        if self.exact:
            self.keys = np.sort(_kernels.row_keys(words, base))
        else:
            self.keys = {row.tobytes() for row in np.ascontiguousarray(words, dtype=np.int64)}

    def contains(self, rows) -> np.ndarray:
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, self.n)
        if self.exact:
            k = _kernels.row_keys(rows, self.base)
            pos = np.searchsorted(self.keys, k)
            pos = np.minimum(pos, len(self.keys) - 1)
            return self.keys[pos] == k
        return np.array([row.tobytes() in self.keys for row in np.ascontiguousarray(rows)], dtype=bool)

    def contains_all(self, rows) -> bool:
        return bool(self.contains(rows).all())


def unique_rows(words, base: int) -> np.ndarray:
    words = np.asarray(words, dtype=np.int64)
    if words.ndim != 2:
        raise ValueError("expected a 2-D array of words")
    if words.shape[0] == 0:
        return words
    if base ** words.shape[1] < _KEY_LIMIT:
        keys = _kernels.row_keys(words, base)
        _, idx = np.unique(keys, return_index=True)
        return words[idx]
    return np.unique(words, axis=0)


def same_set(a, b, base: int) -> bool:
    return np.array_equal(unique_rows(a, base), unique_rows(b, base))


def span(ring: ChainRing, generators, n: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Smallest set containing 0 and the generators, closed under + and R-scaling."""
    words = np.zeros((1, n), dtype=np.int64)
    elems = ring.elements()
    for g in np.asarray(generators, dtype=np.int64).reshape(-1, n):
        multiples = unique_rows(ring.mul(elems[:, None], g[None, :]), ring.order)
        parts = []
        step = max(1, _BLOCK // max(1, words.shape[0] * n))
        for start in range(0, multiples.shape[0], step):
            m = multiples[start : start + step]
            sums = ring.add(words[None, :, :], m[:, None, :]).reshape(-1, n)
            parts.append(unique_rows(sums, ring.order))
        words = unique_rows(np.concatenate(parts), ring.order)
        if words.shape[0] > cap:
            raise CapExceeded(words.shape[0], cap)
    return words


class Code:
    """A code of length n over a chain ring, with an associated unit lam."""

    def __init__(self, ring, n: int, unit="1", generators=(), words=None):
        self.ring = make_ring(ring)
        if n < 1:
            raise ValueError(f"code length must be >= 1, got {n}")
        self.n = n
        self.unit = UnitSpec.parse(unit)
        gens = np.asarray(generators, dtype=np.int64).reshape(-1, n) if len(generators) else np.zeros((0, n), dtype=np.int64)
        self.ring.check(gens)
        self.generators = gens
        self.explicit = words is not None
        self._words = None
        if words is not None:
            w = np.asarray(words, dtype=np.int64).reshape(-1, n)
            if w.shape[0] == 0:
                raise ValueError("a code must be nonempty")
            self.ring.check(w)
            self._words = unique_rows(w, self.ring.order)

    @classmethod
    def from_words(cls, ring, words, unit="1") -> "Code":
        words = np.asarray(words, dtype=np.int64)
        return cls(ring, words.shape[-1], unit, words=words)

    @classmethod
    def from_spec(cls, doc) -> "Code":
        if isinstance(doc, (str, Path)):
            doc = json.loads(Path(doc).read_text())
        try:
            ring = make_ring(doc["ring"])
            n = int(doc["n"])
        except (KeyError, TypeError, ValueError) as exc:
            raise RingError(f"malformed code spec: {exc}") from exc
        return cls(ring, n, doc.get("unit", "1"), doc.get("generators", []), doc.get("words"))

    def to_spec(self) -> dict:
        doc = {"ring": self.ring.to_spec(), "n": self.n, "unit": self.unit.to_json()}
        if self.explicit:
            doc["words"] = self._words.tolist()
        else:
            doc["generators"] = self.generators.tolist()
        return doc

    @property
    def lam(self) -> int:
        return self.unit.resolve(self.ring)

    def codewords(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        if self._words is None:
            self._words = span(self.ring, self.generators, self.n, cap)
        elif self._words.shape[0] > cap:
            raise CapExceeded(self._words.shape[0], cap)
        return self._words

    def __len__(self):
        return self.codewords().shape[0]

    def mapped(self, func, unit=None) -> "Code":
        """Explicit code holding the image of every codeword under ``func``."""
        return Code(self.ring, self.n, unit or self.unit, words=func(self.codewords()))

    def __repr__(self):
        kind = "words" if self.explicit else f"{len(self.generators)} generators"
        return f"Code({self.ring.name}, n={self.n}, unit={self.unit}, {kind})"


def enumerate_code(code: Code, cap: int = DEFAULT_CAP) -> np.ndarray:
    return code.codewords(cap)


def _closed_under_addition(words, add, index: WordIndex) -> bool:
    # C is closed under + iff the additive group it generates is C itself.
    # Grow that group one cyclic subgroup at a time; stop once it outgrows C.
    m, n = words.shape
    group = np.zeros((1, n), dtype=np.int64)
    while True:
        missing = ~WordIndex(group, index.base).contains(words)
        if not missing.any():
            break
        c = words[np.argmax(missing)]
        multiples = [np.zeros(n, dtype=np.int64)]
        cur = c
        while cur.any():
            multiples.append(cur)
            cur = np.asarray(add(cur, c), dtype=np.int64)
        multiples = np.array(multiples)
        group = unique_rows(add(group[:, None, :], multiples[None, :, :]).reshape(-1, n), index.base)
        if group.shape[0] > m:
            return False
    return group.shape[0] == m and index.contains_all(group)


def is_linear(code: Code) -> bool:
    """Closed under addition and under multiplication by every ring element."""
    ring = code.ring
    words = code.codewords()
    index = WordIndex(words, ring.order)
    for r in ring.elements():
        if not index.contains_all(ring.mul(int(r), words)):
            return False
    return _closed_under_addition(words, ring.add, index)


def is_constacyclic(code: Code, lam=None) -> bool:
    words = code.codewords()
    lam = code.unit if lam is None else lam
    shifted = constacyclic_shift(code.ring, words, lam)
    return same_set(shifted, words, code.ring.order)


def is_ideal(code: Code, lam=None, multipliers: str = "auto") -> bool:
    """Whether the polynomial forms of the codewords form an ideal of R[X]/(X^n - lam).

    Uses polynomial arithmetic in the quotient ring: closure under addition
    and under multiplication by each multiplier.  ``multipliers`` is
    "generators" (constants and X, which generate the quotient ring as a
    ring), "all" (every element of the quotient ring), or "auto".
    """
    ring, n = code.ring, code.n
    lam = UnitSpec.parse(code.unit if lam is None else lam).resolve(ring)
    words = code.codewords()
    index = WordIndex(words, ring.order)
    add = lambda a, b: poly_add(ring, a, b)  # noqa: E731
    if not _closed_under_addition(words, add, index):
        return False
    if multipliers == "auto":
        multipliers = "all" if ring.order**n * words.shape[0] <= 1 << 16 else "generators"
    if multipliers == "all":
        mults = all_words(ring, n)
    elif multipliers == "generators":
        consts = np.zeros((ring.order, n), dtype=np.int64)
        consts[:, 0] = ring.elements()
        x = np.zeros((1, n), dtype=np.int64)
        x[0, 1 % n] = 1 if n > 1 else lam
        mults = np.concatenate([consts, x])
    else:
        raise ValueError(f"unknown multiplier set {multipliers!r}")
    for m in mults:
        if not index.contains_all(poly_mulmod(ring, words, m, n, lam)):
            return False
    return True


@dataclass
class FieldCode:
    """A set of words over F_{p^k}; e and n record the Gray-image shape."""

    p: int
    k: int
    words: np.ndarray
    e: int | None = None
    n: int | None = None

    def __post_init__(self):
        self.words = np.atleast_2d(np.asarray(self.words, dtype=np.int64))
        if self.words.shape[0] == 0:
            raise ValueError("a field code must be nonempty")

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def length(self) -> int:
        return self.words.shape[1]

    def __len__(self):
        return self.words.shape[0]

    def unique(self) -> np.ndarray:
        return unique_rows(self.words, self.q)


def gray_image(code: Code) -> FieldCode:
    ring = code.ring
    return FieldCode(ring.p, ring.k, gray(ring, code.codewords()), ring.e, code.n)


def min_hom_distance(code: Code) -> int:
    ring = code.ring
    words = code.codewords()
    if words.shape[0] < 2:
        raise ValueError("minimum distance needs at least two codewords")
    if is_linear(code):
        w = hom_word_weight(ring, words)
        return int(w[w > 0].min())
    best = None
    for i in range(words.shape[0] - 1):
        d = hom_word_weight(ring, ring.sub(words[i + 1 :], words[i]))
        cur = int(d.min())
        best = cur if best is None else min(best, cur)
    return best


def min_hamming(fc: FieldCode) -> int:
    words = fc.unique()
    if words.shape[0] < 2:
        raise ValueError("minimum distance needs at least two codewords")
    hist = _kernels.distance_histograms(words)
    nz = np.nonzero(hist[:, 1:].sum(axis=0))[0]
    return int(nz[0]) + 1


def distance_distribution(fc: FieldCode, reference) -> dict[int, int]:
    d = _kernels.hamming_rows(fc.words, np.asarray(reference, dtype=np.int64))
    values, counts = np.unique(d, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def is_quasicyclic(fc: FieldCode, e: int | None = None, n: int | None = None) -> bool:
    e = fc.e if e is None else e
    n = fc.n if n is None else n
    if e is None or n is None:
        raise ValueError("quasi-cyclicity needs the Gray-image shape (e, n)")
    if fc.length != fc.p ** (fc.k * e) * n:
        raise ValueError(f"word length {fc.length} != p^(ke) n = {fc.p ** (fc.k * e) * n}")
    shifted = quasi_shift(fc.words, fc.p, fc.k, e, n)
    return same_set(shifted, fc.words, fc.q)


def is_distance_invariant(fc: FieldCode) -> bool:
    hist = _kernels.distance_histograms(fc.unique())
    return bool((hist == hist[0]).all())


def code_report(code: Code) -> dict:
    """Every structural verdict and distance for one code."""
    ring = code.ring
    words = code.codewords()
    fc = gray_image(code)
    linear = is_linear(code)
    report = {
        "ring": ring.to_spec(),
        "n": code.n,
        "unit": str(code.unit),
        "size": int(words.shape[0]),
        "is_linear": linear,
        "is_constacyclic": is_constacyclic(code),
        "is_ideal": is_ideal(code),
        "gray_image_size": int(fc.unique().shape[0]),
        "gray_image_length": image_length(ring, code.n),
        "is_quasicyclic": is_quasicyclic(fc),
        "is_distance_invariant": is_distance_invariant(fc),
        "min_hom_distance": None,
        "min_hamming": None,
    }
    if words.shape[0] >= 2:
        report["min_hom_distance"] = min_hom_distance(code)
        report["min_hamming"] = min_hamming(fc)
    return report
