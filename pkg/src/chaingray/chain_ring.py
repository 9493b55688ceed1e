"""Finite chain rings Z_{p^{e+1}} and F_{p^k}[u]/(u^{e+1}).

Elements are handled as canonical integers E(r) = sum(enc(a_i) * q**i) where
q = p^k and a_0, ..., a_e are the gamma-adic digits of r.  For Z_{p^{e+1}}
this is the residue itself (gamma = p, digits are base-p digits); for the
truncated polynomial ring gamma = u and the digits are the coefficients of u^i.
All arithmetic accepts Python ints or integer numpy arrays and broadcasts.
"""

from __future__ import annotations

import json
from functools import cached_property
from pathlib import Path

import numpy as np

from .field import FieldError, ResidueField, is_prime, p_adic_digits

ZPE = "zpe"
FPK_U = "fpk_u"
FAMILIES = (ZPE, FPK_U)

# rings up to this order get dense add/mul lookup tables
TABLE_LIMIT = 1024

PRESETS = {
    "z4": {"family": ZPE, "p": 2, "k": 1, "e": 1},
    "z8": {"family": ZPE, "p": 2, "k": 1, "e": 2},
    "z9": {"family": ZPE, "p": 3, "k": 1, "e": 1},
    "z16": {"family": ZPE, "p": 2, "k": 1, "e": 3},
    "z27": {"family": ZPE, "p": 3, "k": 1, "e": 2},
    "z125": {"family": ZPE, "p": 5, "k": 1, "e": 2},
    "f2u3": {"family": FPK_U, "p": 2, "k": 1, "e": 2},
    "f3u3": {"family": FPK_U, "p": 3, "k": 1, "e": 2},
    "f4u3": {"family": FPK_U, "p": 2, "k": 2, "e": 2, "modulus": [1, 1, 1]},
    "f9u3": {"family": FPK_U, "p": 3, "k": 2, "e": 2, "modulus": [2, 2, 1]},
}


class RingError(ValueError):
    """Invalid ring parameters, element, or mixed-ring operation."""


def _unwrap(x, *inputs):
    if all(np.ndim(v) == 0 and not isinstance(v, np.ndarray) for v in inputs):
        return int(x) if not isinstance(x, (bool, np.bool_)) else bool(x)
    return x


class ChainRing:
    """A concrete finite chain ring with nilpotency index e + 1."""

    def __init__(self, family: str, p: int, k: int = 1, e: int = 2, modulus=None):
        if family not in FAMILIES:
            raise RingError(f"unknown ring family {family!r}; expected one of {FAMILIES}")
        if not is_prime(p):
            raise RingError(f"p = {p} is not prime")
        if k < 1:
            raise RingError(f"k must be >= 1, got {k}")
        if e < 1:
            raise RingError(f"e must be >= 1, got {e}")
        if family == ZPE and k != 1:
            raise RingError(f"family {ZPE} requires k = 1, got k = {k}")
        try:
            self.field = ResidueField(p, k, modulus)
        except FieldError as exc:
            raise RingError(str(exc)) from exc
        self.family = family
        self.p = p
        self.k = k
        self.e = e
        self.q = p**k
        self.order = self.q ** (e + 1)
        self.gamma = self.q if family == FPK_U else p
        self._explicit_modulus = modulus is not None

    # -- identity -----------------------------------------------------------

    @property
    def key(self):
        return (self.family, self.p, self.k, self.e, self.field.modulus)

    def __eq__(self, other):
        return isinstance(other, ChainRing) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"ChainRing({self.name})"

    @property
    def name(self) -> str:
        if self.family == ZPE:
            return f"Z_{self.order}"
        base = f"F_{self.q}"
        return f"{base}[u]/u^{self.e + 1}"

    @property
    def characteristic(self) -> int:
        return self.p ** (self.e + 1) if self.family == ZPE else self.p

    @property
    def outside_hypothesis(self) -> bool:
        """True for e = 1, which lies outside the standing assumption e >= 2."""
        return self.e < 2

    def ideal_size(self, j: int) -> int:
        """|<gamma^j>| counted from the digit structure."""
        if not 0 <= j <= self.e + 1:
            raise RingError(f"j = {j} outside [0, {self.e + 1}]")
        return self.q ** (self.e + 1 - j)

    def to_spec(self) -> dict:
        spec = {"family": self.family, "p": self.p, "k": self.k, "e": self.e}
        if self.k > 1 or self._explicit_modulus:
            spec["modulus"] = list(self.field.modulus)
        return spec

    # -- element encoding -----------------------------------------------------

    def check(self, x):
        arr = np.asarray(x)
        if arr.size and (arr.min() < 0 or arr.max() >= self.order):
            raise RingError(f"element outside [0, {self.order}) for {self.name}")
        return x

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def digits(self, x) -> np.ndarray:
        """Gamma-adic digit encodings of canonical elements, shape (..., e+1)."""
        x = np.asarray(x, dtype=np.int64)
        powers = self.q ** np.arange(self.e + 1, dtype=np.int64)
        return (x[..., None] // powers) % self.q

    def from_digits(self, digits):
        d = np.asarray(digits, dtype=np.int64)
        if d.shape[-1] != self.e + 1:
            raise RingError(f"expected {self.e + 1} digits, got {d.shape[-1]}")
        if d.size and (d.min() < 0 or d.max() >= self.q):
            raise RingError(f"digits must lie in [0, {self.q})")
        powers = self.q ** np.arange(self.e + 1, dtype=np.int64)
        out = (d * powers).sum(axis=-1)
        return int(out) if out.ndim == 0 else out

    def gamma_adic(self, raw) -> tuple[int, ...]:
        """Digits (a_0, ..., a_e) of an element given in raw form.

        Raw form is the integer residue for Z_{p^{e+1}}, and the coefficient
        sequence (low-to-high, field encodings) of a polynomial in u for the
        truncated polynomial ring.
        """
        if self.family == ZPE:
            raw = int(raw)
            if not 0 <= raw < self.order:
                raise RingError(f"{raw} outside [0, {self.order})")
            return p_adic_digits(raw, self.p, self.e + 1)
        coeffs = [int(c) for c in raw]
        if len(coeffs) > self.e + 1:
            if any(coeffs[self.e + 1 :]):
                raise RingError(f"polynomial degree exceeds u^{self.e}")
            coeffs = coeffs[: self.e + 1]
        if any(not 0 <= c < self.q for c in coeffs):
            raise RingError(f"coefficients must be field encodings in [0, {self.q})")
        return tuple(coeffs + [0] * (self.e + 1 - len(coeffs)))

    def element(self, raw) -> int:
        return self.from_digits(self.gamma_adic(raw))

    def gamma_power(self, j: int) -> int:
        if j > self.e:
            return 0
        return self.q**j

    # -- arithmetic ----------------------------------------------------------

    @cached_property
    def _tables(self):
        if self.order > TABLE_LIMIT:
            return None
        a = self.elements()
        return (
            self._add_direct(a[:, None], a[None, :]),
            self._mul_direct(a[:, None], a[None, :]),
        )

    def _add_direct(self, a, b):
        if self.family == ZPE:
            return (np.asarray(a, dtype=np.int64) + b) % self.order
        s = self.field.add_table[self.digits(a), self.digits(b)]
        return self.from_digits(s)

    def _mul_direct(self, a, b):
        if self.family == ZPE:
            return (np.asarray(a, dtype=np.int64) * b) % self.order
        da, db = self.digits(a), self.digits(b)
        da, db = np.broadcast_arrays(da, db)
        mul, add = self.field.mul_table, self.field.add_table
        out = np.zeros_like(da)
        for i in range(self.e + 1):
            for j in range(self.e + 1 - i):
                out[..., i + j] = add[out[..., i + j], mul[da[..., i], db[..., j]]]
        return self.from_digits(out)

    def add(self, a, b):
        t = self._tables
        res = t[0][a, b] if t is not None else self._add_direct(a, b)
        return _unwrap(res, a, b)

    def mul(self, a, b):
        t = self._tables
        res = t[1][a, b] if t is not None else self._mul_direct(a, b)
        return _unwrap(res, a, b)

    @cached_property
    def neg_table(self) -> np.ndarray:
        a = self.elements()
        if self.family == ZPE:
            return (-a) % self.order
        return self.from_digits(self.field.neg_table[self.digits(a)])

    def neg(self, a):
        return _unwrap(self.neg_table[a], a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inverse(a), -n)
        out, base = 1, int(a)
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def inverse(self, a: int) -> int:
        if not self.is_unit(a):
            raise RingError(f"{a} is not a unit of {self.name}")
        hits = np.nonzero(self.mul(int(a), self.elements()) == 1)[0]
        return int(hits[0])

    def scalar(self, c: int) -> int:
        """Image of the integer c under Z -> R."""
        if self.family == ZPE:
            return c % self.order
        return c % self.p

    # -- residues and units --------------------------------------------------

    def residue(self, a):
        """Canonical map R -> F_{p^k}, returned as field encodings."""
        return _unwrap(np.asarray(a, dtype=np.int64) % self.q, a)

    def is_unit(self, a):
        return _unwrap(np.asarray(a, dtype=np.int64) % self.q != 0, a)

    def in_socle(self, a):
        """Membership in <gamma^e>."""
        return _unwrap(np.asarray(a, dtype=np.int64) % self.q**self.e == 0, a)

    def valuation(self, a: int) -> int:
        """Largest j with a in <gamma^j>; e + 1 for zero."""
        d = self.digits(int(a))
        nz = np.nonzero(d)[0]
        return int(nz[0]) if nz.size else self.e + 1


def make_ring(spec) -> ChainRing:
    """Build a ring from a preset name, a spec dict, or a path to a JSON spec."""
    if isinstance(spec, ChainRing):
        return spec
    if isinstance(spec, (str, Path)):
        key = str(spec).lower()
        if key in PRESETS:
            spec = PRESETS[key]
        else:
            path = Path(spec)
            if not path.is_file():
                raise RingError(f"unknown ring preset or missing file: {spec}")
            spec = json.loads(path.read_text())
    if not isinstance(spec, dict):
        raise RingError(f"ring spec must be a mapping, got {type(spec).__name__}")
    try:
        family = spec["family"]
        p = int(spec["p"])
        k = int(spec.get("k", 1))
        e = int(spec["e"])
    except (KeyError, TypeError, ValueError) as exc:
        raise RingError(f"malformed ring spec {spec!r}: {exc}") from exc
    return ChainRing(family, p, k, e, spec.get("modulus"))


def ring_label(ring: ChainRing) -> str:
    for name, spec in PRESETS.items():
        try:
            if make_ring(spec) == ring:
                return name
        except RingError:  # pragma: no cover
            continue
    return ring.name


def word_count(ring: ChainRing, n: int) -> int:
    return ring.order**n


def all_words(ring: ChainRing, n: int) -> np.ndarray:
    """Every word of R^n as rows; coordinate j is digit j of the row index."""
    total = ring.order**n
    idx = np.arange(total, dtype=np.int64)
    powers = ring.order ** np.arange(n, dtype=np.int64)
    return (idx[:, None] // powers) % ring.order

