"""Shift and permutation operators on ring words and Gray-image words.

Conventions: the quasi-cyclic shift rotates every block of length p*n one
step to the right, and the Nechaev block permutation pulls, i.e. the output
coordinate i of a block is the input coordinate tau(i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .chain_ring import ChainRing, RingError

ONE = "1"
ONE_MINUS = "1-g^e"
ONE_PLUS = "1+g^e"

_ALIASES = {
    "1": ONE,
    "one": ONE,
    "1-g^e": ONE_MINUS,
    "one_minus_gamma_e": ONE_MINUS,
    "1+g^e": ONE_PLUS,
    "one_plus_gamma_e": ONE_PLUS,
}


@dataclass(frozen=True)
class UnitSpec:
    """A named unit (1, 1 - gamma^e, 1 + gamma^e) or a custom element."""

    kind: str
    value: int | None = None

    @classmethod
    def parse(cls, text) -> "UnitSpec":
        if isinstance(text, UnitSpec):
            return text
        if isinstance(text, dict) and "custom" in text:
            return cls("custom", int(text["custom"]))
        if isinstance(text, int):
            return cls("custom", text)
        s = str(text).strip().lower().replace(" ", "")
        if s in _ALIASES:
            return cls(_ALIASES[s])
        if s.startswith("custom:"):
            return cls("custom", int(s.split(":", 1)[1]))
        raise RingError(f"unrecognised unit {text!r}")

    def resolve(self, ring: ChainRing) -> int:
        gamma_e = ring.gamma_power(ring.e)
        if self.kind == ONE:
            lam = 1
        elif self.kind == ONE_MINUS:
            lam = ring.sub(1, gamma_e)
        elif self.kind == ONE_PLUS:
            lam = ring.add(1, gamma_e)
        else:
            lam = int(self.value)
            ring.check(lam)
        if not ring.is_unit(lam):
            raise RingError(f"{lam} is not a unit of {ring.name}")
        return lam

    def to_json(self):
        return {"custom": self.value} if self.kind == "custom" else self.kind

    def __str__(self):
        return f"custom:{self.value}" if self.kind == "custom" else self.kind


def _unit(ring: ChainRing, lam) -> int:
    if isinstance(lam, (UnitSpec, str, dict)):
        return UnitSpec.parse(lam).resolve(ring)
    lam = int(lam)
    if not ring.is_unit(lam):
        raise RingError(f"{lam} is not a unit of {ring.name}")
    return lam


def constacyclic_shift(ring: ChainRing, x, lam) -> np.ndarray:
    """(x_0, ..., x_{n-1}) -> (lam * x_{n-1}, x_0, ..., x_{n-2}), row-wise."""
    lam = _unit(ring, lam)
    x = np.asarray(x, dtype=np.int64)
    out = np.roll(x, 1, axis=-1)
    out[..., 0] = ring.mul(lam, x[..., -1])
    return out


def _check_image_length(w, p, k, e, n):
    expected = p ** (k * e) * n
    if w.shape[-1] != expected:
        raise ValueError(f"field word length {w.shape[-1]} != p^(ke) n = {expected}")


def quasi_shift(w, p: int, k: int, e: int, n: int) -> np.ndarray:
    """Right-rotate each of the p^(ke-1) consecutive blocks of length p*n."""
    w = np.asarray(w)
    _check_image_length(w, p, k, e, n)
    blocks = w.reshape(w.shape[:-1] + (p ** (k * e - 1), p * n))
    return np.roll(blocks, 1, axis=-1).reshape(w.shape)


@lru_cache(maxsize=64)
def _tau(n: int, p: int, n_prime: int) -> tuple[int, ...]:
    return tuple(((m + j * n_prime) % p) * n + j for m in range(p) for j in range(n))


def nechaev_perm(n: int, p: int, n_prime: int) -> np.ndarray:
    """tau(m n + j) = ((m + j n') mod p) n + j on {0, ..., pn - 1}."""
    if n < 1 or not 0 <= n_prime < p:
        raise ValueError(f"need n >= 1 and 0 <= n' < p, got n={n}, n'={n_prime}")
    return np.array(_tau(n, p, n_prime), dtype=np.int64)


def inverse_of_n(n: int, p: int) -> int:
    if gcd(n, p) != 1:
        raise RingError(f"gcd(n={n}, p={p}) != 1")
    return pow(n, -1, p)


def pi_block(w, p: int, k: int, e: int, n: int, n_prime: int | None = None) -> np.ndarray:
    """Apply tau (pull convention) to every block of length p*n."""
    if n_prime is None:
        n_prime = inverse_of_n(n, p)
    elif gcd(n, p) != 1 or (n * n_prime) % p != 1:
        raise ValueError(f"n' = {n_prime} is not the inverse of n = {n} mod {p}")
    return _permute_blocks(w, p, k, e, n, nechaev_perm(n, p, n_prime))


def _permute_blocks(w, p, k, e, n, tau):
    w = np.asarray(w)
    _check_image_length(w, p, k, e, n)
    blocks = w.reshape(w.shape[:-1] + (p ** (k * e - 1), p * n))
    return blocks[..., tau].reshape(w.shape)


def beta(ring: ChainRing, n: int) -> tuple[int, int]:
    """(n', beta) with n n' = 1 mod p and beta = 1 + n' gamma^e."""
    n_prime = inverse_of_n(n, ring.p)
    b = ring.add(1, ring.mul(ring.scalar(n_prime), ring.gamma_power(ring.e)))
    return n_prime, b


def beta_powers(ring: ChainRing, n: int, length: int, exponent: int = 1) -> np.ndarray:
    """beta^(exponent*j) for j < length, by repeated ring multiplication."""
    _, b = beta(ring, n)
    step = ring.power(b, exponent)
    out = np.empty(length, dtype=np.int64)
    cur = 1
    for j in range(length):
        out[j] = cur
        cur = ring.mul(cur, step)
    return out


def mu_bar(ring: ChainRing, x) -> np.ndarray:
    """Coordinate j multiplied by beta^j."""
    x = np.asarray(x, dtype=np.int64)
    n = x.shape[-1]
    return ring.mul(x, beta_powers(ring, n, n))


def mu_bar_sq(ring: ChainRing, x) -> np.ndarray:
    """Coordinate j multiplied by beta^(2j)."""
    x = np.asarray(x, dtype=np.int64)
    n = x.shape[-1]
    return ring.mul(x, beta_powers(ring, n, n, exponent=2))


def mu_poly(ring: ChainRing, coeffs, n: int) -> np.ndarray:
    """Substitute X -> beta X in a polynomial of any degree (beta built from n)."""
    c = np.asarray(coeffs, dtype=np.int64)
    return ring.mul(c, beta_powers(ring, n, c.shape[-1]))
