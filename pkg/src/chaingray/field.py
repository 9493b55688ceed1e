"""Residue fields F_{p^k} with integer-encoded elements.

An element c_0 + c_1*a + ... + c_{k-1}*a^{k-1} (a the class of x modulo the
field modulus) is encoded as the integer sum(c_i * p**i).  With this encoding
the element attached to a digit string is simply its base-p value, so
``alpha_eps(eps)`` always encodes to ``eps``.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np


class FieldError(ValueError):
    """Invalid field parameters."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def p_adic_digits(value: int, base: int, length: int) -> tuple[int, ...]:
    """Little-endian digits of ``value`` in ``base``, exactly ``length`` of them."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if length < 0 or not 0 <= value < base**length:
        raise ValueError(f"{value} does not fit in {length} base-{base} digits")
    digits = []
    for _ in range(length):
        value, d = divmod(value, base)
        digits.append(d)
    return tuple(digits)


def from_digits(digits, base: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * base + int(d)
    return out


def primitive_root(p: int) -> int:
    """Least generator of the multiplicative group of Z_p."""
    if p == 2:
        return 1
    phi = p - 1
    factors = {q for q in range(2, phi + 1) if phi % q == 0 and is_prime(q)}
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    raise FieldError(f"no primitive root mod {p}")  # pragma: no cover


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    """Product of two degree < k coefficient lists modulo a monic modulus."""
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1 if k else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            shift = deg - k
            for i in range(k + 1):
                prod[shift + i] = (prod[shift + i] - c * modulus[i]) % p
    return (prod + [0] * k)[:k]


class ResidueField:
    """The finite field F_{p^k} built as Z_p[x]/(modulus), modulus primitive.

    ``modulus`` lists coefficients low-to-high and must be monic of degree k.
    For k = 1 it may be omitted; the field is then Z_p and the fixed primitive
    element is the least primitive root.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.order = p**k
        if modulus is None:
            if k > 1:
                raise FieldError("a degree-k primitive modulus is required when k > 1")
            g = primitive_root(p)
            modulus = [(-g) % p, 1]
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus {modulus} is not monic of degree {k}")
        self.modulus = tuple(modulus)
        if not self._x_is_primitive():
            raise FieldError(f"modulus {list(self.modulus)} is not primitive over Z_{p}")

    def _x_is_primitive(self) -> bool:
        m = list(self.modulus)
        if self.k == 1:
            # the class of x is the root -m_0
            g = (-m[0]) % self.p
            if g == 0:
                return False
            return all(pow(g, i, self.p) != 1 for i in range(1, self.p - 1))
        x = [0, 1] + [0] * (self.k - 2)
        one = [1] + [0] * (self.k - 1)
        cur = list(one)
        for i in range(1, self.order):
            cur = _poly_mulmod(cur, x, m, self.p)
            if cur == one:
                return i == self.order - 1
            if not any(cur):
                return False
        return False  # pragma: no cover

    def __repr__(self):
        return f"ResidueField(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, ResidueField) and (self.p, self.k, self.modulus) == (
            other.p,
            other.k,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    @property
    def primitive_element(self) -> int:
        """Encoding of the fixed primitive element a = class of x."""
        if self.k == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    def coeffs(self, f: int) -> tuple[int, ...]:
        return p_adic_digits(int(f), self.p, self.k)

    def encode(self, coeffs) -> int:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.k:
            raise FieldError(f"{len(coeffs)} coefficients for degree {self.k} field")
        return from_digits(coeffs, self.p)

    def alpha_eps(self, eps: int) -> int:
        """Field element xi_0 + xi_1 a + ... from the base-p digits of eps."""
        if not 0 <= eps < self.order:
            raise FieldError(f"eps = {eps} outside [0, {self.order})")
        return self.encode(p_adic_digits(eps, self.p, self.k))

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.order
        digits = np.array([self.coeffs(f) for f in range(q)], dtype=np.int64)
        s = (digits[:, None, :] + digits[None, :, :]) % self.p
        weights = self.p ** np.arange(self.k, dtype=np.int64)
        return (s * weights).sum(axis=-1)

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.order
        table = np.zeros((q, q), dtype=np.int64)
        m = list(self.modulus)
        if self.k == 1:
            a = np.arange(q, dtype=np.int64)
            return np.outer(a, a) % self.p
        coeffs = [list(self.coeffs(f)) for f in range(q)]
        for a in range(q):
            for b in range(a, q):
                v = self.encode(_poly_mulmod(coeffs[a], coeffs[b], m, self.p))
                table[a, b] = table[b, a] = v
        return table

    @cached_property
    def neg_table(self) -> np.ndarray:
        zero_col = self.add_table == 0
        return np.argmax(zero_col, axis=1).astype(np.int64)

    @cached_property
    def sub_table(self) -> np.ndarray:
        return self.add_table[:, self.neg_table]

    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.sub_table[a, b]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(np.argmax(self.mul_table[a] == 1))
