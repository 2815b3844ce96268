"""Table-driven arithmetic in GF(q) for small prime powers q.

Elements are integers ``0..q-1``.  For ``q = p**k`` the base-``p`` digits of an
element are the coefficients (constant term first) of its representative
polynomial modulo a fixed irreducible polynomial of degree ``k``.  For prime
``q`` this is ordinary residue arithmetic, so ``build_field(5).add(3, 4) == 2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from .errors import NotPrimePower, TooLarge

MAX_ORDER = 4096


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k`` or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrimePower(f"q={q} has at least two distinct prime factors")
    return p, k


# -- polynomials over GF(p), coefficient lists with constant term first --------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _polymulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _polymod(out, m, p)


def _is_irreducible(m: list[int], p: int) -> bool:
    k = len(m) - 1
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            if not _polymod(m, list(low) + [1], p):
                return False
    return True


def find_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k, scanning lower coefficients in
    increasing base-p encoding.  Empty tuple for k == 1."""
    if k == 1:
        return ()
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        m = low + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _to_digits(a: int, p: int, k: int) -> list[int]:
    return [(a // p**i) % p for i in range(k)]


def _from_digits(d: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(d))


@dataclass(frozen=True, eq=False)
class FieldTable:
    """Immutable arithmetic tables for GF(q)."""

    q: int
    p: int
    k: int
    modulus: tuple[int, ...]
    exp: tuple[int, ...] = field(repr=False)  # exp[i] = g**i, i in 0..q-2
    log: tuple[int, ...] = field(repr=False)  # log[0] == -1

    @property
    def is_prime(self) -> bool:
        return self.k == 1

    @property
    def degenerate(self) -> bool:
        """q == 2: the multiplicative group is trivial."""
        return self.q == 2

    def __eq__(self, other):
        return isinstance(other, FieldTable) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self):
        return hash((self.q, self.modulus))

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        return _from_digits([(x + y) % p for x, y in zip(_to_digits(a, p, self.k), _to_digits(b, p, self.k))], p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        return _from_digits([(-x) % p for x in _to_digits(a, p, self.k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(q)."""
        return n % self.p

    @cached_property
    def add_table(self) -> np.ndarray:
        idx = np.arange(self.q)
        out = np.zeros((self.q, self.q), dtype=np.int32)
        for i in range(self.k):
            w = self.p**i
            d = (idx // w) % self.p
            out += ((d[:, None] + d[None, :]) % self.p) * w
        return out

    @cached_property
    def mul_table(self) -> np.ndarray:
        exp = np.asarray(self.exp, dtype=np.int32)
        log = np.asarray(self.log, dtype=np.int64)
        out = exp[(log[:, None] + log[None, :]) % (self.q - 1)]
        out[0, :] = 0
        out[:, 0] = 0
        return out

    @cached_property
    def neg_array(self) -> np.ndarray:
        return np.asarray([self.neg(a) for a in range(self.q)], dtype=np.int32)

    @cached_property
    def inv_array(self) -> np.ndarray:
        return np.asarray([0] + [self.inv(a) for a in range(1, self.q)], dtype=np.int32)


def build_field(q: int) -> FieldTable:
    if q > MAX_ORDER:
        raise TooLarge(f"q={q} exceeds the table cap {MAX_ORDER}")
    p, k = _factor_prime_power(q)
    modulus = find_modulus(p, k)

    def slow_mul(a: int, b: int) -> int:
        if k == 1:
            return a * b % p
        prod = _polymulmod(_to_digits(a, p, k), _to_digits(b, p, k), list(modulus), p)
        return _from_digits(prod, p)

    g = 1
    if q > 2:
        for cand in range(2, q):
            x, order = cand, 1
            while x != 1:
                x = slow_mul(x, cand)
                order += 1
            if order == q - 1:
                g = cand
                break
    exp = [1]
    for _ in range(q - 2):
        exp.append(slow_mul(exp[-1], g))
    log = [-1] * q
    for i, x in enumerate(exp):
        log[x] = i
    return FieldTable(q=q, p=p, k=k, modulus=modulus, exp=tuple(exp), log=tuple(log))


def primitive_element(field: FieldTable) -> int:
    """A generator of the multiplicative group (1 when q == 2)."""
    return field.exp[1] if field.q > 2 else 1


def units(field: FieldTable) -> list[int]:
    return list(range(1, field.q))


def multiplicative_order(field: FieldTable, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 is not a unit")
    x, n = a, 1
    while x != 1:
        x = field.mul(x, a)
        n += 1
    return n
