"""Finite-field tower GF(p) < F = GF(q) < E = GF(q^m) with table arithmetic.

Elements of E are stored as discrete logarithms to the base ``beta``, a fixed
primitive element; the zero element is ``None``.  Addition goes through a
Zech-logarithm table built from the polynomial basis of E over GF(p).

Elements of the subfield F are additionally given a compact *symbol*
encoding ``0..q-1``: ``0`` is zero and ``s >= 1`` is ``beta**((s-1)*n)`` with
``n = (q^m-1)/(q-1)``.  Words, check matrices and polynomials over F are all
expressed in symbols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .exceptions import FieldError, InternalInconsistency

Felt = Optional[int]

ZERO: Felt = None

DEFAULT_TABLE_LIMIT = 2**22


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = 3
    while r * r <= n:
        if n % r == 0:
            return False
        r += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldParams:
    """Parameters of the tower: ``q = p**k`` and the extension degree ``m``."""

    p: int
    k: int
    m: int
    table_limit: int = field(default=DEFAULT_TABLE_LIMIT, compare=False)

    def __post_init__(self):
        for name in ("p", "k", "m"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise FieldError(f"{name} must be an integer, got {value!r}")
        if not is_prime(self.p):
            raise FieldError(f"p must be prime, got {self.p}")
        if self.k < 1 or self.m < 1:
            raise FieldError("k and m must be positive")
        if math.gcd(self.m, self.q) != 1:
            raise FieldError(f"m={self.m} must be prime to q={self.q}")
        if self.n_units > self.table_limit:
            raise FieldError(
                f"q^m - 1 = {self.n_units} exceeds the table limit {self.table_limit}"
            )

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def n_units(self) -> int:
        return self.q**self.m - 1


def _poly_value(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def _power_table(poly: Sequence[int], p: int) -> Optional[list[int]]:
    """Codes of x^0, x^1, ... modulo the monic ``poly`` over GF(p).

    A code is the base-p integer of the residue's coefficient vector.
    Returns ``None`` unless x has order exactly p^deg - 1, i.e. unless
    ``poly`` is primitive.
    """
    deg = len(poly) - 1
    order = p**deg - 1
    if poly[0] % p == 0:
        return None
    # x^deg = -(poly[0] + ... + poly[deg-1] x^(deg-1))
    tail = [(-c) % p for c in poly[:deg]]
    digits = [0] * deg
    digits[0] = 1
    codes = [1]
    weights = [p**i for i in range(deg)]
    for _ in range(order - 1):
        top = digits[-1]
        digits = [0] + digits[:-1]
        if top:
            digits = [(d + top * c) % p for d, c in zip(digits, tail)]
        code = sum(d * w for d, w in zip(digits, weights))
        if code == 1:
            return None
        codes.append(code)
    top = digits[-1]
    digits = [0] + digits[:-1]
    if top:
        digits = [(d + top * c) % p for d, c in zip(digits, tail)]
    if digits != [1] + [0] * (deg - 1):
        return None
    return codes


def find_primitive_polynomial(p: int, degree: int) -> tuple[tuple[int, ...], list[int]]:
    """Smallest primitive polynomial of ``degree`` over GF(p).

    Candidates are monic and ordered by ``sum(c_i * p**i)`` over the
    coefficient vector ``(c_0, ..., c_degree)``.
    """
    for value in range(p**degree, 2 * p**degree):
        coeffs = []
        v = value
        for _ in range(degree + 1):
            coeffs.append(v % p)
            v //= p
        codes = _power_table(coeffs, p)
        if codes is not None:
            return tuple(coeffs), codes
    raise InternalInconsistency(f"no primitive polynomial of degree {degree} over GF({p})")


class TowerField:
    """The tower GF(p) < F < E with log/antilog and Zech tables.

    Build instances with :func:`build_tower`.  Instances are immutable and
    safe to share.
    """

    def __init__(self, params: FieldParams, defining_poly: tuple[int, ...], codes: list[int]):
        self.params = params
        self.p, self.k, self.m, self.q = params.p, params.k, params.m, params.q
        self.order = params.n_units
        self.defining_poly = tuple(int(c) for c in defining_poly)
        self.degree_over_prime = len(defining_poly) - 1
        self.exp_table = np.asarray(codes, dtype=np.int64)
        size = self.p**self.degree_over_prime
        log = np.full(size, -1, dtype=np.int64)
        log[self.exp_table] = np.arange(self.order)
        self.log_table = log
        self.subfield_step = self.order // (self.q - 1)
        self._zech = self._build_zech()
        self._half = self.order // 2 if self.p != 2 else 0
        self._build_subfield_tables()

    def __repr__(self):
        return f"TowerField(p={self.p}, k={self.k}, m={self.m})"

    def __reduce__(self):
        return (build_tower, (self.params, self.defining_poly))

    # -- construction helpers -------------------------------------------------

    def _build_zech(self) -> list[Felt]:
        p = self.p
        codes = self.exp_table
        d0 = codes % p
        plus_one = codes - d0 + (d0 + 1) % p
        zech: list[Felt] = []
        for code in plus_one.tolist():
            zech.append(None if code == 0 else int(self.log_table[code]))
        return zech

    def _build_subfield_tables(self):
        q = self.q
        elems = [self.subfield_element(s) for s in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = self.subfield_index(self.add(elems[a], elems[b]))
                mul[a, b] = self.subfield_index(self.mul(elems[a], elems[b]))
        self.f_add = add
        self.f_mul = mul
        self.f_neg = np.array([self.subfield_index(self.neg(e)) for e in elems], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for s in range(1, q):
            inv[s] = self.subfield_index(self.inv(elems[s]))
        self.f_inv = inv
        self.f_sub = add[:, self.f_neg]
        # list copies for scalar loops
        self.add_l = add.tolist()
        self.mul_l = mul.tolist()
        self.neg_l = self.f_neg.tolist()
        self.inv_l = inv.tolist()

    # -- E arithmetic -------------------------------------------------------------

    def element(self, exponent: int) -> Felt:
        return exponent % self.order

    @property
    def one(self) -> Felt:
        return 0

    @property
    def beta(self) -> Felt:
        return 1 % self.order

    def add(self, a: Felt, b: Felt) -> Felt:
        if a is None:
            return b
        if b is None:
            return a
        z = self._zech[(b - a) % self.order]
        if z is None:
            return None
        return (a + z) % self.order

    def neg(self, a: Felt) -> Felt:
        if a is None:
            return None
        return (a + self._half) % self.order

    def sub(self, a: Felt, b: Felt) -> Felt:
        return self.add(a, self.neg(b))

    def mul(self, a: Felt, b: Felt) -> Felt:
        if a is None or b is None:
            return None
        return (a + b) % self.order

    def inv(self, a: Felt) -> Felt:
        if a is None:
            raise ZeroDivisionError("inverse of zero in GF(q^m)")
        return (-a) % self.order

    def div(self, a: Felt, b: Felt) -> Felt:
        return self.mul(a, self.inv(b))

    def pow(self, a: Felt, e: int) -> Felt:
        if a is None:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0 if e == 0 else None
        return (a * e) % self.order

    def frobenius(self, a: Felt) -> Felt:
        """``a ** q``."""
        if a is None:
            return None
        return (a * self.q) % self.order

    def trace(self, a: Felt) -> Felt:
        """Trace of E over F: the sum of the m conjugates ``a ** (q**s)``."""
        acc: Felt = None
        x = a
        for _ in range(self.m):
            acc = self.add(acc, x)
            x = self.frobenius(x)
        return acc

    def conjugates(self, a: Felt) -> list[Felt]:
        """Distinct elements of the Frobenius orbit of ``a``."""
        out = [a]
        x = self.frobenius(a)
        while x != a:
            out.append(x)
            x = self.frobenius(x)
        return out

    def to_vector(self, a: Felt) -> list[int]:
        """Coordinates of ``a`` in the polynomial basis of E over GF(p)."""
        code = 0 if a is None else int(self.exp_table[a])
        digits = []
        for _ in range(self.degree_over_prime):
            digits.append(code % self.p)
            code //= self.p
        return digits

    def from_vector(self, digits: Sequence[int]) -> Felt:
        code = _poly_value([d % self.p for d in digits], self.p)
        if code == 0:
            return None
        return int(self.log_table[code])

    # -- subfield F ------------------------------------------------------------

    def in_subfield(self, a: Felt) -> bool:
        return a is None or a % self.subfield_step == 0

    def subfield_element(self, s: int) -> Felt:
        if not 0 <= s < self.q:
            raise FieldError(f"subfield symbol {s} outside 0..{self.q - 1}")
        if s == 0:
            return None
        return (s - 1) * self.subfield_step

    def subfield_index(self, a: Felt) -> int:
        if a is None:
            return 0
        if a % self.subfield_step:
            raise FieldError(f"beta^{a} is not in GF({self.q})")
        return a // self.subfield_step + 1

    def prime_field_symbol(self, n: int) -> int:
        """Symbol of the integer ``n`` viewed in the prime field GF(p)."""
        s = 0
        for _ in range(n % self.p):
            s = self.add_l[s][1]
        return s

    def minimal_polynomial(self, a: Felt):
        """Minimal polynomial of a nonzero ``a`` over F, as a monic PolyF."""
        from .polyring import PolyF

        if a is None:
            raise FieldError("minimal polynomial is only provided for nonzero elements")
        coeffs: list[Felt] = [0]
        for c in self.conjugates(a):
            # multiply by (x - c)
            shifted = [None] + coeffs
            nc = self.neg(c)
            scaled = [self.mul(nc, x) for x in coeffs] + [None]
            coeffs = [self.add(u, v) for u, v in zip(shifted, scaled)]
        return PolyF(self, [self.subfield_index(x) for x in coeffs])


@lru_cache(maxsize=64)
def _cached_tower(params: FieldParams, defining_poly: Optional[tuple[int, ...]]) -> TowerField:
    degree = params.k * params.m
    if defining_poly is None:
        poly, codes = find_primitive_polynomial(params.p, degree)
    else:
        poly = tuple(int(c) % params.p for c in defining_poly)
        if len(poly) != degree + 1 or poly[-1] != 1:
            raise FieldError(f"defining polynomial must be monic of degree {degree}")
        codes = _power_table(poly, params.p)
        if codes is None:
            raise FieldError(f"defining polynomial {poly} is not primitive over GF({params.p})")
    tower = TowerField(params, poly, codes)
    if tower.beta is not None and tower.order > 1:
        for r in prime_factors(tower.order):
            if tower.pow(tower.beta, tower.order // r) == tower.one:
                raise InternalInconsistency("beta is not primitive")
    return tower


def build_tower(params: FieldParams, defining_poly: Optional[Sequence[int]] = None) -> TowerField:
    """Build the tower for ``params``.

    Without ``defining_poly`` the smallest primitive polynomial of degree
    ``k*m`` over GF(p) is used, so the choice of beta is reproducible.
    Passing ``defining_poly`` (residues, constant term first) overrides it;
    the polynomial must be primitive.
    """
    key = None if defining_poly is None else tuple(int(c) for c in defining_poly)
    return _cached_tower(params, key)
