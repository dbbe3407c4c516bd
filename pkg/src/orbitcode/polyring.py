"""Dense univariate polynomials over F = GF(q), coefficients as F-symbols."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .exceptions import PolynomialError
from .galois import Felt, TowerField
from .orbits import divisors, mobius


class PolyF:
    """Immutable polynomial over F, coefficients low-to-high.

    Coefficients are F-symbols (see :mod:`orbitcode.galois`).  The zero
    polynomial has no coefficients and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: TowerField, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        for x in c:
            if not 0 <= x < field.q:
                raise PolynomialError(f"coefficient {x} is not an F-symbol (0..{field.q - 1})")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("PolyF is immutable")

    # -- constructors ------------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def constant(cls, field, s: int):
        return cls(field, (s,))

    @classmethod
    def monomial(cls, field, degree: int, s: int = 1):
        return cls(field, [0] * degree + [s])

    @classmethod
    def x(cls, field):
        return cls.monomial(field, 1)

    @classmethod
    def parse(cls, field, text: str):
        """Parse comma-separated F-symbols, low-to-high (``"1,0,2,1"``)."""
        text = text.strip()
        if not text:
            return cls.zero(field)
        try:
            return cls(field, [int(tok) for tok in text.split(",")])
        except ValueError as exc:
            raise PolynomialError(f"cannot parse polynomial {text!r}: {exc}") from None

    # -- basic accessors ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PolyF):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyF({self.to_string()!r})"

    def to_string(self) -> str:
        return ",".join(map(str, self.coeffs)) if self.coeffs else "0"

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return "+".join(terms)

    # -- ring operations ------------------------------------------------------------

    def _check(self, other: "PolyF"):
        if other.field is not self.field:
            raise PolynomialError("polynomials over different fields")

    def __add__(self, other: "PolyF") -> "PolyF":
        self._check(other)
        add = self.field.add_l
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add[out[i]][y]
        return PolyF(self.field, out)

    def __neg__(self) -> "PolyF":
        neg = self.field.neg_l
        return PolyF(self.field, [neg[c] for c in self.coeffs])

    def __sub__(self, other: "PolyF") -> "PolyF":
        return self + (-other)

    def __mul__(self, other) -> "PolyF":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyF(self.field, ())
        add, mul = self.field.add_l, self.field.mul_l
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = mul[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][row[y]]
        return PolyF(self.field, out)

    __rmul__ = __mul__

    def scale(self, s: int) -> "PolyF":
        row = self.field.mul_l[s]
        return PolyF(self.field, [row[c] for c in self.coeffs])

    def shift(self, n: int) -> "PolyF":
        """Multiply by ``x**n``."""
        if not self.coeffs:
            return self
        return PolyF(self.field, [0] * n + list(self.coeffs))

    def truncate(self, n: int) -> "PolyF":
        """Reduce modulo ``x**n``."""
        return PolyF(self.field, self.coeffs[:n])

    def monic(self) -> "PolyF":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv_l[self.lead])

    def __divmod__(self, divisor: "PolyF") -> tuple["PolyF", "PolyF"]:
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        add, mul, neg = f.add_l, f.mul_l, f.neg_l
        rem = list(self.coeffs)
        db = divisor.degree
        if len(rem) - 1 < db:
            return PolyF(f, ()), self
        inv_lead = f.inv_l[divisor.lead]
        dcoef = divisor.coeffs
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            factor = mul[c][inv_lead]
            quot[i - db] = factor
            nf = neg[factor]
            row = mul[nf]
            for j, d in enumerate(dcoef):
                if d:
                    rem[i - db + j] = add[rem[i - db + j]][row[d]]
        return PolyF(f, quot), PolyF(f, rem[:db])

    def __floordiv__(self, divisor):
        return divmod(self, divisor)[0]

    def __mod__(self, divisor):
        return divmod(self, divisor)[1]

    def divides(self, other: "PolyF") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "PolyF":
        f = self.field
        mul = f.mul_l
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(mul[f.prime_field_symbol(i)][self.coeffs[i]])
        return PolyF(f, out)

    # -- evaluation -----------------------------------------------------------------

    def eval(self, point: Felt) -> Felt:
        """Evaluate at an element of E (Horner)."""
        f = self.field
        acc: Felt = None
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, point), f.subfield_element(c))
        return acc

    def eval_symbol(self, s: int) -> int:
        """Evaluate at an element of F given as a symbol."""
        add, mul = self.field.add_l, self.field.mul_l
        acc = 0
        for c in reversed(self.coeffs):
            acc = add[mul[acc][s]][c]
        return acc

    def compose_mod(self, point: "PolyF", modulus: "PolyF") -> "PolyF":
        """``self(point) mod modulus``."""
        acc = PolyF.zero(self.field)
        for c in reversed(self.coeffs):
            acc = (acc * point + PolyF.constant(self.field, c)) % modulus
        return acc


def gcd(a: PolyF, b: PolyF) -> PolyF:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: PolyF, b: PolyF) -> tuple[PolyF, PolyF, PolyF]:
    """``(d, u, v)`` with ``u*a + v*b = d`` and ``d`` the monic gcd."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = PolyF.one(f), PolyF.zero(f)
    t0, t1 = PolyF.zero(f), PolyF.one(f)
    while not r1.is_zero():
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    if r0.is_zero():
        return r0, s0, t0
    k = f.inv_l[r0.lead]
    return r0.scale(k), s0.scale(k), t0.scale(k)


def inverse_mod(a: PolyF, modulus: PolyF) -> PolyF:
    d, u, _ = xgcd(a % modulus, modulus)
    if d.degree != 0:
        raise PolynomialError(f"{a.pretty()} is not invertible modulo {modulus.pretty()}")
    return u % modulus


def cyclic_modulus(field: TowerField) -> PolyF:
    """``x**(q^m-1) - 1``."""
    return PolyF.monomial(field, field.order) - PolyF.one(field)


def inverse_mod_cyclic(g: PolyF, field: TowerField | None = None) -> PolyF:
    """The ``h`` with ``deg h < q^m-1`` and ``h*g = 1 mod x^(q^m-1) - 1``.

    Requires ``g`` to have no root in the multiplicative group of E.
    """
    field = field or g.field
    modulus = cyclic_modulus(field)
    d, u, _ = xgcd(g % modulus, modulus)
    if d.degree != 0:
        raise PolynomialError(f"{g.pretty()} has a root in GF({field.q}^{field.m})*")
    return u % modulus


def powmod(base: PolyF, exponent: int, modulus: PolyF) -> PolyF:
    result = PolyF.one(base.field) % modulus
    b = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * b) % modulus
        b = (b * b) % modulus
        exponent >>= 1
    return result


def is_irreducible(a: PolyF) -> bool:
    """Ben-Or test: no factor of degree i for ``i <= deg/2``."""
    n = a.degree
    if n < 1:
        return False
    if n == 1:
        return True
    if a[0] == 0:
        return False
    f = a.field
    x = PolyF.x(f)
    power = x
    for _ in range(1, n // 2 + 1):
        power = powmod(power, f.q, a)
        if gcd(a, power - x).degree != 0:
            return False
    return True


def _monic_of_degree(field: TowerField, degree: int) -> Iterator[PolyF]:
    q = field.q
    for value in range(q**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(value % q)
            value //= q
        yield PolyF(field, coeffs + [1])


def enumerate_irreducible(degree: int, field: TowerField) -> Iterator[PolyF]:
    """Monic irreducible polynomials of ``degree`` over F.

    Order: by the coefficient vector read as a base-q integer with the
    constant term least significant.
    """
    if degree < 1:
        raise PolynomialError("degree must be positive")
    for poly in _monic_of_degree(field, degree):
        if is_irreducible(poly):
            yield poly


def count_irreducible(q: int, degree: int) -> int:
    """Number of monic irreducible polynomials of ``degree`` over GF(q)."""
    return sum(mobius(e) * q ** (degree // e) for e in divisors(degree)) // degree


def eval_at_inverse_mod(a: PolyF, modulus: PolyF) -> PolyF:
    """``a(1/x)`` reduced modulo ``modulus``; needs ``modulus(0) != 0``."""
    if modulus.degree < 1 or modulus[0] == 0:
        raise PolynomialError("x is not invertible modulo the given polynomial")
    x_inv = inverse_mod(PolyF.x(a.field), modulus)
    return a.compose_mod(x_inv, modulus)


def product(polys: Sequence[PolyF], field: TowerField) -> PolyF:
    out = PolyF.one(field)
    for p in polys:
        out = out * p
    return out
