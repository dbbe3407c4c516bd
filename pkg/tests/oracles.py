"""Slow, independent reference computations used to check the library.

Nothing here imports orbitcode; elements of GF(p^D) are coefficient lists
modulo a defining polynomial, multiplied out by schoolbook arithmetic.
"""

import itertools


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def pmod(a, mod, p):
    a = _trim(a)
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) >= len(mod):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(mod)
        for i, m in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * m) % p
        a = _trim(a)
    return a


def padd(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x + y) % p for x, y in zip(a, b)])


def psub(a, b, p):
    return padd(a, [(-y) % p for y in b], p)


def order_of_x(poly, p):
    """Multiplicative order of x modulo poly (None if x is not a unit)."""
    if poly[0] % p == 0:
        return None
    cur = [1]
    limit = p ** (len(poly) - 1)
    for k in range(1, limit):
        cur = pmod(pmul(cur, [0, 1], p), poly, p)
        if cur == [1]:
            return k
    return None


def smallest_primitive(p, degree):
    """Exhaustive scan of monic polynomials ordered by sum(c_i * p^i)."""
    for lower in range(p**degree):
        coeffs = [(lower // p**i) % p for i in range(degree)] + [1]
        if order_of_x(coeffs, p) == p**degree - 1:
            return tuple(coeffs)
    return None


class RefField:
    """GF(q^m) as GF(p)[x]/(P); elements are trimmed coefficient lists."""

    def __init__(self, p, k, m, poly=None):
        self.p, self.k, self.m = p, k, m
        self.q = p**k
        self.D = k * m
        self.P = list(poly) if poly is not None else list(smallest_primitive(p, self.D))
        self.N = self.q**m - 1
        self.n = self.N // (self.q - 1)

    def beta_pow(self, e):
        e %= self.N
        cur = [1]
        base = [0, 1]
        while e:
            if e & 1:
                cur = pmod(pmul(cur, base, self.p), self.P, self.p)
            base = pmod(pmul(base, base, self.p), self.P, self.p)
            e >>= 1
        return cur

    def mul(self, a, b):
        return pmod(pmul(a, b, self.p), self.P, self.p)

    def add(self, a, b):
        return padd(a, b, self.p)

    def sub(self, a, b):
        return psub(a, b, self.p)

    def power(self, a, e):
        cur = [1]
        for _ in range(e):
            cur = self.mul(cur, a)
        return cur

    def log(self, a):
        """Exponent of a nonzero element by linear search."""
        cur = [1]
        for e in range(self.N):
            if cur == a:
                return e
            cur = self.mul(cur, [0, 1])
        raise ValueError("zero has no logarithm")

    def symbol_elem(self, s):
        return [] if s == 0 else self.beta_pow((s - 1) * self.n)

    def symbol_of(self, a):
        for s in range(self.q):
            if self.symbol_elem(s) == a:
                return s
        raise ValueError(f"{a} is not in GF(q)")

    def trace(self, a):
        acc = []
        x = a
        for _ in range(self.m):
            acc = self.add(acc, x)
            x = self.power(x, self.q)
        return acc

    def sym_add(self, a, b):
        return self.symbol_of(self.add(self.symbol_elem(a), self.symbol_elem(b)))

    def sym_mul(self, a, b):
        return self.symbol_of(self.mul(self.symbol_elem(a), self.symbol_elem(b)))

    def sym_neg(self, a):
        return self.symbol_of(self.sub([], self.symbol_elem(a)))

    def eval_sym_poly(self, coeffs, x):
        """Evaluate a polynomial with F-symbol coefficients at an element."""
        acc = []
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), self.symbol_elem(c))
        return acc

    def expand_linear_factors(self, roots):
        """Coefficients (elements of E) of prod (x - r), low-to-high."""
        poly = [[1]]
        for r in roots:
            shifted = [[]] + poly
            scaled = [self.mul(self.sub([], r), c) for c in poly] + [[]]
            poly = [self.add(a, b) for a, b in zip(shifted, scaled)]
        return poly

    def check_matrix(self, rho, t, orbits):
        """Power-sum definition of the check matrix, as symbols."""
        H = []
        for i in range(t):
            row = []
            for orbit in orbits:
                acc = []
                for j in orbit:
                    bj = self.beta_pow(j)
                    acc = self.add(acc, self.mul(self.eval_sym_poly(rho, bj), self.beta_pow(i * j)))
                row.append(self.symbol_of(acc))
            H.append(row)
        return H


def orbits_by_closure(q, m):
    n = q**m - 1
    seen = set()
    out = []
    for j in range(n):
        if j in seen:
            continue
        orb = {j}
        x = (j * q) % n
        while x not in orb:
            orb.add(x)
            x = (x * q) % n
        seen |= orb
        out.append(sorted(orb))
    return out


def all_words(q, length):
    return itertools.product(range(q), repeat=length)


def null_space_by_enumeration(ref, H, length):
    """Every word with zero syndrome, by exhaustive search."""
    out = []
    for w in all_words(ref.q, length):
        ok = True
        for row in H:
            acc = 0
            for a, b in zip(w, row):
                acc = ref.sym_add(acc, ref.sym_mul(a, b))
            if acc:
                ok = False
                break
        if ok:
            out.append(w)
    return out


def prime_poly_series_quotient(num, den, n, p):
    """First n coefficients of num/den over GF(p) (den[0] != 0)."""
    inv0 = pow(den[0], p - 2, p)
    out = []
    num = list(num) + [0] * n
    for i in range(n):
        c = (num[i] * inv0) % p
        out.append(c)
        for j, d in enumerate(den):
            if i + j < len(num):
                num[i + j] = (num[i + j] - c * d) % p
    return out


def monic_irreducibles_by_sieve(q_prime, degree):
    """Monic irreducible polynomials over a prime field GF(q_prime), as
    coefficient tuples, by removing all products of lower-degree monics."""
    p = q_prime
    monics = {d: [tuple([(v // p**i) % p for i in range(d)] + [1]) for v in range(p**d)]
              for d in range(1, degree + 1)}
    reducible = set()
    for d1 in range(1, degree // 2 + 1):
        d2 = degree - d1
        for a in monics[d1]:
            for b in monics[d2]:
                reducible.add(tuple(pmul(list(a), list(b), p)))
    return [c for c in monics[degree] if c not in reducible]
