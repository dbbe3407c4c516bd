"""Bounded-distance decoding up to degree-weight floor(t/2).

Pipeline: syndromes, the minimal error-locator ``lam`` from the key equation
``S(x) = omega(x)/lam(x) mod x^t``, the error support read off by dividing
``lam`` by the orbit minimal polynomials ``p_l``, then the error values as
residues modulo each ``p_l``.  No root search over E is performed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

import numpy as np

from .code import CodeSpec, degree_weight, syndromes
from .exceptions import DecodeFailure
from .galois import TowerField
from .orbits import LocationSet, Orbit
from .polyring import PolyF, eval_at_inverse_mod, gcd, inverse_mod, product


@dataclass(frozen=True)
class KeyEquationSolution:
    lam: PolyF
    omega: PolyF

    @property
    def degree(self) -> int:
        return self.lam.degree


@dataclass
class ErrorWord:
    support: tuple[Orbit, ...]
    values: dict[int, int]
    word: np.ndarray

    @property
    def degree_weight(self) -> int:
        return sum(o.size for o in self.support)

    @property
    def reps(self) -> list[int]:
        return [o.rep for o in self.support]


@dataclass
class DecodeResult:
    codeword: np.ndarray
    error: ErrorWord
    syndromes: np.ndarray
    solution: Optional[KeyEquationSolution] = dc_field(default=None)


class OrbitMinPolyTable:
    """``p_l``: minimal polynomial over F of ``beta^(-rep(l))``, per orbit.

    ``lookup`` maps a monic coefficient tuple back to the orbit index.
    """

    def __init__(self, field: TowerField, locations: LocationSet):
        self.field = field
        self.locations = locations
        self.polys: list[PolyF] = []
        for orbit in locations:
            self.polys.append(field.minimal_polynomial(field.element(-orbit.rep)))
        self._reverse = {p.coeffs: i for i, p in enumerate(self.polys)}

    def __getitem__(self, i: int) -> PolyF:
        return self.polys[i]

    def __len__(self):
        return len(self.polys)

    def lookup(self, poly: PolyF) -> Optional[int]:
        return self._reverse.get(poly.monic().coeffs)


def build_min_poly_table(field: TowerField, locations: LocationSet) -> OrbitMinPolyTable:
    return OrbitMinPolyTable(field, locations)


def berlekamp_massey(field: TowerField, seq) -> tuple[PolyF, int]:
    """Shortest LFSR generating ``seq``: ``(connection, length)`` with
    ``connection(0) = 1``."""
    add, mul, neg, inv = field.add_l, field.mul_l, field.neg_l, field.inv_l
    s = [int(x) for x in seq]
    C = [1]
    B = [1]
    L = 0
    gap = 1
    b = 1
    for n in range(len(s)):
        d = s[n]
        for i in range(1, L + 1):
            if i < len(C):
                d = add[d][mul[C[i]][s[n - i]]]
        if d == 0:
            gap += 1
            continue
        coef = neg[mul[d][inv[b]]]
        T = list(C)
        need = len(B) + gap
        if len(C) < need:
            C.extend([0] * (need - len(C)))
        for i, y in enumerate(B):
            C[i + gap] = add[C[i + gap]][mul[coef][y]]
        if 2 * L <= n:
            L = n + 1 - L
            B = T
            b = d
            gap = 1
        else:
            gap += 1
    return PolyF(field, C), L


def solve_key_equation(field: TowerField, S) -> KeyEquationSolution:
    """Minimal ``lam`` with ``lam(0) = 1`` and ``omega = lam*S mod x^t``.

    Raises DecodeFailure when ``deg omega > deg lam``.
    """
    t = len(S)
    lam, _ = berlekamp_massey(field, S)
    omega = (lam * PolyF(field, S)).truncate(t)
    if omega.degree > lam.degree:
        raise DecodeFailure(
            "key_equation", f"deg omega = {omega.degree} exceeds deg lambda = {lam.degree}"
        )
    return KeyEquationSolution(lam, omega)


def locate_errors(sol: KeyEquationSolution, table: OrbitMinPolyTable) -> tuple[int, ...]:
    """Indices of the orbits whose ``p_l`` divides ``lam``.

    The hits must multiply out to the monic ``lam`` exactly; anything else
    (a leftover factor, a repeated factor) is a decode failure.
    """
    lam = sol.lam.monic()
    deg = lam.degree
    if deg == 0:
        return ()
    direct = table.lookup(lam)
    if direct is not None:
        return (direct,)
    hits = []
    for i, orbit in enumerate(table.locations):
        if orbit.size <= deg and table[i].divides(lam):
            hits.append(i)
    total = sum(table.locations[i].size for i in hits)
    if total != deg or product([table[i] for i in hits], table.field) != lam:
        raise DecodeFailure(
            "locate", "error locator does not split into distinct orbit polynomials"
        )
    return tuple(hits)


def error_values(
    sol: KeyEquationSolution, support, spec: CodeSpec, table: OrbitMinPolyTable
) -> ErrorWord:
    """Error value at each located orbit, as a residue modulo ``p_l``.

    The located product ``lam* = prod p_l`` is monic while ``lam(0) = 1``,
    so ``lam* = c*lam`` with ``c = lam*(0)`` and ``omega`` is rescaled by
    ``c`` to match.
    """
    f = spec.field
    word = np.zeros(spec.length, dtype=np.int64)
    if not support:
        return ErrorWord((), {}, word)
    polys = [table[i] for i in support]
    c = product(polys, f)[0]
    omega = sol.omega.scale(c)
    x = PolyF.x(f)
    values = {}
    for i in support:
        p_l = table[i]
        others = product([table[u] for u in support if u != i], f)
        A = (x * eval_at_inverse_mod(spec.rho, p_l) * p_l.derivative() * others) % p_l
        if gcd(A, p_l).degree != 0:
            raise DecodeFailure("values", f"denominator not invertible at orbit {table.locations[i].rep}")
        e = (-(omega * inverse_mod(A, p_l))) % p_l
        if e.degree != 0:
            raise DecodeFailure(
                "values", f"residue at orbit {table.locations[i].rep} is not a nonzero constant"
            )
        word[i] = e[0]
        values[table.locations[i].rep] = e[0]
    return ErrorWord(tuple(table.locations[i] for i in support), values, word)


def decode(spec: CodeSpec, H: np.ndarray, table: OrbitMinPolyTable, received) -> DecodeResult:
    """Correct any error of degree-weight at most ``t // 2``.

    Raises DecodeFailure (with the failing stage) when the received word is
    not within that radius of a codeword by this decoder's checks.
    """
    f = spec.field
    r = np.asarray(received, dtype=np.int64)
    S = syndromes(spec, H, r)
    if not S.any():
        return DecodeResult(r.copy(), ErrorWord((), {}, np.zeros_like(r)), S)
    sol = solve_key_equation(f, S)
    radius = spec.t // 2
    if sol.degree > radius:
        raise DecodeFailure("key_equation", f"deg lambda = {sol.degree} exceeds radius {radius}")
    support = locate_errors(sol, table)
    err = error_values(sol, support, spec, table)
    codeword = f.f_sub[r, err.word]
    if syndromes(spec, H, codeword).any() or degree_weight(spec.locations, err.word) > radius:
        raise DecodeFailure("verification", "corrected word is not a codeword within the radius")
    return DecodeResult(codeword, err, S, sol)
