"""The location set: orbits of Z/(q^m - 1) under multiplication by q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .exceptions import InternalInconsistency


@dataclass(frozen=True)
class Orbit:
    rep: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, j) -> bool:
        return j in self.members

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


class LocationSet:
    """Orbits sorted by canonical representative (the minimum member).

    This order is the coordinate order of every word and the column order of
    every check matrix.
    """

    def __init__(self, orbits: list[Orbit], modulus: int, q: int):
        self.orbits = tuple(orbits)
        self.modulus = modulus
        self.q = q
        index = np.empty(modulus, dtype=np.int64)
        for i, orb in enumerate(self.orbits):
            index[list(orb.members)] = i
        self._index = index
        self.sizes = np.array([o.size for o in self.orbits], dtype=np.int64)
        self.reps = [o.rep for o in self.orbits]

    def __len__(self):
        return len(self.orbits)

    def __iter__(self) -> Iterator[Orbit]:
        return iter(self.orbits)

    def __getitem__(self, i) -> Orbit:
        return self.orbits[i]

    @property
    def total(self) -> int:
        return len(self.orbits)

    def index_of(self, exponent: int) -> int:
        if not 0 <= exponent < self.modulus:
            raise ValueError(f"exponent {exponent} outside 0..{self.modulus - 1}")
        return int(self._index[exponent])

    def index_of_rep(self, rep: int) -> int:
        i = self.index_of(rep)
        if self.orbits[i].rep != rep:
            raise ValueError(f"{rep} is not a canonical orbit representative")
        return i

    def negated(self, i: int) -> int:
        """Index of the orbit ``{-j : j in orbits[i]}``."""
        return self.index_of((-self.orbits[i].rep) % self.modulus)


def enumerate_orbits(field) -> LocationSet:
    """Partition ``{0, ..., q^m-2}`` into orbits of ``j -> j*q``."""
    n = field.order
    q = field.q
    seen = bytearray(n)
    orbits = []
    for j in range(n):
        if seen[j]:
            continue
        members = []
        x = j
        while not seen[x]:
            seen[x] = 1
            members.append(x)
            x = (x * q) % n
        orbits.append(Orbit(rep=j, members=tuple(sorted(members))))
    return LocationSet(orbits, n, q)


def orbit_of(exponent: int, locations: LocationSet) -> Orbit:
    return locations[locations.index_of(exponent)]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def count_orbits_closed_form(q: int, m: int) -> int:
    """|L| from the Moebius sum over divisors of m.

    Each inner sum counts the units of exact orbit length d, so it must be
    divisible by d.
    """
    total = 0
    for d in divisors(m):
        inner = sum(mobius(e) * (q ** (d // e) - 1) for e in divisors(d))
        if inner % d:
            raise InternalInconsistency(f"inner sum {inner} not divisible by {d}")
        total += inner // d
    return total


@dataclass(frozen=True)
class OrbitBoundReport:
    count: int
    lower: Fraction
    lower_holds: bool
    upper_holds: bool

    @property
    def ok(self) -> bool:
        return self.lower_holds and self.upper_holds


def check_orbit_count_bounds(q: int, m: int, count: int | None = None) -> OrbitBoundReport:
    """Evaluate ``(q^m-1)/m <= |L| < (q^m-1)/m + (1-1/m) q^(m/2+1)`` exactly.

    The upper inequality is rearranged to ``A < (m-1) q sqrt(q^m)`` with
    ``A = m|L| - (q^m-1)`` and compared after squaring.
    """
    if count is None:
        count = count_orbits_closed_form(q, m)
    n = q**m - 1
    excess = m * count - n
    lower_holds = excess >= 0
    rhs_sq = (m - 1) ** 2 * q**2 * q**m
    upper_holds = excess < 0 or excess * excess < rhs_sq
    return OrbitBoundReport(count, Fraction(n, m), lower_holds, upper_holds)

