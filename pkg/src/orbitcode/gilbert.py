"""Goppa-style membership, degree-weight enumerators and the search for a
defining polynomial g whose code C(g^-1, t) has degree-distance above D."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional

import numpy as np

from .code import (
    CodeSpec,
    build_check_matrix_direct,
    degree_weight,
    f_matmul,
    generator_matrix,
)
from .exceptions import CodeSpecError, InternalInconsistency, PolynomialError
from .galois import TowerField, build_tower
from .orbits import LocationSet, enumerate_orbits
from .polyring import PolyF, enumerate_irreducible, gcd, inverse_mod_cyclic, product

BRUTE_FORCE_LIMIT = 2**24


class OrbitPolys:
    """Per-orbit ``P_l = prod over j in l of (x - beta^j)`` and ``P_l'``.

    ``P_l`` is the minimal polynomial of ``beta^rep(l)``, so it lies in F[x];
    the orbit's partial-fraction sum ``sum_j 1/(x - beta^j)`` is ``P_l'/P_l``.
    """

    def __init__(self, field: TowerField, locations: LocationSet):
        self.field = field
        self.locations = locations
        self.polys = [field.minimal_polynomial(field.element(o.rep)) for o in locations]
        self.derivs = [p.derivative() for p in self.polys]


def partial_fraction_numerator(c, field: TowerField, locations: LocationSet,
                               orbit_polys: Optional[OrbitPolys] = None) -> PolyF:
    """Numerator of ``sum_l c_l sum_{j in l} 1/(x - beta^j)`` over the
    denominator ``prod over the support of P_l``."""
    c = np.asarray(c, dtype=np.int64)
    support = np.nonzero(c)[0].tolist()
    if not support:
        raise CodeSpecError("partial-fraction numerator of the zero word is undefined")
    op = orbit_polys or OrbitPolys(field, locations)
    acc = PolyF.zero(field)
    for i in support:
        others = product([op.polys[u] for u in support if u != i], field)
        acc = acc + (op.derivs[i] * others).scale(int(c[i]))
    return acc


def goppa_membership(c, g: PolyF, field: TowerField, locations: LocationSet,
                     orbit_polys: Optional[OrbitPolys] = None) -> bool:
    """Whether ``sum_l c_l sum_{j in l} 1/(x - beta^j) = 0 mod g``.

    Equivalent to ``c`` lying in C(g^-1, t) with ``t = deg g``.
    """
    modulus = PolyF.monomial(field, field.order) - PolyF.one(field)
    if gcd(g, modulus).degree != 0:
        raise PolynomialError(f"{g.pretty()} has a root in GF({field.q}^{field.m})*")
    c = np.asarray(c, dtype=np.int64)
    if not c.any():
        return True
    return g.divides(partial_fraction_numerator(c, field, locations, orbit_polys))


def weight_enumerator(locations: LocationSet, q: int) -> list[int]:
    """``counts[d]`` = number of words of degree-weight d: the coefficients
    of ``prod_l (1 + (q-1) z^|l|)``."""
    counts = [1]
    for size in locations.sizes.tolist():
        new = counts + [0] * size
        for d, v in enumerate(counts):
            new[d + size] += (q - 1) * v
        counts = new
    return counts


def gilbert_target(q: int, t: int) -> int:
    """``q^t - q^(t/2) - 1`` with ``q^(t/2)`` rounded up when irrational."""
    qt = q**t
    root = math.isqrt(qt)
    if root * root < qt:
        root += 1
    return qt - root - 1


def bad_mass(counts: list[int], D: int) -> int:
    """``sum_{e=1}^{D} (e-1) * counts[e]``."""
    return sum((e - 1) * counts[e] for e in range(1, min(D, len(counts) - 1) + 1))


def compute_D(counts: list[int], q: int, t: int, m: Optional[int] = None) -> int:
    """Largest D with ``bad_mass(D) < q^t - q^(t/2) - 1``.

    The mass stops growing past the maximal degree-weight; D is then capped
    there (every nonzero word already has smaller degree-weight).
    """
    if t < 2:
        raise CodeSpecError("t must be at least 2")
    if m is not None and math.gcd(t, m) != 1:
        raise CodeSpecError(f"t={t} must be prime to m={m}")
    target = gilbert_target(q, t)
    top = len(counts) - 1
    D = 0
    while D < top and bad_mass(counts, D + 1) < target:
        D += 1
    if not bad_mass(counts, D) < target:
        raise InternalInconsistency("strict inequality fails at D")
    if D < top and not bad_mass(counts, D + 1) >= target:
        raise InternalInconsistency("closing inequality fails at D+1")
    return D


def words_up_to_degree(locations: LocationSet, q: int, D: int) -> Iterator[np.ndarray]:
    """All nonzero words of degree-weight at most D, orbit-subset by subset."""
    sizes = locations.sizes.tolist()
    n = len(sizes)

    def subsets(start, budget, chosen):
        for i in range(start, n):
            if sizes[i] <= budget:
                yield chosen + [i]
                yield from subsets(i + 1, budget - sizes[i], chosen + [i])

    for support in subsets(0, D, []):
        for values in itertools.product(range(1, q), repeat=len(support)):
            w = np.zeros(n, dtype=np.int64)
            w[support] = values
            yield w


@dataclass
class Candidate:
    g: PolyF
    bad_degrees: list[int]

    @property
    def ok(self) -> bool:
        return not self.bad_degrees

    def verdict(self) -> str:
        if self.ok:
            return f"g={self.g.to_string()} OK"
        return f"g={self.g.to_string()} bad_at_degree={self.bad_degrees[0]}"


@dataclass
class SearchReport:
    q: int
    m: int
    t: int
    D: int
    target: int
    tested: list[Candidate] = dc_field(default_factory=list)
    winner: Optional[PolyF] = None
    audit_degree: Optional[float] = None
    audit_hamming: Optional[float] = None
    bad_counts: dict[int, int] = dc_field(default_factory=dict)
    bad_bounds: dict[int, int] = dc_field(default_factory=dict)

    @property
    def meta_bound_holds(self) -> bool:
        return all(self.bad_counts.get(e, 0) <= b for e, b in self.bad_bounds.items())

    def to_text(self) -> str:
        lines = [
            "# orbitcode v1",
            f"q={self.q} m={self.m} t={self.t}",
            f"target={self.target}",
            f"D={self.D}",
        ]
        lines += [c.verdict() for c in self.tested]
        for e in sorted(self.bad_bounds):
            lines.append(f"bad_count[{e}]={self.bad_counts.get(e, 0)} bound={self.bad_bounds[e]}")
        lines.append(f"winner={self.winner.to_string() if self.winner is not None else 'none'}")
        lines.append(f"audit_min_degree={_fmt(self.audit_degree)}")
        lines.append(f"audit_min_hamming={_fmt(self.audit_hamming)}")
        return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    if x is None:
        return "skipped"
    return "inf" if x == math.inf else str(int(x))


def classify_candidate(g: PolyF, field: TowerField, locations: LocationSet, D: int,
                       words=None, orbit_polys=None) -> Candidate:
    """All degrees e <= D at which some nonzero word of C(g^-1, t) sits."""
    op = orbit_polys or OrbitPolys(field, locations)
    if words is None:
        words = list(words_up_to_degree(locations, field.q, D))
    bad = set()
    for w in words:
        e = degree_weight(locations, w)
        if e in bad:
            continue
        if goppa_membership(w, g, field, locations, op):
            bad.add(e)
    return Candidate(g, sorted(bad))


def _classify_worker(args):
    params, defining_poly, coeffs, D = args
    field = build_tower(params, defining_poly)
    locations = enumerate_orbits(field)
    return classify_candidate(PolyF(field, coeffs), field, locations, D).bad_degrees


def search_good_g(field: TowerField, locations: LocationSet, t: int, D: int,
                  exhaustive: bool = False, audit: bool = True, jobs: int = 1) -> SearchReport:
    """Scan monic irreducible g of degree t in lexicographic order and keep
    the first whose code has no nonzero word of degree-weight <= D.

    With ``exhaustive`` every candidate is classified, otherwise the scan
    stops at the first winner.  The number of candidates found bad at each
    degree e is checked against ``floor((e-1)/t) * |B_e|``.
    """
    m, q = field.m, field.q
    if t < 2 or math.gcd(t, m) != 1:
        raise CodeSpecError(f"t={t} must exceed 1 and be prime to m={m}")
    counts = weight_enumerator(locations, q)
    report = SearchReport(q=q, m=m, t=t, D=D, target=gilbert_target(q, t))
    report.bad_bounds = {e: ((e - 1) // t) * counts[e] for e in range(1, min(D, len(counts) - 1) + 1)}
    candidates = list(enumerate_irreducible(t, field))
    op = OrbitPolys(field, locations)
    words = list(words_up_to_degree(locations, q, D))

    if jobs > 1:
        payload = [(field.params, field.defining_poly, g.coeffs, D) for g in candidates]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = [Candidate(g, bad) for g, bad in zip(candidates, pool.map(_classify_worker, payload))]
    else:
        verdicts = None

    for idx, g in enumerate(candidates):
        cand = verdicts[idx] if verdicts is not None else classify_candidate(g, field, locations, D, words, op)
        report.tested.append(cand)
        for e in cand.bad_degrees:
            report.bad_counts[e] = report.bad_counts.get(e, 0) + 1
        if cand.ok and report.winner is None:
            report.winner = g
            if not exhaustive:
                break

    if not report.meta_bound_holds:
        raise InternalInconsistency("more bad candidates than the counting bound allows")
    if report.winner is None:
        if bad_mass(counts, D) < report.target:
            raise InternalInconsistency("no good g although the counting criterion holds")
        return report
    if audit:
        spec = CodeSpec.build(field, t, inverse_mod_cyclic(report.winner, field))
        H = build_check_matrix_direct(spec)
        report.audit_degree, report.audit_hamming = brute_force_min_weights(spec, H)
        if report.audit_degree <= D:
            raise InternalInconsistency("winner's code has a nonzero word of degree-weight <= D")
    return report


def brute_force_min_weights(spec: CodeSpec, H: np.ndarray, limit: int = BRUTE_FORCE_LIMIT):
    """``(min degree-weight, min Hamming weight)`` over nonzero codewords,
    by enumerating the whole code.  ``inf`` for the zero code."""
    _, G, _ = generator_matrix(spec, H)
    q = spec.field.q
    dim = G.shape[0]
    if dim == 0:
        return math.inf, math.inf
    if q**dim > limit:
        raise CodeSpecError(f"q^dim = {q**dim} exceeds the brute-force limit {limit}")
    msgs = np.array(list(itertools.product(range(q), repeat=dim))[1:], dtype=np.int64)
    words = f_matmul(spec.field, msgs, G)
    nz = words != 0
    degrees = (nz * spec.locations.sizes[None, :]).sum(axis=1)
    return int(degrees.min()), int(nz.sum(axis=1).min())


def brute_force_min_degree_weight(spec: CodeSpec, H: np.ndarray) -> float:
    return brute_force_min_weights(spec, H)[0]


def codewords(spec: CodeSpec, H: np.ndarray) -> np.ndarray:
    """Every codeword, zero first (for exhaustive audits)."""
    _, G, _ = generator_matrix(spec, H)
    q = spec.field.q
    dim = G.shape[0]
    if q**dim > BRUTE_FORCE_LIMIT:
        raise CodeSpecError("code too large to enumerate")
    msgs = np.array(list(itertools.product(range(q), repeat=dim)), dtype=np.int64).reshape(q**dim, dim)
    return f_matmul(spec.field, msgs, G)

