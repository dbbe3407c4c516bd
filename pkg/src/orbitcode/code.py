"""The code C(rho, t): check matrix, trace sequence, generator and encoding.

Words, messages and matrices are integer numpy arrays of F-symbols; word
coordinates follow the canonical orbit order of the location set.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .exceptions import CodeSpecError, InternalInconsistency
from .galois import TowerField
from .orbits import LocationSet, enumerate_orbits
from .polyring import PolyF


@dataclass(frozen=True)
class CodeSpec:
    """Parameters of one code.

    ``check_rho`` enforces ``rho(beta^j) != 0`` for every unit exponent j,
    which the degree lemma (and hence the distance guarantee) relies on.
    """

    field: TowerField
    locations: LocationSet
    t: int
    rho: PolyF
    check_rho: bool = True
    rho_values: tuple = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.field.order
        if not 1 <= self.t <= n - 1:
            raise CodeSpecError(f"t must satisfy 1 <= t <= q^m-2, got {self.t}")
        if self.rho.field is not self.field:
            raise CodeSpecError("rho is defined over a different field")
        if self.rho.is_zero():
            raise CodeSpecError("rho must be nonzero")
        values = tuple(self.rho.eval(self.field.element(j)) for j in range(n))
        object.__setattr__(self, "rho_values", values)
        if self.check_rho:
            bad = [j for j, v in enumerate(values) if v is None]
            if bad:
                raise CodeSpecError(
                    f"rho vanishes at beta^{bad[0]}; pass check_rho=False to allow "
                    "(the distance guarantee no longer applies)"
                )

    @classmethod
    def build(cls, field: TowerField, t: int, rho=None, check_rho: bool = True) -> "CodeSpec":
        if rho is None:
            rho = PolyF.one(field)
        elif not isinstance(rho, PolyF):
            rho = PolyF(field, rho)
        return cls(field, enumerate_orbits(field), t, rho, check_rho)

    @property
    def length(self) -> int:
        return len(self.locations)


def build_check_matrix_direct(spec: CodeSpec) -> np.ndarray:
    """``h[i, l] = sum over j in l of rho(beta^j) * beta^(i*j)``, as symbols."""
    f = spec.field
    H = np.zeros((spec.t, spec.length), dtype=np.int64)
    for col, orbit in enumerate(spec.locations):
        for i in range(spec.t):
            acc = None
            for j in orbit.members:
                acc = f.add(acc, f.mul(spec.rho_values[j], f.element(i * j)))
            if not f.in_subfield(acc):
                raise InternalInconsistency(f"h[{i}, {orbit.rep}] is not in GF({f.q})")
            H[i, col] = f.subfield_index(acc)
    return H


def build_trace_sequence(field: TowerField) -> np.ndarray:
    """One period of ``b_j = Tr(beta^j)``, generated by the LFSR of beta's
    minimal polynomial over F and checked against direct traces."""
    n, m = field.order, field.m
    add, mul, neg = field.add_l, field.mul_l, field.neg_l
    f = field.minimal_polynomial(field.beta)
    if f.degree != m:
        raise InternalInconsistency("minimal polynomial of beta must have degree m")
    direct = [field.subfield_index(field.trace(field.element(j))) for j in range(n)]
    b = direct[:m]
    taps = [neg[c] for c in f.coeffs[:m]]
    for j in range(m, n):
        acc = 0
        for i, c in enumerate(taps):
            acc = add[acc][mul[c][b[j - m + i]]]
        b.append(acc)
    if b != direct:
        raise InternalInconsistency("trace recurrence disagrees with direct traces")
    return np.asarray(b, dtype=np.int64)


def build_check_matrix_lfsr(spec: CodeSpec, trace=None, representative=None) -> np.ndarray:
    """Check matrix from the trace sequence:
    ``h[i, l] = (|l|/m) * sum_u rho_u * b[j*(i+u)]`` for any ``j`` in ``l``.

    ``representative`` maps an orbit to the ``j`` used; defaults to its
    minimum.  ``|l|/m`` is taken in GF(p) as the inverse of ``m/|l|``.
    """
    f = spec.field
    n, m = f.order, f.m
    b = build_trace_sequence(f) if trace is None else trace
    b = [int(x) for x in b]
    add, mul = f.add_l, f.mul_l
    terms = [(u, c) for u, c in enumerate(spec.rho.coeffs) if c]
    H = np.zeros((spec.t, spec.length), dtype=np.int64)
    for col, orbit in enumerate(spec.locations):
        j = orbit.rep if representative is None else representative(orbit)
        scalar = f.inv_l[f.prime_field_symbol(m // orbit.size)]
        for i in range(spec.t):
            acc = 0
            for u, c in terms:
                acc = add[acc][mul[c][b[(j * (i + u)) % n]]]
            H[i, col] = mul[scalar][acc]
    return H


# -- linear algebra over F ----------------------------------------------------------


def f_matmul(field: TowerField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product over F of symbol arrays (2-D x 2-D)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = field.f_add[out, field.f_mul[A[:, k][:, None], B[k][None, :]]]
    return out


def rref(field: TowerField, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F.

    Pivots are taken in the leftmost column that has one, using the first
    row (from the current row down) with a nonzero entry there.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = field.f_mul[field.f_inv[R[r, c]], R[r]]
        for i in range(rows):
            if i != r and R[i, c]:
                factor = field.f_neg[R[i, c]]
                R[i] = field.f_add[R[i], field.f_mul[factor, R[r]]]
        pivots.append(c)
        r += 1
    return R, pivots


def generator_matrix(spec: CodeSpec, H: np.ndarray) -> tuple[int, np.ndarray, list[int]]:
    """Null-space basis of ``H`` over F.

    Returns ``(rank, G, info_columns)``.  ``G`` has one row per free column
    of the reduced ``H``; row i has a 1 at ``info_columns[i]`` and zeros at
    the other free columns, so a codeword restricted to ``info_columns`` is
    its message.
    """
    f = spec.field
    R, pivots = rref(f, H)
    rank = len(pivots)
    n = H.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    G = np.zeros((len(free), n), dtype=np.int64)
    for i, c in enumerate(free):
        G[i, c] = 1
        for r, pc in enumerate(pivots):
            G[i, pc] = f.f_neg[R[r, c]]
    return rank, G, free


def encode(spec: CodeSpec, G: np.ndarray, message) -> np.ndarray:
    """Codeword ``message @ G`` over F."""
    msg = np.asarray(message, dtype=np.int64)
    if msg.ndim != 1 or msg.shape[0] != G.shape[0]:
        raise CodeSpecError(
            f"message length {msg.shape[-1] if msg.ndim else 0} != dimension {G.shape[0]}"
        )
    return f_matmul(spec.field, msg[None, :], G)[0]


def syndromes(spec: CodeSpec, H: np.ndarray, word) -> np.ndarray:
    """``S = r @ H.T`` over F."""
    r = np.asarray(word, dtype=np.int64)
    if r.shape[-1] != H.shape[1]:
        raise CodeSpecError(f"word length {r.shape[-1]} != |L| = {H.shape[1]}")
    if r.ndim == 1:
        return f_matmul(spec.field, r[None, :], H.T)[0]
    return f_matmul(spec.field, r, H.T)


def degree_weight(locations: LocationSet, word) -> int:
    """Sum of orbit sizes over the nonzero coordinates."""
    w = np.asarray(word)
    return int(locations.sizes[w != 0].sum())


def hamming_weight(word) -> int:
    return int(np.count_nonzero(np.asarray(word)))
