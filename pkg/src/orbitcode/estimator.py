"""Estimator-style front end: ``fit`` builds the code, ``transform`` encodes,
``predict`` decodes."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .code import (
    CodeSpec,
    build_check_matrix_direct,
    build_check_matrix_lfsr,
    f_matmul,
    generator_matrix,
    syndromes,
)
from .decoder import DecodeResult, build_min_poly_table, decode
from .exceptions import CodeSpecError, DecodeFailure
from .galois import DEFAULT_TABLE_LIMIT, FieldParams, build_tower
from .orbits import enumerate_orbits
from .polyring import PolyF
from .validation import check_symbols, check_word


class OrbitCode(TransformerMixin, BaseEstimator):
    """The code C(rho, t) over the orbits of Z/(q^m - 1), q = p^k.

    Parameters
    ----------
    p, k, m : int
        Field parameters; ``q = p**k`` and ``gcd(m, q) == 1``.
    t : int
        Number of check rows; degree-weight errors up to ``t // 2`` are
        corrected.
    rho : str, sequence of int or None
        The polynomial rho over F as F-symbols low-to-high (``"1,0,2"`` or
        ``[1, 0, 2]``).  ``None`` means the constant 1.
    check_rho : bool
        Refuse a rho vanishing somewhere on the multiplicative group of
        GF(q^m).
    fieldpoly : sequence of int or None
        Override for the defining polynomial of GF(q^m) over GF(p).
    method : {"direct", "lfsr"}
        How the check matrix is computed.  Both give the same matrix.
    table_limit : int
        Ceiling on ``q^m - 1``.

    Attributes
    ----------
    field_ : TowerField
    spec_ : CodeSpec
    check_matrix_ : ndarray of shape (t, n_locations_)
    generator_ : ndarray of shape (dimension_, n_locations_)
    info_columns_ : list of int
        Coordinates that carry the message in encoded words.
    rank_, dimension_, n_locations_ : int
    min_poly_table_ : OrbitMinPolyTable
    """

    def __init__(self, p=2, k=1, m=3, t=2, rho=None, check_rho=True, fieldpoly=None,
                 method="direct", table_limit=DEFAULT_TABLE_LIMIT):
        self.p = p
        self.k = k
        self.m = m
        self.t = t
        self.rho = rho
        self.check_rho = check_rho
        self.fieldpoly = fieldpoly
        self.method = method
        self.table_limit = table_limit

    def _rho_poly(self, field):
        if self.rho is None:
            return PolyF.one(field)
        if isinstance(self.rho, PolyF):
            return PolyF(field, self.rho.coeffs)
        if isinstance(self.rho, str):
            return PolyF.parse(field, self.rho)
        return PolyF(field, self.rho)

    def fit(self, X=None, y=None):
        """Build field, location set, check matrix, generator and decoder
        tables.  ``X`` and ``y`` are ignored."""
        if self.method not in ("direct", "lfsr"):
            raise CodeSpecError(f"unknown method {self.method!r}")
        params = FieldParams(self.p, self.k, self.m, table_limit=self.table_limit)
        self.field_ = build_tower(params, self.fieldpoly)
        locations = enumerate_orbits(self.field_)
        self.spec_ = CodeSpec(self.field_, locations, self.t, self._rho_poly(self.field_),
                              self.check_rho)
        if self.method == "direct":
            self.check_matrix_ = build_check_matrix_direct(self.spec_)
        else:
            self.check_matrix_ = build_check_matrix_lfsr(self.spec_)
        self.rank_, self.generator_, self.info_columns_ = generator_matrix(
            self.spec_, self.check_matrix_
        )
        self.dimension_ = self.generator_.shape[0]
        self.n_locations_ = len(locations)
        self.min_poly_table_ = build_min_poly_table(self.field_, locations)
        return self

    @property
    def locations_(self):
        return self.spec_.locations

    @property
    def q_(self):
        return self.field_.q

    def transform(self, X):
        """Encode rows of messages (length ``dimension_``) into codewords."""
        check_is_fitted(self, "generator_")
        X = check_symbols(X, self.q_, self.dimension_, "messages")
        return f_matmul(self.field_, X, self.generator_)

    def inverse_transform(self, X):
        """Recover messages from codewords."""
        check_is_fitted(self, "generator_")
        X = check_symbols(X, self.q_, self.n_locations_, "codewords")
        if self.syndromes(X).any():
            raise CodeSpecError("inverse_transform needs codewords (nonzero syndrome)")
        return X[:, self.info_columns_]

    def syndromes(self, X):
        check_is_fitted(self, "check_matrix_")
        X = check_symbols(X, self.q_, self.n_locations_, "words")
        return syndromes(self.spec_, self.check_matrix_, X)

    def decode(self, word) -> DecodeResult:
        """Decode one received word; raises DecodeFailure when uncorrectable."""
        check_is_fitted(self, "min_poly_table_")
        r = check_word(word, self.q_, self.n_locations_, "received word")
        return decode(self.spec_, self.check_matrix_, self.min_poly_table_, r)

    def predict(self, X):
        """Corrected codewords for each received row (fails closed)."""
        check_is_fitted(self, "min_poly_table_")
        X = check_symbols(X, self.q_, self.n_locations_, "received words")
        return np.vstack([self.decode(row).codeword for row in X]) if len(X) else X.copy()

    def score(self, X, y):
        """Fraction of rows of ``X`` decoded to the matching row of ``y``;
        uncorrectable rows count as misses."""
        X = check_symbols(X, self.q_, self.n_locations_, "received words")
        y = check_symbols(y, self.q_, self.n_locations_, "codewords")
        hits = 0
        for row, target in zip(X, y):
            try:
                hits += bool(np.array_equal(self.decode(row).codeword, target))
            except DecodeFailure:
                pass
        return hits / len(X) if len(X) else 0.0
