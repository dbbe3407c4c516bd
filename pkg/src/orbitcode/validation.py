"""Input validation for symbol arrays."""

import numpy as np
from sklearn.utils import check_array

from .exceptions import CodeSpecError


def check_symbols(X, q, n_columns=None, name="X"):
    """Validate a 2-D array of F-symbols.

    Parameters
    ----------
    X : array-like of shape (n_samples, n_columns)
        Integer symbols in ``0..q-1``.
    q : int
        Size of F.
    n_columns : int, optional
        Required row length.
    name : str
        Used in error messages.

    Returns
    -------
    ndarray of int64
    """
    raw = np.asarray(X)
    if raw.dtype.kind == "f" and raw.size and not np.all(np.mod(raw, 1) == 0):
        raise CodeSpecError(f"{name} must contain integer symbols")
    X = check_array(X, dtype=np.int64, ensure_2d=True, ensure_min_features=0,
                    input_name=name)
    if n_columns is not None and X.shape[1] != n_columns:
        raise CodeSpecError(f"{name} has {X.shape[1]} columns, expected {n_columns}")
    if X.size and (X.min() < 0 or X.max() >= q):
        raise CodeSpecError(f"{name} contains symbols outside 0..{q - 1}")
    return X


def check_word(x, q, length, name="word"):
    """Validate a single 1-D word; returns an int64 array."""
    arr = np.asarray(x)
    if arr.ndim != 1:
        raise CodeSpecError(f"{name} must be one-dimensional")
    return check_symbols(arr.reshape(1, -1), q, length, name)[0]
