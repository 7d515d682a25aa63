"""Input validation helpers for the estimator-facing numeric entry points."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ContractViolation


def as_float_matrix(X, *, name: str = "X", min_rows: int = 0) -> np.ndarray:
    """Coerce to a 2D float64 array and require finite cells."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2:
        raise ContractViolation(f"{name} must be a 2D matrix, got ndim={arr.ndim}")
    if arr.shape[0] < min_rows:
        raise ContractViolation(
            f"{name} needs at least {min_rows} rows, got {arr.shape[0]}"
        )
    if arr.size and not np.all(np.isfinite(arr)):
        bad = np.argwhere(~np.isfinite(arr))[0]
        raise ContractViolation(
            f"{name} contains a non-finite value",
            location={"row": int(bad[0]), "column": int(bad[1])},
        )
    return arr


def as_square_matrix(D, *, name: str = "D") -> np.ndarray:
    arr = as_float_matrix(D, name=name)
    if arr.shape[0] != arr.shape[1]:
        raise ContractViolation(f"{name} must be square, got shape {arr.shape}")
    return arr


def as_vector(p, *, name: str = "p") -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1:
        raise ContractViolation(f"{name} must be a 1D vector, got ndim={arr.ndim}")
    return arr


def check_dims(dims: Iterable[int] | None, n_cols: int) -> tuple[int, ...]:
    """Normalize a dimension index set: default to all, sort, dedupe, bound-check.

    An explicitly empty set is a contract violation everywhere it is accepted.
    """
    if dims is None:
        if n_cols == 0:
            raise ContractViolation("dimension set is empty (matrix has no columns)")
        return tuple(range(n_cols))
    normalized = sorted({int(d) for d in dims})
    if not normalized:
        raise ContractViolation("dimension set must be non-empty")
    if normalized[0] < 0 or normalized[-1] >= n_cols:
        raise ContractViolation(
            f"dimension indices must lie in [0, {n_cols}), got {normalized}"
        )
    return tuple(normalized)


def check_fitted(estimator, attributes: Sequence[str]) -> None:
    missing = [a for a in attributes if not hasattr(estimator, a)]
    if missing:
        raise ContractViolation(
            f"{type(estimator).__name__} is not fitted (missing {', '.join(missing)})"
        )
