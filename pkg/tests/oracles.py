"""Independent brute-force reference implementations used as test oracles.

Everything here derives straight from the definitions (all-pairs scans,
literal lattice enumeration, set algebra) and shares no code with the
production paths it checks.
"""

from __future__ import annotations

import numpy as np


def dominates_literal(p, q, dims) -> bool:
    """Definition-level dominance check with plain Python loops."""
    ge_all = all(p[d] >= q[d] for d in dims)
    gt_any = any(p[d] > q[d] for d in dims)
    return ge_all and gt_any


def full_dominance_matrix(V: np.ndarray) -> np.ndarray:
    """dom[i, j] = row i dominates row j, over all columns of V."""
    ge = (V[:, None, :] >= V[None, :, :]).all(axis=2)
    gt = (V[:, None, :] > V[None, :, :]).any(axis=2)
    return ge & gt


def brute_skyline(V: np.ndarray):
    """All-pairs skyline: (mask, scores, dominators) straight from the definition.

    Scores count only dominated non-skyline rows; dominators[j] lists the
    skyline rows dominating j (empty for skyline rows).
    """
    dom = full_dominance_matrix(V)
    mask = ~dom.any(axis=0)
    n = V.shape[0]
    scores = np.zeros(n, dtype=int)
    dominators = [[] for _ in range(n)]
    for i in range(n):
        if mask[i]:
            scores[i] = int((dom[i] & ~mask).sum())
    for j in range(n):
        if not mask[j]:
            dominators[j] = [i for i in range(n) if mask[i] and dom[i, j]]
    return mask, scores, dominators


def brute_subspace_member(V: np.ndarray, p: int, dims) -> bool:
    """Is row p's projection onto dims undominated? Literal scan."""
    for q in range(V.shape[0]):
        if q != p and dominates_literal(V[q], V[p], dims):
            return False
    return True


def mask_dims(mask: int):
    return [d for d in range(mask.bit_length()) if mask >> d & 1]


def brute_minimal_decisive(V: np.ndarray, p: int, m: int) -> list[tuple[int, ...]]:
    """Enumerate every (B, B') pair literally; keep inclusion-minimal decisive B."""
    masks = range(1, 1 << m)
    member = {B: brute_subspace_member(V, p, mask_dims(B)) for B in masks}
    decisive = {
        B for B in masks if all(member[Bp] for Bp in masks if Bp & B == B)
    }
    minimal = [
        B
        for B in decisive
        if not any(C != B and C & B == C and C in decisive for C in decisive)
    ]
    out = [tuple(mask_dims(B)) for B in minimal]
    out.sort(key=lambda dims: (len(dims), dims))
    return out


def brute_partition(dominated_by: dict[str, set[str]], order: list[str]):
    """Set-algebra partition of the union by exact dominator subset."""
    selected = list(dominated_by)
    union = set().union(*dominated_by.values())
    cells: dict[tuple[str, ...], list[str]] = {}
    for q in sorted(union, key=order.index):
        key = tuple(pid for pid in selected if q in dominated_by[pid])
        cells.setdefault(key, []).append(q)
    return cells, len(union)


def random_raw(rng: np.random.Generator, n: int, m: int, flavor: str) -> np.ndarray:
    """Raw value matrices with the classic skyline workload shapes."""
    if flavor == "independent":
        return rng.random((n, m))
    if flavor == "correlated":
        base = rng.random(n)
        return base[:, None] + rng.normal(0.0, 0.1, (n, m))
    if flavor == "anticorrelated":
        base = rng.random(n)
        cols = [base if j % 2 == 0 else 1.0 - base for j in range(m)]
        return np.column_stack(cols) + rng.normal(0.0, 0.05, (n, m))
    if flavor == "discrete":
        return rng.integers(0, 5, (n, m)).astype(float)
    raise ValueError(flavor)


FLAVORS = ("independent", "correlated", "anticorrelated", "discrete")
