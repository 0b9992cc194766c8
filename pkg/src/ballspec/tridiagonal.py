"""Symmetric tridiagonal eigenvalues via Sturm-count bisection.

All routines take the *squared* off-diagonal entries.  Callers in this
package have those squares exactly (small integers, or integers over 4),
so the Sturm recurrence never touches an inexact square root.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

_SAFMIN = 2.2250738585072014e-308


def count_below(diag: Sequence[float], off_sq: Sequence[float], x: float) -> int:
    """Number of eigenvalues strictly below ``x``.

    Standard Sturm sign count on the sequence of leading-principal-minor
    ratios, with the LAPACK-style pivot floor to survive exact zeros.
    """
    pivmin = _SAFMIN * max(1.0, max(off_sq, default=1.0))
    q = diag[0] - x
    if abs(q) <= pivmin:
        q = -pivmin
    count = 1 if q < 0.0 else 0
    for d, e2 in zip(diag[1:], off_sq):
        q = d - x - e2 / q
        if abs(q) <= pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def _gershgorin(diag: Sequence[float], off_sq: Sequence[float]) -> tuple[float, float]:
    m = len(diag)
    off = [math.sqrt(v) for v in off_sq]
    lo = math.inf
    hi = -math.inf
    for i in range(m):
        spread = (off[i - 1] if i > 0 else 0.0) + (off[i] if i < m - 1 else 0.0)
        lo = min(lo, diag[i] - spread)
        hi = max(hi, diag[i] + spread)
    pad = 1e-10 * max(1.0, abs(lo), abs(hi))
    return lo - pad, hi + pad


def eigenvalue_k(
    diag: Sequence[float],
    off_sq: Sequence[float],
    k: int,
    tol: float = 1e-12,
) -> tuple[float, float]:
    """k-th smallest eigenvalue (0-based) with a certified half-width.

    Bisection keeps the invariant count(lo) <= k < count(hi); the returned
    half-width is the final bracket radius plus a few ulps of slop for the
    floating-point Sturm recurrence itself.
    """
    m = len(diag)
    if not 0 <= k < m:
        raise ValueError(f"eigenvalue index {k} out of range for dimension {m}")
    if m == 1:
        return float(diag[0]), 0.0
    lo, hi = _gershgorin(diag, off_sq)
    while hi - lo > 2.0 * tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # hit floating-point resolution
        if count_below(diag, off_sq, mid) >= k + 1:
            hi = mid
        else:
            lo = mid
    value = 0.5 * (lo + hi)
    radius = 0.5 * (hi - lo) + 4.0 * math.ulp(max(1.0, abs(value)))
    return value, radius


def eigenvalues_all(
    diag: Sequence[float],
    off_sq: Sequence[float],
    tol: float = 1e-12,
) -> tuple[list[float], list[float]]:
    """All eigenvalues ascending, each with its certified half-width."""
    values = []
    radii = []
    for k in range(len(diag)):
        v, r = eigenvalue_k(diag, off_sq, k, tol)
        values.append(v)
        radii.append(r)
    return values, radii


def eigenvector(diag: Sequence[float], off: Sequence[float], lam: float) -> np.ndarray:
    """Unit eigenvector for a precomputed eigenvalue, by inverse iteration.

    Two iterations from e_1 with a slightly perturbed shift; e_1 is never
    orthogonal to the target since eigenvectors of an unreduced tridiagonal
    have a nonzero first coordinate.  Dense solves are fine at the tiny
    dimensions used here.
    """
    m = len(diag)
    if m == 1:
        return np.ones(1)
    a = np.diag(np.asarray(diag, dtype=float))
    offa = np.asarray(off, dtype=float)
    a += np.diag(offa, 1) + np.diag(offa, -1)
    scale = max(1.0, float(np.abs(a).max()))
    shift = lam + 1e-13 * scale
    v = np.zeros(m)
    v[0] = 1.0
    for _ in range(2):
        try:
            w = np.linalg.solve(a - shift * np.eye(m), v)
        except np.linalg.LinAlgError:
            shift += 1e-12 * scale
            w = np.linalg.solve(a - shift * np.eye(m), v)
        v = w / np.linalg.norm(w)
    residual = float(np.linalg.norm(a @ v - lam * v))
    if residual > 1e-8 * scale:
        raise ArithmeticError(
            f"inverse iteration failed to converge: residual {residual:.3e}"
        )
    return v
