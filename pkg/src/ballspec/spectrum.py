"""Closed-form spectra of weight-band induced subgraphs.

Every eigenvalue of the band adjacency arises from a zero-diagonal
symmetric tridiagonal block indexed by an origin weight t; the block for
t has squared off-diagonals (k-1)(n-2t-k+2) and contributes each of its
simple eigenvalues with multiplicity C(n,t) - C(n,t-1).  For a full ball
(r1 = 0) the block spectrum is also the affine image 2*roots - (n-2t) of
a Krawtchouk root set, and both routes are computed and cross-checked.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import krawtchouk, tridiagonal
from .errors import InvalidParameterError
from .hamming import DEFAULT_DENSE_LIMIT, build_graph, oracle_spectrum
from .krawtchouk import RootList, TRIDIAGONAL_EIGENSOLVE, first_root

DEFAULT_TOL = 1e-12
MERGE_EPS_SCALE = 1e-9
AMBIGUOUS_ZONE_FACTOR = 1000.0


class AmbiguousMergeWarning(UserWarning):
    """A cross-origin eigenvalue gap fell just above the merge threshold."""


def _binom(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def _validate_band(n: int, r1: int, r2: int) -> None:
    if n < 0 or not 0 <= r1 <= r2 <= n // 2:
        raise InvalidParameterError(
            f"radii must satisfy 0 <= r1 <= r2 <= n//2, got r1={r1}, r2={r2}, n={n}"
        )


def origin_multiplicity(n: int, t: int) -> int:
    """Eigenspace dimension contributed by origin weight t: C(n,t) - C(n,t-1)."""
    return _binom(n, t) - _binom(n, t - 1)


@dataclass(frozen=True)
class TridiagonalSym:
    """Zero-diagonal symmetric tridiagonal block for origin weight t.

    The squared off-diagonal entries are the exact integers
    (k-1)(n-2t-k+2) for k = t*-t+2 .. r2-t+1 where t* = max(t, r1); all are
    strictly positive, so the dim = r2-t*+1 eigenvalues are simple.
    """

    n: int
    r1: int
    r2: int
    t: int
    tstar: int
    dim: int
    offdiag_sq: tuple[int, ...]

    def offdiag(self) -> list[float]:
        return [math.sqrt(v) for v in self.offdiag_sq]

    def eigenvalues(self, tol: float = DEFAULT_TOL) -> RootList:
        """Certified eigenvalues, symmetrized about 0.

        A zero-diagonal tridiagonal spectrum is exactly symmetric under
        negation, so paired estimates are averaged and an odd dimension
        pins the middle eigenvalue to exactly 0.0.
        """
        if self.dim == 1:
            return RootList((0.0,), (0.0,), TRIDIAGONAL_EIGENSOLVE)
        diag = [0.0] * self.dim
        off_sq = [float(v) for v in self.offdiag_sq]
        values, radii = tridiagonal.eigenvalues_all(diag, off_sq, tol)
        m = self.dim
        sym_vals = [0.5 * (values[i] - values[m - 1 - i]) for i in range(m)]
        sym_radii = [max(radii[i], radii[m - 1 - i]) for i in range(m)]
        if m % 2 == 1:
            sym_vals[m // 2] = 0.0
        return RootList(tuple(sym_vals), tuple(sym_radii), TRIDIAGONAL_EIGENSOLVE)


def coupling_matrix(n: int, r1: int, r2: int, t: int) -> TridiagonalSym:
    _validate_band(n, r1, r2)
    if not 0 <= t <= r2:
        raise InvalidParameterError(f"need 0 <= t <= r2, got t={t}, r2={r2}")
    tstar = max(t, r1)
    dim = r2 - tstar + 1
    off_sq = tuple(
        (k - 1) * (n - 2 * t - k + 2) for k in range(tstar - t + 2, r2 - t + 2)
    )
    if len(off_sq) != dim - 1 or any(v <= 0 for v in off_sq):
        raise ArithmeticError(f"internal-error: bad coupling entries {off_sq}")
    return TridiagonalSym(n, r1, r2, t, tstar, dim, off_sq)


def lambda_set(n: int, r1: int, r2: int, t: int, tol: float = DEFAULT_TOL) -> RootList:
    """Eigenvalues contributed by origin weight t, ascending and certified.

    For r1 = 0 the same set must equal 2*R - (n-2t) where R are the roots of
    the degree r2-t+1 Krawtchouk polynomial over {0..n-2t}; when the exact
    coefficient path is available the two routes are cross-checked here.
    """
    block = coupling_matrix(n, r1, r2, t)
    out = block.eigenvalues(tol)
    reduced = n - 2 * t
    if r1 == 0 and 1 <= reduced <= krawtchouk.EXACT_COEFF_LIMIT:
        kr = krawtchouk.roots(krawtchouk.build(reduced, r2 - t + 1), tol)
        for v, rad, x, xrad in zip(out.values, out.radius, kr.values, kr.radius):
            affine = 2.0 * x - reduced
            if abs(v - affine) > rad + 2.0 * xrad + 1e-10:
                raise ArithmeticError(
                    f"internal-error: eigensolve/root paths disagree at t={t}: "
                    f"{v!r} vs {affine!r}"
                )
    return out


@dataclass(frozen=True)
class SpectrumLine:
    value: float
    multiplicity: int
    contributors: tuple[int, ...]


@dataclass(frozen=True)
class SpectrumTable:
    n: int
    r1: int
    r2: int
    total_dim: int
    lines: tuple[SpectrumLine, ...]

    def expanded(self) -> np.ndarray:
        """The full eigenvalue multiset, ascending."""
        return np.repeat(
            [line.value for line in self.lines],
            [line.multiplicity for line in self.lines],
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r1": self.r1,
            "r2": self.r2,
            "total_dim": self.total_dim,
            "lines": [
                {
                    "value": line.value,
                    "multiplicity": line.multiplicity,
                    "t": list(line.contributors),
                }
                for line in self.lines
            ],
        }

    def csv_lines(self) -> list[str]:
        out = ["value,multiplicity,t"]
        for line in self.lines:
            ts = ";".join(str(t) for t in line.contributors)
            out.append(f"{line.value!r},{line.multiplicity},{ts}")
        return out


def full_spectrum(
    n: int,
    r1: int,
    r2: int,
    tol: float = DEFAULT_TOL,
    merge_eps: float | None = None,
) -> SpectrumTable:
    """Assemble the complete spectrum with multiplicities and contributors.

    Eigenvalue 0 is recognized exactly (odd block dimension) and merged
    symbolically; other coincidences across origins are merged when closer
    than merge_eps, with a warning for gaps in the ambiguous zone just
    above the threshold.
    """
    _validate_band(n, r1, r2)
    if merge_eps is None:
        merge_eps = MERGE_EPS_SCALE * (n + 1)

    zero_contributors: list[int] = []
    zero_mult = 0
    nonzero: list[tuple[float, int]] = []  # (value, t)
    for t in range(r2 + 1):
        weight = origin_multiplicity(n, t)
        vals = lambda_set(n, r1, r2, t, tol)
        for v in vals.values:
            if v == 0.0:
                zero_contributors.append(t)
                zero_mult += weight
            else:
                nonzero.append((v, t))

    nonzero.sort()
    for (v1, t1), (v2, t2) in zip(nonzero, nonzero[1:]):
        gap = v2 - v1
        if t1 != t2 and merge_eps <= gap < AMBIGUOUS_ZONE_FACTOR * merge_eps:
            warnings.warn(
                f"eigenvalue gap {gap:.3e} between origins {t1} and {t2} lies in "
                f"the ambiguous merge zone for band ({n},{r1},{r2})",
                AmbiguousMergeWarning,
                stacklevel=2,
            )

    lines: list[SpectrumLine] = []
    i = 0
    while i < len(nonzero):
        j = i + 1
        while j < len(nonzero) and nonzero[j][0] - nonzero[j - 1][0] < merge_eps:
            j += 1
        cluster = nonzero[i:j]
        ts = [t for _, t in cluster]
        if len(set(ts)) != len(ts):
            raise ArithmeticError(
                "internal-error: merge threshold swallowed two eigenvalues "
                f"of the same origin in band ({n},{r1},{r2})"
            )
        value = sum(v for v, _ in cluster) / len(cluster)
        mult = sum(origin_multiplicity(n, t) for t in ts)
        lines.append(SpectrumLine(value, mult, tuple(sorted(ts))))
        i = j
    if zero_contributors:
        lines.append(SpectrumLine(0.0, zero_mult, tuple(sorted(zero_contributors))))
    lines.sort(key=lambda line: line.value)

    if any(a.value >= b.value for a, b in zip(lines, lines[1:])):
        raise ArithmeticError("internal-error: merged lines are not strictly increasing")
    total_dim = sum(_binom(n, i) for i in range(r1, r2 + 1))
    if sum(line.multiplicity for line in lines) != total_dim:
        raise ArithmeticError(
            f"internal-error: multiplicities sum to "
            f"{sum(line.multiplicity for line in lines)}, dimension is {total_dim}"
        )
    return SpectrumTable(n, r1, r2, total_dim, tuple(lines))


def max_eigenvalue(n: int, r: int, tol: float = DEFAULT_TOL) -> float:
    """Largest adjacency eigenvalue of the radius-r ball: n - 2 * first root."""
    if n < 0 or not 0 <= r <= n // 2:
        raise InvalidParameterError(f"need 0 <= r <= n//2, got r={r}, n={n}")
    return n - 2.0 * first_root(n, r + 1, tol)


@dataclass(frozen=True)
class VerifyReport:
    n: int
    r1: int
    r2: int
    tol: float
    vertex_count: int
    max_deviation: float
    multiplicities_ok: bool
    passed: bool

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"n={self.n} r1={self.r1} r2={self.r2} vertices={self.vertex_count} "
            f"max_deviation={self.max_deviation:.3e} "
            f"multiplicities={'ok' if self.multiplicities_ok else 'MISMATCH'} {status}"
        )


def verify_against_oracle(
    n: int,
    r1: int,
    r2: int,
    tol: float = 1e-8,
    dense_limit: int = DEFAULT_DENSE_LIMIT,
) -> VerifyReport:
    """Compare the closed-form table with the brute-force eigendecomposition.

    Predicted and oracle eigenvalues are paired greedily in ascending order;
    multiplicities are checked per clustered line.
    """
    table = full_spectrum(n, r1, r2)
    graph = build_graph(n, r1, r2, max_vertices=dense_limit)
    oracle = oracle_spectrum(graph, dense_limit=dense_limit)

    predicted = table.expanded()
    if len(predicted) != graph.vertex_count:
        return VerifyReport(
            n, r1, r2, tol, graph.vertex_count, math.inf, False, False
        )
    max_dev = float(np.abs(predicted - oracle.eigenvalues).max()) if len(predicted) else 0.0

    mult_ok = True
    pos = 0
    for line in table.lines:
        chunk = oracle.eigenvalues[pos : pos + line.multiplicity]
        pos += line.multiplicity
        if np.abs(chunk - line.value).max() > tol:
            mult_ok = False
    passed = max_dev <= tol and mult_ok
    return VerifyReport(n, r1, r2, tol, graph.vertex_count, max_dev, mult_ok, passed)
