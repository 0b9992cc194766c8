"""Semi-symmetric bases, restricted adjacency blocks, explicit eigenfunctions.

Fix an origin mask y of weight t.  On each sphere of weight i >= max(t, r1)
there is a unique function, constant on the intersection classes
{x : |x & y| = c}, that equals 1 on supersets of y and is orthogonal to
every superset-indicator of a proper sub-mask of y.  These per-sphere
functions span an adjacency-invariant subspace on which the adjacency acts
as a small tridiagonal matrix with integer super-diagonal n-i+1 and
rational sub-diagonal (i-t+1)(n-t-i)/(n-i); conjugating by a diagonal
scaling turns it into the symmetric coupling block of the same origin, so
its eigenvalues are exactly that block's.  Pulling eigenvectors back gives
explicit eigenfunctions of the band graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import tridiagonal
from .errors import BudgetExceededError, InvalidParameterError
from .hamming import InducedGraph, build_graph, weight_masks
from .spectrum import DEFAULT_TOL, coupling_matrix, lambda_set

MEMBERSHIP_ORTH_RTOL = 1e-10
MEMBERSHIP_SPAN_RTOL = 1e-8
UNIQUENESS_SPHERE_LIMIT = 5000


def _binom(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def _validate_origin(n: int, r1: int, r2: int, t: int, y: int | None = None) -> None:
    if n < 0 or not 0 <= r1 <= r2 <= n // 2:
        raise InvalidParameterError(
            f"radii must satisfy 0 <= r1 <= r2 <= n//2, got r1={r1}, r2={r2}, n={n}"
        )
    if not 0 <= t <= r2:
        raise InvalidParameterError(f"need 0 <= t <= r2, got t={t}, r2={r2}")
    if y is not None:
        if y < 0 or y >> n:
            raise InvalidParameterError(f"origin mask {y:#x} does not fit in {n} bits")
        if y.bit_count() != t:
            raise InvalidParameterError(
                f"origin mask has weight {y.bit_count()}, expected {t}"
            )


@dataclass(frozen=True)
class SemiSymBasis:
    """Per-sphere value tables of the normalized basis around origin y.

    values[(i, c)] is the exact rational value on the class
    {x in S(n,i) : |x & y| = c}, for spheres i = tstar..r2 and c = 0..t.
    """

    n: int
    r1: int
    r2: int
    t: int
    y: int
    tstar: int
    values: dict[tuple[int, int], Fraction]

    def value(self, i: int, c: int) -> Fraction:
        return self.values[(i, c)]

    def sphere_values(self, i: int) -> tuple[Fraction, ...]:
        return tuple(self.values[(i, c)] for c in range(self.t + 1))


def class_size(n: int, t: int, i: int, c: int) -> int:
    """|{x in S(n,i) : |x & y| = c}| for any fixed y of weight t."""
    return _binom(t, c) * _binom(n - t, i - c)


def build_basis(n: int, r1: int, r2: int, t: int, y: int) -> SemiSymBasis:
    """Solve for the per-sphere class values in exact rationals.

    The value at c = t is pinned to 1; the remaining values come from the
    triangular system <f, G_k> = 0, k = t-1 .. 0, where G_k weights class c
    by C(c, k) under the counting measure.  (The k = t-1 row reproduces the
    closed form -(i-t+1)/(n-i).)
    """
    _validate_origin(n, r1, r2, t, y)
    tstar = max(t, r1)
    values: dict[tuple[int, int], Fraction] = {}
    for i in range(tstar, r2 + 1):
        sizes = [class_size(n, t, i, c) for c in range(t + 1)]
        if any(s <= 0 for s in sizes):
            raise ArithmeticError(f"internal-error: empty class on sphere {i}")
        f = [Fraction(0)] * (t + 1)
        f[t] = Fraction(1)
        for k in range(t - 1, -1, -1):
            acc = sum((f[c] * (_binom(c, k) * sizes[c]) for c in range(k + 1, t + 1)), Fraction(0))
            f[k] = -acc / sizes[k]
        for c in range(t + 1):
            values[(i, c)] = f[c]
    return SemiSymBasis(n, r1, r2, t, y, tstar, values)


@dataclass(frozen=True)
class RestrictedAdjacency:
    """Adjacency restricted to the invariant subspace of one origin weight.

    Row/column k corresponds to sphere tstar + k.  ``beta`` holds the
    super-diagonal (integer) entries, ``gamma`` the sub-diagonal (rational)
    ones; beta[k] * gamma[k] is always the exact integer that squares the
    symmetric coupling block's off-diagonal.
    """

    n: int
    r1: int
    r2: int
    t: int
    tstar: int
    beta: tuple[int, ...]
    gamma: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return self.r2 - self.tstar + 1

    def dense(self) -> np.ndarray:
        m = self.dim
        a = np.zeros((m, m))
        for k in range(m - 1):
            a[k, k + 1] = float(self.beta[k])
            a[k + 1, k] = float(self.gamma[k])
        return a

    def coupling_sq(self) -> tuple[int, ...]:
        out = []
        for b, g in zip(self.beta, self.gamma):
            prod = b * g
            if prod.denominator != 1:
                raise ArithmeticError("internal-error: non-integer coupling square")
            out.append(prod.numerator)
        return tuple(out)

    def scaling(self) -> np.ndarray:
        """Diagonal D with D^-1 A D symmetric (first entry 1)."""
        d = [1.0]
        for b, g in zip(self.beta, self.gamma):
            d.append(d[-1] * math.sqrt(float(g) / float(b)))
        return np.array(d)


def restricted_adjacency(n: int, r1: int, r2: int, t: int) -> RestrictedAdjacency:
    _validate_origin(n, r1, r2, t)
    tstar = max(t, r1)
    beta = tuple(n - i + 1 for i in range(tstar + 1, r2 + 1))
    gamma = tuple(
        Fraction((i - t + 1) * (n - t - i), n - i) for i in range(tstar, r2)
    )
    op = RestrictedAdjacency(n, r1, r2, t, tstar, beta, gamma)
    if op.coupling_sq() != coupling_matrix(n, r1, r2, t).offdiag_sq:
        raise ArithmeticError("internal-error: restricted block disagrees with coupling")
    return op


@dataclass(frozen=True)
class EigenFunction:
    """Explicit eigenfunction of the band adjacency from one origin mask."""

    n: int
    r1: int
    r2: int
    t: int
    y: int
    tstar: int
    eigenvalue: float
    coeffs: tuple[float, ...]
    values: np.ndarray
    class_values: dict[tuple[int, int], float]
    residual: float

    def to_dict(self) -> dict:
        spheres = []
        for i in range(self.tstar, self.r2 + 1):
            spheres.append(
                {
                    "i": i,
                    "classes": [
                        {"c": c, "value": self.class_values[(i, c)]}
                        for c in range(self.t + 1)
                    ],
                }
            )
        return {
            "lambda": self.eigenvalue,
            "t": self.t,
            "y": format(self.y, f"0{max(self.n, 1)}b"),
            "spheres": spheres,
        }


def synthesize(
    n: int,
    r1: int,
    r2: int,
    t: int,
    y: int,
    which: int,
    graph: InducedGraph | None = None,
    tol: float = DEFAULT_TOL,
) -> EigenFunction:
    """Materialize the eigenfunction for the which-th eigenvalue of origin (t, y).

    The eigenvector is extracted on the symmetric coupling block (Sturm
    bisection for the value, inverse iteration for the vector), unscaled
    back to the basis coordinates, and normalized to first coefficient 1.
    Values off the supporting spheres are exact zeros.
    """
    basis = build_basis(n, r1, r2, t, y)
    block = coupling_matrix(n, r1, r2, t)
    if not 0 <= which < block.dim:
        raise InvalidParameterError(
            f"eigenvalue index {which} out of range [0, {block.dim})"
        )
    lam = lambda_set(n, r1, r2, t, tol).values[which]
    if block.dim == 1:
        v = np.ones(1)
    else:
        w = tridiagonal.eigenvector([0.0] * block.dim, block.offdiag(), lam)
        v = restricted_adjacency(n, r1, r2, t).scaling() * w
        if v[0] == 0.0:
            raise ArithmeticError("internal-error: vanishing first coefficient")
        v = v / v[0]

    if graph is None:
        graph = build_graph(n, r1, r2)
    elif (graph.n, graph.r1, graph.r2) != (n, r1, r2):
        raise InvalidParameterError("supplied graph does not match the band")

    tstar = basis.tstar
    class_values = {
        (i, c): float(v[i - tstar]) * float(basis.value(i, c))
        for i in range(tstar, r2 + 1)
        for c in range(t + 1)
    }
    values = np.zeros(graph.vertex_count)
    for idx, mask in enumerate(graph.masks):
        i = mask.bit_count()
        if i >= tstar:
            values[idx] = class_values[(i, (mask & y).bit_count())]

    sup = float(np.abs(values).max())
    residual = float(np.abs(graph.apply_adjacency(values) - lam * values).max()) / sup
    if residual > 1e-8:
        raise ArithmeticError(
            f"internal-error: synthesized residual {residual:.3e} exceeds 1e-8"
        )
    return EigenFunction(
        n, r1, r2, t, y, tstar, lam, tuple(float(c) for c in v),
        values, class_values, residual,
    )


def _superset_columns(n: int, sphere_masks: list[int], max_weight: int) -> np.ndarray:
    """Matrix whose columns are superset indicators for all masks of weight <= max_weight."""
    cols = []
    for w in range(max_weight + 1):
        for z in weight_masks(n, w):
            cols.append([1.0 if (x & z) == z else 0.0 for x in sphere_masks])
    return np.array(cols).T if cols else np.zeros((len(sphere_masks), 0))


def check_eigenspace_membership(
    n: int,
    i: int,
    t: int,
    values,
    orth_rtol: float = MEMBERSHIP_ORTH_RTOL,
    span_rtol: float = MEMBERSHIP_SPAN_RTOL,
) -> bool:
    """Does a function on the weight-i sphere lie in eigenspace index t?

    Operationalized as: (a) orthogonal (counting measure) to every superset
    indicator of weight < t, and (b) inside the span of superset indicators
    of weight <= t, by least-squares residual.
    """
    if not 0 <= t <= i <= n // 2:
        raise InvalidParameterError(f"need 0 <= t <= i <= n//2, got t={t}, i={i}, n={n}")
    sphere = list(weight_masks(n, i))
    f = np.asarray(values, dtype=float)
    if f.shape != (len(sphere),):
        raise InvalidParameterError(
            f"function has shape {f.shape}, sphere has {len(sphere)} points"
        )
    norm = float(np.linalg.norm(f))
    if norm == 0.0:
        return True
    if t > 0:
        low = _superset_columns(n, sphere, t - 1)
        if float(np.abs(low.T @ f).max()) > orth_rtol * norm:
            return False
    span = _superset_columns(n, sphere, t)
    coef, *_ = np.linalg.lstsq(span, f, rcond=None)
    residual = float(np.linalg.norm(span @ coef - f))
    return residual <= span_rtol * norm


@dataclass(frozen=True)
class ZonalUniquenessReport:
    n: int
    i: int
    t: int
    semi_dim: int
    constraint_rank: int
    dimension: int


def check_zonal_uniqueness(n: int, i: int, t: int) -> ZonalUniquenessReport:
    """Dimension of {semi-symmetric around a weight-t mask} cap {eigenspace t}.

    Computed by explicit linear algebra on the weight-i sphere: the class
    indicators span the semi-symmetric functions; membership constraints cut
    them down.  The result must be 1.
    """
    if not 0 <= t <= i <= n // 2:
        raise InvalidParameterError(f"need 0 <= t <= i <= n//2, got t={t}, i={i}, n={n}")
    if math.comb(n, i) > UNIQUENESS_SPHERE_LIMIT:
        raise BudgetExceededError(
            f"sphere has {math.comb(n, i)} points, budget {UNIQUENESS_SPHERE_LIMIT}",
            vertex_count=math.comb(n, i),
        )
    y = (1 << t) - 1
    sphere = list(weight_masks(n, i))
    classes = np.array(
        [[1.0 if (x & y).bit_count() == c else 0.0 for c in range(t + 1)] for x in sphere]
    )
    low = _superset_columns(n, sphere, t - 1) if t > 0 else np.zeros((len(sphere), 0))
    constraints = low.T @ classes
    if constraints.shape[0] == 0:
        null_basis = np.eye(t + 1)
        rank = 0
    else:
        u, s, vt = np.linalg.svd(constraints)
        cutoff = max(constraints.shape) * np.finfo(float).eps * (s[0] if len(s) else 0.0)
        rank = int((s > cutoff).sum())
        null_basis = vt[rank:].T
    span = _superset_columns(n, sphere, t)
    dimension = 0
    for col in null_basis.T:
        f = classes @ col
        norm = float(np.linalg.norm(f))
        if norm == 0.0:
            continue
        coef, *_ = np.linalg.lstsq(span, f, rcond=None)
        if float(np.linalg.norm(span @ coef - f)) <= MEMBERSHIP_SPAN_RTOL * norm:
            dimension += 1
    return ZonalUniquenessReport(n, i, t, t + 1, rank, dimension)
