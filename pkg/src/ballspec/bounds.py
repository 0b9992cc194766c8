"""Entropy parametrization and spectral/boundary bounds for large sets.

For a target cardinality s (given as log2), the radius parametrization is
r = n * Hinv(log2(s)/n) with H the binary entropy.  The ball of radius
t = floor(r) fits inside the cardinality budget, so its largest adjacency
eigenvalue n - 2 * x(t+1), with x(t+1) the first root of the degree-(t+1)
Krawtchouk polynomial, lower-bounds the extremal maximal eigenvalue and
2 * x(t+1) upper-bounds the extremal fractional edge boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError
from .krawtchouk import DEFAULT_TOL, first_root

LN2 = math.log(2.0)


def entropy(x: float) -> float:
    """Binary entropy H(x), with H(0) = H(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise InvalidParameterError(f"entropy argument must be in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def entropy_inv(h: float, tol: float = 1e-14) -> float:
    """Inverse of the entropy on [0, 1/2], by bisection (H is increasing there)."""
    if not 0.0 <= h <= 1.0:
        raise InvalidParameterError(f"entropy value must be in [0, 1], got {h}")
    if h == 0.0:
        return 0.0
    if h == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if entropy(mid) < h:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def log2_big(s: int) -> float:
    """log2 of a positive integer of any size, accurate to double precision."""
    if s <= 0:
        raise InvalidParameterError(f"cardinality must be positive, got {s}")
    bl = s.bit_length()
    if bl <= 64:
        return math.log2(s)
    top = s >> (bl - 64)
    return (bl - 64) + math.log2(top)


def modls_bound(n: int, log2_s: float) -> float:
    """Entropy-based lower bound n * (1 - 2*sqrt(u(1-u))) on the fractional boundary."""
    if n <= 0:
        raise InvalidParameterError(f"dimension must be positive, got {n}")
    if not 0.0 <= log2_s <= n:
        raise InvalidParameterError(f"need 0 <= log2_s <= n, got {log2_s}")
    u = entropy_inv(log2_s / n)
    return n * (1.0 - 2.0 * math.sqrt(u * (1.0 - u)))


def subcube_reference(n: int, k: int) -> tuple[float, float]:
    """(fractional boundary, max eigenvalue) of a k-dimensional subcube: (n-k, k)."""
    if not 0 <= k <= n:
        raise InvalidParameterError(f"need 0 <= k <= n, got k={k}, n={n}")
    return float(n - k), float(k)


@dataclass(frozen=True)
class BoundsReport:
    """All bound quantities for one (n, log2_s) pair.

    lambda_lower + delta_upper == n by construction: both derive from the
    same first root.
    """

    n: int
    log2_s: float
    r: float
    t: int
    lambda_lower: float
    delta_upper: float
    modls_lower: float
    subcube_delta: float
    log_lower: float

    CSV_HEADER = "n,log2_s,r,t,lambda_lower,delta_upper,modls_lower,subcube_delta,log_lower"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "log2_s": self.log2_s,
            "r": self.r,
            "t": self.t,
            "lambda_lower": self.lambda_lower,
            "delta_upper": self.delta_upper,
            "modls_lower": self.modls_lower,
            "subcube_delta": self.subcube_delta,
            "log_lower": self.log_lower,
        }

    def csv_row(self) -> str:
        d = self.to_dict()
        return ",".join(repr(d[key]) if isinstance(d[key], float) else str(d[key])
                        for key in self.CSV_HEADER.split(","))


def ball_bound(n: int, log2_s: float, tol: float = DEFAULT_TOL) -> BoundsReport:
    """Full bounds report for cardinality 2**log2_s inside the n-cube."""
    if n < 2:
        raise InvalidParameterError(f"dimension must be at least 2, got {n}")
    if not 1.0 <= log2_s <= n - 1:
        raise InvalidParameterError(f"need 1 <= log2_s <= n-1, got {log2_s}")
    u = entropy_inv(log2_s / n)
    r = n * u
    t = math.floor(r)
    x = first_root(n, t + 1, tol)
    delta_upper = 2.0 * x
    lambda_lower = n - delta_upper
    return BoundsReport(
        n=n,
        log2_s=log2_s,
        r=r,
        t=t,
        lambda_lower=lambda_lower,
        delta_upper=delta_upper,
        modls_lower=modls_bound(n, log2_s),
        subcube_delta=n - log2_s,
        log_lower=(n - log2_s) * LN2,
    )


def reciprocity_delta_bound(n: int, t: int, tol: float = DEFAULT_TOL) -> int:
    """Smallest degree i whose first root is <= t+1; then 2i bounds the boundary.

    Uses strict monotone decrease of the first root in the degree for a
    binary search; afterwards asserts the reciprocity consequence
    first_root(n, t+1) <= i.
    """
    if not 0 <= t < n / 2:
        raise InvalidParameterError(f"need 0 <= t < n/2, got t={t}, n={n}")
    target = t + 1.0
    slack = 1e-9 * max(1.0, n)
    lo, hi = 1, n  # first_root(n, n) < 1 <= target, so hi always qualifies
    if first_root(n, 1, tol) <= target + slack:
        hi = 1
    while lo < hi:
        mid = (lo + hi) // 2
        if first_root(n, mid, tol) <= target + slack:
            hi = mid
        else:
            lo = mid + 1
    i = hi
    if first_root(n, t + 1, tol) > i + slack:
        raise ArithmeticError(
            f"internal-error: reciprocity consequence failed for n={n}, t={t}, i={i}"
        )
    return i
