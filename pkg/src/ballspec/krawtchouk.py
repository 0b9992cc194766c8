"""Exact Krawtchouk polynomials: construction, evaluation, certified roots.

The degree-k Krawtchouk polynomial over {0..N} is

    K_k(x) = sum_{l=0}^{k} (-1)^l C(x,l) C(N-x, k-l),

an integer-valued degree-k polynomial whose k! multiple has integer
coefficients; that scaled form is what gets stored.  Roots are isolated by
exact sign evaluation on the integer grid (each open unit interval holds at
most one root, integer roots are detected exactly and deflated) and then
certified by dyadic bisection with exact integer sign tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import tridiagonal
from .errors import InvalidDegreeError

POLYNOMIAL_BISECTION = "polynomial-bisection"
TRIDIAGONAL_EIGENSOLVE = "tridiagonal-eigensolve"

# Above this ambient dimension first_root skips exact coefficients and goes
# straight to the Jacobi-matrix eigensolve.
EXACT_COEFF_LIMIT = 64
DEFAULT_TOL = 1e-12


def binom_int(n: int, k: int) -> int:
    """C(n, k) for any integer n and k >= 0 (0 for k < 0)."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    # falling factorial keeps this exact for negative n
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def defining_sum(ambient_dim: int, degree: int, x: int) -> int:
    """Evaluate the defining alternating binomial sum at an integer point."""
    return sum(
        (-1) ** l * binom_int(x, l) * binom_int(ambient_dim - x, degree - l)
        for l in range(degree + 1)
    )


@dataclass(frozen=True)
class KrawtchoukPoly:
    """Degree-k Krawtchouk polynomial over {0..N}, stored exactly.

    ``coeffs`` are the integer coefficients of k! * K_k, lowest degree
    first; dividing by ``scale`` (= k!) recovers K_k.  The leading
    coefficient of K_k itself is (-2)^k / k!.
    """

    ambient_dim: int
    degree: int
    coeffs: tuple[int, ...]
    scale: int

    def eval_scaled(self, x: int) -> int:
        """Exact value of k! * K_k at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def leading_coefficient(self) -> Fraction:
        return Fraction(self.coeffs[-1], self.scale)


@dataclass(frozen=True)
class RootList:
    """Certified simple real roots (or eigenvalues), ascending.

    ``radius`` holds one certified interval half-width per root.
    """

    values: tuple[float, ...]
    radius: tuple[float, ...]
    source: str

    def __post_init__(self):
        if len(self.values) != len(self.radius):
            raise ArithmeticError("internal-error: radius/value length mismatch")
        for i in range(len(self.values) - 1):
            gap = self.values[i + 1] - self.values[i]
            if gap <= self.radius[i] + self.radius[i + 1]:
                raise ArithmeticError(
                    "internal-error: certified root intervals overlap "
                    f"({self.values[i]!r}, {self.values[i + 1]!r})"
                )

    def __len__(self) -> int:
        return len(self.values)


def build(ambient_dim: int, degree: int) -> KrawtchoukPoly:
    """Construct the exact polynomial via the three-term recurrence.

    The scaled form Q_k = k! * K_k satisfies the integer recurrence
    Q_k = (N - 2x) Q_{k-1} - (k-1)(N-k+2) Q_{k-2} with Q_0 = 1, Q_1 = N - 2x.
    """
    n, k = ambient_dim, degree
    if n < 0 or k < 0 or k > n:
        raise InvalidDegreeError(f"need 0 <= k <= N, got k={k}, N={n}")
    prev = [1]
    if k == 0:
        return KrawtchoukPoly(n, 0, (1,), 1)
    cur = [n, -2]
    for j in range(2, k + 1):
        # (N - 2x) * cur
        nxt = [0] * (j + 1)
        for i, c in enumerate(cur):
            nxt[i] += n * c
            nxt[i + 1] -= 2 * c
        f = (j - 1) * (n - j + 2)
        for i, c in enumerate(prev):
            nxt[i] -= f * c
        prev, cur = cur, nxt
    return KrawtchoukPoly(n, k, tuple(cur), math.factorial(k))


def eval_exact(p: KrawtchoukPoly, x: int) -> Fraction:
    """Exact value of K_k at an integer point (always an integer)."""
    return Fraction(p.eval_scaled(x), p.scale)


def _horner_int(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_at_dyadic(coeffs: list[int], num: int, e: int) -> int:
    """Sign of p(num / 2^e), computed exactly in integers."""
    acc = coeffs[-1]
    pw = 1
    for c in reversed(coeffs[:-1]):
        pw <<= e
        acc = acc * num + c * pw
    return (acc > 0) - (acc < 0)


def _deflate(coeffs: list[int], root: int) -> list[int]:
    """Divide exactly by (x - root); the remainder must vanish."""
    out = [0] * (len(coeffs) - 1)
    acc = 0
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * root + coeffs[i]
        out[i - 1] = acc
    if acc * root + coeffs[0] != 0:
        raise ArithmeticError("internal-error: deflation by a non-root")
    return out


def _bisect_bracket(
    work: list[int],
    full: list[int],
    left: int,
    sign_left: int,
    tol: float,
) -> tuple[float, float]:
    """Certify the single root of ``work`` inside the open interval (left, left+1).

    Maintains a dyadic interval (a/2^e, (a+1)/2^e) and halves with exact
    integer sign tests until the width drops below ``tol`` *and* the original
    polynomial ``full`` has nonzero opposite signs at both endpoints (an
    endpoint can transiently sit on a deflated integer root of ``full``).
    """
    a, e = left, 0
    while True:
        mid = 2 * a + 1
        s_mid = _sign_at_dyadic(work, mid, e + 1)
        if s_mid == 0:
            # exact dyadic root (e.g. half-integer roots of odd symmetry)
            value = float(Fraction(mid, 1 << (e + 1)))
            return value, math.ulp(max(1.0, abs(value)))
        if s_mid == sign_left:
            a = mid
        else:
            a = 2 * a
        e += 1
        if 2.0 ** -e <= tol and e >= 2:
            s_lo = _sign_at_dyadic(full, a, e)
            s_hi = _sign_at_dyadic(full, a + 1, e)
            if s_lo != 0 and s_hi != 0 and s_lo != s_hi:
                break
    value = float(Fraction(2 * a + 1, 1 << (e + 1)))
    radius = 2.0 ** -(e + 1) + 2.0 * math.ulp(max(1.0, abs(value)))
    return value, radius


def roots(p: KrawtchoukPoly, tol: float = DEFAULT_TOL) -> RootList:
    """All k roots of the polynomial, certified to half-width <= tol.

    Integer roots come out exact (half-width one ulp); the rest are bracketed
    by the sign pattern on the integer grid -- orthogonality w.r.t. the
    binomial measure puts at most one root in each open unit interval -- and
    bisected with exact sign confirmation.
    """
    if p.degree < 1:
        raise InvalidDegreeError("roots requires degree >= 1")
    if not 0.0 < tol <= 0.25:
        tol = min(max(tol, 1e-15), 0.25)
    full = list(p.coeffs)
    grid = [p.eval_scaled(x) for x in range(p.ambient_dim + 1)]
    int_roots = [x for x, v in enumerate(grid) if v == 0]

    work = full
    for r in int_roots:
        work = _deflate(work, r)

    found: list[tuple[float, float]] = [
        (float(r), math.ulp(max(1.0, float(r)))) for r in int_roots
    ]
    if len(work) > 1:
        dgrid = [_horner_int(work, x) for x in range(p.ambient_dim + 1)]
        if any(v == 0 for v in dgrid):
            raise ArithmeticError("internal-error: repeated integer root")
        for x in range(p.ambient_dim):
            s_lo = (dgrid[x] > 0) - (dgrid[x] < 0)
            s_hi = (dgrid[x + 1] > 0) - (dgrid[x + 1] < 0)
            if s_lo != s_hi:
                found.append(_bisect_bracket(work, full, x, s_lo, tol))
    if len(found) != p.degree:
        raise ArithmeticError(
            f"internal-error: isolated {len(found)} roots, expected {p.degree}"
        )
    found.sort()
    return RootList(
        tuple(v for v, _ in found),
        tuple(r for _, r in found),
        POLYNOMIAL_BISECTION,
    )


def jacobi_eigenvalues(ambient_dim: int, degree: int, tol: float = DEFAULT_TOL) -> RootList:
    """Roots of K_k over {0..N} as eigenvalues of the k x k Jacobi matrix.

    The monic transform P_k = k!/(-2)^k K_k satisfies
    P_k = (x - N/2) P_{k-1} - (k-1)(N-k+2)/4 P_{k-2}, so the Jacobi matrix
    has constant diagonal N/2 and squared off-diagonals (j-1)(N-j+2)/4;
    its eigenvalues are exactly the roots of K_k.
    """
    n, k = ambient_dim, degree
    if k < 1 or k > n:
        raise InvalidDegreeError(f"need 1 <= k <= N, got k={k}, N={n}")
    diag = [n / 2.0] * k
    off_sq = [(j - 1) * (n - j + 2) / 4.0 for j in range(2, k + 1)]
    values, radii = tridiagonal.eigenvalues_all(diag, off_sq, tol)
    return RootList(tuple(values), tuple(radii), TRIDIAGONAL_EIGENSOLVE)


def first_root(ambient_dim: int, degree: int, tol: float = DEFAULT_TOL) -> float:
    """Minimal root of K_k over {0..N}.

    N = 0 returns 0.0 by convention (the degenerate reduced dimension, where
    the corresponding 1x1 coupling block is the zero matrix).  Large N skips
    exact coefficients and solves only the Jacobi matrix.
    """
    n, k = ambient_dim, degree
    if n == 0:
        return 0.0
    if k < 1 or k > n:
        raise InvalidDegreeError(f"need 1 <= k <= N, got k={k}, N={n}")
    if n <= EXACT_COEFF_LIMIT:
        return roots(build(n, k), tol).values[0]
    diag = [n / 2.0] * k
    off_sq = [(j - 1) * (n - j + 2) / 4.0 for j in range(2, k + 1)]
    value, _ = tridiagonal.eigenvalue_k(diag, off_sq, 0, tol)
    return value


def check_reciprocity(n: int, i: int, j: int) -> bool:
    """C(n,j) K_i(j) == C(n,i) K_j(i), tested exactly in big integers."""
    if not (0 <= i <= n and 0 <= j <= n):
        raise InvalidDegreeError(f"need 0 <= i, j <= n, got i={i}, j={j}, n={n}")
    return math.comb(n, j) * defining_sum(n, i, j) == math.comb(n, i) * defining_sum(n, j, i)
