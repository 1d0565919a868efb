"""Vertex partitions, quotient matrices, and the 3x3 family cubics.

Quotient matrices of integer source matrices are computed in exact
rational arithmetic so equitability is never a floating-point judgment.
The three-block join families (extremal, singleton tail, uniform-block
tail, for both the signless Laplacian and the distance matrix) have
closed-form monic cubics; their coefficient formulas are transcribed here
and unit-tested against cofactor expansion of the constructed matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class InvalidPartitionError(ValueError):
    """Blocks must be disjoint, nonempty, and cover the index set."""


class BracketingError(ValueError):
    """No sign change found on the requested root bracket."""


def validate_partition(order: int, blocks: Sequence[Sequence[int]]) -> None:
    seen: set[int] = set()
    for b in blocks:
        if len(b) == 0:
            raise InvalidPartitionError("empty block")
        for v in b:
            if not (0 <= v < order):
                raise InvalidPartitionError(f"index {v} out of range for order {order}")
            if v in seen:
                raise InvalidPartitionError(f"index {v} appears in two blocks")
            seen.add(v)
    if len(seen) != order:
        raise InvalidPartitionError("blocks do not cover the index set")


@dataclass(frozen=True)
class QuotientMatrix:
    """Average block row sums q_ij, with an exact equitability flag."""

    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def order(self) -> int:
        return len(self.entries)


def _exact(value) -> Fraction:
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    return Fraction(*float(value).as_integer_ratio())


def quotient_matrix(m, blocks: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Quotient of a square matrix with respect to an ordered partition.

    q_ij is the average row sum of the (i, j) block; the partition is
    equitable iff every block has constant row sums (tested exactly).
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    validate_partition(m.shape[0], blocks)
    r = len(blocks)
    entries = []
    equitable = True
    for bi in blocks:
        row = []
        for bj in blocks:
            sums = [sum(_exact(m[u, v]) for v in bj) for u in bi]
            if any(t != sums[0] for t in sums[1:]):
                equitable = False
            row.append(sum(sums, Fraction(0)) / len(bi))
        entries.append(tuple(row))
    return QuotientMatrix(tuple(entries), equitable)


@dataclass(frozen=True)
class Cubic:
    """c3*x^3 + c2*x^2 + c1*x + c0 with exact coefficients; c3 = 1 here."""

    c3: Fraction | int
    c2: Fraction | int
    c1: Fraction | int
    c0: Fraction | int

    def __call__(self, x):
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x):
        return (3 * self.c3 * x + 2 * self.c2) * x + self.c1

    @property
    def coefficients(self) -> tuple:
        return (self.c3, self.c2, self.c1, self.c0)


def charpoly3(q: QuotientMatrix) -> Cubic:
    """Monic characteristic polynomial det(xI - Q) of a 3x3 quotient matrix."""
    if q.order != 3:
        raise ValueError(f"charpoly3 needs order 3, got {q.order}")
    a = q.entries
    trace = a[0][0] + a[1][1] + a[2][2]
    minors = (
        a[1][1] * a[2][2] - a[1][2] * a[2][1]
        + a[0][0] * a[2][2] - a[0][2] * a[2][0]
        + a[0][0] * a[1][1] - a[0][1] * a[1][0]
    )
    det = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    def norm(f: Fraction):
        return int(f) if f.denominator == 1 else f
    return Cubic(1, norm(-trace), norm(minors), norm(-det))


# -- closed-form cubics for the three-block join families -------------------
#
# Families: K_t joined to (one big clique + a tail of equal small cliques).
#   *_EXTREMAL    K_delta v (K_{n-2delta+1} u (delta-1) K_1), parameter delta
#   *_SINGLETONS  K_s v (K_{n-2s+1} u (s-1) K_1), parameter s
#   *_BLOCKS      K_s v (K_{n-s-(delta+1-s)(s-1)} u (s-1) K_{delta+1-s})
# Q_* uses the signless Laplacian, D_* the distance matrix.


class CubicFamily(Enum):
    Q_EXTREMAL = "q-extremal"
    Q_SINGLETONS = "q-singletons"
    Q_BLOCKS = "q-blocks"
    D_EXTREMAL = "d-extremal"
    D_SINGLETONS = "d-singletons"
    D_BLOCKS = "d-blocks"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _q_clique_star_coeffs(n: int, t: int) -> tuple[int, int, int]:
    # signless Laplacian of K_t v (K_{n-2t+1} u (t-1)K_1)
    c2 = t - 3 * n + 2
    c1 = -4 * t**2 + t * n + 4 * t + 2 * n**2 - 4 * n
    c0 = -2 * t**3 + 4 * t**2 * n - 2 * t**2 - 2 * t * n**2 + 2 * t * n
    return c2, c1, c0


def _d_clique_star_coeffs(n: int, t: int) -> tuple[int, int, int]:
    # distance matrix of K_t v (K_{n-2t+1} u (t-1)K_1)
    c2 = -t - n + 5
    c1 = 5 * t**2 - 2 * t * n - 8 * t - n + 8
    c0 = -2 * t**3 + t**2 * n + 8 * t**2 - 3 * t * n - 8 * t + 4
    return c2, c1, c0


def _q_blocks_coeffs(n: int, s: int, d: int) -> tuple[int, int, int]:
    c2 = 2 * d * s - 4 * d - 3 * n - 2 * s**2 + 5 * s + 2
    c1 = (
        -4 * d**2 * s + 4 * d**2 - 2 * d * n * s + 8 * d * n + 4 * d * s**2
        - 4 * d * s - 8 * d + 2 * n**2 + 2 * n * s**2 - 7 * n * s - 4 * n
        - 4 * s**2 + 12 * s
    )
    c0 = (
        4 * d**2 * n * s - 4 * d**2 * n - 2 * d**2 * s**3 + 6 * d**2 * s**2
        - 12 * d**2 * s + 8 * d**2 - 4 * d * n**2 - 4 * d * n * s**2
        + 8 * d * n * s + 8 * d * n + 4 * d * s**4 - 16 * d * s**3
        + 28 * d * s**2 - 24 * d * s + 2 * n**2 * s - 6 * n * s - 2 * s**5
        + 10 * s**4 - 18 * s**3 + 14 * s**2
    )
    return c2, c1, c0


def _d_blocks_coeffs(n: int, s: int, d: int) -> tuple[int, int, int]:
    c2 = -d * s + 2 * d - n + s**2 - 3 * s + 5
    c1 = (
        2 * d**2 * s**2 - 3 * d**2 * s + d**2 - 2 * d * n * s + d * n
        - 4 * d * s**3 + 13 * d * s**2 - 13 * d * s + 6 * d + 2 * n * s**2
        - 3 * n * s - n + 2 * s**4 - 10 * s**3 + 17 * s**2 - 14 * s + 8
    )
    c0 = (
        -(d**2) * s**3 + 4 * d**2 * s**2 - 4 * d**2 * s + d**2
        + d * n * s**2 - 3 * d * n * s + d * n + 2 * d * s**4
        - 11 * d * s**3 + 20 * d * s**2 - 14 * d * s + 4 * d - n * s**3
        + 4 * n * s**2 - 4 * n * s - s**5 + 7 * s**4 - 18 * s**3
        + 21 * s**2 - 12 * s + 4
    )
    return c2, c1, c0


def blocks_family_big_clique(n: int, s: int, delta: int) -> int:
    """Order of the big clique in the uniform-block family."""
    return n - s - (delta + 1 - s) * (s - 1)


def family_cubic(
    family: CubicFamily, n: int, *, s: int | None = None, delta: int | None = None
) -> Cubic:
    """Closed-form characteristic cubic of a family's 3x3 quotient matrix."""
    if family in (CubicFamily.Q_EXTREMAL, CubicFamily.D_EXTREMAL):
        _require(delta is not None, "extremal family needs delta")
        _require(delta >= 2, f"extremal family needs delta >= 2, got {delta}")
        _require(n >= 2 * delta, f"extremal family needs n >= 2*delta, got n={n}")
        fn = _q_clique_star_coeffs if family is CubicFamily.Q_EXTREMAL else _d_clique_star_coeffs
        return Cubic(1, *fn(n, delta))
    if family in (CubicFamily.Q_SINGLETONS, CubicFamily.D_SINGLETONS):
        _require(s is not None, "singleton family needs s")
        _require(s >= 2, f"singleton family needs s >= 2, got {s}")
        _require(n >= 2 * s, f"singleton family needs n >= 2*s, got n={n}")
        fn = _q_clique_star_coeffs if family is CubicFamily.Q_SINGLETONS else _d_clique_star_coeffs
        return Cubic(1, *fn(n, s))
    _require(s is not None and delta is not None, "block family needs s and delta")
    _require(2 <= s <= delta - 1, f"block family needs 2 <= s <= delta-1, got s={s}")
    _require(
        blocks_family_big_clique(n, s, delta) >= 1,
        f"block family needs n >= s + (delta+1-s)(s-1) + 1, got n={n}",
    )
    fn = _q_blocks_coeffs if family is CubicFamily.Q_BLOCKS else _d_blocks_coeffs
    return Cubic(1, *fn(n, s, delta))


# -- gap factors: family cubic minus extremal cubic factors as (s-delta)*gap


class DifferenceIdentity(Enum):
    Q_SINGLETONS = "q-singletons"
    Q_BLOCKS = "q-blocks"
    D_SINGLETONS = "d-singletons"
    D_BLOCKS = "d-blocks"


def q_singleton_gap_coeffs(n: int, s: int, delta: int) -> tuple[int, int, int]:
    """Quadratic with (s-delta)*gap = Q singleton cubic - Q extremal cubic."""
    d = delta
    return (
        1,
        n + 4 - 4 * s - 4 * d,
        -2 * n**2 + 2 * n + 4 * s * n + 4 * d * n - 2 * s**2 - 2 * d**2
        - 2 * s - 2 * d - 2 * s * d,
    )


def q_block_gap_coeffs(n: int, s: int, delta: int) -> tuple[int, int, int]:
    """Quadratic with (delta-s)*gap = Q block cubic - Q extremal cubic."""
    d = delta
    return (
        2 * s - 5,
        7 * n - 12 - 4 * d * s - 2 * n * s + 8 * d + 4 * s,
        2 * d**2 + 4 * d * s * n - 8 * d * n - 2 * n**2 + 6 * n + 2 * s**4
        - 2 * d * s**3 + 6 * d * s**2 - 10 * s**3 + 18 * s**2 - 10 * d * s
        - 14 * s + 10 * d,
    )


def d_singleton_gap_coeffs(n: int, s: int, delta: int) -> tuple[int, int, int]:
    """Quadratic with (delta-s)*gap = D singleton cubic - D extremal cubic."""
    d = delta
    return (
        1,
        2 * n + 8 - 5 * s - 5 * d,
        3 * n + 8 - s * n - d * n - 8 * s - 8 * d + 2 * s**2 + 2 * s * d
        + 2 * d**2,
    )


def d_block_gap_coeffs(n: int, s: int, delta: int) -> tuple[int, int, int]:
    """Quadratic with (s-delta)*gap = D block cubic - D extremal cubic."""
    d = delta
    return (
        s - 3,
        2 * s**3 - 2 * d * s**2 - 10 * s**2 + 2 * n * s + 17 * s + 3 * d * s
        + 4 * d - 14 - 3 * n,
        -(s**4) + 7 * s**3 + d * s**3 - 18 * s**2 - n * s**2 - 4 * d * s**2
        + 21 * s + 4 * n * s + 2 * d * s - 12 - 4 * n + d * n - 2 * d**2
        + 7 * d,
    )


def q_block_gap_s2_coeffs(n: int, delta: int) -> tuple[int, int, int]:
    """The s = 2 specialization of the Q block gap quadratic."""
    d = delta
    return (-1, 3 * n - 4, 2 * d**2 - 2 * d - 2 * n**2 + 6 * n - 4)


def q_block_gap_at_bracket_floor(n: int, s: int, delta: int) -> int:
    """Q block gap evaluated at x = 2n - 2*delta, as an expanded polynomial."""
    d = delta
    return (
        (4 * s - 8) * n**2
        + (34 * d + 8 * s - 16 * d * s - 18) * n
        + 2 * s**4 - 10 * s**3 - 2 * d * s**3 + 6 * d * s**2 + 18 * s**2
        + 16 * d**2 * s - 18 * d * s - 14 * s - 34 * d**2 + 34 * d
    )


def d_block_gap_at_wiener_floor(n: int, s: int, delta: int) -> int:
    """D block gap evaluated at x = n + delta - 3, as an expanded polynomial."""
    d = delta
    return (
        (3 * s - 6) * n**2
        + (2 * s**3 - 11 * s**2 - 2 * d * s**2 + 7 * d * s + 9 * s - 4 * d + 9) * n
        - s**4 + 3 * d * s**3 + s**3 - 2 * d**2 * s**2 - 8 * d * s**2
        + 12 * s**2 + 4 * d**2 * s + 4 * d * s - 21 * s - d**2 - d + 3
    )


_IDENTITY_TABLE = {
    # identity -> (family, gap coeffs, sign of the (s - delta) multiplier)
    DifferenceIdentity.Q_SINGLETONS: (CubicFamily.Q_SINGLETONS, q_singleton_gap_coeffs, +1),
    DifferenceIdentity.Q_BLOCKS: (CubicFamily.Q_BLOCKS, q_block_gap_coeffs, -1),
    DifferenceIdentity.D_SINGLETONS: (CubicFamily.D_SINGLETONS, d_singleton_gap_coeffs, -1),
    DifferenceIdentity.D_BLOCKS: (CubicFamily.D_BLOCKS, d_block_gap_coeffs, +1),
}


def eval_poly(coeffs: Sequence, x):
    """Horner evaluation, exact when coefficients and x are integers."""
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def identity_check(
    identity: DifferenceIdentity,
    n: int,
    s: int,
    delta: int,
    x_samples: Iterable,
) -> float:
    """Max relative residual of a difference-factorization identity.

    Left side: family cubic minus extremal cubic, via exact coefficient
    subtraction. Right side: (s - delta) (or its negation) times the gap
    quadratic. Integer sample points are evaluated exactly.
    """
    family, gap_fn, sign = _IDENTITY_TABLE[identity]
    fam = family_cubic(family, n, s=s, delta=delta)
    base_family = (
        CubicFamily.Q_EXTREMAL
        if family in (CubicFamily.Q_SINGLETONS, CubicFamily.Q_BLOCKS)
        else CubicFamily.D_EXTREMAL
    )
    base = family_cubic(base_family, n, delta=delta)
    diff = tuple(a - b for a, b in zip(fam.coefficients, base.coefficients))
    gap = gap_fn(n, s, delta)
    mult = sign * (s - delta)
    worst = 0.0
    for x in x_samples:
        left = eval_poly(diff, x)
        right = mult * eval_poly(gap, x)
        scale = max(1.0, abs(left), abs(right))
        worst = max(worst, abs(left - right) / scale)
    return worst


# -- root finding ------------------------------------------------------------


def largest_root(
    cubic: Cubic,
    lo,
    hi,
    *,
    tol: float = 1e-10,
    widen: bool = False,
    hi_cap=None,
) -> float:
    """Root of a cubic inside a sign-change bracket, to absolute tol.

    Bisection in exact rational arithmetic: sign decisions never suffer
    float cancellation, so multiple roots converge to tol as well. The
    result is the largest real root whenever the caller brackets above all
    other roots. With ``widen`` the upper end doubles its distance from
    ``lo`` until a sign change appears, never past ``hi_cap``.
    """
    a = Fraction(lo)
    b = Fraction(hi)
    if not a < b:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    fa = cubic(a)
    fb = cubic(b)
    if fa == 0 and fb != 0:
        return float(a)
    if fb == 0:
        return float(b)
    while (fa > 0) == (fb > 0):
        if not widen:
            raise BracketingError(f"no sign change on [{lo}, {hi}]")
        new_b = a + 2 * (b - a)
        if hi_cap is not None and new_b > Fraction(hi_cap):
            raise BracketingError(
                f"no sign change up to the widening cap {hi_cap} (last hi {float(b)})"
            )
        b = new_b
        fb = cubic(b)
        if fb == 0:
            return float(b)
    negative_left = fa < 0
    while b - a > Fraction(tol) / 4:
        mid = (a + b) / 2
        fm = cubic(mid)
        if fm == 0:
            return float(mid)
        if (fm < 0) == negative_left:
            a = mid
        else:
            b = mid
    return float((a + b) / 2)
