"""Arbitrary-precision numerics for the characteristic cubic x^3 - x^2 - x - 1.

Covers the roots alpha, omega1, omega2 (radical formula cross-checked against
Newton refinement), Binet evaluation of T and H with certified integer
rounding, the quadratic approximation residuals, diagonalization of the
generating matrix, Cardano recovery of the characteristic roots of its n-th
power, and the determinant-limit identity.

All floating-point work runs on mpmath at a caller-chosen precision plus a
fixed guard; tolerances are powers of the working precision.  Exact integer
inputs (sequence values, the Cardano discriminant) are computed exactly
before entering the floating-point domain, which removes every catastrophic
cancellation this problem can produce.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import mpmath
from mpmath import mpc, mpf, workprec

from .errors import (
    InternalInconsistencyError,
    OutOfDomainError,
    PrecisionError,
    UndefinedRatioError,
)
from .sequences import Seq, r_value, seq_range, seq_value

# Binary digits of the dominant root; drives the adaptive precision policy.
LOG2_ALPHA = 0.8791464216066382

_GUARD_BITS = 32

BinetForm = Literal["power-sum", "diagonalization"]


@dataclass(frozen=True)
class Precision:
    """Working precision in binary digits; at least 64."""

    bits: int

    def __post_init__(self) -> None:
        if self.bits < 64:
            raise OutOfDomainError(f"precision must be >= 64 bits, got {self.bits}")


@dataclass(frozen=True)
class RootSet:
    """The three roots of x^3 - x^2 - x - 1 at a given working precision.

    alpha is the real root (> 1); omega2 is stored as the exact conjugate of
    omega1.  residual_bound is the largest |r^3 - r^2 - r - 1| over the three.
    """

    alpha: mpf
    omega1: mpc
    omega2: mpc
    residual_bound: mpf
    bits: int


@dataclass(frozen=True)
class CardanoRoots:
    """Radical solution of y^3 - K(n)*y^2 + R(n)*y - 1 = 0.

    y1 is the real root (= alpha^n); y2, y3 the conjugate pair.  a_n, b_n are
    the two real cube roots, delta_n the radicand of the inner square root.
    """

    y1: mpf
    y2: mpc
    y3: mpc
    a_n: mpf
    b_n: mpf
    delta_n: mpf


@dataclass(frozen=True)
class BinetValue:
    """A Binet evaluation with its certified nearest integer."""

    value: mpf
    rounded: int
    margin: mpf
    bits: int


@dataclass(frozen=True)
class Diagonalization:
    """Eigendecomposition P * D * P^-1 of the generating matrix."""

    p_t: tuple[tuple[mpc, ...], ...]
    d: tuple[tuple[mpc, ...], ...]
    p_t_inv: tuple[tuple[mpc, ...], ...]
    reconstruction_error: mpf
    bits: int


@dataclass(frozen=True)
class CharEqCheck:
    """Determinant-limit identity evidence.

    residual is |det| of the quadratic-entry grid evaluated at the numeric
    alpha; samples are (x, det(x), 1681*(x^3-x^2-x-1)^2) triples over exact
    rationals.
    """

    residual: mpf
    samples: tuple[tuple[Fraction, Fraction, Fraction], ...]
    bits: int

    @property
    def samples_match(self) -> bool:
        return all(det == expected for _, det, expected in self.samples)


def _cubic(x):
    return ((x - 1) * x - 1) * x - 1


def _cpow_int(z: mpc, n: int) -> mpc:
    """z**n by square-and-multiply.

    mpmath routes complex integer powers through exp/log at full precision,
    which is orders of magnitude slower than repeated multiplication once
    mantissas reach recurrence-index scale.
    """
    if n < 0:
        raise OutOfDomainError(f"negative complex powers are not needed here, got {n}")
    result = mpc(1)
    for bit in bin(n)[2:] if n else "":
        result = result * result
        if bit == "1":
            result = result * z
    return result


def _newton_alpha(bits: int) -> mpf:
    """Refine the real root by Newton iteration; independent of the radicals."""
    x = mpf("1.8392867552141611")
    target = mpf(2) ** (-(bits + _GUARD_BITS // 2))
    for _ in range(200):
        step = _cubic(x) / (3 * x * x - 2 * x - 1)
        x -= step
        if abs(step) <= target:
            return x
    raise PrecisionError(f"Newton iteration did not converge at {bits} bits")


def _real_cbrt(x: mpf) -> mpf:
    """Real cube root (mpmath.cbrt takes the complex principal branch for x < 0)."""
    return mpmath.cbrt(x) if x >= 0 else -mpmath.cbrt(-x)


@lru_cache(maxsize=None)
def _compute_roots(bits: int) -> RootSet:
    with workprec(bits + _GUARD_BITS):
        third = mpf(1) / 3
        a_t = mpmath.cbrt(mpf(19) / 27 + mpmath.sqrt(mpf(11) / 27))
        b_t = mpmath.cbrt(mpf(19) / 27 - mpmath.sqrt(mpf(11) / 27))
        alpha = third + a_t + b_t
        eps = _unit_cube_root()
        omega1 = third + eps * a_t + eps**2 * b_t
        omega2 = mpmath.conj(omega1)
        agreement = abs(alpha - _newton_alpha(bits))
        if agreement > mpf(2) ** (-(bits // 2)):
            raise PrecisionError(
                f"radical and Newton roots disagree by {mpmath.nstr(agreement, 8)} at {bits} bits"
            )
        residual = max(abs(_cubic(alpha)), abs(_cubic(omega1)), abs(_cubic(omega2)))
        return RootSet(
            alpha=alpha, omega1=omega1, omega2=omega2, residual_bound=residual, bits=bits
        )


def compute_roots(p: Precision) -> RootSet:
    """Roots via the radical formula, cross-checked against Newton refinement.

    The RootSet for a given bit count is computed once and shared (it is
    immutable); callers may hold it across threads.
    """
    return _compute_roots(p.bits)


def _round_checked(value: mpf, bits: int) -> BinetValue:
    # the margin test only certifies anything if 1/4 is resolvable at this
    # magnitude; a grossly short mantissa rounds to itself with margin 0
    if mpmath.mag(value) > bits - 2:
        raise PrecisionError(
            f"{bits} bits cannot resolve a value of magnitude 2^{mpmath.mag(value)}"
        )
    rounded = int(mpmath.nint(value))
    margin = abs(value - rounded)
    if not margin < mpf(1) / 4:
        raise PrecisionError(
            f"rounding margin {mpmath.nstr(margin, 8)} >= 1/4 at {bits} bits"
        )
    return BinetValue(value=value, rounded=rounded, margin=margin, bits=bits)


def _unit_cube_root() -> mpc:
    return mpc(mpf(-1) / 2, mpmath.sqrt(mpf(3)) / 2)


def _binet_t_value(rs: RootSet, n: int) -> mpf:
    # the omega2 term is the conjugate of the omega1 term (omega2 is stored
    # as the exact conjugate), so the pair contributes -2*Re(omega1 term)
    a, o1, o2 = rs.alpha, rs.omega1, rs.omega2
    alpha_term = a ** (n + 1) / ((a - o1) * (a - o2))
    omega_term = _cpow_int(o1, n + 1) / ((a - o1) * (o1 - o2))
    return alpha_term.real - 2 * omega_term.real


def binet_t(n: int, p: Precision) -> BinetValue:
    """Binet evaluation of T(n) with certified rounding.

    Raises PrecisionError when the distance to the nearest integer reaches
    1/4; callers retry with doubled bits (see binet_t_auto).
    """
    if n < 0:
        raise OutOfDomainError(f"binet_t requires n >= 0, got {n}")
    rs = compute_roots(p)
    with workprec(p.bits + _GUARD_BITS):
        return _round_checked(_binet_t_value(rs, n), p.bits)


def _binet_h_value(rs: RootSet, n: int, form: BinetForm) -> mpf:
    a, o1, o2 = rs.alpha, rs.omega1, rs.omega2
    if form == "power-sum":
        a_pow = a**n
        o1_pow = _cpow_int(o1, n)
        power_sum = a_pow + 2 * o1_pow.real  # alpha^n + omega1^n + conj
        alpha_term = a_pow * a / ((a - o1) * (a - o2))
        omega_term = o1_pow * o1 / ((a - o1) * (o1 - o2))
        t_value = alpha_term.real - 2 * omega_term.real
        return power_sum - t_value
    if form == "diagonalization":
        lam = (a - o1) * (a - o2) * (o1 - o2)
        a_n, o1_n, o2_n = mpc(a**n), _cpow_int(o1, n), _cpow_int(o2, n)
        a_n1, o1_n1, o2_n1 = a_n * a, o1_n * o1, o2_n * o2
        a_n2, o1_n2, o2_n2 = a_n1 * a, o1_n1 * o1, o2_n1 * o2
        value = (
            3 * (o1 - o2) * a_n2
            - 3 * (a - o2) * o1_n2
            + 3 * (a - o1) * o2_n2
            - 3 * (o1 - o2) * a_n1
            + 3 * (a - o2) * o1_n1
            - 3 * (a - o1) * o2_n1
            - (o1 - o2) * a_n
            + (a - o2) * o1_n
            - (a - o1) * o2_n
        ) / lam
        return value.real
    raise OutOfDomainError(f"unknown Binet form {form!r}")


def binet_h(n: int, p: Precision, form: BinetForm = "power-sum") -> BinetValue:
    """Binet evaluation of H(n), either as the power sum minus T(n) or via the
    eigendecomposition closed form; both round to the same integer."""
    if n < 0:
        raise OutOfDomainError(f"binet_h requires n >= 0, got {n}")
    rs = compute_roots(p)
    with workprec(p.bits + _GUARD_BITS):
        return _round_checked(_binet_h_value(rs, n, form), p.bits)


def adaptive_bits(n: int) -> int:
    """Starting precision for index n: the dominant root's growth plus headroom."""
    return max(64, math.ceil(abs(n) * LOG2_ALPHA) + 64)


_MAX_DOUBLINGS = 10


def binet_t_auto(n: int) -> BinetValue:
    """binet_t under the adaptive policy: start at adaptive_bits(n), double on
    a failed rounding margin."""
    bits = adaptive_bits(n)
    for _ in range(_MAX_DOUBLINGS):
        try:
            return binet_t(n, Precision(bits))
        except PrecisionError:
            bits *= 2
    raise PrecisionError(f"binet_t margin never certified up to {bits} bits (n={n})")


def binet_h_auto(n: int, form: BinetForm = "power-sum") -> BinetValue:
    """binet_h under the adaptive policy."""
    bits = adaptive_bits(n)
    for _ in range(_MAX_DOUBLINGS):
        try:
            return binet_h(n, Precision(bits), form)
        except PrecisionError:
            bits *= 2
    raise PrecisionError(f"binet_h margin never certified up to {bits} bits (n={n})")


def quadratic_approx_check(n: int, p: Precision, t=None) -> mpf:
    """Largest residual of the quadratic approximation at index n.

    Checks r^(n+1) = T(n)*r^2 + (T(n-1)+T(n-2))*r + T(n-1) for each root r,
    plus the alpha relation alpha*T(n) + (1+omega1*omega2)*T(n-1) + T(n-2)
    = alpha^n; returns the max absolute residual.
    """
    if n < 2:
        raise OutOfDomainError(f"quadratic_approx_check requires n >= 2, got {n}")
    if t is None:
        tm2, tm1, t0 = seq_range(Seq.T, n - 2, n)
    else:
        tm2, tm1, t0 = t(n - 2), t(n - 1), t(n)
    rs = compute_roots(p)
    with workprec(p.bits + _GUARD_BITS):
        a, o1, o2 = rs.alpha, rs.omega1, rs.omega2
        residual = mpf(0)
        for r in (mpc(a), o1, o2):
            residual = max(
                residual,
                abs(_cpow_int(r, n + 1) - (t0 * r * r + (tm1 + tm2) * r + tm1)),
            )
        residual = max(residual, abs(a * t0 + (1 + o1 * o2) * tm1 + tm2 - a**n))
        return residual


def diagonalize(p: Precision) -> Diagonalization:
    """P, D, P^-1 with Vandermonde eigenvector columns (r^2, r, 1).

    P^-1 comes from its closed form over lambda = (a-o1)(a-o2)(o1-o2); the
    reconstruction P*D*P^-1 must reproduce the generating matrix to within
    2^(-bits/2) or the precision is deemed insufficient.
    """
    rs = compute_roots(p)
    with workprec(p.bits + _GUARD_BITS):
        a, o1, o2 = rs.alpha, rs.omega1, rs.omega2
        lam = (a - o1) * (a - o2) * (o1 - o2)
        p_t = (
            (a**2, o1**2, o2**2),
            (mpc(a), o1, o2),
            (mpc(1), mpc(1), mpc(1)),
        )
        d = (
            (mpc(a), mpc(0), mpc(0)),
            (mpc(0), o1, mpc(0)),
            (mpc(0), mpc(0), o2),
        )
        p_t_inv = (
            ((o1 - o2) / lam, -(o1 + o2) * (o1 - o2) / lam, o1 * o2 * (o1 - o2) / lam),
            (-(a - o2) / lam, (a + o2) * (a - o2) / lam, -a * o2 * (a - o2) / lam),
            ((a - o1) / lam, -(a + o1) * (a - o1) / lam, a * o1 * (a - o1) / lam),
        )
        recon = _cmat_mul(_cmat_mul(p_t, d), p_t_inv)
        generating = ((1, 1, 1), (1, 0, 0), (0, 1, 0))
        error = mpf(0)
        for i in range(3):
            for j in range(3):
                error = max(error, abs(recon[i][j] - generating[i][j]))
        if error > mpf(2) ** (-(p.bits // 2)):
            raise PrecisionError(
                f"eigendecomposition reconstruction error {mpmath.nstr(error, 8)} "
                f"at {p.bits} bits"
            )
        return Diagonalization(
            p_t=p_t, d=d, p_t_inv=p_t_inv, reconstruction_error=error, bits=p.bits
        )


def _cmat_mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def cardano_delta_numerator(k_n: int, r_n: int) -> int:
    """Exact integer N with Delta(n) = N / 108.

    Computing the discriminant-like radicand exactly sidesteps the huge
    cancellation between its K^3-scale terms, and its sign decides the root
    configuration with no rounding doubt.
    """
    return 4 * k_n**3 - k_n**2 * r_n**2 - 18 * k_n * r_n + 4 * r_n**3 + 27


def cardano_roots(
    n: int, p: Precision, k_n: int | None = None, r_n: int | None = None
) -> CardanoRoots:
    """Characteristic roots of the n-th matrix power by Cardano's method.

    Solves y^3 - K(n)*y^2 + R(n)*y - 1 = 0 from the exact coefficients.  Both
    cube roots take the real branch, which is the pairing that satisfies
    a_n * b_n = K(n)^2/9 - R(n)/3 (Delta(n) > 0 here, so the other branches
    would pair complex conjugates); the product constraint is asserted.
    y1 recovers alpha^n, and y2, y3 the conjugate pair omega1^n, omega2^n.
    """
    if n < 1:
        raise OutOfDomainError(f"cardano_roots requires n >= 1, got {n}")
    if k_n is None:
        k_n = seq_value(Seq.K, n)
    if r_n is None:
        r_n = r_value(n)
    delta_num = cardano_delta_numerator(k_n, r_n)
    if delta_num <= 0:
        raise InternalInconsistencyError(
            f"unexpected root configuration: Delta({n}) = {delta_num}/108 <= 0"
        )
    with workprec(p.bits + _GUARD_BITS):
        delta = mpf(delta_num) / 108
        sqrt_delta = mpmath.sqrt(delta)
        # K^3/27 - K*R/6 + 1/2, kept exact until the single division
        half_shift = mpf(2 * k_n**3 - 9 * k_n * r_n + 27) / 54
        a_n = _real_cbrt(half_shift + sqrt_delta)
        b_n = _real_cbrt(half_shift - sqrt_delta)
        pair_target = mpf(k_n * k_n - 3 * r_n) / 9
        pair_residual = abs(a_n * b_n - pair_target)
        if pair_residual > max(abs(pair_target), mpf(1)) * mpf(2) ** (-(p.bits // 4)):
            raise InternalInconsistencyError(
                f"cube-root branch pairing violated at n={n}: "
                f"residual {mpmath.nstr(pair_residual, 8)}"
            )
        eps = _unit_cube_root()
        third_k = mpf(k_n) / 3
        return CardanoRoots(
            y1=third_k + a_n + b_n,
            y2=third_k + eps * a_n + eps**2 * b_n,
            y3=third_k + eps**2 * a_n + eps * b_n,
            a_n=a_n,
            b_n=b_n,
            delta_n=delta,
        )


def ratio_limit(n: int, p: Precision) -> mpf:
    """H(n+1)/H(n); approaches alpha geometrically at rate |omega1|/alpha."""
    if n < 1:
        raise OutOfDomainError(f"ratio_limit requires n >= 1, got {n}")
    h_n, h_n1 = seq_range(Seq.H, n, n + 1)
    if h_n == 0:
        raise UndefinedRatioError(f"H({n}) = 0; the consecutive ratio is undefined")
    with workprec(p.bits + _GUARD_BITS):
        return mpf(h_n1) / h_n


# Quadratic entries (c2, c1, c0) -> c2*x^2 + c1*x + c0 of the grid whose
# determinant collapses to 1681 * (x^3 - x^2 - x - 1)^2; obtained from the
# limit of the scaled matrix power divided by H(n-1).
LIMIT_GRID = (
    ((10, 16, 7), (16, 1, 3), (7, 3, 9)),
    ((7, 3, 9), (3, 13, -2), (9, -2, -6)),
    ((9, -2, -6), (-2, 5, 15), (-6, 15, 4)),
)

DEFAULT_SAMPLE_POINTS = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(1, 2),
)


def _grid_det(x):
    m = [[c2 * x * x + c1 * x + c0 for (c2, c1, c0) in row] for row in LIMIT_GRID]
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def char_eq_limit_check(
    p: Precision, points: tuple[Fraction, ...] = DEFAULT_SAMPLE_POINTS
) -> CharEqCheck:
    """Evidence that the limit grid's determinant is 1681*(x^3-x^2-x-1)^2.

    Numerically: |det| at the computed alpha (a root of the squared factor)
    must vanish to working precision.  Exactly: the determinant is compared
    against the factored form at rational sample points in Fraction
    arithmetic; both sides are degree-6 polynomials, so seven distinct points
    would constitute a proof.
    """
    rs = compute_roots(p)
    with workprec(p.bits + _GUARD_BITS):
        residual = abs(_grid_det(rs.alpha))
    samples = tuple(
        (x, _grid_det(x), 1681 * (x**3 - x**2 - x - 1) ** 2) for x in points
    )
    return CharEqCheck(residual=residual, samples=samples, bits=p.bits)
