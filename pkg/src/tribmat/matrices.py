"""Exact 3x3 matrix engine for the companion matrix and its powers.

The Tribonacci companion matrix Q and the generating matrix of the H
sequence are the same integer matrix [[1,1,1],[1,0,0],[0,1,0]]; the two
closed forms for its n-th power (T-entry form and 1/41-scaled H-entry form)
are independent expressions that must agree.  Pure functions over immutable
values; no internal caching.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError, OutOfDomainError
from .sequences import Seq, StateVector, ValueSource, seq_range

Row = tuple[int, int, int]


@dataclass(frozen=True)
class Mat3:
    """3x3 integer matrix, row-major."""

    rows: tuple[Row, Row, Row]

    def __getitem__(self, i: int) -> Row:
        return self.rows[i]


IDENTITY3 = Mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

# Companion matrix of the third-order recurrence; also the generating matrix
# of the H sequence.
COMPANION = Mat3(((1, 1, 1), (1, 0, 0), (0, 1, 0)))
GENERATING = COMPANION


@dataclass(frozen=True)
class ScaledMat3:
    """Integer matrix with a single positive denominator (numerator/denominator)."""

    numerator: Mat3
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise OutOfDomainError(f"denominator must be positive, got {self.denominator}")

    def canonical(self) -> Mat3:
        """The represented integral matrix; every entry must divide exactly."""
        d = self.denominator
        rows = []
        for row in self.numerator.rows:
            for entry in row:
                if entry % d:
                    raise InternalInconsistencyError(
                        f"entry {entry} is not divisible by denominator {d}"
                    )
            rows.append(tuple(entry // d for entry in row))
        return Mat3(tuple(rows))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    """Exact matrix product."""
    return Mat3(
        tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
            for i in range(3)
        )
    )


def mat_vec(m: Mat3, v: StateVector) -> StateVector:
    """Exact matrix-vector product."""
    return StateVector(*(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3)))


def mat_pow(m: Mat3, n: int) -> Mat3:
    """m**n by square-and-multiply, most significant bit first; m**0 = I."""
    if n < 0:
        raise OutOfDomainError(f"negative matrix powers are excluded, got n={n}")
    result = IDENTITY3
    for bit in bin(n)[2:] if n else "":
        result = mat_mul(result, result)
        if bit == "1":
            result = mat_mul(result, m)
    return result


def det3(m: Mat3) -> int:
    """Determinant by cofactor expansion along the first row."""
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def trace3(m: Mat3) -> int:
    return m[0][0] + m[1][1] + m[2][2]


def principal_minor_sum(m: Mat3) -> int:
    """Sum of the three principal 2x2 minors (the second invariant of m)."""
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return (e * i - f * h) + (a * i - c * g) + (a * e - b * d)


def q_power_closed(n: int, t: ValueSource | None = None) -> Mat3:
    """Closed form of Q**n in terms of Tribonacci values T(n-3..n+1).

    Total over signed n via the backward-extended sequence; for n >= 0 it
    equals mat_pow(COMPANION, n).
    """
    if t is None:
        tm3, tm2, tm1, t0, tp1 = seq_range(Seq.T, n - 3, n + 1)
    else:
        tm3, tm2, tm1, t0, tp1 = t(n - 3), t(n - 2), t(n - 1), t(n), t(n + 1)
    return Mat3(
        (
            (tp1, t0 + tm1, t0),
            (t0, tm1 + tm2, tm1),
            (tm1, tm2 + tm3, tm2),
        )
    )


def h_power_closed(n: int, h: ValueSource | None = None) -> ScaledMat3:
    """Closed form of the generating matrix's n-th power: numerator over 41.

    Entries are fixed integer combinations of H(n-3..n+1); each is divisible
    by 41, which canonical() asserts.
    """
    if h is None:
        hm3, hm2, hm1, h0, hp1 = seq_range(Seq.H, n - 3, n + 1)
    else:
        hm3, hm2, hm1, h0, hp1 = h(n - 3), h(n - 2), h(n - 1), h(n), h(n + 1)
    numerator = Mat3(
        (
            (
                10 * hp1 + 16 * h0 + 7 * hm1,
                10 * h0 + 26 * hm1 + 23 * hm2 + 7 * hm3,
                10 * h0 + 16 * hm1 + 7 * hm2,
            ),
            (
                7 * hp1 + 3 * h0 + 9 * hm1,
                7 * h0 + 10 * hm1 + 12 * hm2 + 9 * hm3,
                7 * h0 + 3 * hm1 + 9 * hm2,
            ),
            (
                9 * hp1 - 2 * h0 - 6 * hm1,
                9 * h0 + 7 * hm1 - 8 * hm2 - 6 * hm3,
                9 * h0 - 2 * hm1 - 6 * hm2,
            ),
        )
    )
    return ScaledMat3(numerator, 41)


def cassini_t(n: int, t: ValueSource | None = None) -> int:
    """Cassini-type cubic form over T(n-3..n+1); equals 1 for all n."""
    if t is None:
        tm3, tm2, tm1, t0, tp1 = seq_range(Seq.T, n - 3, n + 1)
    else:
        tm3, tm2, tm1, t0, tp1 = t(n - 3), t(n - 2), t(n - 1), t(n), t(n + 1)
    return (
        tm1**3 + tm2**2 * tp1 + tm3 * t0**2 - 2 * tm2 * tm1 * t0 - tm3 * tm1 * tp1
    )


def cubic_identity_h(n: int, h: ValueSource | None = None) -> int:
    """Cubic form over H(n-3..n+1); equals 41 (41 times the unit determinant)."""
    if h is None:
        hm3, hm2, hm1, h0, hp1 = seq_range(Seq.H, n - 3, n + 1)
    else:
        hm3, hm2, hm1, h0, hp1 = h(n - 3), h(n - 2), h(n - 1), h(n), h(n + 1)
    return (
        hm1**3 + hm2**2 * hp1 + hm3 * h0**2 - 2 * hm2 * hm1 * h0 - hm3 * hm1 * hp1
    )


def propagate(n: int) -> StateVector:
    """Apply the n-th matrix power to (H(2), H(1), H(0)) = (2, 0, 3).

    Returns (H(n+2), H(n+1), H(n)) computed purely through the matrix route.
    """
    if n < 0:
        raise OutOfDomainError(f"propagate requires n >= 0, got {n}")
    return mat_vec(mat_pow(GENERATING, n), StateVector(2, 0, 3))


def char_poly_coeffs(n: int) -> tuple[int, int, int]:
    """Coefficients (c2, c1, c0) of det(y*I - M) = y^3 + c2*y^2 + c1*y + c0
    for M the n-th power of the generating matrix.

    Equals (-K(n), R(n), -1): trace gives K(n), the principal-minor sum gives
    R(n), and the determinant is always 1.
    """
    if n < 1:
        raise OutOfDomainError(f"char_poly_coeffs requires n >= 1, got {n}")
    m = mat_pow(GENERATING, n)
    return (-trace3(m), principal_minor_sum(m), -det3(m))
