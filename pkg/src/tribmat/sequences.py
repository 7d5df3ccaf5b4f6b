"""Exact integer computation of the Tribonacci family T, K, H.

All three sequences satisfy x(n) = x(n-1) + x(n-2) + x(n-3) and differ only
in their initial terms.  Negative indices follow the reversed recurrence
x(n-1) = x(n+2) - x(n+1) - x(n), so every operation here is total over the
signed integers.  Arithmetic is exact and unbounded (Python ints); there is
no fixed-width path.  All functions are pure.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, NamedTuple

from .errors import InternalInconsistencyError, InvalidRangeError, OutOfDomainError


class Seq(str, Enum):
    """Sequence selector: Tribonacci, Tribonacci-Lucas, or generalized (3, 0, 2)."""

    T = "T"
    K = "K"
    H = "H"


# Initial terms x(0), x(1), x(2).  K's terms are the Newton power sums
# p0 = 3, p1 = 1, p2 = 3 of the characteristic roots, so that
# K(n) = alpha^n + omega1^n + omega2^n.
INITIAL_TERMS: dict[Seq, tuple[int, int, int]] = {
    Seq.T: (0, 1, 1),
    Seq.K: (3, 1, 3),
    Seq.H: (3, 0, 2),
}

# Lookup signature used by operations that combine several sequence values;
# callers may substitute a windowed or instrumented source.
ValueSource = Callable[[int], int]


class StateVector(NamedTuple):
    """Column state (x(n+2), x(n+1), x(n)) moved along by the generating matrix."""

    top: int
    mid: int
    bot: int


def advance_state(v: StateVector) -> StateVector:
    """One application of the generating matrix: (top+mid+bot, top, mid)."""
    return StateVector(v.top + v.mid + v.bot, v.top, v.mid)


def seq_value(seq: Seq, n: int) -> int:
    """Exact sequence value at any signed index."""
    a, b, c = INITIAL_TERMS[Seq(seq)]
    if n >= 0:
        if n == 0:
            return a
        if n == 1:
            return b
        for _ in range(n - 2):
            a, b, c = b, c, a + b + c
        return c
    # (a, b, c) = (x(m), x(m+1), x(m+2)); step m down to n
    for _ in range(-n):
        a, b, c = c - b - a, a, b
    return a


def seq_range(seq: Seq, lo: int, hi: int) -> list[int]:
    """Contiguous exact values x(lo..hi) in a single linear pass."""
    if lo > hi:
        raise InvalidRangeError(f"lo={lo} exceeds hi={hi}")
    a, b, c = INITIAL_TERMS[Seq(seq)]
    out: list[int] = []
    if lo < 0:
        x, y, z = a, b, c
        back = []
        for _ in range(-lo):
            x, y, z = z - y - x, x, y
            back.append(x)  # x(-1), x(-2), ..., x(lo)
        back.reverse()
        out.extend(back[: min(hi, -1) - lo + 1])
    if hi >= 0:
        fwd = [a, b, c]
        for _ in range(hi - 2):
            fwd.append(fwd[-1] + fwd[-2] + fwd[-3])
        out.extend(fwd[max(lo, 0) : hi + 1])
    return out


def _default_source(seq: Seq) -> ValueSource:
    return lambda n: seq_value(seq, n)


def h_from_k_t(n: int, k: ValueSource | None = None, t: ValueSource | None = None) -> int:
    """H(n) as K(n) - T(n)."""
    k = k or _default_source(Seq.K)
    t = t or _default_source(Seq.T)
    return k(n) - t(n)


def h_from_t(n: int, t: ValueSource | None = None) -> int:
    """H(n) as 3*T(n+1) - 3*T(n) - T(n-1); valid for n >= 1."""
    if n < 1:
        raise OutOfDomainError(f"h_from_t requires n >= 1, got {n}")
    if t is None:
        tm1, t0, tp1 = seq_range(Seq.T, n - 1, n + 1)
    else:
        tm1, t0, tp1 = t(n - 1), t(n), t(n + 1)
    return 3 * tp1 - 3 * t0 - tm1


def k_from_h(n: int, h: ValueSource | None = None) -> int:
    """K(n) recovered from H via 9*H(n+2) - 2*H(n+1) + 35*H(n) = 41*K(n).

    The combination is provably divisible by 41; a remainder signals a bug.
    """
    if h is None:
        h0, h1, h2 = seq_range(Seq.H, n, n + 2)
    else:
        h0, h1, h2 = h(n), h(n + 1), h(n + 2)
    combo = 9 * h2 - 2 * h1 + 35 * h0
    quotient, rem = divmod(combo, 41)
    if rem:
        raise InternalInconsistencyError(
            f"9*H({n + 2}) - 2*H({n + 1}) + 35*H({n}) = {combo} is not divisible by 41"
        )
    return quotient


def r_value(n: int, h: ValueSource | None = None) -> int:
    """The second characteristic coefficient R(n) of the n-th matrix power.

    Evaluates the 9-term quadratic form in H(n-3..n+1) whose value is 41*R(n),
    checks exact divisibility, and returns the quotient.  R(n) equals K(-n)
    because the three characteristic roots of the n-th power have product 1.
    """
    if h is None:
        hm3, hm2, hm1, h0, hp1 = seq_range(Seq.H, n - 3, n + 1)
    else:
        hm3, hm2, hm1, h0, hp1 = h(n - 3), h(n - 2), h(n - 1), h(n), h(n + 1)
    combo = (
        4 * h0 * hm1
        + 2 * h0 * hm2
        + 6 * h0 * hm3
        + 6 * h0 * h0
        - 6 * hp1 * hm1
        - 6 * hm1 * hm2
        - 4 * hp1 * hm2
        + hp1 * hm3
        - 3 * hm1 * hm1
    )
    quotient, rem = divmod(combo, 41)
    if rem:
        raise InternalInconsistencyError(
            f"quadratic form for R({n}) = {combo} is not divisible by 41"
        )
    return quotient
