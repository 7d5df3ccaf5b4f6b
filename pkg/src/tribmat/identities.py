"""Executable registry of the sequence and matrix identities.

Each identity is registered once under a stable name with its index domain.
verify() runs one identity over a clamped range and
returns a machine-readable report; verify_all() runs the whole registry.
Reports are deterministic: identical inputs produce identical reports, and
results are independent of evaluation order (indices are pure functions).

A Corruption lets a sandboxed run perturb a single sequence value, which the
suite must detect: at least one identity flips to fail for any single-value
perturbation inside the verified window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import mpmath
from mpmath import mpf, workprec

from .errors import TribmatError, UnknownIdentityError, InvalidRangeError
from .matrices import (
    COMPANION,
    GENERATING,
    cassini_t,
    char_poly_coeffs,
    cubic_identity_h,
    h_power_closed,
    mat_pow,
    propagate,
    q_power_closed,
)
from .roots import (
    Precision,
    adaptive_bits,
    binet_h,
    binet_t,
    cardano_roots,
    char_eq_limit_check,
    compute_roots,
    quadratic_approx_check,
    ratio_limit,
)
from .sequences import Seq, h_from_t, k_from_h, r_value, seq_range

DEFAULT_BITS = 128

# Sequence indices consulted by any identity lie within n - 3 .. n + 2.
_WINDOW_MARGIN = 5


@dataclass(frozen=True)
class Corruption:
    """Add delta to one sequence value inside a sandboxed verification run."""

    seq: Seq
    index: int
    delta: int


@dataclass(frozen=True)
class Failure:
    index: int
    expected: str
    actual: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity over one (clamped) index range.

    lo > hi encodes an empty range (vacuously passing, checked = 0).  status
    is "pass" exactly when no failure was found and every index was checked.
    """

    identity: str
    lo: int
    hi: int
    precision_bits: int | None
    status: str
    checked: int
    first_failure: Failure | None
    note: str | None = None


class _Window:
    """One sequence over a contiguous index range with O(1) lookup."""

    def __init__(self, seq: Seq, lo: int, hi: int, corruption: Corruption | None):
        self.lo = lo
        self.values = seq_range(seq, lo, hi)
        if corruption is not None and corruption.seq == seq and lo <= corruption.index <= hi:
            self.values[corruption.index - lo] += corruption.delta

    def __call__(self, n: int) -> int:
        return self.values[n - self.lo]


class _Env:
    """Prefetched sequence windows plus the working precision for one run."""

    def __init__(self, lo: int, hi: int, bits: int, corruption: Corruption | None):
        wlo, whi = lo - _WINDOW_MARGIN, hi + _WINDOW_MARGIN
        self.t = _Window(Seq.T, wlo, whi, corruption)
        self.k = _Window(Seq.K, wlo, whi, corruption)
        self.h = _Window(Seq.H, wlo, whi, corruption)
        self.bits = bits

    def eff_bits(self, n: int) -> int:
        # numeric checks near index n never run below the adaptive floor
        return max(self.bits, adaptive_bits(abs(n) + 2))


Check = Callable[[_Env, int], Failure | None]


def _fail(n: int, expected: object, actual: object) -> Failure:
    return Failure(index=n, expected=str(expected), actual=str(actual))


def _check_trib_recurrence(env: _Env, n: int) -> Failure | None:
    predicted = env.t(n - 1) + env.t(n - 2) + env.t(n - 3)
    return None if env.t(n) == predicted else _fail(n, predicted, env.t(n))


def _check_h_recurrence(env: _Env, n: int) -> Failure | None:
    predicted = env.h(n + 1) + env.h(n) + env.h(n - 1)
    return None if env.h(n + 2) == predicted else _fail(n, predicted, env.h(n + 2))


def _check_h_eq_k_minus_t(env: _Env, n: int) -> Failure | None:
    predicted = env.k(n) - env.t(n)
    return None if env.h(n) == predicted else _fail(n, predicted, env.h(n))


def _check_h_from_t(env: _Env, n: int) -> Failure | None:
    predicted = h_from_t(n, t=env.t)
    return None if env.h(n) == predicted else _fail(n, predicted, env.h(n))


def _check_k41(env: _Env, n: int) -> Failure | None:
    quotient = k_from_h(n, h=env.h)  # raises if 41 does not divide
    return None if quotient == env.k(n) else _fail(n, env.k(n), quotient)


def _check_q_power_closed(env: _Env, n: int) -> Failure | None:
    closed = q_power_closed(n, t=env.t)
    powered = mat_pow(COMPANION, n)
    return None if closed == powered else _fail(n, powered.rows, closed.rows)


def _check_h_power_closed(env: _Env, n: int) -> Failure | None:
    closed = h_power_closed(n, h=env.h).canonical()  # raises on a 41 miss
    powered = mat_pow(GENERATING, n)
    return None if closed == powered else _fail(n, powered.rows, closed.rows)


def _check_cassini_t(env: _Env, n: int) -> Failure | None:
    value = cassini_t(n, t=env.t)
    return None if value == 1 else _fail(n, 1, value)


def _check_cubic_identity(env: _Env, n: int) -> Failure | None:
    value = cubic_identity_h(n, h=env.h)
    return None if value == 41 else _fail(n, 41, value)


def _check_state_propagation(env: _Env, n: int) -> Failure | None:
    state = propagate(n)
    expected = (env.h(n + 2), env.h(n + 1), env.h(n))
    return None if tuple(state) == expected else _fail(n, expected, tuple(state))


def _check_char_poly(env: _Env, n: int) -> Failure | None:
    coeffs = char_poly_coeffs(n)
    expected = (-env.k(n), r_value(n, h=env.h), -1)
    return None if coeffs == expected else _fail(n, expected, coeffs)


def _check_binet_t(env: _Env, n: int) -> Failure | None:
    value = _auto_binet(lambda bits: binet_t(n, Precision(bits)), env.eff_bits(n))
    return None if value.rounded == env.t(n) else _fail(n, env.t(n), value.rounded)


def _check_binet_h_diag(env: _Env, n: int) -> Failure | None:
    value = _auto_binet(
        lambda bits: binet_h(n, Precision(bits), form="diagonalization"),
        env.eff_bits(n),
    )
    return None if value.rounded == env.h(n) else _fail(n, env.h(n), value.rounded)


def _auto_binet(evaluate, start_bits: int):
    from .errors import PrecisionError

    bits = start_bits
    for _ in range(10):
        try:
            return evaluate(bits)
        except PrecisionError:
            bits *= 2
    raise PrecisionError(f"rounding margin never certified up to {bits} bits")


def _check_quadratic_approx(env: _Env, n: int) -> Failure | None:
    bits = env.eff_bits(n)
    residual = quadratic_approx_check(n, Precision(bits), t=env.t)
    rs = compute_roots(Precision(bits))
    with workprec(bits + 32):
        tolerance = (1 + rs.alpha ** (n + 1)) * mpf(2) ** (-(bits // 2))
    if residual <= tolerance:
        return None
    return _fail(n, f"residual <= {mpmath.nstr(tolerance, 8)}", mpmath.nstr(residual, 8))


def _check_cardano(env: _Env, n: int) -> Failure | None:
    bits = env.eff_bits(n)
    k_n = k_from_h(n, h=env.h)
    r_n = r_value(n, h=env.h)
    roots = cardano_roots(n, Precision(bits), k_n=k_n, r_n=r_n)
    rs = compute_roots(Precision(bits))
    with workprec(bits + 32):
        tolerance = mpf(2) ** (-(bits // 4))
        alpha_pow = rs.alpha**n
        checks = (
            ("y1 vs alpha^n", abs(roots.y1 - alpha_pow) / alpha_pow, tolerance),
            (
                "Vieta sum",
                abs(roots.y1 + roots.y2 + roots.y3 - k_n),
                tolerance * max(1, abs(k_n)),
            ),
            ("Vieta product", abs(roots.y1 * roots.y2 * roots.y3 - 1), tolerance),
        )
        for label, residual, bound in checks:
            if residual > bound:
                return _fail(n, f"{label} <= {mpmath.nstr(bound, 8)}", mpmath.nstr(residual, 8))
    return None


def _check_ratio_limit(env: _Env, n: int) -> Failure | None:
    h_n, h_n1 = env.h(n), env.h(n + 1)
    if h_n == 0:
        return _fail(n, "H(n) != 0", 0)
    bits = env.eff_bits(n)
    rs = compute_roots(Precision(bits))
    with workprec(bits + 32):
        ratio = mpf(h_n1) / h_n
        residual = abs(ratio - rs.alpha)
        # Exact envelope from the Binet decomposition H(n) = A*alpha^n
        # + 2*Re(B*omega1^n): |ratio - alpha| <= 2|B||omega1 - alpha|
        # * |omega1|^n / |H(n)|, plus the quantization floor of the two
        # measured quantities at this precision.
        a, o1, o2 = rs.alpha, rs.omega1, rs.omega2
        b_coeff = -(3 * a * o2 + 2) / ((a - o1) * (o1 - o2))
        envelope = 2 * abs(b_coeff) * abs(o1 - a) * abs(o1) ** n / abs(h_n)
        bound = envelope * (1 + mpf(2) ** -30) + mpf(2) ** (-(bits - 8))
    if residual <= bound:
        return None
    return _fail(n, f"|ratio - alpha| <= {mpmath.nstr(bound, 8)}", mpmath.nstr(residual, 8))


def _check_char_eq_limit(env: _Env, n: int) -> Failure | None:
    bits = max(env.bits, 64)
    check = char_eq_limit_check(Precision(bits))
    if not check.samples_match:
        bad = next((x, d, e) for x, d, e in check.samples if d != e)
        return _fail(n, f"det({bad[0]}) = {bad[2]}", bad[1])
    tolerance = mpf(2) ** (-(bits // 2))
    if check.residual > tolerance:
        return _fail(
            n, f"|det(alpha)| <= {mpmath.nstr(tolerance, 8)}", mpmath.nstr(check.residual, 8)
        )
    return None


@dataclass(frozen=True)
class IdentityDef:
    name: str
    dom_lo: int | None
    dom_hi: int | None
    numeric: bool
    check: Check


# One entry per identity; names are part of the CLI contract.
_DEFS = (
    IdentityDef("trib-recurrence", None, None, False, _check_trib_recurrence),
    IdentityDef("q-power-closed", 0, None, False, _check_q_power_closed),
    IdentityDef("cassini-t", 3, None, False, _check_cassini_t),
    IdentityDef("binet-t", 0, None, True, _check_binet_t),
    IdentityDef("quadratic-approx", 2, None, True, _check_quadratic_approx),
    IdentityDef("h-recurrence", None, None, False, _check_h_recurrence),
    IdentityDef("h-eq-k-minus-t", None, None, False, _check_h_eq_k_minus_t),
    IdentityDef("h-from-t", 1, None, False, _check_h_from_t),
    IdentityDef("k41-relation", None, None, False, _check_k41),
    IdentityDef("h-power-closed", 0, None, False, _check_h_power_closed),
    IdentityDef("cubic-identity-41", 3, None, False, _check_cubic_identity),
    IdentityDef("state-propagation", 0, None, False, _check_state_propagation),
    IdentityDef("binet-h-diag", 0, None, True, _check_binet_h_diag),
    IdentityDef("cardano-roots", 1, None, True, _check_cardano),
    IdentityDef("char-poly-hn", 1, None, False, _check_char_poly),
    IdentityDef("ratio-limit", 2, None, True, _check_ratio_limit),
    # index-free identity: pinned to the single pseudo-index 0
    IdentityDef("char-eq-limit", 0, 0, True, _check_char_eq_limit),
)

REGISTRY: dict[str, IdentityDef] = {d.name: d for d in _DEFS}
IDENTITY_NAMES: tuple[str, ...] = tuple(d.name for d in _DEFS)

assert len(REGISTRY) == 17, "registry must cover every identity exactly once"


def verify(
    name: str,
    lo: int,
    hi: int,
    p: Precision | None = None,
    corruption: Corruption | None = None,
) -> VerificationReport:
    """Run one identity over [lo, hi] clamped to its domain.

    Out-of-domain portions are clamped with a recorded note rather than
    rejected; an empty clamped range passes vacuously with checked = 0.
    Evaluation stops at the first counterexample.
    """
    if name not in REGISTRY:
        raise UnknownIdentityError(f"unknown identity {name!r}")
    if lo > hi:
        raise InvalidRangeError(f"lo={lo} exceeds hi={hi}")
    ident = REGISTRY[name]
    bits = (p or Precision(DEFAULT_BITS)).bits
    clo = lo if ident.dom_lo is None else max(lo, ident.dom_lo)
    chi = hi if ident.dom_hi is None else min(hi, ident.dom_hi)
    note = None if (clo, chi) == (lo, hi) else f"domain clamped from [{lo}, {hi}] to [{clo}, {chi}]"
    reported_bits = bits if ident.numeric else None
    if clo > chi:
        return VerificationReport(
            identity=name,
            lo=clo,
            hi=chi,
            precision_bits=reported_bits,
            status="pass",
            checked=0,
            first_failure=None,
            note=f"{note}; empty range passes vacuously",
        )
    env = _Env(clo, chi, bits, corruption)
    checked = 0
    failure: Failure | None = None
    for n in range(clo, chi + 1):
        checked += 1
        try:
            failure = ident.check(env, n)
        except TribmatError as exc:
            failure = Failure(index=n, expected="no error", actual=f"{type(exc).__name__}: {exc}")
        if failure is not None:
            break
    return VerificationReport(
        identity=name,
        lo=clo,
        hi=chi,
        precision_bits=reported_bits,
        status="pass" if failure is None else "fail",
        checked=checked,
        first_failure=failure,
        note=note,
    )


def verify_all(
    lo: int,
    hi: int,
    p: Precision | None = None,
    corruption: Corruption | None = None,
) -> list[VerificationReport]:
    """Run every registered identity over [lo, hi]; reports in registry order."""
    return [verify(name, lo, hi, p, corruption) for name in IDENTITY_NAMES]


def all_pass(reports: list[VerificationReport]) -> bool:
    return all(r.status == "pass" for r in reports)
