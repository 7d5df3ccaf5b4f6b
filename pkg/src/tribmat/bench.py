"""Benchmark harness: one H value by three independent routes.

Methods: "iterative" (linear recurrence), "matrix-power" (binary powering of
the generating matrix), and "closed-form" (Binet evaluation at adaptive
precision, rounded to the exact integer).  All three must agree before any
timing is reported; a disagreement aborts with BenchConsistencyError.
Timings are wall-clock and environment-dependent; they are reported, never
asserted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BenchConsistencyError, OutOfDomainError
from .matrices import propagate
from .roots import binet_h_auto
from .sequences import Seq, seq_value


@dataclass(frozen=True)
class BenchRecord:
    method: str
    n: int
    wall_nanoseconds: int
    digits: int


def dec_digits(n: int) -> int:
    """Exact decimal length without str() (which CPython caps by default)."""
    n = abs(n)
    if n == 0:
        return 1
    estimate = int(n.bit_length() * 0.30102999566398114)
    while 10**estimate <= n:
        estimate += 1
    while 10 ** (estimate - 1) > n:
        estimate -= 1
    return estimate


def h_iterative(n: int) -> int:
    return seq_value(Seq.H, n)


def h_matrix_power(n: int) -> int:
    return propagate(n).bot


def h_closed_form(n: int) -> int:
    return binet_h_auto(n, form="power-sum").rounded


METHODS = (
    ("iterative", h_iterative),
    ("matrix-power", h_matrix_power),
    ("closed-form", h_closed_form),
)


def bench_index(n: int) -> list[BenchRecord]:
    """Time all methods at one index; equality-gate values before reporting."""
    if n < 0:
        raise OutOfDomainError(f"bench requires n >= 0, got {n}")
    timed: list[tuple[str, int, int]] = []
    for name, fn in METHODS:
        start = time.perf_counter_ns()
        value = fn(n)
        elapsed = time.perf_counter_ns() - start
        timed.append((name, value, elapsed))
    reference = timed[0][1]
    for name, value, _ in timed[1:]:
        if value != reference:
            raise BenchConsistencyError(
                f"method {name!r} disagrees at n={n}: "
                f"value mod 10^18 = {value % 10**18} vs {reference % 10**18}, "
                f"bit lengths {value.bit_length()} vs {reference.bit_length()}"
            )
    digits = dec_digits(reference)
    records = [
        BenchRecord(method=name, n=n, wall_nanoseconds=elapsed, digits=digits)
        for name, _, elapsed in timed
    ]
    records.sort(key=lambda r: (r.n, r.method))
    return records


def bench_sweep(max_exp: int) -> list[BenchRecord]:
    """bench_index at n = 2^k for k in 1..max_exp, sorted by (n, method)."""
    if max_exp < 1:
        raise OutOfDomainError(f"max_exp must be >= 1, got {max_exp}")
    records: list[BenchRecord] = []
    for k in range(1, max_exp + 1):
        records.extend(bench_index(2**k))
    return records
