"""Exact arithmetic for the Tribonacci family T, K, H and its matrix theory."""

from .bench import BenchRecord, bench_index, bench_sweep
from .errors import (
    BenchConsistencyError,
    InternalInconsistencyError,
    InvalidRangeError,
    OutOfDomainError,
    PrecisionError,
    TribmatError,
    UndefinedRatioError,
    UnknownIdentityError,
)
from .identities import (
    Corruption,
    IDENTITY_NAMES,
    VerificationReport,
    all_pass,
    verify,
    verify_all,
)
from .matrices import (
    COMPANION,
    GENERATING,
    IDENTITY3,
    Mat3,
    ScaledMat3,
    cassini_t,
    char_poly_coeffs,
    cubic_identity_h,
    det3,
    h_power_closed,
    mat_mul,
    mat_pow,
    mat_vec,
    propagate,
    q_power_closed,
)
from .roots import (
    BinetValue,
    CardanoRoots,
    CharEqCheck,
    Diagonalization,
    Precision,
    RootSet,
    adaptive_bits,
    binet_h,
    binet_h_auto,
    binet_t,
    binet_t_auto,
    cardano_roots,
    char_eq_limit_check,
    compute_roots,
    diagonalize,
    quadratic_approx_check,
    ratio_limit,
)
from .sequences import (
    Seq,
    StateVector,
    advance_state,
    h_from_k_t,
    h_from_t,
    k_from_h,
    r_value,
    seq_range,
    seq_value,
)

__version__ = "0.1.0"

__all__ = [
    "BenchConsistencyError",
    "BenchRecord",
    "BinetValue",
    "COMPANION",
    "CardanoRoots",
    "CharEqCheck",
    "Corruption",
    "Diagonalization",
    "GENERATING",
    "IDENTITY3",
    "IDENTITY_NAMES",
    "InternalInconsistencyError",
    "InvalidRangeError",
    "Mat3",
    "OutOfDomainError",
    "Precision",
    "PrecisionError",
    "RootSet",
    "ScaledMat3",
    "Seq",
    "StateVector",
    "TribmatError",
    "UndefinedRatioError",
    "UnknownIdentityError",
    "VerificationReport",
    "adaptive_bits",
    "advance_state",
    "all_pass",
    "bench_index",
    "bench_sweep",
    "binet_h",
    "binet_h_auto",
    "binet_t",
    "binet_t_auto",
    "cardano_roots",
    "cassini_t",
    "char_eq_limit_check",
    "char_poly_coeffs",
    "compute_roots",
    "cubic_identity_h",
    "det3",
    "diagonalize",
    "h_from_k_t",
    "h_from_t",
    "h_power_closed",
    "k_from_h",
    "mat_mul",
    "mat_pow",
    "mat_vec",
    "propagate",
    "q_power_closed",
    "quadratic_approx_check",
    "r_value",
    "ratio_limit",
    "seq_range",
    "seq_value",
    "verify",
    "verify_all",
]
