import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tribmat import (
    InternalInconsistencyError,
    InvalidRangeError,
    OutOfDomainError,
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

# frozen oracle values (recurrence unrolled by hand/script, indices -5..8)
T_VALUES = [2, 0, -1, 1, 0, 0, 1, 1, 2, 4, 7, 13, 24, 44]
K_VALUES = [-1, -5, 5, -1, -1, 3, 1, 3, 7, 11, 21, 39, 71, 131]
H_VALUES = [-3, -5, 6, -2, -1, 3, 0, 2, 5, 7, 14, 26, 47, 87]


@pytest.mark.parametrize(
    "seq,expected",
    [(Seq.T, T_VALUES), (Seq.K, K_VALUES), (Seq.H, H_VALUES)],
)
def test_small_windows(seq, expected):
    assert seq_range(seq, -5, 8) == expected
    assert [seq_value(seq, n) for n in range(-5, 9)] == expected


def test_spec_examples():
    assert seq_value(Seq.H, 0) == 3
    assert seq_value(Seq.H, -1) == -1
    assert seq_value(Seq.H, -2) == -2
    assert seq_value(Seq.H, 7) == 47
    assert seq_value(Seq.T, 5) == 7
    assert seq_value(Seq.K, 0) == 3


def test_seq_range_examples():
    assert seq_range(Seq.H, 0, 5) == [3, 0, 2, 5, 7, 14]
    assert seq_range(Seq.H, 0, 0) == [3]
    assert seq_range(Seq.T, -2, 2) == [1, 0, 0, 1, 1]
    with pytest.raises(InvalidRangeError):
        seq_range(Seq.H, 5, 4)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(Seq)), st.integers(-220, 220), st.integers(0, 30))
def test_seq_range_matches_seq_value(seq, lo, width):
    hi = lo + width
    assert seq_range(seq, lo, hi) == [seq_value(seq, n) for n in range(lo, hi + 1)]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(list(Seq)), st.integers(-200, 200))
def test_recurrence_all_signed(seq, n):
    assert seq_value(seq, n + 2) == seq_value(seq, n + 1) + seq_value(seq, n) + seq_value(
        seq, n - 1
    )


def test_h_from_k_t(h_oracle):
    assert h_from_k_t(0) == 3
    assert h_from_k_t(5) == 14
    assert h_from_k_t(-1) == -1
    # brute-force confirmed extension of the K - T relation to negative n
    for n in range(-200, 201):
        assert h_from_k_t(n) == h_oracle[n]


def test_h_from_t(h_oracle):
    assert h_from_t(1) == 0
    assert h_from_t(2) == 2
    assert h_from_t(3) == 5
    for n in range(1, 201):
        assert h_from_t(n) == h_oracle[n]
    with pytest.raises(OutOfDomainError):
        h_from_t(0)


def test_k_from_h(k_oracle):
    assert k_from_h(0) == 3
    assert k_from_h(1) == 1
    assert k_from_h(3) == 7
    for n in range(-100, 201):
        combo = 9 * seq_value(Seq.H, n + 2) - 2 * seq_value(Seq.H, n + 1) + 35 * seq_value(
            Seq.H, n
        )
        assert combo % 41 == 0
        assert k_from_h(n) == k_oracle[n]


def test_k_from_h_detects_corruption():
    bad = lambda n: seq_value(Seq.H, n) + (1 if n == 7 else 0)
    with pytest.raises(InternalInconsistencyError):
        k_from_h(7, h=bad)


def test_r_value_examples():
    assert r_value(3) == 5
    assert r_value(0) == 3
    assert r_value(1) == -1


def test_r_value_is_backward_k(k_oracle):
    # derived oracle R(n) = K(-n), brute-force confirmed over [3, 50]
    for n in range(3, 51):
        assert r_value(n) == k_oracle[-n]
    for n in range(-20, 60):
        assert r_value(n) == k_oracle[-n]


def test_advance_state():
    assert advance_state(StateVector(2, 0, 3)) == StateVector(5, 2, 0)
    assert advance_state(StateVector(5, 2, 0)) == StateVector(7, 5, 2)
    assert advance_state(StateVector(0, 0, 0)) == StateVector(0, 0, 0)


def test_advance_state_iterated(h_oracle):
    v = StateVector(2, 0, 3)
    for n in range(200):
        assert v == (h_oracle[n + 2], h_oracle[n + 1], h_oracle[n])
        v = advance_state(v)
