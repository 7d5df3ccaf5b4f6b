import mpmath
import pytest
from mpmath import mpf, workprec

from tribmat import (
    InternalInconsistencyError,
    OutOfDomainError,
    Precision,
    PrecisionError,
    Seq,
    UndefinedRatioError,
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
    seq_value,
)
from tribmat.roots import cardano_delta_numerator

P128 = Precision(128)
P256 = Precision(256)


def test_precision_floor():
    with pytest.raises(OutOfDomainError):
        Precision(63)
    assert Precision(64).bits == 64


def test_compute_roots_alpha_digits():
    rs = compute_roots(P128)
    assert mpmath.nstr(rs.alpha, 16) == "1.839286755214161"
    assert rs.alpha > 1
    assert abs(rs.omega1) < 1
    assert rs.omega2.real == rs.omega1.real
    assert rs.omega2.imag + rs.omega1.imag == 0  # exact conjugates
    assert rs.residual_bound < mpf(2) ** -100


def test_compute_roots_symmetric_functions():
    rs = compute_roots(P128)
    with workprec(192):
        a, o1, o2 = rs.alpha, rs.omega1, rs.omega2
        assert abs(a + o1 + o2 - 1) < mpf(2) ** -60
        assert abs(a * o1 + a * o2 + o1 * o2 + 1) < mpf(2) ** -60
        assert abs(a * o1 * o2 - 1) < mpf(2) ** -60


def test_binet_t_examples(t_oracle):
    assert binet_t(0, P128).rounded == 0
    assert binet_t(5, P128).rounded == 7
    assert binet_t(50, P256).rounded == t_oracle[50]
    assert binet_t(5, P128).margin < mpf(1) / 4
    with pytest.raises(OutOfDomainError):
        binet_t(-1, P128)


def test_binet_h_examples(h_oracle):
    assert binet_h(0, P128, form="power-sum").rounded == 3
    assert binet_h(7, P128, form="diagonalization").rounded == 47
    assert binet_h_auto(200, form="power-sum").rounded == h_oracle[200]
    assert binet_h_auto(200, form="diagonalization").rounded == h_oracle[200]
    with pytest.raises(OutOfDomainError):
        binet_h(3, P128, form="no-such-form")


def test_binet_forms_agree():
    rs = compute_roots(P128)
    for n in (0, 1, 10, 60, 90):
        ps = binet_h(n, P128, form="power-sum")
        dg = binet_h(n, P128, form="diagonalization")
        with workprec(192):
            assert abs(ps.value - dg.value) <= mpf(2) ** -64 * rs.alpha**n


def test_adaptive_policy(t_oracle, h_oracle):
    assert adaptive_bits(0) == 64
    assert adaptive_bits(500) > 64 + 400
    for n in (0, 7, 100, 350, 500):
        assert binet_t_auto(n).rounded == t_oracle[n]
        assert binet_h_auto(n).rounded == h_oracle[n]


def test_binet_insufficient_precision_is_detected():
    # 64 bits cannot separate H(500) from its neighbors
    with pytest.raises(PrecisionError):
        binet_h(500, Precision(64))


def test_quadratic_approx_residuals():
    assert quadratic_approx_check(2, P128) < mpf(2) ** -60
    assert quadratic_approx_check(10, P128) < mpf(2) ** -50
    assert quadratic_approx_check(40, P256) < mpf(2) ** -100
    with pytest.raises(OutOfDomainError):
        quadratic_approx_check(1, P128)


def test_diagonalize_reconstruction(h_oracle):
    diag = diagonalize(P128)
    assert diag.reconstruction_error < mpf(2) ** -60
    rs = compute_roots(P128)
    assert diag.d[0][0] == rs.alpha
    assert diag.d[1][1] == rs.omega1
    assert diag.d[2][2] == rs.omega2
    # third row of P * D^n * P^-1 applied to (2, 0, 3) recovers H(n)
    with workprec(192):
        for n in (0, 1, 2, 25, 50):
            row = [
                sum(diag.p_t[2][k] * diag.d[k][k] ** n * diag.p_t_inv[k][j] for k in range(3))
                for j in range(3)
            ]
            value = (row[0] * 2 + row[1] * 0 + row[2] * 3).real
            assert int(mpmath.nint(value)) == h_oracle[n]
            assert abs(value - h_oracle[n]) < mpf(1) / 4


def test_diagonalize_error_scales_with_precision():
    err_by_bits = {bits: diagonalize(Precision(bits)).reconstruction_error for bits in (128, 256, 512)}
    assert err_by_bits[128] < mpf(2) ** -60
    assert err_by_bits[256] < mpf(2) ** -120
    assert err_by_bits[512] < mpf(2) ** -250


def test_cardano_examples():
    rs = compute_roots(P128)
    r1 = cardano_roots(1, P128)
    with workprec(160):
        assert abs(r1.y1 - rs.alpha) < mpf(2) ** -100
    r3 = cardano_roots(3, P128)
    assert mpmath.nstr(r3.y1, 11) == "6.2222625231"
    with pytest.raises(OutOfDomainError):
        cardano_roots(0, P128)


def test_cardano_invariants():
    rs = compute_roots(P128)
    with workprec(160):
        for n in range(1, 51):
            roots = cardano_roots(n, P128)
            k_n = seq_value(Seq.K, n)
            assert roots.delta_n > 0
            alpha_pow = rs.alpha**n
            assert abs(roots.y1 - alpha_pow) / alpha_pow < mpf(2) ** -32
            assert abs(roots.y1 + roots.y2 + roots.y3 - k_n) < mpf(2) ** -32 * max(1, k_n)
            assert abs(roots.y1 * roots.y2 * roots.y3 - 1) < mpf(2) ** -32
            # conjugate-pair structure: y2 and y3 mirror each other
            assert abs(roots.y2 - mpmath.conj(roots.y3)) < mpf(2) ** -32


def test_cardano_rejects_bad_configuration():
    # (y-1)^3 = y^3 - 3y^2 + 3y - 1: an all-real triple root makes Delta = 0
    assert cardano_delta_numerator(3, 3) == 0
    with pytest.raises(InternalInconsistencyError):
        cardano_roots(5, P128, k_n=3, r_n=3)


def test_ratio_limit():
    rs = compute_roots(P256)
    assert ratio_limit(2, P128) == mpf(5) / 2
    with workprec(288):
        assert abs(ratio_limit(40, P256) - rs.alpha) < 1e-10
        assert abs(ratio_limit(90, P256) - rs.alpha) < 1e-12
    with pytest.raises(UndefinedRatioError):
        ratio_limit(1, P128)
    with pytest.raises(OutOfDomainError):
        ratio_limit(0, P128)


def test_char_eq_limit_check():
    check = char_eq_limit_check(P128)
    assert check.residual < mpf(2) ** -50
    assert check.samples_match
    by_point = {x: det for x, det, _ in check.samples}
    from fractions import Fraction

    assert by_point[Fraction(1)] == 6724  # 1681 * (1 - 1 - 1 - 1)^2
    assert by_point[Fraction(0)] == 1681


def test_char_eq_limit_seven_points_prove_identity():
    # both sides are degree-6 polynomials: equality at 7 points is a proof
    from fractions import Fraction

    points = tuple(Fraction(x) for x in (0, 1, -1, 2, 3, -2)) + (Fraction(1, 2),)
    check = char_eq_limit_check(P128, points=points)
    assert len(check.samples) == 7
    assert check.samples_match
