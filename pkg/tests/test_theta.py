"""Tests for the theta series engine, null tables, and identity checks."""

import itertools
import random

import mpmath
import pytest

from genus2 import theta as T

TOL = T.DEFAULT_TOL


def _tau(seed):
    return T.random_siegel(random.Random(seed))


def _z(seed, spread=0.35):
    rng = random.Random(seed)
    return (mpmath.mpc(rng.uniform(-0.4, 0.4), rng.uniform(-spread, spread)),
            mpmath.mpc(rng.uniform(-0.4, 0.4), rng.uniform(-spread, spread)))


# ---------------------------------------------------------------------------
# characteristics and table data


def test_parity_classification_exhaustive():
    evens = odds = 0
    for bits in itertools.product((0, 1), repeat=4):
        char = T.ThetaChar.from_bits(*bits)
        a1, a2, b1, b2 = bits
        expected = (a1 * b1 + a2 * b2) % 2
        assert char.parity() == expected
        if char.is_even():
            evens += 1
        else:
            odds += 1
    assert evens == 10
    assert odds == 6


def test_char_table_is_frozen_data():
    expected = {
        1: (0, 0, 0, 0), 2: (0, 0, 1, 1), 3: (0, 0, 1, 0), 4: (0, 0, 0, 1),
        5: (1, 0, 0, 0), 6: (1, 0, 0, 1), 7: (0, 1, 0, 0), 8: (1, 1, 0, 0),
        9: (0, 1, 1, 0), 10: (1, 1, 1, 1), 11: (0, 1, 0, 1), 12: (0, 1, 1, 1),
        13: (1, 0, 1, 0), 14: (1, 0, 1, 1), 15: (1, 1, 0, 1), 16: (1, 1, 1, 0),
    }
    assert {i: c.bits() for i, c in T.CHAR_TABLE.items()} == expected
    assert all(T.CHAR_TABLE[i].is_even() for i in range(1, 11))
    assert not any(T.CHAR_TABLE[i].is_even() for i in range(11, 17))
    assert tuple(c.bits() for c in T.DUAL_CHARS) == (
        (0, 0, 0, 0), (1, 1, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0))


def test_char_validation_and_labels():
    with pytest.raises(ValueError):
        T.ThetaChar.from_bits(0, 2, 0, 0)
    char = T.ThetaChar.from_bits(1, 0, 0, 1)
    assert char.label() == "[10;01]"
    third = T.ThetaChar((0, "1/3"), (0, 0))
    assert not third.is_half_integer()
    with pytest.raises(ValueError):
        third.parity()


# ---------------------------------------------------------------------------
# Siegel points


def test_siegel_point_validation():
    with pytest.raises(ValueError):
        T.SiegelPoint(mpmath.mpc(0, -1), 0, mpmath.mpc(0, 1))
    with pytest.raises(ValueError):
        T.SiegelPoint(mpmath.mpc(0, 1), mpmath.mpc(0, 2), mpmath.mpc(0, 1))
    tau = T.SiegelPoint(mpmath.mpc(0.2, 1.1), mpmath.mpc(0.1, 0.2),
                        mpmath.mpc(-0.3, 0.9))
    lam = tau.min_imag_eigenvalue()
    assert 0 < lam <= min(tau.t11.imag, tau.t22.imag)
    assert not tau.is_diagonal()
    assert T.SiegelPoint(mpmath.mpc(0, 1), 0, mpmath.mpc(0, 1)).is_diagonal()
    doubled = tau.scaled(2)
    assert doubled.t12 == 2 * tau.t12


def test_siegel_json_round_trip():
    tau = _tau(11)
    back = T.SiegelPoint.from_json(tau.to_json())
    assert abs(back.t11 - tau.t11) < 1e-20
    assert abs(back.t12 - tau.t12) < 1e-20
    assert abs(back.t22 - tau.t22) < 1e-20


def test_random_siegel_eigenvalue_window():
    rng = random.Random(7)
    for _ in range(10):
        tau = T.random_siegel(rng)
        assert tau.min_imag_eigenvalue() >= 0.9 - 1e-12


# ---------------------------------------------------------------------------
# series engine


def test_odd_characteristics_vanish_at_origin():
    tau = _tau(21)
    for i in range(11, 17):
        assert abs(T.theta_null(T.CHAR_TABLE[i], tau, TOL)) < TOL


def test_even_characteristics_do_not_vanish_generically():
    tau = _tau(22)
    for i in range(1, 11):
        assert abs(T.theta_null(T.CHAR_TABLE[i], tau, TOL)) > 0.01


def test_engine_against_genus_one_products():
    # at diagonal tau the series factors into two one-variable thetas;
    # mpmath's jtheta supplies an independent reference for all 16 labels
    factor_map = {(0, 0): (3, 1), (0, 1): (4, 1), (1, 0): (2, 1),
                  (1, 1): (1, -1)}
    with mpmath.workprec(140):
        tau = T.SiegelPoint(mpmath.mpc("0.31", "1.07"), 0,
                            mpmath.mpc("-0.22", "0.88"))
        z = (mpmath.mpc("0.17", "0.11"), mpmath.mpc("-0.08", "-0.21"))

        def one_var(abit, bbit, w, scalar):
            idx, sign = factor_map[(abit, bbit)]
            return sign * mpmath.jtheta(idx, mpmath.pi * w,
                                        mpmath.expjpi(scalar))

        for index in range(1, 17):
            char = T.CHAR_TABLE[index]
            a1, a2, b1, b2 = char.bits()
            ref = (one_var(a1, b1, z[0], tau.t11)
                   * one_var(a2, b2, z[1], tau.t22))
            got = T.theta_value(char, z, tau, TOL)
            assert abs(got - ref) < mpmath.mpf(10) ** -20


def test_quasi_periodicity_with_phase():
    tau = _tau(23)
    z = _z(24)
    for index in (1, 5, 12):
        char = T.CHAR_TABLE[index]
        for m in ((1, 0), (0, 1), (2, -1)):
            assert T.quasiperiod_residual(char, z, tau, m, TOL) < 10 * TOL
    # a.m half-integer flips the sign; plain equality genuinely fails
    with mpmath.workprec(140):
        char = T.CHAR_TABLE[5]
        lhs = T.theta_value(char, (z[0] + 1, z[1]), tau, TOL)
        rhs = T.theta_value(char, z, tau, TOL)
        assert abs(lhs + rhs) < 10 * TOL
        assert abs(lhs - rhs) > 0.01


def test_multiplier_formula():
    tau = _tau(25)
    z = _z(26)
    for index in (1, 5, 12):
        char = T.CHAR_TABLE[index]
        for n in ((1, 0), (0, 1), (1, -1)):
            assert T.multiplier_residual(char, z, tau, n, TOL) < 10 * TOL


def test_tolerance_validation_errors():
    tau = _tau(27)
    with pytest.raises(ValueError):
        T.theta_value(T.CHAR_TABLE[1], (0, 0), tau, tol=0)
    # nearly singular Im(tau) pushes the radius past its cap
    thin = T.SiegelPoint(mpmath.mpc(0, 1), mpmath.mpc(0, 1 - 5e-7),
                         mpmath.mpc(0, 1))
    with pytest.raises(ValueError):
        T.theta_value(T.CHAR_TABLE[1], (0, 0), thin, tol=mpmath.mpf(10) ** -12)
    # absurd tolerance exceeds the supported working precision
    with pytest.raises(ValueError):
        T.theta_value(T.CHAR_TABLE[1], (0, 0), tau,
                      tol=mpmath.mpf(10) ** -30000)


def test_tail_bound_honored():
    with mpmath.workprec(120):
        for seed in (31, 32, 33):
            tau = _tau(seed)
            z = _z(seed + 100, spread=0.25)
            lam = tau.min_imag_eigenvalue() * (1 - mpmath.mpf(2) ** -40)
            bnorm = (mpmath.sqrt(z[0].imag ** 2 + z[1].imag ** 2)
                     * (1 + mpmath.mpf(2) ** -40) + mpmath.mpf(2) ** -40)
            full = T._choose_radius(lam, bnorm, TOL)
            half = max(2, full // 2)
            v_full = T.theta_value(T.CHAR_TABLE[1], z, tau, TOL, radius=full)
            v_half = T.theta_value(T.CHAR_TABLE[1], z, tau, TOL, radius=half)
            assert abs(v_full - v_half) <= T._tail_bound(lam, bnorm, half)
            assert T._tail_bound(lam, bnorm, full) <= TOL


# ---------------------------------------------------------------------------
# null tables and degenerations


def test_diagonal_tau_flags_degenerate():
    tau = T.SiegelPoint(mpmath.mpc(0.3, 1.1), 0, mpmath.mpc(-0.2, 0.9))
    nulls = T.even_nulls(tau, TOL)
    assert nulls.degenerate
    assert abs(nulls[10]) < mpmath.mpf(10) ** -20
    with pytest.raises(ValueError):
        T.thomae_lambdas(nulls)


def test_near_identity_tau_not_degenerate():
    tau = T.SiegelPoint(mpmath.mpc(0, 1), mpmath.mpc(0, 0.1), mpmath.mpc(0, 1))
    nulls = T.even_nulls(tau, TOL)
    assert not nulls.degenerate
    for i in range(1, 11):
        assert abs(nulls[i]) > 0.01


def test_conjugation_symmetry():
    with mpmath.workprec(140):
        for seed in (41, 42, 43):
            tau = _tau(seed)
            left = T.even_nulls(tau, TOL)
            right = T.even_nulls(tau.conjugated_negated(), TOL)
            for a, b in zip(left, right):
                assert abs(mpmath.conj(a) - b) < 10 * TOL


def test_null_table_indexing():
    tau = _tau(44)
    nulls = T.even_nulls(tau, TOL)
    duals = T.dual_nulls(tau, TOL)
    assert len(list(nulls)) == 10
    assert len(list(duals)) == 4
    with pytest.raises(IndexError):
        nulls[11]
    with pytest.raises(IndexError):
        duals[5]
    assert T.ThetaNulls.char(3).label() == "[00;10]"
    assert T.DualThetaNulls.char(2).label() == "[11;00]"


# ---------------------------------------------------------------------------
# identities


def test_frobenius_residuals_small():
    for seed in (51, 52, 53):
        nulls = T.even_nulls(_tau(seed), TOL)
        assert T.frobenius_check(nulls) < 1e-9


def test_doubling_identities():
    for seed in (54, 55):
        tau = _tau(seed)
        nulls = T.even_nulls(tau, TOL)
        duals = T.dual_nulls(tau, TOL)
        assert T.doubling_check(nulls, duals) < 1e-9


def test_picard2_residuals_small():
    for seed in (56, 57):
        nulls = T.even_nulls(_tau(seed), TOL)
        assert max(T.picard2_residuals(nulls)) < 1e-9


def test_thomae_single_fitted_factor():
    for seed in (58, 59):
        nulls = T.even_nulls(_tau(seed), TOL)
        assert max(T.thomae_residuals(nulls)) < 1e-9


def test_thomae_picard_twenty_random_tau():
    rng = random.Random(600)
    for _ in range(20):
        tau = T.random_siegel(rng)
        nulls = T.even_nulls(tau, TOL)
        lams = T.thomae_lambdas(nulls)
        assert max(T.picard2_residuals(nulls, lams)) < 1e-8
        assert max(T.thomae_residuals(nulls, lams)) < 1e-8
        l1, l2, l3 = lams
        for value in lams:
            assert abs(value) > 1e-6 and abs(value - 1) > 1e-6
        assert abs(l1 - l2) > 1e-6 and abs(l1 - l3) > 1e-6
        assert abs(l2 - l3) > 1e-6


def test_doubling_with_elliptic_argument():
    for seed in (61, 62):
        residuals = T.doubling_z_residuals(_tau(seed), _z(seed + 7), TOL)
        assert len(residuals) == 8
        assert max(residuals) < 1e-8


def test_riemann_relation():
    tau = _tau(63)
    assert T.riemann_residual(tau, _z(64), _z(65), TOL) < 1e-8
    # z1 = z2 = 0 degenerates to the sum-of-squares doubling row
    assert T.riemann_residual(tau, (0, 0), (0, 0), TOL) < 1e-8
    nulls = T.even_nulls(tau, TOL)
    duals = T.dual_nulls(tau, TOL)
    lhs = nulls[1] ** 2
    rhs = sum(v * v for v in duals)
    assert abs(lhs - rhs) < 1e-9


def test_satake_diagram_commutes():
    tau = _tau(66)
    nulls = T.even_nulls(tau, TOL)
    duals = T.dual_nulls(tau, TOL)
    assert T.satake_residual(nulls, duals) < 1e-9
    # both degree-two images scale quadratically, so the projective images
    # are scale free
    scaled = T.DualThetaNulls(tau, [3 * v for v in duals.values], TOL)
    for top, bottom in zip(T.satake_veronese(scaled), T.satake_veronese(duals)):
        assert abs(top - 9 * bottom) < 1e-9


def test_satake_image_on_degenerate_stratum():
    # diagonal tau sits over the vanishing locus of the tenth coordinate
    tau = T.SiegelPoint(mpmath.mpc(0.1, 1.2), 0, mpmath.mpc(0.4, 0.8))
    duals = T.dual_nulls(tau, TOL)
    image = T.satake_veronese(duals)
    assert abs(image[9]) < 1e-15
    assert all(abs(v) > 0.01 for v in image[:4])


def test_quartic_image_pins_theta_12():
    # the quartic with parameters built from the dual nulls vanishes on
    # [theta1(z)^2 : theta2(z)^2 : theta7(z)^2 : theta12(z)^2]; swapping in
    # a different odd characteristic breaks it, validating the table entry
    def quartic_residual(a, b, c, d2, y0, y1, y2, y3):
        terms = [
            a * a * (y0 ** 2 * y1 ** 2 + y2 ** 2 * y3 ** 2),
            b * b * (y0 ** 2 * y2 ** 2 + y1 ** 2 * y3 ** 2),
            c * c * (y0 ** 2 * y3 ** 2 + y1 ** 2 * y2 ** 2),
            2 * a * b * (y0 * y1 - y2 * y3) * (y0 * y2 + y1 * y3),
            -2 * a * c * (y0 * y1 + y2 * y3) * (y0 * y3 + y1 * y2),
            2 * b * c * (y0 * y2 - y1 * y3) * (y0 * y3 - y1 * y2),
            d2 * y0 * y1 * y2 * y3,
        ]
        return abs(sum(terms)) / max(1, max(abs(t) for t in terms))

    with mpmath.workprec(140):
        tau = _tau(67)
        t1, t2, t3, t4 = T.dual_nulls(tau, TOL).values
        s1, s2, s3, s4 = t1 * t1, t2 * t2, t3 * t3, t4 * t4
        a = ((2 * t1 * t4 - 2 * t2 * t3) * (2 * t1 * t4 + 2 * t2 * t3)
             * (2 * t1 * t3 + 2 * t2 * t4))
        b = ((s1 + s2 - s3 - s4) * (s1 - s2 + s3 - s4)
             * (2 * t1 * t2 - 2 * t3 * t4))
        c = ((s1 - s2 - s3 + s4) * (s1 + s2 + s3 + s4)
             * (2 * t1 * t2 + 2 * t3 * t4))
        d2 = (256 * t1 * t2 * t4 * t3 * (s1 * s4 - s2 * s3)
              * (s1 ** 2 - s2 ** 2 - s3 ** 2 + s4 ** 2)
              + 8 * (s1 + s4) * (s2 + s3)
              * (s1 + s2 + s3 + s4) ** 2 * (s1 - s2 - s3 + s4) ** 2
              + 8 * (s1 - s4) * (s2 - s3)
              * (s1 + s2 - s3 - s4) ** 2 * (s1 - s2 + s3 - s4) ** 2
              - 32 * (s1 * s2 + s3 * s4) * (s1 + s2 + s3 + s4)
              * (s1 - s2 + s3 - s4) * (s1 - s2 - s3 + s4)
              * (s1 + s2 - s3 - s4))
        for zseed in (68, 69):
            z = _z(zseed, spread=0.25)
            y0 = T.theta_value(T.CHAR_TABLE[1], z, tau, TOL) ** 2
            y1 = T.theta_value(T.CHAR_TABLE[2], z, tau, TOL) ** 2
            y2 = T.theta_value(T.CHAR_TABLE[7], z, tau, TOL) ** 2
            good = T.theta_value(T.CHAR_TABLE[12], z, tau, TOL) ** 2
            bad = T.theta_value(T.CHAR_TABLE[11], z, tau, TOL) ** 2
            assert quartic_residual(a, b, c, d2, y0, y1, y2, good) < 1e-18
            assert quartic_residual(a, b, c, d2, y0, y1, y2, bad) > 1e-6
