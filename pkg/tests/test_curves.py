"""Igusa invariants, the Siegel dictionary, Q, and the j-invariant maps."""

import random
from fractions import Fraction as F

import mpmath
import pytest

from genus2 import curves as cv
from genus2.rings import CC, QQ, prime_field, quad_ext, weighted_proj_equal

F13 = prime_field(13)


def _sextic_from_roots(K, roots, lead=None):
    p = [lead if lead is not None else K.one()]
    for r in roots:
        p = cv._poly_mul_linear(K, p, r)
    p += [K.zero()] * (7 - len(p))
    return cv.BinarySextic(K, p)


def _random_rosenhain(rng):
    while True:
        vals = set()
        while len(vals) < 3:
            v = F(rng.randint(-30, 30), rng.randint(1, 12))
            if v not in (0, 1):
                vals.add(v)
        try:
            return cv.RosenhainCurve(*sorted(vals))
        except ValueError:
            continue


# ---------------------------------------------------------------------------
# model validation


def test_singular_sextic_rejected():
    with pytest.raises(ValueError):
        _sextic_from_roots(QQ, [F(k) for k in (0, 1, 2, 3, 4, 4)])
    with pytest.raises(ValueError):
        cv.RosenhainCurve(F(2), F(2), F(5))
    with pytest.raises(ValueError):
        cv.RosenhainCurve(F(0), F(2), F(5))
    with pytest.raises(ValueError):
        cv.LegendreCurve(F(1))


def test_rosenhain_sextic_has_root_at_infinity():
    R = cv.RosenhainCurve(F(2), F(3), F(5))
    sx = R.to_sextic()
    assert sx.coeffs[6] == 0 and sx.coeffs[5] == 1
    assert not QQ.is_zero(sx.discriminant())


# ---------------------------------------------------------------------------
# Igusa invariants


def test_igusa_frozen_sextic_zero_to_five():
    sx = _sextic_from_roots(QQ, [F(k) for k in range(6)])
    I = cv.igusa_invariants(sx)
    assert I.point.coords == (F(3110), F(165952), F(159056000), F(1194393600))


def test_j10_is_discriminant():
    rng = random.Random(23)
    for _ in range(10):
        R = _random_rosenhain(rng)
        sx = R.to_sextic()
        assert cv.igusa_invariants(sx).J10 == sx.discriminant()
    sx = _sextic_from_roots(QQ, [F(k) for k in range(6)])
    assert cv.igusa_invariants(sx).J10 == sx.discriminant()


def test_rosenhain_special_j10():
    # on the component l1 = l2*l3 the discriminant factors completely
    for l2, l3 in [(F(2), F(3)), (F(5), F(7)), (F(2, 3), F(7, 5))]:
        R = cv.RosenhainCurve(l2 * l3, l2, l3)
        expected = (
            l2**6 * l3**6 * (l2 - 1) ** 4 * (l3 - 1) ** 4
            * (l2 * l3 - 1) ** 2 * (l2 - l3) ** 2
        )
        assert cv.igusa_invariants(R).J10 == expected


def test_translation_covariance():
    sx = _sextic_from_roots(QQ, [F(k) for k in range(6)])
    I = cv.igusa_invariants(sx)
    shifted = sx.substituted(F(1), F(1), F(0), F(1))
    assert cv.igusa_invariants(shifted).equal(I)


def test_mobius_and_scaling_covariance():
    rng = random.Random(31)
    sx = _sextic_from_roots(QQ, [F(k) for k in (0, 1, 2, 3, 4, 5)])
    I = cv.igusa_invariants(sx)
    for _ in range(3):
        while True:
            a, b, c, d = (F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4))
            if a * d != b * c:
                break
        sub = sx.substituted(a, b, c, d)
        assert cv.igusa_invariants(sub).equal(I)
    assert cv.igusa_invariants(sx.scaled(F(-7, 9))).equal(I)


def test_igusa_weight_scaling():
    # f -> c*f multiplies J_2k by c^2k
    sx = _sextic_from_roots(QQ, [F(k) for k in range(6)])
    I = cv.igusa_invariants(sx)
    c = F(3, 5)
    Ic = cv.igusa_invariants(sx.scaled(c))
    assert Ic.J2 == c**2 * I.J2
    assert Ic.J4 == c**4 * I.J4
    assert Ic.J6 == c**6 * I.J6
    assert Ic.J10 == c**10 * I.J10


def test_igusa_finite_field_matches_reduction():
    # computing over F_13 agrees with reducing the rational invariants
    R = cv.RosenhainCurve(F(2), F(3), F(5))
    I = cv.igusa_invariants(R)
    Rp = cv.RosenhainCurve(F13.from_int(2), F13.from_int(3), F13.from_int(5))
    Ip = cv.igusa_invariants(Rp)
    for exact, red in zip(I.point.coords, Ip.point.coords):
        assert F13.from_int(exact.numerator) / F13.from_int(exact.denominator) == red


def test_igusa_complex_matches_exact():
    R = cv.RosenhainCurve(F(2), F(3), F(5))
    I = cv.igusa_invariants(R)
    Rc = cv.RosenhainCurve(mpmath.mpc(2), mpmath.mpc(3), mpmath.mpc(5), K=CC)
    Ic = cv.igusa_invariants(Rc)
    for exact, approx in zip(I.point.coords, Ic.point.coords):
        target = mpmath.mpf(exact.numerator) / mpmath.mpf(exact.denominator)
        assert CC.eq(mpmath.mpc(target), approx)


# ---------------------------------------------------------------------------
# Siegel dictionary


def test_siegel_unit_normalization():
    I = cv.IgusaPoint(QQ, F(24), F(4), F(8), F(-(2**14)))
    S = cv.siegel_from_igusa(I)
    assert S.chi10 == 1
    assert S.chi12 == -1


def test_siegel_round_trip():
    rng = random.Random(41)
    for _ in range(10):
        R = _random_rosenhain(rng)
        I = cv.igusa_invariants(R)
        back = cv.igusa_from_siegel(cv.siegel_from_igusa(I))
        assert back.point.coords == I.point.coords  # exact inversion
        assert back.equal(I)


def test_siegel_rejects_degenerate():
    with pytest.raises(ValueError):
        cv.IgusaPoint(QQ, F(1), F(1), F(1), F(0))


# ---------------------------------------------------------------------------
# Q and the fifteen components


def test_q_frozen_value():
    R = cv.RosenhainCurve(F(2), F(3), F(5))
    assert cv.q_modular(R) == F("26118452774501513779229296875/4")


def test_q_bolza_zero():
    rng = random.Random(43)
    for _ in range(8):
        s1 = F(rng.randint(-6, 6), rng.randint(1, 4))
        s2 = F(rng.randint(-6, 6), rng.randint(1, 4))
        try:
            sx = cv.bolza_sextic(QQ, s1, s2)
        except ValueError:
            continue
        assert cv.q_modular(sx) == 0


def test_q_special_rosenhain_zero():
    assert cv.q_modular(cv.RosenhainCurve(F(6), F(2), F(3))) == 0
    rng = random.Random(47)
    for _ in range(8):
        l2 = F(rng.randint(2, 20), rng.randint(1, 7))
        l3 = l2 + F(rng.randint(1, 9), rng.randint(1, 7))
        try:
            R = cv.RosenhainCurve(l2 * l3, l2, l3)
        except ValueError:
            continue
        assert cv.q_modular(R) == 0


def test_pringsheim_factor_layout():
    prod, squares = cv.pringsheim_product(cv.RosenhainCurve(F(6), F(2), F(3)))
    assert len(squares) == 15
    assert squares[0] == 0 and prod == 0  # (l1 - l2*l3)^2
    prod, squares = cv.pringsheim_product(cv.RosenhainCurve(F(2), F(3), F(5)))
    assert all(s != 0 for s in squares) and prod != 0


def test_pringsheim_equals_chi35_expression():
    for lams in [(F(2), F(3), F(5)), (F(7, 2), F(4), F(9)), (F(11), F(3, 5), F(2))]:
        R = cv.RosenhainCurve(*lams)
        S = cv.siegel_from_igusa(cv.igusa_invariants(R))
        prod, _ = cv.pringsheim_product(R)
        assert prod == -F(2**22) * S.chi35_squared() / S.chi10**4


def _on_component_triples(rng, count=15):
    """One Rosenhain triple on each of the fifteen components."""
    out = []
    idx = 0
    while len(out) < count:
        l2 = F(rng.randint(2, 30), rng.randint(1, 9))
        l3 = F(rng.randint(2, 30), rng.randint(1, 9))
        if l2 in (0, 1) or l3 in (0, 1) or l2 == l3:
            continue
        # factor idx is linear in l1: solve coeff*l1 + rest = 0
        one = F(1)
        probe0 = cv.pringsheim_factors(_FakeRos(F(0), l2, l3))[idx]
        probe1 = cv.pringsheim_factors(_FakeRos(one, l2, l3))[idx]
        coeff = probe1 - probe0
        if coeff == 0:
            continue
        l1 = -probe0 / coeff
        try:
            R = cv.RosenhainCurve(l1, l2, l3)
        except ValueError:
            continue
        assert cv.pringsheim_factors(R)[idx] == 0
        out.append(R)
        idx += 1
    return out


class _FakeRos:
    def __init__(self, l1, l2, l3):
        self.l1, self.l2, self.l3 = l1, l2, l3


def test_q_vanishes_iff_some_factor_vanishes():
    rng = random.Random(53)
    for _ in range(100):
        R = _random_rosenhain(rng)
        prod, _ = cv.pringsheim_product(R)
        q = cv.q_modular(R)
        assert (q == 0) == (prod == 0)
    for R in _on_component_triples(rng):
        assert cv.q_modular(R) == 0


# ---------------------------------------------------------------------------
# j-invariants


def test_legendre_j_values():
    assert cv.legendre_j(cv.LegendreCurve(F(-1))) == 1728
    assert cv.legendre_j(cv.LegendreCurve(F(2))) == 1728
    assert cv.legendre_j(cv.LegendreCurve(F(3))) == F(21952, 9)


def test_legendre_j_anharmonic():
    rng = random.Random(59)
    for _ in range(10):
        L = F(rng.randint(2, 40), rng.randint(1, 11))
        if L in (0, 1):
            continue
        j = cv.legendre_j(cv.LegendreCurve(L))
        assert cv.legendre_j(cv.LegendreCurve(1 - L)) == j
        assert cv.legendre_j(cv.LegendreCurve(1 / L)) == j


def _j_of_cubic(a, b, c):
    # y^2 = x^3 + a x^2 + b x + c, standard c4^3 / Delta
    c4 = 16 * a * a - 48 * b
    c6 = -64 * a**3 + 288 * a * b - 864 * c
    disc = (c4**3 - c6**2) / 1728
    return c4**3 / disc


def test_bolza_j_pair():
    assert cv.bolza_j_pair(F(0), F(0)) == (0, 0)
    j1, j2 = cv.bolza_j_pair(F(1), F(2))
    assert (j2, j1) == cv.bolza_j_pair(F(2), F(1))
    assert j1 == F(-256, 23) and j2 == F(32000, 23)
    # cross-check against the standard j of the two quotient cubics
    assert j1 == _j_of_cubic(F(2), F(1), F(1))
    assert j2 == _j_of_cubic(F(1), F(2), F(1))
    rng = random.Random(61)
    for _ in range(8):
        s1 = F(rng.randint(-6, 6), rng.randint(1, 4))
        s2 = F(rng.randint(-6, 6), rng.randint(1, 4))
        try:
            j1, j2 = cv.bolza_j_pair(s1, s2)
        except ValueError:
            continue
        assert j1 == _j_of_cubic(s2, s1, F(1))
        assert j2 == _j_of_cubic(s1, s2, F(1))


# ---------------------------------------------------------------------------
# the elliptic-fibered quartic dictionary


def test_si_igusa_unit_example():
    I = cv.si_igusa(cv.SIQuartic(F(0), F(0), F(1), F(0)))
    assert I.point.coords == (F(0), F(0), F(0), F(4))


def test_si_igusa_gamma_zero_rejected():
    with pytest.raises(ValueError):
        cv.si_igusa(cv.SIQuartic(F(1), F(1), F(0), F(1)))
    with pytest.raises(ValueError):
        cv.SIQuartic(F(1), F(1), F(0), F(0))


def test_si_round_trip():
    rng = random.Random(67)
    for _ in range(6):
        R = _random_rosenhain(rng)
        I = cv.igusa_invariants(R)
        S = cv.siegel_from_igusa(I)
        back = cv.si_igusa(cv.si_from_siegel(S))
        assert back.equal(I)


def test_si_q_matches_direct_evaluation():
    # q of the quartic's Igusa point is the direct degree-60 evaluation
    # times (3*gamma)^30, the scale tying the two representatives
    rng = random.Random(71)
    for _ in range(6):
        a, b, d = (F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        g = F(rng.randint(1, 9), rng.randint(1, 4))
        quart = cv.SIQuartic(a, b, g, d)
        q1 = cv.q_modular(cv.si_igusa(quart))
        direct = cv.SiegelFormValues(
            a, b, g / F(2**12 * 3**5), d / F(2**12 * 3**6), K=QQ
        )
        q2 = cv._q_polynomial(direct)
        assert q1 == (3 * g) ** 30 * q2


# ---------------------------------------------------------------------------
# JSON schema


def test_curve_json_round_trip():
    R = cv.RosenhainCurve(F(2), F(3), F(5))
    data = cv.curve_to_json(R)
    back = cv.curve_from_json(data)
    assert isinstance(back, cv.RosenhainCurve)
    assert (back.l1, back.l2, back.l3) == (R.l1, R.l2, R.l3)

    sx = R.to_sextic()
    back = cv.curve_from_json(cv.curve_to_json(sx))
    assert back.coeffs == sx.coeffs

    E = cv.LegendreCurve(F(-1))
    back = cv.curve_from_json(cv.curve_to_json(E))
    assert back.lam == E.lam

    data = {"model": "bolza", "s": ["1/1", "2/1"], "field": {"type": "QQ"}}
    assert isinstance(cv.curve_from_json(data), cv.BinarySextic)

    F13sq = quad_ext(13)
    Rp = cv.RosenhainCurve(F13sq.from_int(2), F13sq.from_int(3), F13sq(0, 1), K=F13sq)
    back = cv.curve_from_json(cv.curve_to_json(Rp))
    assert back.K is F13sq and back.l3 == F13sq(0, 1)

    with pytest.raises(ValueError):
        cv.curve_from_json({"model": "septic"})
