"""Genus-2 curve models and their invariants.

A smooth binary sextic y^2 = f(x, z) determines a weighted projective point
[J2 : J4 : J6 : J10] in P(2, 4, 6, 10).  We compute it through the classical
transvectant scalars of the sextic form, scaled so that J10 is the
discriminant in the monic convention (roots at infinity handled by the
declared-degree discriminant).  On top of the point sit the dictionary to
Siegel modular form values (psi4, psi6, chi10, chi12), the degree-60
expression Q whose vanishing detects a (2,2)-split Jacobian, the fifteen
split components in Rosenhain coordinates, and small j-invariant maps for
elliptic quotients.
"""

from __future__ import annotations

import math

from .rings import (
    WeightedProjPoint,
    backend_of,
    poly_discriminant,
    weighted_proj_equal,
)

# ---------------------------------------------------------------------------
# binary forms and transvectants
#
# A binary form of order n is a list of n + 1 coefficients, index i holding
# the coefficient of x^i z^(n-i).  Transvectants only ever divide by
# factorials of orders <= 6, whose prime factors are 2, 3, 5, so everything
# below works in characteristic 0 and in characteristic p >= 7.


def _form_dx(K, c):
    n = len(c) - 1
    return [K.from_int(i + 1) * c[i + 1] for i in range(n)]


def _form_dz(K, c):
    n = len(c) - 1
    return [K.from_int(n - i) * c[i] for i in range(n)]


def _form_mul(K, a, b):
    out = [K.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def _form_partial(K, c, kx, kz):
    for _ in range(kx):
        c = _form_dx(K, c)
    for _ in range(kz):
        c = _form_dz(K, c)
    return c


def transvectant(K, f, g, k):
    """k-th transvectant of binary forms f (order m) and g (order n)."""
    m, n = len(f) - 1, len(g) - 1
    if k > m or k > n:
        raise ValueError("transvectant index exceeds form order")
    acc = [K.zero()] * (m + n - 2 * k + 1)
    for i in range(k + 1):
        t = _form_mul(K, _form_partial(K, f, k - i, i), _form_partial(K, g, i, k - i))
        s = K.from_int((-1) ** i * math.comb(k, i))
        for j, tj in enumerate(t):
            acc[j] = acc[j] + s * tj
    pref = K.from_int(math.factorial(m - k) * math.factorial(n - k)) / K.from_int(
        math.factorial(m) * math.factorial(n)
    )
    return [pref * a for a in acc]


def clebsch_scalars(K, f6):
    """The four transvectant scalars (A, B, C, D) of a sextic form."""
    i4 = transvectant(K, f6, f6, 4)
    A = transvectant(K, f6, f6, 6)[0]
    B = transvectant(K, i4, i4, 4)[0]
    ii2 = transvectant(K, i4, i4, 2)
    C = transvectant(K, ii2, i4, 4)[0]
    y1 = transvectant(K, f6, i4, 4)
    y2 = transvectant(K, i4, y1, 2)
    y3 = transvectant(K, i4, y2, 2)
    D = transvectant(K, y3, y1, 2)[0]
    return A, B, C, D


# conversion of (A, B, C, D) to the discriminant normalization: J10 equals
# the monic-convention discriminant, which also makes the 15-component
# product identity for chi35^2 hold exactly (see q_modular)
def _j_from_scalars(K, A, B, C, D):
    c = K.from_int
    J2 = c(-120) * A
    J4 = c(-720) * A * A + c(6750) * B
    J6 = c(8640) * A**3 - c(108000) * A * B + c(202500) * C
    J10 = (
        c(-62208) * A**5
        + c(972000) * A**3 * B
        + c(1620000) * A * A * C
        - c(3037500) * A * B * B
        - c(6075000) * B * C
        - c(4556250) * D
    )
    return J2, J4, J6, J10


# ---------------------------------------------------------------------------
# curve models


class BinarySextic:
    """y^2 = a6 x^6 + ... + a1 x + a0 with distinct roots as a binary form.

    Coefficients are stored low to high.  a6 = 0 means a root at infinity;
    smoothness then requires a5 != 0.
    """

    __slots__ = ("K", "coeffs")

    def __init__(self, K, coeffs, check=True):
        coeffs = list(coeffs)
        if len(coeffs) != 7:
            raise ValueError("need exactly seven coefficients a0..a6")
        self.K = K
        self.coeffs = coeffs
        if check and K.is_zero(self.discriminant()):
            raise ValueError("singular sextic (vanishing discriminant)")

    def discriminant(self):
        return poly_discriminant(self.K, self.coeffs, degree=6)

    def substituted(self, a, b, c, d):
        """The form f(a x + b z, c x + d z); (a, b, c, d) invertible."""
        K = self.K
        if K.is_zero(a * d - b * c):
            raise ValueError("substitution matrix is singular")
        lin_x = [b, a]  # order-1 form a x + b z
        lin_z = [d, c]
        out = [K.zero()] * 7
        for i, ci in enumerate(self.coeffs):
            term = [ci]
            for _ in range(i):
                term = _form_mul(K, term, lin_x)
            for _ in range(6 - i):
                term = _form_mul(K, term, lin_z)
            for j, tj in enumerate(term):
                out[j] = out[j] + tj
        return BinarySextic(K, out, check=False)

    def scaled(self, c):
        return BinarySextic(self.K, [c * a for a in self.coeffs], check=False)


class RosenhainCurve:
    """y^2 = x (x - 1)(x - l1)(x - l2)(x - l3), sixth root at infinity."""

    __slots__ = ("K", "l1", "l2", "l3")

    def __init__(self, l1, l2, l3, K=None):
        self.K = K if K is not None else backend_of(l1)
        K = self.K
        lams = (K.from_int(l1) if isinstance(l1, int) else l1,
                K.from_int(l2) if isinstance(l2, int) else l2,
                K.from_int(l3) if isinstance(l3, int) else l3)
        for v in lams:
            if K.is_zero(v) or K.eq(v, K.one()):
                raise ValueError("Rosenhain root collides with 0 or 1")
        if K.eq(lams[0], lams[1]) or K.eq(lams[0], lams[2]) or K.eq(lams[1], lams[2]):
            raise ValueError("Rosenhain roots must be pairwise distinct")
        self.l1, self.l2, self.l3 = lams

    def to_sextic(self) -> BinarySextic:
        K = self.K
        p = [K.one()]
        for r in (K.zero(), K.one(), self.l1, self.l2, self.l3):
            p = _poly_mul_linear(K, p, r)
        return BinarySextic(K, p + [K.zero()], check=False)


def _poly_mul_linear(K, p, root):
    out = [K.zero()] * (len(p) + 1)
    for i, ci in enumerate(p):
        out[i + 1] = out[i + 1] + ci
        out[i] = out[i] - root * ci
    return out


def bolza_sextic(K, s1, s2) -> BinarySextic:
    """y^2 = x^6 + s1 x^4 + s2 x^2 + 1."""
    z, one = K.zero(), K.one()
    return BinarySextic(K, [one, z, s2, z, s1, z, one])


class LegendreCurve:
    """Elliptic y^2 = x (x - 1)(x - lam) with lam outside {0, 1}."""

    __slots__ = ("K", "lam")

    def __init__(self, lam, K=None):
        self.K = K if K is not None else backend_of(lam)
        if isinstance(lam, int):
            lam = self.K.from_int(lam)
        if self.K.is_zero(lam) or self.K.eq(lam, self.K.one()):
            raise ValueError("Legendre parameter must avoid 0 and 1")
        self.lam = lam


class SIQuartic:
    """Coefficient tuple (alpha, beta, gamma, delta) of the elliptic-fibered
    quartic surface y^2 z w = 4 x^3 z - 3 alpha x z w^2 - beta z w^3
    - gamma x z^2 w + (delta z^2 w^2 + w^4) / 2."""

    __slots__ = ("K", "alpha", "beta", "gamma", "delta")

    def __init__(self, alpha, beta, gamma, delta, K=None):
        self.K = K if K is not None else backend_of(gamma)
        K = self.K
        self.alpha, self.beta, self.gamma, self.delta = alpha, beta, gamma, delta
        if K.is_zero(gamma) and K.is_zero(delta):
            raise ValueError("(gamma, delta) = (0, 0) is degenerate")


class IgusaPoint:
    """[J2 : J4 : J6 : J10] in P(2, 4, 6, 10); J10 != 0 (smooth locus)."""

    __slots__ = ("K", "point")

    def __init__(self, K, J2, J4, J6, J10):
        if K.is_zero(J10):
            raise ValueError("J10 = 0: singular curve")
        self.K = K
        self.point = WeightedProjPoint((J2, J4, J6, J10), (2, 4, 6, 10))

    @property
    def J2(self):
        return self.point.coords[0]

    @property
    def J4(self):
        return self.point.coords[1]

    @property
    def J6(self):
        return self.point.coords[2]

    @property
    def J10(self):
        return self.point.coords[3]

    def equal(self, other: "IgusaPoint", tol=None) -> bool:
        return weighted_proj_equal(self.point, other.point, self.K, tol)

    def __repr__(self):
        return repr(self.point)


class SiegelFormValues:
    """Values (psi4, psi6, chi10, chi12) of weights (4, 6, 10, 12)."""

    __slots__ = ("K", "psi4", "psi6", "chi10", "chi12")

    def __init__(self, psi4, psi6, chi10, chi12, K=None):
        self.K = K if K is not None else backend_of(chi10)
        self.psi4, self.psi6, self.chi10, self.chi12 = psi4, psi6, chi10, chi12

    def chi35_squared(self):
        """chi35^2 = chi10 * Q / (2^12 3^9); weight 70."""
        K = self.K
        return self.chi10 * _q_polynomial(self) / K.from_int(2**12 * 3**9)


# ---------------------------------------------------------------------------
# invariants and the Siegel dictionary


def igusa_invariants(curve) -> IgusaPoint:
    """Igusa point of a BinarySextic (or RosenhainCurve)."""
    if isinstance(curve, RosenhainCurve):
        curve = curve.to_sextic()
    K = curve.K
    A, B, C, D = clebsch_scalars(K, curve.coeffs)
    return IgusaPoint(K, *_j_from_scalars(K, A, B, C, D))


def siegel_from_igusa(I: IgusaPoint) -> SiegelFormValues:
    """Form values of the representative (J2, J4, J6, J10); weight-w entries
    rescale as l^w when the representative is rescaled."""
    K = I.K
    if K.is_zero(I.J10):
        raise ValueError("J10 = 0: no Siegel values")
    c = K.from_int
    psi4 = I.J4 / c(4)
    chi10 = -I.J10 / c(2**14)
    chi12 = -I.J2 * chi10 / c(24)
    psi6 = -(c(3) / c(8)) * (I.J6 + c(32) * psi4 * chi12 / chi10)
    return SiegelFormValues(psi4, psi6, chi10, chi12, K=K)


def igusa_from_siegel(S: SiegelFormValues) -> IgusaPoint:
    K = S.K
    if K.is_zero(S.chi10):
        raise ValueError("chi10 = 0: not a Jacobian")
    c = K.from_int
    J2 = -c(24) * S.chi12 / S.chi10
    J4 = c(4) * S.psi4
    J6 = -(c(8) / c(3)) * S.psi6 - c(32) * S.psi4 * S.chi12 / S.chi10
    J10 = -c(2**14) * S.chi10
    return IgusaPoint(K, J2, J4, J6, J10)


def _q_polynomial(S: SiegelFormValues):
    """The 24-term degree-60 polynomial Q in (psi4, psi6, chi10, chi12)."""
    K = S.K
    c = K.from_int
    p4, p6, c10, c12 = S.psi4, S.psi6, S.chi10, S.chi12
    return (
        c(2**24 * 3**15) * c12**5
        - c(2**13 * 3**9) * p4**3 * c12**4
        - c(2**13 * 3**9) * p6**2 * c12**4
        + c(3**3) * p4**6 * c12**3
        - c(2 * 3**3) * p4**3 * p6**2 * c12**3
        - c(2**14 * 3**8) * p4**2 * p6 * c10 * c12**3
        - c(2**23 * 3**12 * 5**2) * p4 * c10**2 * c12**3
        + c(3**3) * p6**4 * c12**3
        + c(2**11 * 3**6 * 37) * p4**4 * c10**2 * c12**2
        + c(2**11 * 3**6 * 5 * 7) * p4 * p6**2 * c10**2 * c12**2
        - c(2**23 * 3**9 * 5**3) * p6 * c10**3 * c12**2
        - c(3**2) * p4**7 * c10**2 * c12
        + c(2 * 3**2) * p4**4 * p6**2 * c10**2 * c12
        + c(2**11 * 3**5 * 5 * 19) * p4**3 * p6 * c10**3 * c12
        + c(2**20 * 3**8 * 5**3 * 11) * p4**2 * c10**4 * c12
        - c(3**2) * p4 * p6**4 * c10**2 * c12
        + c(2**11 * 3**5 * 5**2) * p6**3 * c10**3 * c12
        - c(2) * p4**6 * p6 * c10**3
        - c(2**12 * 3**4) * p4**5 * c10**4
        + c(2**2) * p4**3 * p6**3 * c10**3
        + c(2**12 * 3**4 * 5**2) * p4**2 * p6**2 * c10**4
        + c(2**21 * 3**7 * 5**4) * p4 * p6 * c10**5
        - c(2) * p6**5 * c10**3
        + c(2**32 * 3**9 * 5**5) * c10**6
    )


def q_modular(I) -> object:
    """Q = 2^12 3^9 chi35^2 / chi10, a weight-60 value.

    Zero exactly when the Jacobian carries a polarized (2,2)-splitting.  The
    value scales as l^60 under rescaling of the Igusa representative; only
    its vanishing is scale invariant.
    """
    if isinstance(I, (BinarySextic, RosenhainCurve)):
        I = igusa_invariants(I)
    return _q_polynomial(siegel_from_igusa(I))


def pringsheim_factors(curve: RosenhainCurve):
    """The fifteen linear-in-each-lambda split components."""
    l1, l2, l3 = curve.l1, curve.l2, curve.l3
    return [
        l1 - l2 * l3,
        l2 - l1 * l3,
        l3 - l1 * l2,
        l1 - l2 - l3 + l2 * l3,
        -l1 + l2 - l3 + l1 * l3,
        -l1 - l2 + l3 + l1 * l2,
        l1 * l2 + l1 * l3 - l2 * l3 - l1,
        l1 * l2 + l2 * l3 - l1 * l3 - l2,
        l1 * l3 + l2 * l3 - l1 * l2 - l3,
        l1 * l2 - l1 * l3 - l1 + l3,
        l1 * l3 - l2 * l3 - l1 + l3,
        l1 * l2 - l2 * l3 - l1 + l2,
        l1 * l2 - l1 * l3 + l1 - l2,
        l1 * l3 - l2 * l3 + l2 - l3,
        l1 * l2 - l2 * l3 - l2 + l3,
    ]


def pringsheim_product(curve: RosenhainCurve):
    """(product, squared factors): product of the fifteen squared components.

    Over the rationals the product equals -2^22 chi35^2 / chi10^4 computed
    from the curve's Igusa point, exactly.
    """
    K = curve.K
    squares = [f * f for f in pringsheim_factors(curve)]
    prod = K.one()
    for s in squares:
        prod = prod * s
    return prod, squares


def legendre_j(E: LegendreCurve):
    """j-invariant 256 (L^2 - L + 1)^3 / (L^2 (L - 1)^2)."""
    K, L = E.K, E.lam
    c = K.from_int
    num = c(256) * (L * L - L + K.one()) ** 3
    den = L * L * (L - K.one()) ** 2
    return num / den


def bolza_j_pair(s1, s2, K=None):
    """j-invariants of the two elliptic quotients of y^2 = x^6 + s1 x^4
    + s2 x^2 + 1 (degree-2 quotients by the extra involution)."""
    K = K if K is not None else backend_of(s1)
    c = K.from_int

    def one_j(u, v):
        num = c(256) * (c(3) * u - v * v) ** 3
        den = (c(4) * (u**3 + v**3) - (u * v) ** 2 - c(18) * u * v + c(27))
        if K.is_zero(den):
            raise ValueError("degenerate sextic: quotient j undefined")
        return num / den

    return one_j(s1, s2), one_j(s2, s1)


def si_igusa(q: SIQuartic) -> IgusaPoint:
    """Igusa point [2^3 3 delta : 2^2 3^2 alpha gamma^2 :
    2^3 3^2 (4 alpha delta + beta gamma) gamma^2 : 2^2 gamma^6]."""
    K = q.K
    if K.is_zero(q.gamma):
        raise ValueError("gamma = 0: J10 vanishes")
    c = K.from_int
    g2 = q.gamma * q.gamma
    return IgusaPoint(
        K,
        c(24) * q.delta,
        c(36) * q.alpha * g2,
        c(72) * (c(4) * q.alpha * q.delta + q.beta * q.gamma) * g2,
        c(4) * g2**3,
    )


def si_from_siegel(S: SiegelFormValues) -> SIQuartic:
    """Quartic coefficients (psi4, psi6, 2^12 3^5 chi10, 2^12 3^6 chi12)."""
    K = S.K
    c = K.from_int
    return SIQuartic(
        S.psi4, S.psi6, c(2**12 * 3**5) * S.chi10, c(2**12 * 3**6) * S.chi12, K=K
    )


# ---------------------------------------------------------------------------
# JSON curve schema


def curve_to_json(curve) -> dict:
    if isinstance(curve, BinarySextic):
        K = curve.K
        return {
            "model": "sextic",
            "coefficients": [K.to_json(a) for a in curve.coeffs],
            "field": field_to_json(K),
        }
    if isinstance(curve, RosenhainCurve):
        K = curve.K
        return {
            "model": "rosenhain",
            "lambdas": [K.to_json(v) for v in (curve.l1, curve.l2, curve.l3)],
            "field": field_to_json(K),
        }
    if isinstance(curve, LegendreCurve):
        K = curve.K
        return {
            "model": "legendre",
            "lambda": K.to_json(curve.lam),
            "field": field_to_json(K),
        }
    raise TypeError(f"no JSON schema for {type(curve).__name__}")


def curve_from_json(data: dict):
    K = field_from_json(data.get("field", {"type": "QQ"}))
    model = data["model"]
    if model == "sextic":
        return BinarySextic(K, [K.from_json(a) for a in data["coefficients"]])
    if model == "rosenhain":
        l1, l2, l3 = (K.from_json(v) for v in data["lambdas"])
        return RosenhainCurve(l1, l2, l3, K=K)
    if model == "bolza":
        s1, s2 = (K.from_json(v) for v in data["s"])
        return bolza_sextic(K, s1, s2)
    if model == "legendre":
        return LegendreCurve(K.from_json(data["lambda"]), K=K)
    raise ValueError(f"unknown curve model {model!r}")


def field_to_json(K) -> dict:
    from . import rings

    if K is rings.QQ:
        return {"type": "QQ"}
    if K is rings.CC:
        return {"type": "CC"}
    if hasattr(K, "nonresidue"):
        return {"type": "Fp2", "p": K.modulus, "ns": K.nonresidue}
    if hasattr(K, "modulus"):
        return {"type": "Fp", "p": K.modulus}
    raise TypeError("unknown field backend")


def field_from_json(data: dict):
    from . import rings

    t = data.get("type", "QQ")
    if t == "QQ":
        return rings.QQ
    if t == "CC":
        return rings.CC
    if t == "Fp":
        return rings.prime_field(int(data["p"]))
    if t == "Fp2":
        return rings.quad_ext(int(data["p"]), data.get("ns"))
    raise ValueError(f"unknown field type {t!r}")
