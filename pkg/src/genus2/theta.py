"""Numerical theta functions on the rank-2 Siegel upper half-space.

Series with rational characteristics are evaluated by truncating the lattice
sum to a block |m + a|_inf <= R.  The radius R comes from a Gaussian tail
estimate driven by the smallest eigenvalue of Im(tau), so every value carries
an absolute truncation error below the caller's tolerance.  On top of the raw
series the module provides the ten even null values and the four nulls at the
doubled period, the Rosenhain moduli read off from null quotients, and
residual checks for the quadratic identities tying all of these together
(Frobenius, doubling with and without elliptic argument, the degenerate
product relation, and the square/Veronese maps).

Only the characteristics of theta_1..theta_4 and the membership of the dual
quadruple are classical conventions; the numbering of theta_5..theta_16 is
fixed here as the unique assignment under which the full identity battery
holds, and ships as data validated by tests.
"""

import math
from fractions import Fraction

import mpmath

__all__ = [
    "DEFAULT_TOL",
    "ThetaChar",
    "CHAR_TABLE",
    "DUAL_CHARS",
    "SiegelPoint",
    "random_siegel",
    "theta_value",
    "theta_null",
    "ThetaNulls",
    "even_nulls",
    "DualThetaNulls",
    "dual_nulls",
    "thomae_lambdas",
    "thomae_quartics",
    "thomae_residuals",
    "picard2_residuals",
    "frobenius_check",
    "doubling_check",
    "doubling_z_residuals",
    "riemann_residual",
    "quasiperiod_residual",
    "multiplier_residual",
    "satake_square",
    "satake_veronese",
    "satake_residual",
]

# Absolute truncation error of the series; identity checks inherit it.
DEFAULT_TOL = mpmath.mpf(10) ** -24


# ---------------------------------------------------------------------------
# characteristics


class ThetaChar:
    """Rational characteristic [a; b] with a, b pairs of Fractions.

    Parity (even/odd under z -> -z) is defined for half-integer
    characteristics only: 4*a.b mod 2.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = (Fraction(a[0]), Fraction(a[1]))
        self.b = (Fraction(b[0]), Fraction(b[1]))

    @classmethod
    def from_bits(cls, a1, a2, b1, b2):
        """Half-integer characteristic from doubled components in {0, 1}."""
        for bit in (a1, a2, b1, b2):
            if bit not in (0, 1):
                raise ValueError("doubled components must be 0 or 1")
        return cls((Fraction(a1, 2), Fraction(a2, 2)),
                   (Fraction(b1, 2), Fraction(b2, 2)))

    def is_half_integer(self):
        half = (Fraction(0), Fraction(1, 2))
        return all(c in half for c in self.a + self.b)

    def parity(self):
        if not self.is_half_integer():
            raise ValueError("parity needs a half-integer characteristic")
        return int(4 * (self.a[0] * self.b[0] + self.a[1] * self.b[1])) % 2

    def is_even(self):
        return self.parity() == 0

    def bits(self):
        return tuple(int(2 * c) for c in self.a + self.b)

    def label(self):
        return "[%d%d;%d%d]" % self.bits()

    def __eq__(self, other):
        if not isinstance(other, ThetaChar):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        if self.is_half_integer():
            return "ThetaChar.from_bits(%d, %d, %d, %d)" % self.bits()
        return "ThetaChar(%r, %r)" % (self.a, self.b)


# Numbering of the sixteen half-integer characteristics.  Indices 1..4 are
# the classical convention; 5..10 (even) and 12 (odd) are forced by the
# doubling, Frobenius, Picard and quartic-image identities; the remaining
# odd slots 11, 13..16 are filled in lexicographic bit order.
CHAR_TABLE = {
    1: ThetaChar.from_bits(0, 0, 0, 0),
    2: ThetaChar.from_bits(0, 0, 1, 1),
    3: ThetaChar.from_bits(0, 0, 1, 0),
    4: ThetaChar.from_bits(0, 0, 0, 1),
    5: ThetaChar.from_bits(1, 0, 0, 0),
    6: ThetaChar.from_bits(1, 0, 0, 1),
    7: ThetaChar.from_bits(0, 1, 0, 0),
    8: ThetaChar.from_bits(1, 1, 0, 0),
    9: ThetaChar.from_bits(0, 1, 1, 0),
    10: ThetaChar.from_bits(1, 1, 1, 1),
    11: ThetaChar.from_bits(0, 1, 0, 1),
    12: ThetaChar.from_bits(0, 1, 1, 1),
    13: ThetaChar.from_bits(1, 0, 1, 0),
    14: ThetaChar.from_bits(1, 0, 1, 1),
    15: ThetaChar.from_bits(1, 1, 0, 1),
    16: ThetaChar.from_bits(1, 1, 1, 0),
}

# Characteristics of the dual nulls Theta_1..Theta_4 (evaluated at 2*tau).
# The slot order is the unique one satisfying the doubling identities; it
# differs from reading the displayed quadruple positionally.
DUAL_CHARS = (
    ThetaChar.from_bits(0, 0, 0, 0),
    ThetaChar.from_bits(1, 1, 0, 0),
    ThetaChar.from_bits(1, 0, 0, 0),
    ThetaChar.from_bits(0, 1, 0, 0),
)


# ---------------------------------------------------------------------------
# Siegel points


class SiegelPoint:
    """Symmetric 2x2 complex matrix with positive definite imaginary part."""

    __slots__ = ("t11", "t12", "t22")

    def __init__(self, t11, t12, t22):
        self.t11 = mpmath.mpc(t11)
        self.t12 = mpmath.mpc(t12)
        self.t22 = mpmath.mpc(t22)
        y11, y12, y22 = self.t11.imag, self.t12.imag, self.t22.imag
        if not (y11 > 0 and y11 * y22 - y12 * y12 > 0):
            raise ValueError("imaginary part must be positive definite")

    def min_imag_eigenvalue(self):
        y11, y12, y22 = self.t11.imag, self.t12.imag, self.t22.imag
        gap = mpmath.sqrt((y11 - y22) ** 2 + 4 * y12 * y12)
        return (y11 + y22 - gap) / 2

    def scaled(self, c):
        """The point c*tau for a positive scalar c."""
        return SiegelPoint(c * self.t11, c * self.t12, c * self.t22)

    def conjugated_negated(self):
        """The point -conj(tau), again in the Siegel space."""
        return SiegelPoint(-mpmath.conj(self.t11), -mpmath.conj(self.t12),
                           -mpmath.conj(self.t22))

    def is_diagonal(self, tol=mpmath.mpf(10) ** -12):
        return abs(self.t12) <= tol

    def apply(self, n1, n2):
        """Matrix product tau*(n1, n2) as a pair."""
        return (self.t11 * n1 + self.t12 * n2, self.t12 * n1 + self.t22 * n2)

    def to_json(self):
        def enc(w):
            return [mpmath.nstr(w.real, 25), mpmath.nstr(w.imag, 25)]
        return {"tau11": enc(self.t11), "tau12": enc(self.t12),
                "tau22": enc(self.t22)}

    @classmethod
    def from_json(cls, data):
        def dec(v):
            return mpmath.mpc(mpmath.mpf(v[0]), mpmath.mpf(v[1]))
        return cls(dec(data["tau11"]), dec(data["tau12"]), dec(data["tau22"]))

    def __repr__(self):
        return "SiegelPoint(%s, %s, %s)" % (self.t11, self.t12, self.t22)


def random_siegel(rng, min_eig=0.9, max_eig=1.8, max_real=0.45):
    """Random Siegel point with well separated imaginary eigenvalues.

    Eigenvalues of Im(tau) land in [min_eig, max_eig], keeping series
    truncation radii small and the point clear of degenerate strata with
    overwhelming probability.
    """
    e1 = rng.uniform(min_eig, max_eig)
    e2 = rng.uniform(min_eig, max_eig)
    phi = rng.uniform(0.0, math.pi)
    c, s = math.cos(phi), math.sin(phi)
    y11 = c * c * e1 + s * s * e2
    y22 = s * s * e1 + c * c * e2
    y12 = c * s * (e1 - e2)
    x11 = rng.uniform(-max_real, max_real)
    x12 = rng.uniform(-max_real, max_real)
    x22 = rng.uniform(-max_real, max_real)
    return SiegelPoint(mpmath.mpc(x11, y11), mpmath.mpc(x12, y12),
                       mpmath.mpc(x22, y22))


# ---------------------------------------------------------------------------
# series evaluation

_RADIUS_CAP = 4096
_PREC_CAP = 1 << 16


def _tail_bound(lam, bnorm, radius):
    """Upper bound for the sum of |terms| with |m + a|_inf > radius.

    Terms on the shell |m + a|_inf in (k-1, k] number at most 16k and are
    each bounded by exp(f(k-1)) with f(j) = -pi*lam*j^2 + 2*pi*bnorm*j.
    Since f is concave, f(j) <= f(R) + f'(R)*(j - R) for j >= R, so the
    tail is dominated by a closed-form arithmetico-geometric series.  The
    bound is infinite when f is still increasing at R.
    """
    pi = mpmath.pi
    r = mpmath.mpf(radius)
    slope = 2 * pi * (bnorm - lam * r)
    if slope >= 0:
        return mpmath.inf
    q = mpmath.exp(slope)
    head = 16 * mpmath.exp(-pi * lam * r * r + 2 * pi * bnorm * r)
    return head * ((r + 1) / (1 - q) + q / (1 - q) ** 2)


def _choose_radius(lam, bnorm, tol):
    start = max(2, int(mpmath.ceil(bnorm / lam)) + 1)
    radius = start
    while _tail_bound(lam, bnorm, radius) > tol:
        radius += 1
        if radius > _RADIUS_CAP:
            raise ValueError("tolerance unachievable: truncation radius "
                             "exceeds %d" % _RADIUS_CAP)
    return radius


def _working_prec(lam, bnorm, radius, tol):
    # guard bits cover the peak term magnitude, the term count, and the
    # running-power recurrences in the block sum
    peak = math.pi * float(bnorm) ** 2 / float(lam)
    bits = (int(-mpmath.log(tol, 2)) + int(peak / math.log(2)) + 1
            + 2 * int(math.log2(2 * radius + 3) + 1) + 24)
    if bits > _PREC_CAP:
        raise ValueError("tolerance unachievable at supported precision")
    return max(bits, mpmath.mp.prec)


def _block_sum(char, z1, z2, tau, radius):
    a1, a2 = char.a
    b1, b2 = char.b
    a1f = mpmath.mpf(a1.numerator) / a1.denominator
    a2f = mpmath.mpf(a2.numerator) / a2.denominator
    w1 = z1 + mpmath.mpf(b1.numerator) / b1.denominator
    w2 = z2 + mpmath.mpf(b2.numerator) / b2.denominator
    t11, t12, t22 = tau.t11, tau.t12, tau.t22

    lo1, hi1 = math.ceil(-a1 - radius), math.floor(-a1 + radius)
    lo2, hi2 = math.ceil(-a2 - radius), math.floor(-a2 + radius)

    # exp(pi*i * 2*t12*n1*n2) splits into per-index powers; the inner loop
    # then costs three multiplications per lattice point
    cross = mpmath.expjpi(2 * t12)
    colf = mpmath.expjpi(2 * t12 * a2f)
    rowf = mpmath.expjpi(2 * t12 * a1f)
    base = mpmath.expjpi(2 * t12 * a1f * a2f)

    col = []
    for m2 in range(lo2, hi2 + 1):
        n2 = m2 + a2f
        col.append(mpmath.expjpi(n2 * n2 * t22 + 2 * n2 * w2) * rowf ** m2)

    total = mpmath.mpc(0)
    for m1 in range(lo1, hi1 + 1):
        n1 = m1 + a1f
        lead = mpmath.expjpi(n1 * n1 * t11 + 2 * n1 * w1) * colf ** m1
        step = cross ** m1
        power = step ** lo2
        acc = mpmath.mpc(0)
        for value in col:
            acc += value * power
            power *= step
        total += lead * acc
    return base * total


def theta_value(char, z, tau, tol=None, radius=None):
    """theta[a; b](z, tau), absolute truncation error below tol.

    The truncation radius is deterministic in Im(tau), Im(z) and tol; pass
    radius to override it (used by the tail-bound tests).
    """
    if tol is None:
        tol = DEFAULT_TOL
    tol = mpmath.mpf(tol)
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    z1, z2 = mpmath.mpc(z[0]), mpmath.mpc(z[1])
    # tiny haircuts keep the tail estimate an upper bound despite rounding
    lam = tau.min_imag_eigenvalue() * (1 - mpmath.mpf(2) ** -40)
    bnorm = mpmath.sqrt(z1.imag ** 2 + z2.imag ** 2)
    bnorm = bnorm * (1 + mpmath.mpf(2) ** -40) + mpmath.mpf(2) ** -40
    if radius is None:
        radius = _choose_radius(lam, bnorm, tol)
    prec = _working_prec(lam, bnorm, radius, tol)
    with mpmath.workprec(prec):
        value = _block_sum(char, z1, z2, tau, radius)
    return value


def theta_null(char, tau, tol=None):
    """Null value theta[a; b](0, tau)."""
    return theta_value(char, (0, 0), tau, tol=tol)


# ---------------------------------------------------------------------------
# null tables


class ThetaNulls:
    """The ten even null values theta_1..theta_10 at a common tau."""

    __slots__ = ("tau", "tol", "values", "degenerate")

    def __init__(self, tau, values, tol):
        self.tau = tau
        self.values = tuple(values)
        self.tol = tol
        top = max(abs(v) for v in self.values)
        bottom = min(abs(v) for v in self.values)
        self.degenerate = bottom <= mpmath.sqrt(tol) * max(1, top)

    def __getitem__(self, index):
        if not 1 <= index <= 10:
            raise IndexError("even theta index must be 1..10")
        return self.values[index - 1]

    def __iter__(self):
        return iter(self.values)

    @staticmethod
    def char(index):
        return CHAR_TABLE[index]

    def __repr__(self):
        return "ThetaNulls(%r, degenerate=%r)" % (self.tau, self.degenerate)


class DualThetaNulls:
    """The four null values Theta_1..Theta_4, evaluated at 2*tau."""

    __slots__ = ("tau", "tol", "values")

    def __init__(self, tau, values, tol):
        self.tau = tau
        self.values = tuple(values)
        self.tol = tol

    def __getitem__(self, index):
        if not 1 <= index <= 4:
            raise IndexError("dual theta index must be 1..4")
        return self.values[index - 1]

    def __iter__(self):
        return iter(self.values)

    @staticmethod
    def char(index):
        return DUAL_CHARS[index - 1]

    def __repr__(self):
        return "DualThetaNulls(%r)" % (self.tau,)


def even_nulls(tau, tol=None):
    if tol is None:
        tol = DEFAULT_TOL
    values = [theta_null(CHAR_TABLE[i], tau, tol) for i in range(1, 11)]
    return ThetaNulls(tau, values, mpmath.mpf(tol))


def dual_nulls(tau, tol=None):
    if tol is None:
        tol = DEFAULT_TOL
    doubled = tau.scaled(2)
    values = [theta_null(c, doubled, tol) for c in DUAL_CHARS]
    return DualThetaNulls(tau, values, mpmath.mpf(tol))


# ---------------------------------------------------------------------------
# identities

# sign rows expressing theta_i^2 (i = 1..4) in the squares of the duals
_SQUARE_ROWS = (
    (1, 1, 1, 1),
    (1, 1, -1, -1),
    (1, -1, -1, 1),
    (1, -1, 1, -1),
)

# theta_i^2 = 2*(T_j*T_k + sign*T_l*T_m) for i = 5..10
_PRODUCT_ROWS = (
    (1, 3, 2, 4, 1),
    (1, 3, 2, 4, -1),
    (1, 4, 2, 3, 1),
    (1, 2, 3, 4, 1),
    (1, 4, 2, 3, -1),
    (1, 2, 3, 4, -1),
)


def _residual(lhs, rhs):
    return abs(lhs - rhs) / max(1, abs(lhs), abs(rhs))


def satake_veronese(duals):
    """Degree-two image of [Theta_1 : ... : Theta_4] in the nulls' P^9."""
    t = duals.values
    image = []
    for row in _SQUARE_ROWS:
        image.append(sum(s * v * v for s, v in zip(row, t)))
    for j, k, l, m, sign in _PRODUCT_ROWS:
        image.append(2 * (t[j - 1] * t[k - 1] + sign * t[l - 1] * t[m - 1]))
    return tuple(image)


def satake_square(nulls):
    """Image of [theta_1 : ... : theta_10] under coordinate squaring."""
    return tuple(v * v for v in nulls.values)


def satake_residual(nulls, duals):
    """Commutativity defect of squaring against the Veronese image.

    The two degree-two maps agree coordinatewise on the nose, not merely
    projectively.
    """
    sq = satake_square(nulls)
    ver = satake_veronese(duals)
    return max(_residual(a, b) for a, b in zip(sq, ver))


def doubling_check(nulls, duals):
    """Max residual of the ten null doubling identities."""
    return satake_residual(nulls, duals)


def frobenius_check(nulls):
    """Max residual of the six quadratic/quartic null relations."""
    s = [None] + [v * v for v in nulls.values]
    checks = [
        (s[5] * s[6], s[1] * s[4] - s[2] * s[3]),
        (s[7] * s[9], s[1] * s[3] - s[2] * s[4]),
        (s[8] * s[10], s[1] * s[2] - s[3] * s[4]),
        (s[5] ** 2 + s[6] ** 2, s[1] ** 2 - s[2] ** 2 - s[3] ** 2 + s[4] ** 2),
        (s[7] ** 2 + s[9] ** 2, s[1] ** 2 - s[2] ** 2 + s[3] ** 2 - s[4] ** 2),
        (s[8] ** 2 + s[10] ** 2, s[1] ** 2 + s[2] ** 2 - s[3] ** 2 - s[4] ** 2),
    ]
    return max(_residual(lhs, rhs) for lhs, rhs in checks)


def thomae_lambdas(nulls):
    """Rosenhain moduli of the curve whose Jacobian sits at nulls.tau."""
    s = [None] + [v * v for v in nulls.values]
    for index in (2, 4, 10):
        if abs(nulls[index]) <= mpmath.sqrt(nulls.tol):
            raise ValueError("vanishing theta_%d: tau sits on a Humbert "
                             "degeneration" % index)
    l1 = s[1] * s[3] / (s[2] * s[4])
    l2 = s[3] * s[8] / (s[4] * s[10])
    l3 = s[1] * s[8] / (s[2] * s[10])
    return l1, l2, l3


def picard2_residuals(nulls, lambdas=None):
    """Residuals of the six difference products against null quotients."""
    if lambdas is None:
        lambdas = thomae_lambdas(nulls)
    l1, l2, l3 = lambdas
    s = [None] + [v * v for v in nulls.values]
    d24 = s[2] * s[4]
    d410 = s[4] * s[10]
    d210 = s[2] * s[10]
    d2410 = s[2] * s[4] * s[10]
    pairs = [
        (l1 - 1, s[7] * s[9] / d24),
        (l2 - 1, s[5] * s[9] / d410),
        (l3 - 1, s[5] * s[7] / d210),
        (l2 - l1, s[3] * s[6] * s[9] / d2410),
        (l3 - l1, s[1] * s[6] * s[7] / d2410),
        (l3 - l2, s[5] * s[6] * s[8] / d2410),
    ]
    return [_residual(lhs, rhs) for lhs, rhs in pairs]


def thomae_quartics(l1, l2, l3):
    """Fourth powers of the ten even nulls up to one common factor."""
    return (
        l3 * l1 * (l2 - 1) * (l3 - l1),
        l2 * (l2 - 1) * (l3 - l1),
        l2 * l1 * (l3 - 1) * (l2 - l1),
        l3 * (l3 - 1) * (l2 - l1),
        l1 * (l2 - 1) * (l3 - 1) * (l3 - l2),
        (l3 - l2) * (l3 - l1) * (l2 - l1),
        l2 * (l3 - 1) * (l1 - 1) * (l3 - l1),
        l2 * l3 * (l3 - l2) * (l1 - 1),
        l3 * (l2 - 1) * (l1 - 1) * (l2 - l1),
        l1 * (l1 - 1) * (l3 - l2),
    )


def thomae_residuals(nulls, lambdas=None):
    """Residuals of theta_i^4 against the Rosenhain products.

    The overall projective factor is fitted on the first slot and then
    shared, so the ten residuals jointly certify the table.
    """
    if lambdas is None:
        lambdas = thomae_lambdas(nulls)
    quartics = thomae_quartics(*lambdas)
    fourth = [v ** 4 for v in nulls.values]
    scale = fourth[0] / quartics[0]
    return [_residual(f, scale * q) for f, q in zip(fourth, quartics)]


def _residual_prec(tol):
    # combining full-precision series values at ambient precision would
    # floor the residual near 2^-prec, so lift it to match the tolerance
    bits = int(mpmath.ceil(-mpmath.log(tol, 2))) + 48
    return max(mpmath.mp.prec, bits)


def doubling_z_residuals(tau, z, tol=None):
    """Residuals of the eight doubling identities with elliptic argument.

    Four compare theta_i * theta_i(z) with squares of the duals at z, four
    compare 4 * Theta_i * Theta_i(2z) with squares of theta_1..theta_4 at z.
    """
    if tol is None:
        tol = DEFAULT_TOL
    with mpmath.workprec(_residual_prec(tol)):
        return _doubling_z_residuals(tau, z, tol)


def _doubling_z_residuals(tau, z, tol):
    doubled = tau.scaled(2)
    z2 = (2 * z[0], 2 * z[1])
    small = [theta_null(CHAR_TABLE[i], tau, tol) for i in range(1, 5)]
    small_z = [theta_value(CHAR_TABLE[i], z, tau, tol) for i in range(1, 5)]
    dual = [theta_null(c, doubled, tol) for c in DUAL_CHARS]
    dual_z = [theta_value(c, z, doubled, tol) for c in DUAL_CHARS]
    dual_2z = [theta_value(c, z2, doubled, tol) for c in DUAL_CHARS]
    residuals = []
    for i, row in enumerate(_SQUARE_ROWS):
        lhs = small[i] * small_z[i]
        rhs = sum(s * v * v for s, v in zip(row, dual_z))
        residuals.append(_residual(lhs, rhs))
    for i, row in enumerate(_SQUARE_ROWS):
        lhs = 4 * dual[i] * dual_2z[i]
        rhs = sum(s * v * v for s, v in zip(row, small_z))
        residuals.append(_residual(lhs, rhs))
    return residuals


def riemann_residual(tau, z1, z2, tol=None):
    """Residual of the degree-two addition formula.

    theta[0;0](z1+z2, tau) * theta[0;0](z1-z2, tau) equals the sum over the
    four a-type characteristics c of theta[c;0](2*z1, 2*tau) times
    theta[c;0](2*z2, 2*tau).
    """
    if tol is None:
        tol = DEFAULT_TOL
    with mpmath.workprec(_residual_prec(tol)):
        top = CHAR_TABLE[1]
        zp = (z1[0] + z2[0], z1[1] + z2[1])
        zm = (z1[0] - z2[0], z1[1] - z2[1])
        lhs = (theta_value(top, zp, tau, tol) * theta_value(top, zm, tau, tol))
        doubled = tau.scaled(2)
        u = (2 * z1[0], 2 * z1[1])
        v = (2 * z2[0], 2 * z2[1])
        rhs = mpmath.mpc(0)
        for c in DUAL_CHARS:
            rhs += (theta_value(c, u, doubled, tol)
                    * theta_value(c, v, doubled, tol))
        return _residual(lhs, rhs)


def quasiperiod_residual(char, z, tau, m, tol=None):
    """Residual of the shift z -> z + m against the exact phase.

    For integer m the series reindexes onto itself up to the factor
    exp(2*pi*i*a.m), which is -1 precisely when a.m is a half-integer.
    """
    if tol is None:
        tol = DEFAULT_TOL
    m1, m2 = int(m[0]), int(m[1])
    with mpmath.workprec(_residual_prec(tol)):
        shifted = (z[0] + m1, z[1] + m2)
        lhs = theta_value(char, shifted, tau, tol)
        phase = mpmath.expjpi(2 * (Fraction(char.a[0]) * m1
                                   + Fraction(char.a[1]) * m2))
        rhs = phase * theta_value(char, z, tau, tol)
        return _residual(lhs, rhs)


def multiplier_residual(char, z, tau, n, tol=None):
    """Residual of the shift z -> z + tau*n against the multiplier."""
    if tol is None:
        tol = DEFAULT_TOL
    n1, n2 = int(n[0]), int(n[1])
    with mpmath.workprec(_residual_prec(tol)):
        s1, s2 = tau.apply(n1, n2)
        shifted = (z[0] + s1, z[1] + s2)
        lhs = theta_value(char, shifted, tau, tol)
        b1 = mpmath.mpf(char.b[0].numerator) / char.b[0].denominator
        b2 = mpmath.mpf(char.b[1].numerator) / char.b[1].denominator
        exponent = (-(n1 * s1 + n2 * s2)
                    - 2 * (n1 * (z[0] + b1) + n2 * (z[1] + b2)))
        rhs = mpmath.expjpi(exponent) * theta_value(char, z, tau, tol)
        return _residual(lhs, rhs)
