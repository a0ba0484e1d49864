"""Projective models of the Kummer surface of a genus-2 curve.

The quotient of the Jacobian by inversion is presented in several classical
coordinate systems: a sixteen-node quartic in Cassels-Flynn, Baker, Hudson,
Goepel, and Rosenhain-tetrahedron coordinates, the branched double-cover
sextic in weighted projective space, and the intersection of three quadrics
in P^5.  Parameter dictionaries tie the models to the Rosenhain roots of
the curve, to a base-node quadruple, and to theta constants; explicit
projective maps carry points between the models.
"""

import mpmath

from . import rings
from . import theta as theta_mod
from .curves import RosenhainCurve, field_from_json, field_to_json
from .rings import MPoly, backend_of


def _scalar(K, v):
    return K.from_int(v) if isinstance(v, int) else v


def _entry_zero(K, v):
    if isinstance(v, MPoly):
        return v.is_zero()
    return K.is_zero(v)


def _check_point(K, point, arity):
    point = tuple(point)
    if len(point) != arity:
        raise ValueError(f"expected {arity} coordinates, got {len(point)}")
    if all(_entry_zero(K, v) for v in point):
        raise ValueError("point has all coordinates zero")
    return point


def _proj_reduce(K, coords):
    for v in coords:
        if not K.is_zero(v):
            return tuple(u / v for u in coords)
    raise ValueError("point has all coordinates zero")


def _proj_equal(K, a, b):
    return all(K.eq(u, v) for u, v in zip(_proj_reduce(K, a),
                                          _proj_reduce(K, b)))


# ---------------------------------------------------------------------------
# Rosenhain-side data


def _coerce_lams(l1, l2, l3, K):
    lams = tuple(_scalar(K, v) for v in (l1, l2, l3))
    for v in lams:
        if K.is_zero(v) or K.eq(v, K.one()):
            raise ValueError("root collides with 0 or 1")
    if K.eq(lams[0], lams[1]) or K.eq(lams[0], lams[2]) \
            or K.eq(lams[1], lams[2]):
        raise ValueError("roots must be pairwise distinct")
    return lams


def l_coefficients(l1, l2, l3, K=None):
    """The quadruple L1..L4 shared by the Baker and Cassels-Flynn models."""
    K = K or backend_of(l1)
    l1, l2, l3 = (_scalar(K, v) for v in (l1, l2, l3))
    e1 = l1 + l2 + l3
    e2 = l1 * l2 + l1 * l3 + l2 * l3
    e3 = l1 * l2 * l3
    return e3, e2 + e3, e1 + e2, K.one() + e1


def trope_lines(l1, l2, l3, K=None):
    """index -> coefficients (a, b, c) of the plane a z1 + b z2 + c z3.

    Indices 1..3 carry the finite roots, 4..6 the roots 0, 1, infinity.
    """
    K = K or backend_of(l1)
    l1, l2, l3 = (_scalar(K, v) for v in (l1, l2, l3))
    one, zero = K.one(), K.zero()
    lines = {i + 1: (v * v, -v, one) for i, v in enumerate((l1, l2, l3))}
    lines[4] = (zero, zero, one)
    lines[5] = (one, -one, one)
    lines[6] = (one, zero, zero)
    return lines


def line_tangent_to_conic(line, K=None):
    """Tangency to z2^2 = 4 z1 z3, via the restricted discriminant."""
    K = K or backend_of(line[0])
    a, b, c = line
    return K.is_zero(b * b - a * c)


def trope_relations_ok(l1, l2, l3, K=None):
    """The three displayed linear relations among the six trope planes."""
    K = K or backend_of(l1)
    lines = trope_lines(l1, l2, l3, K)
    one = K.one()
    for i, lam in enumerate(_coerce_lams(l1, l2, l3, K)):
        t4, t5, t6 = lines[4], lines[5], lines[6]
        for k in range(3):
            combo = ((one - lam) * t4[k] + lam * t5[k]
                     + lam * (lam - one) * t6[k])
            if not K.eq(combo, lines[i + 1][k]):
                return False
    return True


def _k_forms(K, L, z1, z2, z3):
    """K2, K1, K0 of the quartic K2 z4^2 + K1 z4 + K0; entries may be
    field elements or MPoly."""
    L1, L2, L3, L4 = L
    two, four = K.from_int(2), K.from_int(4)
    k2 = z2 * z2 - four * (z1 * z3)
    k1 = ((four * L2) * (z1 * z1 * z3) + (four * L4) * (z1 * z3 * z3)
          - (two * L1) * (z1 * z1 * z2) - (two * L3) * (z1 * z2 * z3)
          - two * (z2 * z3 * z3))
    inner = L1 * (z1 * z1) - L3 * (z1 * z3) + z3 * z3
    k0 = (inner * inner
          + four * ((z1 * z3) * (L4 * z1 - z2) * (L1 * z2 - L2 * z3)))
    return k2, k1, k0


# ---------------------------------------------------------------------------
# surface models


class ShiodaSextic:
    """Double cover t4^2 = product of the six trope planes, weight-3 t4."""

    arity = 4
    kind = "shioda"
    __slots__ = ("K", "lams")

    def __init__(self, l1, l2, l3, K=None):
        self.K = K or backend_of(l1)
        self.lams = _coerce_lams(l1, l2, l3, self.K)

    def eval(self, point):
        z1, z2, z3, t4 = _check_point(self.K, point, 4)
        prod = z1 * z3 * (z1 - z2 + z3)
        for lam in self.lams:
            prod = prod * ((lam * lam) * z1 - lam * z2 + z3)
        return t4 * t4 - prod


class CasselsFlynnQuartic:
    """K2 z4^2 + K1 z4 + K0 with coefficients built from L1..L4."""

    arity = 4
    kind = "cf"
    __slots__ = ("K", "lams", "L")

    def __init__(self, l1, l2, l3, K=None):
        self.K = K or backend_of(l1)
        self.lams = _coerce_lams(l1, l2, l3, self.K)
        self.L = l_coefficients(*self.lams, K=self.K)

    @classmethod
    def from_line_data(cls, L, K, lams=None):
        model = cls.__new__(cls)
        model.K = K
        model.lams = lams
        model.L = tuple(_scalar(K, v) for v in L)
        return model

    def k_forms(self, z1, z2, z3):
        return _k_forms(self.K, self.L, z1, z2, z3)

    def eval(self, point):
        z1, z2, z3, z4 = _check_point(self.K, point, 4)
        k2, k1, k0 = self.k_forms(z1, z2, z3)
        return k2 * (z4 * z4) + k1 * z4 + k0


class BakerQuartic:
    """Vanishing locus of a symmetric 4x4 determinant in W, X, Y, Z."""

    arity = 4
    kind = "baker"
    __slots__ = ("K", "L", "lams")

    def __init__(self, L, K=None, lams=None):
        self.K = K or backend_of(L[0])
        self.L = tuple(_scalar(self.K, v) for v in L)
        self.lams = lams

    @classmethod
    def from_rosenhain(cls, l1, l2, l3, K=None):
        K = K or backend_of(l1)
        lams = _coerce_lams(l1, l2, l3, K)
        return cls(l_coefficients(*lams, K=K), K=K, lams=lams)

    def matrix(self, point):
        W, X, Y, Z = _check_point(self.K, point, 4)
        L1, L2, L3, L4 = self.L
        two = self.K.from_int(2)
        zero = W - W
        return [
            [zero, L1 * W, -Z, Y],
            [L1 * W, (two * L2) * W + two * Z, L3 * W - Y, X],
            [-Z, L3 * W - Y, (two * L4) * W - two * X, W],
            [Y, X, W, zero],
        ]

    def eval(self, point):
        return _det4(self.matrix(point))


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _det4(m):
    total = None
    for j in range(4):
        minor = [[m[r][c] for c in range(4) if c != j] for r in (1, 2, 3)]
        term = m[0][j] * _det3(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


class HudsonQuartic:
    """w^4 + x^4 + y^4 + z^4 + 2Dwxyz minus the three paired products."""

    arity = 4
    kind = "hudson"
    __slots__ = ("K", "A", "B", "C", "D", "seed")

    def __init__(self, A, B, C, D, K=None, seed=None):
        self.K = K or backend_of(A)
        self.A, self.B, self.C, self.D = (
            _scalar(self.K, v) for v in (A, B, C, D))
        self.seed = seed

    def terms(self, point):
        w, x, y, z = _check_point(self.K, point, 4)
        two = self.K.from_int(2)
        return [
            w ** 4, x ** 4, y ** 4, z ** 4,
            (two * self.D) * (w * x * y * z),
            -(self.A * (w * w * z * z + x * x * y * y)),
            -(self.B * (w * w * x * x + y * y * z * z)),
            -(self.C * (w * w * y * y + x * x * z * z)),
        ]

    def eval(self, point):
        total = None
        for term in self.terms(point):
            total = term if total is None else total + term
        return total

    def constraint(self):
        """D^2 - (A^2 + B^2 + C^2 + ABC - 4); zero for every dictionary."""
        A, B, C, D = self.A, self.B, self.C, self.D
        four = self.K.from_int(4)
        return D * D - (A * A + B * B + C * C + A * B * C - four)


class GoepelQuartic:
    """Phi^2 = 4 delta^2 PQRS; delta is kept when a dictionary supplies it."""

    arity = 4
    kind = "goepel"
    __slots__ = ("K", "alpha", "beta", "gamma", "delta_sq", "delta", "seed")

    def __init__(self, alpha, beta, gamma, delta_sq, K=None, delta=None,
                 seed=None):
        self.K = K or backend_of(alpha)
        self.alpha, self.beta, self.gamma, self.delta_sq = (
            _scalar(self.K, v) for v in (alpha, beta, gamma, delta_sq))
        self.delta = None if delta is None else _scalar(self.K, delta)
        self.seed = seed

    def phi(self, point):
        P, Q, R, S = _check_point(self.K, point, 4)
        return (P * P + Q * Q + R * R + S * S
                - self.alpha * (P * S + Q * R)
                - self.beta * (P * Q + R * S)
                - self.gamma * (P * R + Q * S))

    def terms(self, point):
        P, Q, R, S = _check_point(self.K, point, 4)
        phi = self.phi(point)
        four = self.K.from_int(4)
        return [phi * phi, -((four * self.delta_sq) * (P * Q * R * S))]

    def eval(self, point):
        a, b = self.terms(point)
        return a + b

    def constraint(self):
        """delta^2 - (alpha^2 + beta^2 + gamma^2 + alpha beta gamma - 4)."""
        a, b, g = self.alpha, self.beta, self.gamma
        four = self.K.from_int(4)
        return self.delta_sq - (a * a + b * b + g * g + a * b * g - four)


class RosenhainQuartic:
    """Quartic on a trope tetrahedron with parameters (a, b, c, d^2).

    Only d^2 enters the equation, so the square is what is stored.  The
    cubic monomial involution exchanges this quartic with its partner in
    which the ab cross term is negated; see cremona_image.
    """

    arity = 4
    kind = "rosenhain_quartic"
    __slots__ = ("K", "a", "b", "c", "d_sq", "seed")

    def __init__(self, a, b, c, d_sq, K=None, seed=None):
        self.K = K or backend_of(a)
        self.a, self.b, self.c, self.d_sq = (
            _scalar(self.K, v) for v in (a, b, c, d_sq))
        self.seed = seed

    def terms(self, point, flip_ab=False):
        Y0, Y1, Y2, Y3 = _check_point(self.K, point, 4)
        a, b, c = self.a, self.b, self.c
        two = self.K.from_int(2)
        ab = (two * a * b) * ((Y0 * Y1 - Y2 * Y3) * (Y0 * Y2 + Y1 * Y3))
        return [
            (a * a) * (Y0 * Y0 * Y1 * Y1 + Y2 * Y2 * Y3 * Y3),
            (b * b) * (Y0 * Y0 * Y2 * Y2 + Y1 * Y1 * Y3 * Y3),
            (c * c) * (Y0 * Y0 * Y3 * Y3 + Y1 * Y1 * Y2 * Y2),
            -ab if flip_ab else ab,
            -((two * a * c) * ((Y0 * Y1 + Y2 * Y3) * (Y0 * Y3 + Y1 * Y2))),
            (two * b * c) * ((Y0 * Y2 - Y1 * Y3) * (Y0 * Y3 - Y1 * Y2)),
            self.d_sq * (Y0 * Y1 * Y2 * Y3),
        ]

    def eval(self, point):
        total = None
        for term in self.terms(point):
            total = term if total is None else total + term
        return total

    def eval_flipped(self, point):
        """The partner quartic with the ab cross term negated."""
        total = None
        for term in self.terms(point, flip_ab=True):
            total = term if total is None else total + term
        return total

    @staticmethod
    def cremona_image(point):
        """[Y0:..:Y3] -> [Y1Y2Y3 : Y0Y2Y3 : Y0Y1Y3 : Y0Y1Y2].

        An involution on points off the coordinate planes.  It carries
        this quartic onto the ab-flipped partner and back, so neither
        surface is preserved unless a b = 0.
        """
        Y0, Y1, Y2, Y3 = point
        return (Y1 * Y2 * Y3, Y0 * Y2 * Y3, Y0 * Y1 * Y3, Y0 * Y1 * Y2)


class ThreeQuadrics:
    """t_i^2 = (1-l_i) t4^2 + l_i t5^2 + l_i(l_i - 1) t6^2 for i = 1,2,3."""

    arity = 6
    kind = "three_quadrics"
    __slots__ = ("K", "lams")

    def __init__(self, l1, l2, l3, K=None):
        self.K = K or backend_of(l1)
        self.lams = _coerce_lams(l1, l2, l3, self.K)

    def eval(self, point):
        t = _check_point(self.K, point, 6)
        one = self.K.one()
        out = []
        for i, lam in enumerate(self.lams):
            rhs = ((one - lam) * (t[3] * t[3]) + lam * (t[4] * t[4])
                   + (lam * (lam - one)) * (t[5] * t[5]))
            out.append(t[i] * t[i] - rhs)
        return tuple(out)

    def coefficient_rows(self):
        """Rows over the squared coordinates t1^2 .. t6^2."""
        K, one, zero = self.K, self.K.one(), self.K.zero()
        rows = []
        for i, lam in enumerate(self.lams):
            row = [zero] * 6
            row[i] = one
            row[3] = -(one - lam)
            row[4] = -lam
            row[5] = -(lam * (lam - one))
            rows.append(row)
        return rows

    def system_rank(self):
        return rings.matrix_rank(self.K, self.coefficient_rows())


def model_eval(model, point):
    """Defining polynomial value(s) at the point; zero means on-surface."""
    return model.eval(point)


# ---------------------------------------------------------------------------
# node tables


def hudson_nodes(seed, K=None):
    """The sixteen nodes attached to a base quadruple (w0, x0, y0, z0)."""
    K = K or backend_of(seed[0])
    w0, x0, y0, z0 = (_scalar(K, v) for v in seed)
    rows = [(w0, x0, y0, z0), (x0, w0, z0, y0),
            (y0, z0, w0, x0), (z0, y0, x0, w0)]
    signs = [(1, 1, 1, 1), (-1, -1, 1, 1), (-1, 1, -1, 1), (-1, 1, 1, -1)]
    return [tuple(v if s > 0 else -v for s, v in zip(sgn, row))
            for row in rows for sgn in signs]


def goepel_nodes(seed, K=None):
    """Sixteen nodes from a base quadruple: four squared-sum rows and
    twelve paired-product rows.

    The squared-sum rows carry the slot order [p2:q2:s2:r2] and its
    cyclic companions; at the origin argument the doubling identities
    single out the first row.
    """
    K = K or backend_of(seed[0])
    w0, x0, y0, z0 = (_scalar(K, v) for v in seed)
    zero = K.zero()
    p2 = w0 * w0 + x0 * x0 + y0 * y0 + z0 * z0
    q2 = w0 * w0 + x0 * x0 - y0 * y0 - z0 * z0
    r2 = w0 * w0 - x0 * x0 + y0 * y0 - z0 * z0
    s2 = w0 * w0 - x0 * x0 - y0 * y0 + z0 * z0
    u_p, u_m = w0 * x0 + y0 * z0, w0 * x0 - y0 * z0
    v_p, v_m = w0 * z0 + x0 * y0, w0 * z0 - x0 * y0
    t_p, t_m = w0 * y0 + x0 * z0, w0 * y0 - x0 * z0
    return [
        (p2, q2, s2, r2), (q2, p2, r2, s2),
        (r2, s2, q2, p2), (s2, r2, p2, q2),
        (u_p, u_m, zero, zero), (u_m, u_p, zero, zero),
        (zero, zero, u_p, u_m), (zero, zero, u_m, u_p),
        (v_p, zero, v_m, zero), (zero, v_p, zero, v_m),
        (v_m, zero, v_p, zero), (zero, v_m, zero, v_p),
        (t_p, zero, zero, t_m), (zero, t_p, t_m, zero),
        (zero, t_m, t_p, zero), (t_m, zero, zero, t_p),
    ]


def cf_nodes(model):
    """label -> node of the Cassels-Flynn quartic, certified singular.

    Candidates come from pairwise intersections of the six trope planes
    plus [0:0:0:1]; each is certified by the vanishing of the quartic and
    of all four partial derivatives, so the result is a genuine
    singular-point solve seeded by the plane configuration.
    """
    K = model.K
    if not getattr(K, "exact", False):
        raise ValueError("node solve needs an exact coefficient field")
    if model.lams is None:
        raise ValueError("node solve needs the Rosenhain roots")
    lines = trope_lines(*model.lams, K=K)
    two = K.from_int(2)

    zs = MPoly.variables(K, 4)
    k2, k1, k0 = _k_forms(K, model.L, zs[0], zs[1], zs[2])
    quartic = k2 * (zs[3] * zs[3]) + k1 * zs[3] + k0
    partials = [quartic.derivative(i) for i in range(4)]

    def certify(point):
        if not K.is_zero(quartic.evaluate(point)):
            raise ValueError(f"candidate {point} is not on the quartic")
        if any(not K.is_zero(p.evaluate(point)) for p in partials):
            raise ValueError(f"candidate {point} is not singular")

    zero, one = K.zero(), K.one()
    origin = (zero, zero, zero, one)
    certify(origin)
    nodes = {frozenset(): origin}
    for i in range(1, 7):
        for j in range(i + 1, 7):
            a1, b1, c1 = lines[i]
            a2, b2, c2 = lines[j]
            base = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
            k2v, k1v, _ = _k_forms(K, model.L, *base)
            if K.is_zero(k2v):
                raise ValueError("degenerate roots: plane pair meets the "
                                 "tangent conic locus")
            point = base + (-(k1v) / (two * k2v),)
            certify(point)
            nodes[frozenset((i, j))] = point
    reduced = [_proj_reduce(K, p) for p in nodes.values()]
    for i in range(len(reduced)):
        for j in range(i + 1, len(reduced)):
            if all(K.eq(u, v) for u, v in zip(reduced[i], reduced[j])):
                raise ValueError("degenerate roots: nodes collide")
    return nodes


# ---------------------------------------------------------------------------
# parameter dictionaries


def hudson_from_rosenhain(l1, l2, l3, K=None):
    """(A, B, C, D) as rational functions of the Rosenhain roots."""
    K = K or backend_of(l1)
    l1, l2, l3 = (_scalar(K, v) for v in (l1, l2, l3))
    one, two, four = K.one(), K.from_int(2), K.from_int(4)
    if K.eq(l1, one) or K.eq(l2, l3):
        raise ValueError("needs l1 != 1 and l2 != l3")
    A = two * (l1 + one) / (l1 - one)
    B = (two * (l1 * l2 + l1 * l3 - two * l2 * l3 - two * l1 + l2 + l3)
         / ((l2 - l3) * (l1 - one)))
    C = two * (l3 + l2) / (l3 - l2)
    D = four * (l1 - l2 * l3) / ((l2 - l3) * (l1 - one))
    return HudsonQuartic(A, B, C, D, K=K)


def goepel_from_rosenhain(L1, L2, L3, K=None):
    """(alpha, beta, gamma, delta) from a Rosenhain triple, delta kept."""
    K = K or backend_of(L1)
    L1, L2, L3 = (_scalar(K, v) for v in (L1, L2, L3))
    one, two, four = K.one(), K.from_int(2), K.from_int(4)
    if K.eq(L1, one) or K.eq(L2, L3):
        raise ValueError("needs L1 != 1 and L2 != L3")
    alpha = two * (L1 + one) / (L1 - one)
    beta = (two * (L1 * L2 + L1 * L3 - two * L2 * L3 - two * L1 + L2 + L3)
            / ((L2 - L3) * (L1 - one)))
    gamma = two * (L3 + L2) / (L3 - L2)
    delta = four * (L1 - L2 * L3) / ((L1 - one) * (L3 - L2))
    return GoepelQuartic(alpha, beta, gamma, delta * delta, K=K, delta=delta)


def hudson_seed_parts(seed, K=None):
    """(numerator, denominator) pairs for (A, B, C, D) over a base
    quadruple; division free, so the entries may be MPoly."""
    K = K or backend_of(seed[0])
    w0, x0, y0, z0 = (_scalar(K, v) for v in seed)
    s0, s1, s2, s3 = w0 * w0, x0 * x0, y0 * y0, z0 * z0
    dA = s0 * s3 - s1 * s2
    dB = s0 * s1 - s2 * s3
    dC = s0 * s2 - s1 * s3
    NA = s0 * s0 - s1 * s1 - s2 * s2 + s3 * s3
    NB = s0 * s0 + s1 * s1 - s2 * s2 - s3 * s3
    NC = s0 * s0 - s1 * s1 + s2 * s2 - s3 * s3
    ND = w0 * x0 * y0 * z0
    for e1 in (1, -1):
        for e2 in (1, -1):
            factor = s0
            factor = factor + s1 if e1 > 0 else factor - s1
            factor = factor + s2 if e2 > 0 else factor - s2
            factor = factor + s3 if e1 * e2 > 0 else factor - s3
            ND = ND * factor
    return (NA, dA), (NB, dB), (NC, dC), (ND, dA * dB * dC)


def goepel_seed_parts(seed, K=None):
    """(numerator, denominator) pairs for (alpha, beta, gamma, delta^2)
    over a base quadruple; division free."""
    K = K or backend_of(seed[0])
    w0, x0, y0, z0 = (_scalar(K, v) for v in seed)
    two = K.from_int(2)
    s0, s1, s2, s3 = w0 * w0, x0 * x0, y0 * y0, z0 * z0
    da = s0 * s2 - s1 * s3
    db = s0 * s1 - s2 * s3
    dc = s0 * s3 - s1 * s2
    Na = two * (s0 * s2 + s1 * s3)
    Nb = two * (s0 * s1 + s2 * s3)
    Nc = two * (s0 * s3 + s1 * s2)
    quart = w0 * x0 * y0 * z0
    Nd = K.from_int(16) * (quart * quart * quart * quart)
    for e1 in (1, -1):
        for e2 in (1, -1):
            factor = s0
            factor = factor + s1 if e1 > 0 else factor - s1
            factor = factor + s2 if e2 > 0 else factor - s2
            factor = factor + s3 if e1 * e2 > 0 else factor - s3
            Nd = Nd * factor
    den = da * db * dc
    return (Na, da), (Nb, db), (Nc, dc), (Nd, den * den)


def hudson_from_seed(seed, K=None):
    K = K or backend_of(seed[0])
    parts = hudson_seed_parts(seed, K)
    if any(_entry_zero(K, d) for _, d in parts):
        raise ValueError("degenerate seed: dictionary denominator vanishes")
    (NA, dA), (NB, dB), (NC, dC), (ND, dD) = parts
    return HudsonQuartic(NA / dA, NB / dB, NC / dC, ND / dD, K=K,
                         seed=tuple(_scalar(K, v) for v in seed))


def goepel_from_seed(seed, K=None):
    K = K or backend_of(seed[0])
    parts = goepel_seed_parts(seed, K)
    if any(_entry_zero(K, d) for _, d in parts):
        raise ValueError("degenerate seed: dictionary denominator vanishes")
    (Na, da), (Nb, db), (Nc, dc), (Nd, dd) = parts
    return GoepelQuartic(Na / da, Nb / db, Nc / dc, Nd / dd, K=K,
                         seed=tuple(_scalar(K, v) for v in seed))


def rosenhain_quartic_from_seed(seed, K=None):
    """(a, b, c, d^2) over a base quadruple; d^2 has degree twelve.

    Polynomial throughout, so the entries may be MPoly.
    """
    K = K or backend_of(seed[0])
    t1, t2, t3, t4 = (_scalar(K, v) for v in seed)
    two = K.from_int(2)
    s1, s2, s3, s4 = t1 * t1, t2 * t2, t3 * t3, t4 * t4
    a = ((two * (t1 * t4) - two * (t2 * t3))
         * (two * (t1 * t4) + two * (t2 * t3))
         * (two * (t1 * t3) + two * (t2 * t4)))
    b = ((s1 + s2 - s3 - s4) * (s1 - s2 + s3 - s4)
         * (two * (t1 * t2) - two * (t3 * t4)))
    c = ((s1 - s2 - s3 + s4) * (s1 + s2 + s3 + s4)
         * (two * (t1 * t2) + two * (t3 * t4)))
    sum_all = s1 + s2 + s3 + s4
    d_sq = (K.from_int(256) * (t1 * t2 * t3 * t4)
            * (s1 * s4 - s2 * s3)
            * (s1 * s1 - s2 * s2 - s3 * s3 + s4 * s4)
            + K.from_int(8) * ((s1 + s4) * (s2 + s3))
            * (sum_all * sum_all) * ((s1 - s2 - s3 + s4) ** 2)
            + K.from_int(8) * ((s1 - s4) * (s2 - s3))
            * ((s1 + s2 - s3 - s4) ** 2) * ((s1 - s2 + s3 - s4) ** 2)
            - K.from_int(32) * (s1 * s2 + s3 * s4) * sum_all
            * (s1 - s2 + s3 - s4) * (s1 - s2 - s3 + s4)
            * (s1 + s2 - s3 - s4))
    return RosenhainQuartic(a, b, c, d_sq, K=K,
                            seed=tuple(_scalar(K, v) for v in seed))


# ---------------------------------------------------------------------------
# point transforms


def shioda_to_baker(model, point):
    """(z1, z2, z3, t4) -> (W, X, Y, Z); returns (target model, image)."""
    K = model.K
    z1, z2, z3, t4 = _check_point(K, point, 4)
    L = l_coefficients(*model.lams, K=K)
    k2, k1, _ = _k_forms(K, L, z1, z2, z3)
    two = K.from_int(2)
    half = K.one() / two
    image = (k2 * z1, k2 * z2, k2 * z3, two * t4 + half * k1)
    return BakerQuartic(L, K=K, lams=model.lams), image


def baker_to_cf(model, point):
    """(W, X, Y, Z) -> Cassels-Flynn coordinates, polynomial form."""
    K = model.K
    W, X, Y, Z = _check_point(K, point, 4)
    k2, k1, _ = _k_forms(K, model.L, W, X, Y)
    image = (W * k2, X * k2, Y * k2, Z * k2 - k1)
    if model.lams is not None:
        target = CasselsFlynnQuartic(*model.lams, K=K)
    else:
        target = CasselsFlynnQuartic.from_line_data(model.L, K)
    return target, image


def shioda_to_cf(model, point):
    """(z1, z2, z3, t4) -> (2K2 z1, 2K2 z2, 2K2 z3, 4 t4 - K1)."""
    K = model.K
    z1, z2, z3, t4 = _check_point(K, point, 4)
    L = l_coefficients(*model.lams, K=K)
    k2, k1, _ = _k_forms(K, L, z1, z2, z3)
    two, four = K.from_int(2), K.from_int(4)
    image = (two * (k2 * z1), two * (k2 * z2), two * (k2 * z3),
             four * t4 - k1)
    return CasselsFlynnQuartic(*model.lams, K=K), image


def cf_to_shioda(model, point):
    """(z1, z2, z3, z4) -> (z1, z2, z3, (2 K2 z4 + K1) / 4)."""
    K = model.K
    if model.lams is None:
        raise ValueError("needs the Rosenhain roots")
    z1, z2, z3, z4 = _check_point(K, point, 4)
    k2, k1, _ = model.k_forms(z1, z2, z3)
    quarter = K.one() / K.from_int(4)
    image = (z1, z2, z3, quarter * (K.from_int(2) * (k2 * z4) + k1))
    return ShiodaSextic(*model.lams, K=K), image


def hudson_to_goepel(model, point):
    """Seed-pairing linear map (w, x, y, z) -> (P, Q, R, S)."""
    K = model.K
    if model.seed is None:
        raise ValueError("needs a Hudson model built from a seed")
    w, x, y, z = _check_point(K, point, 4)
    w0, x0, y0, z0 = model.seed
    image = (w0 * w + x0 * x + y0 * y + z0 * z,
             w0 * w + x0 * x - y0 * y - z0 * z,
             w0 * w - x0 * x - y0 * y + z0 * z,
             w0 * w - x0 * x + y0 * y - z0 * z)
    return goepel_from_seed(model.seed, K), image


def hudson_to_rosenhain_quartic(model, point):
    """Seed-pairing linear map (w, x, y, z) -> (Y0, Y1, Y2, Y3)."""
    K = model.K
    if model.seed is None:
        raise ValueError("needs a Hudson model built from a seed")
    w, x, y, z = _check_point(K, point, 4)
    w0, x0, y0, z0 = model.seed
    image = (w0 * w + x0 * x + y0 * y + z0 * z,
             w0 * w + x0 * x - y0 * y - z0 * z,
             z0 * w + y0 * x + x0 * y + w0 * z,
             z0 * w + y0 * x - x0 * y - w0 * z)
    return rosenhain_quartic_from_seed(model.seed, K), image


def rosenhain_quartic_to_hudson(model, point):
    """Inverse of hudson_to_rosenhain_quartic, via paired 2x2 solves."""
    K = model.K
    if model.seed is None:
        raise ValueError("needs a quartic built from a seed")
    Y0, Y1, Y2, Y3 = _check_point(K, point, 4)
    w0, x0, y0, z0 = model.seed
    det = w0 * y0 - x0 * z0
    if K.is_zero(det):
        raise ValueError("degenerate seed: w0 y0 = x0 z0")
    scale = K.one() / (K.from_int(2) * det)
    w = scale * (y0 * (Y0 + Y1) - x0 * (Y2 + Y3))
    x = scale * (w0 * (Y2 + Y3) - z0 * (Y0 + Y1))
    y = scale * (w0 * (Y0 - Y1) - z0 * (Y2 - Y3))
    z = scale * (y0 * (Y2 - Y3) - x0 * (Y0 - Y1))
    return hudson_from_seed(model.seed, K), (w, x, y, z)


class SquaringImage:
    """Result of the coordinate-squaring map on a Hudson quartic point."""

    __slots__ = ("point", "model", "coordinate_plane", "ambient_fiber",
                 "surface_fiber")

    def __init__(self, point, model, coordinate_plane, ambient_fiber,
                 surface_fiber):
        self.point = point
        self.model = model
        self.coordinate_plane = coordinate_plane
        self.ambient_fiber = ambient_fiber
        self.surface_fiber = surface_fiber


def squaring_isogeny(model, point):
    """[w:x:y:z] -> [w^2:x^2:y^2:z^2] onto the Goepel quartic with
    (alpha, beta, gamma, delta) = (A, B, C, D).

    Ambient degree is eight away from the coordinate planes and halves
    for each vanishing coordinate; the restriction to the quartic has
    fibers of four.  Both counts are computed, not assumed.
    """
    K = model.K
    point = _check_point(K, point, 4)
    if not _entry_zero(K, model.eval(point)):
        raise ValueError("point is not on the quartic")
    image = tuple(v * v for v in point)
    target = GoepelQuartic(model.A, model.B, model.C, model.D * model.D,
                           K=K, delta=model.D, seed=model.seed)
    zeros = sum(1 for v in point if K.is_zero(v))
    ambient = 2 ** max(0, 3 - zeros)
    variants = []
    for mask in range(16):
        cand = tuple(-v if mask & (1 << k) else v
                     for k, v in enumerate(point))
        if not K.is_zero(model.eval(cand)):
            continue
        if not any(_proj_equal(K, cand, seen) for seen in variants):
            variants.append(cand)
    return SquaringImage(image, target, zeros > 0, ambient, len(variants))


# ---------------------------------------------------------------------------
# the quotient map from the curve


class KummerImage:
    """Image of a pair of curve points on the Kummer quartic.

    chart is "cf" away from the tangent-conic locus x1 = x2, and falls
    back to "shioda" on it; the shioda fourth coordinate has weight 3.
    """

    __slots__ = ("chart", "coords", "model", "tangent_conic",
                 "conjugate_pair", "weierstrass_node")

    def __init__(self, chart, coords, model, tangent_conic, conjugate_pair,
                 weierstrass_node):
        self.chart = chart
        self.coords = coords
        self.model = model
        self.tangent_conic = tangent_conic
        self.conjugate_pair = conjugate_pair
        self.weierstrass_node = weierstrass_node


def kummer_map(lams, P, Q, K=None):
    """Symmetric-function image of two affine curve points.

    lams may be a triple of Rosenhain roots or a RosenhainCurve; P and Q
    are (x, y) pairs on y^2 = x(x-1)(x-l1)(x-l2)(x-l3).
    """
    if isinstance(lams, RosenhainCurve):
        K = K or lams.K
        lams = (lams.l1, lams.l2, lams.l3)
    else:
        K = K or backend_of(lams[0])
        lams = tuple(_scalar(K, v) for v in lams)
    one, two, four = K.one(), K.from_int(2), K.from_int(4)

    def on_curve(pt):
        x, y = (_scalar(K, v) for v in pt)
        rhs = x * (x - one)
        for lam in lams:
            rhs = rhs * (x - lam)
        if not K.eq(y * y, rhs):
            raise ValueError(f"({x}, {y}) is not on the curve")
        return x, y

    x1, y1 = on_curve(P)
    x2, y2 = on_curve(Q)
    z1, z2, z3 = one, x1 + x2, x1 * x2
    t4 = y1 * y2
    L = l_coefficients(*lams, K=K)
    k2, k1, _ = _k_forms(K, L, z1, z2, z3)
    tangent = K.is_zero(k2)
    conj = tangent and K.eq(y1, -y2)
    node = (not tangent) and K.is_zero(y1) and K.is_zero(y2)
    if tangent:
        return KummerImage("shioda", (z1, z2, z3, t4),
                           ShiodaSextic(*lams, K=K), True, conj, False)
    z4 = (four * t4 - k1) / (two * k2)
    return KummerImage("cf", (z1, z2, z3, z4),
                       CasselsFlynnQuartic(*lams, K=K), False, conj, node)


# ---------------------------------------------------------------------------
# configuration reports


class NodeConfiguration:
    """Node and trope data for one surface model."""

    __slots__ = ("kind", "nodes", "tropes", "incidence", "tangent_ok",
                 "relations_ok", "coordinate_plane_nodes")

    def __init__(self, kind, nodes, tropes=None, incidence=None,
                 tangent_ok=None, relations_ok=None,
                 coordinate_plane_nodes=None):
        self.kind = kind
        self.nodes = nodes
        self.tropes = tropes
        self.incidence = incidence
        self.tangent_ok = tangent_ok
        self.relations_ok = relations_ok
        self.coordinate_plane_nodes = coordinate_plane_nodes


def tropes_and_nodes(model):
    """Node list plus, on the Cassels-Flynn model, the odd-trope planes
    with their incidence counts.

    Even tropes carry no printed equations here, so incidence is reported
    for the six odd planes only.
    """
    K = model.K
    if isinstance(model, CasselsFlynnQuartic):
        nodes = cf_nodes(model)
        lines = trope_lines(*model.lams, K=K)
        incidence = {}
        for idx, (a, b, c) in lines.items():
            carried = []
            for label, pt in nodes.items():
                if K.is_zero(a * pt[0] + b * pt[1] + c * pt[2]):
                    carried.append(label)
            incidence[idx] = sorted(carried, key=sorted)
        tangent_ok = all(line_tangent_to_conic(line, K)
                         for line in lines.values())
        return NodeConfiguration(
            "cf", nodes, tropes=lines, incidence=incidence,
            tangent_ok=tangent_ok,
            relations_ok=trope_relations_ok(*model.lams, K=K))
    if isinstance(model, (HudsonQuartic, GoepelQuartic)):
        if model.seed is None:
            raise ValueError("needs a model built from a seed")
        table = hudson_nodes if isinstance(model, HudsonQuartic) \
            else goepel_nodes
        nodes = table(model.seed, K)
        in_plane = sum(1 for pt in nodes
                       if any(K.is_zero(v) for v in pt))
        return NodeConfiguration(model.kind, nodes,
                                 coordinate_plane_nodes=in_plane)
    raise TypeError(f"no node data for {type(model).__name__}")


# ---------------------------------------------------------------------------
# theta checks


def _normalized_residual(terms):
    total = abs(sum(terms))
    scale = max(abs(t) for t in terms)
    return total / max(1, scale)


def _proj_gap(u, v):
    scale = max(abs(t) for t in u) * max(abs(t) for t in v)
    worst = 0
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            worst = max(worst, abs(u[i] * v[j] - u[j] * v[i]) / scale)
    return worst


def theta_coordinate_checks(tau, z, tol=None):
    """On-surface residuals of the three theta parameterizations.

    Returns a dict with the normalized Hudson, Goepel, and rosenhain
    quartic residuals at (tau, z), plus origin_node_gap: at z = 0 the
    Goepel point must be the first squared-sum node row of the dual-null
    seed (None for nonzero z).
    """
    tol = theta_mod.DEFAULT_TOL if tol is None else tol
    K = rings.CC
    with mpmath.workprec(theta_mod._residual_prec(tol)):
        cn = [theta_mod.theta_value(theta_mod.CHAR_TABLE[i], (0, 0), tau,
                                    tol)
              for i in (1, 2, 3, 4)]
        dn = list(theta_mod.dual_nulls(tau, tol).values)
        double = (2 * z[0], 2 * z[1])
        hudson_pt = [theta_mod.theta_value(theta_mod.DUAL_CHARS[k], double,
                                           tau.scaled(2), tol)
                     for k in range(4)]
        goepel_pt = [theta_mod.theta_value(theta_mod.CHAR_TABLE[i], z, tau,
                                           tol) ** 2
                     for i in (1, 2, 3, 4)]
        rq_pt = [theta_mod.theta_value(theta_mod.CHAR_TABLE[i], z, tau,
                                       tol) ** 2
                 for i in (1, 2, 7, 12)]

        hudson = hudson_from_seed(dn, K)
        goepel_model = hudson_from_seed(cn, K)
        goepel = GoepelQuartic(goepel_model.A, goepel_model.B,
                               goepel_model.C,
                               goepel_model.D * goepel_model.D, K=K,
                               delta=goepel_model.D)
        rq = rosenhain_quartic_from_seed(dn, K)

        report = {
            "hudson": _normalized_residual(hudson.terms(hudson_pt)),
            "goepel": _normalized_residual(goepel.terms(goepel_pt)),
            "rosenhain": _normalized_residual(rq.terms(rq_pt)),
            "origin_node_gap": None,
        }
        if z[0] == 0 and z[1] == 0:
            first_row = goepel_nodes(dn, K)[0]
            report["origin_node_gap"] = _proj_gap(first_row, goepel_pt)
    return report


# ---------------------------------------------------------------------------
# serialization


_MODEL_KINDS = {}


def _register(cls):
    _MODEL_KINDS[cls.kind] = cls
    return cls


for _cls in (ShiodaSextic, CasselsFlynnQuartic, BakerQuartic, HudsonQuartic,
             GoepelQuartic, RosenhainQuartic, ThreeQuadrics):
    _register(_cls)


def model_to_json(model) -> dict:
    """Surface descriptor: model tag, field, and parameter values."""
    K = model.K
    data = {"model": model.kind, "field": field_to_json(K)}
    if model.kind in ("shioda", "cf", "three_quadrics"):
        data["params"] = {"lams": [K.to_json(v) for v in model.lams]}
    elif model.kind == "baker":
        data["params"] = {"L": [K.to_json(v) for v in model.L]}
        if model.lams is not None:
            data["params"]["lams"] = [K.to_json(v) for v in model.lams]
    elif model.kind == "hudson":
        data["params"] = {name: K.to_json(getattr(model, name))
                          for name in ("A", "B", "C", "D")}
        if model.seed is not None:
            data["params"]["seed"] = [K.to_json(v) for v in model.seed]
    elif model.kind == "goepel":
        data["params"] = {name: K.to_json(getattr(model, name))
                          for name in ("alpha", "beta", "gamma", "delta_sq")}
        if model.delta is not None:
            data["params"]["delta"] = K.to_json(model.delta)
        if model.seed is not None:
            data["params"]["seed"] = [K.to_json(v) for v in model.seed]
    elif model.kind == "rosenhain_quartic":
        data["params"] = {name: K.to_json(getattr(model, name))
                          for name in ("a", "b", "c", "d_sq")}
        if model.seed is not None:
            data["params"]["seed"] = [K.to_json(v) for v in model.seed]
    else:
        raise TypeError(f"cannot serialize {type(model).__name__}")
    return data


def model_from_json(data: dict):
    kind = data["model"]
    if kind not in _MODEL_KINDS:
        raise ValueError(f"unknown model tag {kind!r}")
    K = field_from_json(data["field"])
    params = data["params"]
    if kind in ("shioda", "cf", "three_quadrics"):
        lams = [K.from_json(v) for v in params["lams"]]
        return _MODEL_KINDS[kind](*lams, K=K)
    seed = params.get("seed")
    if seed is not None:
        seed = tuple(K.from_json(v) for v in seed)
    if kind == "baker":
        L = [K.from_json(v) for v in params["L"]]
        lams = params.get("lams")
        if lams is not None:
            lams = tuple(K.from_json(v) for v in lams)
        return BakerQuartic(L, K=K, lams=lams)
    if kind == "hudson":
        return HudsonQuartic(*(K.from_json(params[n])
                               for n in ("A", "B", "C", "D")),
                             K=K, seed=seed)
    if kind == "goepel":
        delta = params.get("delta")
        return GoepelQuartic(*(K.from_json(params[n])
                               for n in ("alpha", "beta", "gamma",
                                         "delta_sq")),
                             K=K, seed=seed,
                             delta=None if delta is None
                             else K.from_json(delta))
    return RosenhainQuartic(*(K.from_json(params[n])
                              for n in ("a", "b", "c", "d_sq")),
                            K=K, seed=seed)
