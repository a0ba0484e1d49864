"""Exact coefficient fields, weighted projective points, and resultants.

Every higher module computes over one of three interchangeable backends:

  * QQ        exact rationals (fractions.Fraction underneath)
  * prime_field(p), quad_ext(p)   F_p and F_{p^2} for odd primes p
  * CC        arbitrary-precision complex numbers (mpmath underneath)

A backend is a class (or adapter object) exposing zero/one/from_int/is_zero/
eq plus ordinary arithmetic on its elements.  Polynomials are plain lists of
backend elements, index k holding the coefficient of x^k.
"""

from __future__ import annotations

import functools
from fractions import Fraction

import mpmath

# ---------------------------------------------------------------------------
# primality and residue helpers


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre_symbol(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def smallest_nonresidue(p: int) -> int:
    """Least n >= 2 that is a quadratic non-residue mod p."""
    n = 2
    while legendre_symbol(n, p) != -1:
        n += 1
    return n


def sqrt_mod_prime(a: int, p: int):
    """A square root of a mod p, or None.  Tonelli-Shanks."""
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = smallest_nonresidue(p)
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


# ---------------------------------------------------------------------------
# rational backend


class QQ:
    """Adapter giving fractions.Fraction the common backend interface."""

    name = "QQ"
    exact = True

    @staticmethod
    def zero():
        return Fraction(0)

    @staticmethod
    def one():
        return Fraction(1)

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def eq(x, y):
        return x == y

    @staticmethod
    def random(rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    @staticmethod
    def nth_root(x, d):
        """(True, r) with r^d == x over the rationals, else (False, None)."""
        if d <= 0:
            raise ValueError("root index must be positive")
        if x == 0:
            return True, Fraction(0)
        if x < 0 and d % 2 == 0:
            return False, None
        sign = -1 if x < 0 else 1
        num, den = _int_nth_root(abs(x.numerator), d), _int_nth_root(x.denominator, d)
        if num is None or den is None:
            return False, None
        return True, Fraction(sign * num, den)

    @staticmethod
    def to_json(x):
        return f"{x.numerator}/{x.denominator}"

    @staticmethod
    def from_json(s):
        return Fraction(s)


def _int_nth_root(n: int, d: int):
    if n == 0:
        return 0
    lo, hi = 1, 1
    while hi**d < n:
        lo, hi = hi, hi * 2
    while lo <= hi:
        mid = (lo + hi) // 2
        m = mid**d
        if m == n:
            return mid
        if m < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


# ---------------------------------------------------------------------------
# prime field and quadratic extension backends


@functools.cache
def prime_field(p: int):
    """Field of p elements as a class, p an odd prime."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"modulus {p} is not an odd prime")

    class Fp:
        __slots__ = ("v",)
        modulus = p
        name = f"GF({p})"
        exact = True

        def __init__(self, v):
            self.v = v % p

        @classmethod
        def zero(cls):
            return cls(0)

        @classmethod
        def one(cls):
            return cls(1)

        @classmethod
        def from_int(cls, n):
            return cls(n)

        @staticmethod
        def is_zero(x):
            return x.v == 0

        @staticmethod
        def eq(x, y):
            return x.v == y.v

        @classmethod
        def random(cls, rng):
            return cls(rng.randrange(p))

        @classmethod
        def nth_root(cls, x, d):
            if x.v == 0:
                return True, cls(0)
            g = _gcd(d, p - 1)
            if pow(x.v, (p - 1) // g, p) != 1:
                return False, None
            # the root exists; locate one by scanning a generator's powers
            for r in _root_candidates(x.v, d, p):
                return True, cls(r)
            return False, None

        def __add__(self, o):
            return Fp(self.v + o.v)

        def __sub__(self, o):
            return Fp(self.v - o.v)

        def __neg__(self):
            return Fp(-self.v)

        def __mul__(self, o):
            return Fp(self.v * o.v)

        def __truediv__(self, o):
            if o.v == 0:
                raise ZeroDivisionError("division by zero in " + Fp.name)
            return Fp(self.v * pow(o.v, -1, p))

        def __pow__(self, e):
            if e < 0:
                return Fp(pow(self.v, e, p))
            return Fp(pow(self.v, e, p))

        def __eq__(self, o):
            return isinstance(o, Fp) and self.v == o.v

        def __hash__(self):
            return hash((p, self.v))

        def __repr__(self):
            return f"{self.v}"

        def to_json(self):
            return self.v

        @classmethod
        def from_json(cls, data):
            return cls(int(data))

    return Fp


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _root_candidates(a, d, p):
    # brute scan; fields this is used on are small (graph-walk primes)
    for r in range(1, p):
        if pow(r, d, p) == a % p:
            yield r


@functools.cache
def quad_ext(p: int, ns: int | None = None):
    """F_{p^2} = F_p[s]/(s^2 - ns) with ns the least non-residue mod p.

    Elements are c0 + c1*s; JSON form is [c0, c1] with p and ns carried by
    the class.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"modulus {p} is not an odd prime")
    if ns is None:
        # delegate so quad_ext(p) and quad_ext(p, default_ns) share one class
        return quad_ext(p, smallest_nonresidue(p))
    if legendre_symbol(ns, p) != -1:
        raise ValueError(f"{ns} is a square mod {p}")

    class Fp2:
        __slots__ = ("c0", "c1")
        modulus = p
        nonresidue = ns
        name = f"GF({p}^2)"
        exact = True

        def __init__(self, c0, c1=0):
            self.c0 = c0 % p
            self.c1 = c1 % p

        @classmethod
        def zero(cls):
            return cls(0, 0)

        @classmethod
        def one(cls):
            return cls(1, 0)

        @classmethod
        def from_int(cls, n):
            return cls(n, 0)

        @staticmethod
        def is_zero(x):
            return x.c0 == 0 and x.c1 == 0

        @staticmethod
        def eq(x, y):
            return x.c0 == y.c0 and x.c1 == y.c1

        @classmethod
        def random(cls, rng):
            return cls(rng.randrange(p), rng.randrange(p))

        @classmethod
        def nth_root(cls, x, d):
            if cls.is_zero(x):
                return True, cls.zero()
            q1 = p * p - 1
            g = _gcd(d, q1)
            if (x ** (q1 // g)) != cls.one():
                return False, None
            gen = cls._generator()
            # cyclic of order q1: x = gen^k, solve d*y = k mod q1
            k = cls._dlog(gen, x)
            gg = _gcd(d, q1)
            if k % gg != 0:
                return False, None
            y = (k // gg) * pow(d // gg, -1, q1 // gg) % (q1 // gg)
            return True, gen**y

        @classmethod
        @functools.cache
        def _generator(cls):
            q1 = p * p - 1
            fac = _prime_factors(q1)
            for c0 in range(p):
                for c1 in range(p):
                    if c0 == 0 and c1 == 0:
                        continue
                    g = cls(c0, c1)
                    if all(g ** (q1 // f) != cls.one() for f in fac):
                        return g
            raise ArithmeticError("no generator found")  # cannot happen

        @classmethod
        def _dlog(cls, gen, x):
            # baby-step giant-step; used only on walk-scale primes
            q1 = p * p - 1
            m = int(q1**0.5) + 1
            table = {}
            e = cls.one()
            for j in range(m):
                table.setdefault((e.c0, e.c1), j)
                e = e * gen
            factor = gen ** (q1 - m)  # gen^{-m}
            gamma = x
            for i in range(m + 1):
                j = table.get((gamma.c0, gamma.c1))
                if j is not None:
                    return (i * m + j) % q1
                gamma = gamma * factor
            raise ArithmeticError("discrete log failed")

        def frobenius(self):
            # s^p = -s since s^2 is a non-residue
            return Fp2(self.c0, -self.c1)

        def norm(self):
            # N(c0 + c1 s) = c0^2 - ns c1^2 in F_p
            return (self.c0 * self.c0 - ns * self.c1 * self.c1) % p

        def __add__(self, o):
            return Fp2(self.c0 + o.c0, self.c1 + o.c1)

        def __sub__(self, o):
            return Fp2(self.c0 - o.c0, self.c1 - o.c1)

        def __neg__(self):
            return Fp2(-self.c0, -self.c1)

        def __mul__(self, o):
            return Fp2(
                self.c0 * o.c0 + ns * self.c1 * o.c1,
                self.c0 * o.c1 + self.c1 * o.c0,
            )

        def __truediv__(self, o):
            n = o.norm()
            if n == 0:
                raise ZeroDivisionError("division by zero in " + Fp2.name)
            ninv = pow(n, -1, p)
            # multiply by conjugate over norm
            r0 = (self.c0 * o.c0 - ns * self.c1 * o.c1) * ninv
            r1 = (self.c1 * o.c0 - self.c0 * o.c1) * ninv
            return Fp2(r0, r1)

        def __pow__(self, e):
            if e < 0:
                return (Fp2(1, 0) / self) ** (-e)
            r, b = Fp2(1, 0), self
            while e:
                if e & 1:
                    r = r * b
                b = b * b
                e >>= 1
            return r

        def __eq__(self, o):
            return isinstance(o, Fp2) and self.c0 == o.c0 and self.c1 == o.c1

        def __hash__(self):
            return hash((p, ns, self.c0, self.c1))

        def __repr__(self):
            if self.c1 == 0:
                return f"{self.c0}"
            return f"{self.c0}+{self.c1}s"

        def to_json(self):
            return [self.c0, self.c1]

        @classmethod
        def from_json(cls, data):
            return cls(int(data[0]), int(data[1]))

    return Fp2


def _prime_factors(n: int):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


# ---------------------------------------------------------------------------
# complex backend

DEFAULT_PREC = 128  # bits of mantissa


class CC:
    """Adapter for mpmath complex numbers.

    Arithmetic runs at mpmath's current precision; entry points that care set
    it with mpmath.workprec.  is_zero/eq take an absolute tolerance derived
    from the current precision unless one is supplied.
    """

    name = "CC"
    exact = False

    @staticmethod
    def zero():
        return mpmath.mpc(0)

    @staticmethod
    def one():
        return mpmath.mpc(1)

    @staticmethod
    def from_int(n):
        return mpmath.mpc(n)

    @staticmethod
    def tol():
        return mpmath.mpf(2) ** (-(mpmath.mp.prec // 2))

    @staticmethod
    def is_zero(x, tol=None):
        t = CC.tol() if tol is None else tol
        return abs(x) <= t

    @staticmethod
    def eq(x, y, tol=None):
        t = CC.tol() if tol is None else tol
        scale = max(1, abs(x), abs(y))
        return abs(x - y) <= t * scale

    @staticmethod
    def random(rng):
        return mpmath.mpc(rng.uniform(-2, 2), rng.uniform(-2, 2))

    @staticmethod
    def nth_root(x, d):
        if x == 0:
            return True, mpmath.mpc(0)
        return True, x ** (mpmath.mpf(1) / d)

    @staticmethod
    def to_json(x):
        return [mpmath.nstr(x.real, 25), mpmath.nstr(x.imag, 25)]

    @staticmethod
    def from_json(data):
        return mpmath.mpc(mpmath.mpf(data[0]), mpmath.mpf(data[1]))


# ---------------------------------------------------------------------------
# weighted projective points


class WeightedProjPoint:
    """Coordinates with declared positive integer weights."""

    __slots__ = ("coords", "weights")

    def __init__(self, coords, weights):
        coords = tuple(coords)
        weights = tuple(int(w) for w in weights)
        if len(coords) != len(weights):
            raise ValueError("coordinate/weight length mismatch")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        self.coords = coords
        self.weights = weights

    def __repr__(self):
        body = " : ".join(repr(c) for c in self.coords)
        return f"[{body}]"


def weighted_proj_equal(a: WeightedProjPoint, b: WeightedProjPoint, K, tol=None) -> bool:
    """Whether a and b agree up to l with a_i = l^{w_i} b_i, l in K*.

    Exact backends decide exactly (including whether the needed l exists in
    the field); the complex backend compares with a tolerance.
    """
    if a.weights != b.weights:
        raise ValueError("weight mismatch")
    za = [_bk_is_zero(K, c, tol) for c in a.coords]
    zb = [_bk_is_zero(K, c, tol) for c in b.coords]
    if all(za) or all(zb):
        raise ValueError("all-zero point is not a weighted projective point")
    if za != zb:
        return False
    support = [i for i in range(len(za)) if not za[i]]
    ratios = {i: a.coords[i] / b.coords[i] for i in support}
    ws = [a.weights[i] for i in support]
    d, coeffs = _gcd_bezout(ws)
    m = K.one()
    for i, c in zip(support, coeffs):
        m = m * _int_pow(ratios[i], c, K)
    for i in support:
        if not _bk_eq(K, _int_pow(m, a.weights[i] // d, K), ratios[i], tol):
            return False
    ok, _ = K.nth_root(m, d)
    return ok


def _bk_is_zero(K, x, tol):
    if K.exact:
        return K.is_zero(x)
    return K.is_zero(x, tol)


def _bk_eq(K, x, y, tol):
    if K.exact:
        return K.eq(x, y)
    return K.eq(x, y, tol)


def _int_pow(x, e, K):
    if e >= 0:
        r = K.one()
        for _ in range(e):
            r = r * x
        return r
    return K.one() / _int_pow(x, -e, K)


def _gcd_bezout(ws):
    """gcd of ws together with integer coefficients realizing it."""
    d, coeffs = ws[0], [1] + [0] * (len(ws) - 1)
    for k in range(1, len(ws)):
        g, x, y = _ext_gcd(d, ws[k])
        coeffs = [c * x for c in coeffs[:k]] + [y] + [0] * (len(ws) - k - 1)
        d = g
    return d, coeffs


def _ext_gcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


# ---------------------------------------------------------------------------
# dense polynomials: list of coefficients, index = degree


def poly(K, ints):
    return [K.from_int(n) for n in ints]


def poly_trim(K, f):
    while f and K.is_zero(f[-1]):
        f = f[:-1]
    return f


def poly_deg(K, f):
    f = poly_trim(K, f)
    return len(f) - 1 if f else -1


def poly_add(K, f, g):
    n = max(len(f), len(g))
    out = []
    for k in range(n):
        a = f[k] if k < len(f) else K.zero()
        b = g[k] if k < len(g) else K.zero()
        out.append(a + b)
    return out


def poly_sub(K, f, g):
    return poly_add(K, f, [-c for c in g])


def poly_scale(K, f, c):
    return [c * a for a in f]


def poly_mul(K, f, g):
    if not f or not g:
        return []
    out = [K.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def poly_eval(K, f, x):
    r = K.zero()
    for c in reversed(f):
        r = r * x + c
    return r


def poly_deriv(K, f):
    return [K.from_int(k) * f[k] for k in range(1, len(f))]


def poly_divmod(K, f, g):
    f, g = poly_trim(K, list(f)), poly_trim(K, list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [K.zero()] * max(0, len(f) - len(g) + 1)
    r = f
    while len(r) >= len(g) and r:
        c = r[-1] / g[-1]
        k = len(r) - len(g)
        q[k] = c
        r = poly_trim(K, poly_sub(K, r, [K.zero()] * k + poly_scale(K, g, c)))
    return q, r


def poly_gcd(K, f, g):
    f, g = poly_trim(K, list(f)), poly_trim(K, list(g))
    while g:
        _, r = poly_divmod(K, f, g)
        f, g = g, r
    if f:
        lead = f[-1]
        f = [c / lead for c in f]
    return f


def poly_pow(K, f, e):
    r, b = [K.one()], list(f)
    while e:
        if e & 1:
            r = poly_mul(K, r, b)
        b = poly_mul(K, b, b)
        e >>= 1
    return r


def poly_pow_mod(K, f, e, mod):
    _, f = poly_divmod(K, f, mod)
    r = [K.one()]
    b = f
    while e:
        if e & 1:
            _, r = poly_divmod(K, poly_mul(K, r, b), mod)
        _, b = poly_divmod(K, poly_mul(K, b, b), mod)
        e >>= 1
    return r


def matrix_det(K, rows):
    """Determinant by Gaussian elimination; rows is a list of lists."""
    n = len(rows)
    m = [list(r) for r in rows]
    det = K.one()
    for col in range(n):
        pivot = None
        if K.exact:
            for r in range(col, n):
                if not K.is_zero(m[r][col]):
                    pivot = r
                    break
        else:
            best = None
            for r in range(col, n):
                mag = abs(m[r][col])
                if best is None or mag > best:
                    best, pivot = mag, r
            if best is not None and K.is_zero(m[pivot][col]):
                pivot = None
        if pivot is None:
            return K.zero()
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        inv = K.one() / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if K.is_zero(factor):
                continue
            for c in range(col, n):
                m[r][c] = m[r][c] - factor * m[col][c]
    return det


def matrix_rank(K, rows):
    """Row rank by Gaussian elimination; rows may be rectangular."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        if rank == len(m):
            break
        pivot = None
        if K.exact:
            for r in range(rank, len(m)):
                if not K.is_zero(m[r][col]):
                    pivot = r
                    break
        else:
            best = None
            for r in range(rank, len(m)):
                mag = abs(m[r][col])
                if best is None or mag > best:
                    best, pivot = mag, r
            if best is not None and K.is_zero(m[pivot][col]):
                pivot = None
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = K.one() / m[rank][col]
        for r in range(rank + 1, len(m)):
            factor = m[r][col] * inv
            if K.is_zero(factor):
                continue
            for c in range(col, ncols):
                m[r][c] = m[r][c] - factor * m[rank][c]
        rank += 1
    return rank


def poly_resultant(K, f, g, degf=None, degg=None):
    """Resultant via the Sylvester determinant.

    degf/degg declare formal degrees (roots at infinity allowed); they default
    to the actual degrees.
    """
    f, g = poly_trim(K, list(f)), poly_trim(K, list(g))
    m = poly_deg(K, f) if degf is None else degf
    n = poly_deg(K, g) if degg is None else degg
    if m < 0 or n < 0:
        return K.zero()
    if m < poly_deg(K, f) or n < poly_deg(K, g):
        raise ValueError("declared degree below actual degree")
    if m == 0 and n == 0:
        return K.one()
    fc = f + [K.zero()] * (m + 1 - len(f))
    gc = g + [K.zero()] * (n + 1 - len(g))
    rows = []
    for i in range(n):
        row = [K.zero()] * (m + n)
        for k in range(m + 1):
            row[i + k] = fc[m - k]
        rows.append(row)
    for i in range(m):
        row = [K.zero()] * (m + n)
        for k in range(n + 1):
            row[i + k] = gc[n - k]
        rows.append(row)
    return matrix_det(K, rows)


def poly_discriminant(K, f, degree=None):
    """Discriminant of f with an optional declared degree.

    Declared degree n = deg f + 1 treats the form as carrying one root at
    infinity (the value is the continuous a_n -> 0 limit of the degree-n
    discriminant); n >= deg f + 2 forces a repeated root at infinity, hence 0.
    For a monic polynomial this is exactly the product of squared root
    differences, roots at infinity contributing nothing.
    """
    f = poly_trim(K, list(f))
    m = poly_deg(K, f)
    if m < 0:
        raise ValueError("discriminant of the zero polynomial")
    n = m if degree is None else degree
    if n < m:
        raise ValueError("declared degree below actual degree")
    if n >= m + 2:
        return K.zero()
    if m == 0:
        return K.one()
    lead = f[-1]
    res = poly_resultant(K, f, poly_deriv(K, f))
    sign = K.from_int(-1) if (m * (m - 1) // 2) % 2 else K.one()
    disc = sign * res / lead
    if n == m + 1:
        disc = lead * lead * disc
    return disc


def backend_of(x):
    """Backend class for a single element (Fraction/int -> QQ, mpmath -> CC,
    finite-field instances -> their own class)."""
    if isinstance(x, (Fraction, int)):
        return QQ
    if isinstance(x, (mpmath.mpc, mpmath.mpf)):
        return CC
    cls = type(x)
    if hasattr(cls, "from_int") and hasattr(cls, "exact"):
        return cls
    raise TypeError(f"no backend for {cls.__name__}")


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class MPoly:
    """Sparse polynomial in a fixed number of variables over a backend.

    Terms map exponent tuples to nonzero coefficients.  Built for exact
    identity checks (expand both sides, subtract, compare with the zero
    polynomial), not for speed-critical arithmetic.
    """

    __slots__ = ("K", "nvars", "terms")

    def __init__(self, K, nvars, terms=None):
        self.K = K
        self.nvars = nvars
        clean = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(expo)
            if len(expo) != nvars or any(e < 0 for e in expo):
                raise ValueError("bad exponent tuple %r" % (expo,))
            if not K.is_zero(coeff):
                clean[expo] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, K, nvars, value):
        if isinstance(value, int):
            value = K.from_int(value)
        return cls(K, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, K, nvars, index):
        expo = [0] * nvars
        expo[index] = 1
        return cls(K, nvars, {tuple(expo): K.one()})

    @classmethod
    def variables(cls, K, nvars):
        return tuple(cls.variable(K, nvars, i) for i in range(nvars))

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        return MPoly.constant(self.K, self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            terms[expo] = terms.get(expo, self.K.zero()) + coeff
        return MPoly(self.K, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.K, self.nvars,
                     {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                expo = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                if expo in terms:
                    terms[expo] = terms[expo] + prod
                else:
                    terms[expo] = prod
        return MPoly(self.K, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.constant(self.K, self.nvars, self.K.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), self.K.zero())

    def derivative(self, index):
        """Formal partial derivative in the given variable."""
        if not 0 <= index < self.nvars:
            raise ValueError("variable index out of range")
        terms = {}
        for expo, coeff in self.terms.items():
            e = expo[index]
            if e == 0:
                continue
            lowered = list(expo)
            lowered[index] = e - 1
            terms[tuple(lowered)] = coeff * self.K.from_int(e)
        return MPoly(self.K, self.nvars, terms)

    def degree(self):
        """Total degree, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def evaluate(self, values):
        """Value at a point; entries may be ring elements or MPoly."""
        if len(values) != self.nvars:
            raise ValueError("expected %d values" % self.nvars)
        total = None
        for expo, coeff in sorted(self.terms.items()):
            term = coeff
            for v, e in zip(values, expo):
                for _ in range(e):
                    term = term * v
            total = term if total is None else total + term
        if total is None:
            return self.K.zero()
        return total

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for expo, coeff in sorted(self.terms.items(), reverse=True):
            mono = "*".join("x%d^%d" % (i, e)
                            for i, e in enumerate(expo) if e)
            bits.append("(%s)%s" % (coeff, "*" + mono if mono else ""))
        return "MPoly(%s)" % " + ".join(bits)
