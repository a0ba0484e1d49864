"""Two-torsion combinatorics and (2,2)-isogenies of genus 2 Jacobians.

The sixteen order-two points of the Jacobian carry labels: the identity P0
and the fifteen pairs P_ij of Weierstrass indices.  Quotients by the
fifteen maximal isotropic four-element subgroups are again principally
polarized; on a sextic model the quotient curve comes from differentiating
a factorization into three quadratics, and on the analytic side from
doubling the period matrix.  Both routes live here, together with the
rescaled-moduli involution tying the Rosenhain parameters of the two sides
to each other.
"""

import itertools

import mpmath

from .curves import BinarySextic
from .rings import backend_of, matrix_det, poly_deriv, poly_mul, poly_sub

_FULL = frozenset(range(1, 7))


def _kzero(K, x):
    return K.is_zero(x)


# ---------------------------------------------------------------------------
# two-torsion labels and the group law


class TwoTorsionLabel:
    """Order-two point P_ij on the Jacobian, or the identity P0.

    The index pair lives inside {1..6}; equal indices collapse to the
    identity, so P66 is the conventional spelling of P0.
    """

    __slots__ = ("pair",)

    def __init__(self, i=None, j=None):
        if i is None and j is None:
            self.pair = frozenset()
            return
        if i is None or j is None:
            raise ValueError("give both indices or neither")
        i, j = int(i), int(j)
        if not (1 <= i <= 6 and 1 <= j <= 6):
            raise ValueError("Weierstrass indices must lie in 1..6")
        self.pair = frozenset() if i == j else frozenset((i, j))

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def _from_set(cls, s):
        out = cls.__new__(cls)
        out.pair = frozenset(s)
        return out

    def is_identity(self):
        return not self.pair

    def indices(self):
        return tuple(sorted(self.pair))

    def label(self):
        return "P0" if not self.pair else "P%d%d" % self.indices()

    def sort_key(self):
        return (len(self.pair),) + self.indices()

    def __add__(self, other):
        return torsion_add(self, other)

    def __eq__(self, other):
        return isinstance(other, TwoTorsionLabel) and self.pair == other.pair

    def __hash__(self):
        return hash(("P2", self.pair))

    def __repr__(self):
        return self.label()


def torsion_add(u, v):
    """Group law: symmetric difference, complemented when four indices
    remain.  Covers P_ij + P_jk = P_ik and P_ij + P_kl = P_mn at once."""
    s = u.pair ^ v.pair
    if len(s) == 4:
        s = _FULL - s
    return TwoTorsionLabel._from_set(s)


def weil_pairing(u, v):
    """+1 or -1: the parity of the overlap of the two index pairs."""
    return -1 if len(u.pair & v.pair) % 2 else 1


def all_labels():
    """The sixteen labels, identity first, then P_ij in lexicographic
    order."""
    out = [TwoTorsionLabel.identity()]
    for i in range(1, 7):
        for j in range(i + 1, 7):
            out.append(TwoTorsionLabel(i, j))
    return out


# ---------------------------------------------------------------------------
# Goepel groups


class GoepelGroup:
    """Maximal isotropic subgroup {P0, P_ij, P_kl, P_mn} of the two-torsion.

    The three index pairs partition {1..6}; closure under the group law is
    then automatic and rechecked on construction.
    """

    __slots__ = ("pairs",)

    def __init__(self, labels):
        labels = list(labels)
        if len(set(labels)) != 4:
            raise ValueError("a Goepel group has four distinct elements")
        nontrivial = sorted((l for l in labels if not l.is_identity()),
                            key=TwoTorsionLabel.sort_key)
        if len(nontrivial) != 3:
            raise ValueError("the identity must be one of the four elements")
        seen = set()
        for l in nontrivial:
            seen |= l.pair
        if seen != _FULL:
            raise ValueError("index pairs must partition {1..6}")
        a, b, c = nontrivial
        if torsion_add(a, b) != c:
            raise ValueError("not closed under the group law")
        self.pairs = tuple(l.indices() for l in nontrivial)

    @classmethod
    def from_partition(cls, pairs):
        return cls([TwoTorsionLabel.identity()]
                   + [TwoTorsionLabel(i, j) for i, j in pairs])

    def members(self):
        return [TwoTorsionLabel.identity()] + [
            TwoTorsionLabel(i, j) for i, j in self.pairs]

    def partition(self):
        return self.pairs

    def label(self):
        return "|".join("%d%d" % p for p in self.pairs)

    def is_isotropic(self):
        ms = self.members()
        return all(weil_pairing(u, v) == 1 for u in ms for v in ms)

    def __contains__(self, label):
        return label in self.members()

    def __iter__(self):
        return iter(self.members())

    def __eq__(self, other):
        return isinstance(other, GoepelGroup) and self.pairs == other.pairs

    def __hash__(self):
        return hash(("Goepel", self.pairs))

    def __repr__(self):
        return "GoepelGroup(%s)" % self.label()


def _pair_partitions(items):
    if not items:
        yield ()
        return
    first = items[0]
    for k in range(1, len(items)):
        pair = (first, items[k])
        rest = items[1:k] + items[k + 1:]
        for sub in _pair_partitions(rest):
            yield (pair,) + sub


def enumerate_goepel():
    """All fifteen Goepel groups, sorted by partition label."""
    return [GoepelGroup.from_partition(p)
            for p in sorted(_pair_partitions(tuple(range(1, 7))))]


def parse_partition(text):
    """Partition syntax "12|34|56" -> ((1, 2), (3, 4), (5, 6))."""
    blocks = text.split("|")
    if len(blocks) != 3 or any(len(b) != 2 for b in blocks):
        raise ValueError("expected three two-digit blocks like 12|34|56")
    pairs = []
    for b in blocks:
        if not b.isdigit():
            raise ValueError("partition blocks must be digits in 1..6")
        i, j = int(b[0]), int(b[1])
        if not (1 <= i < j <= 6):
            raise ValueError("each block needs two increasing indices in 1..6")
        pairs.append((i, j))
    if set().union(*(set(p) for p in pairs)) != _FULL:
        raise ValueError("blocks must cover each index exactly once")
    return tuple(pairs)


# ---------------------------------------------------------------------------
# quadratic splittings and the quotient curve


class SplitCodomain(ValueError):
    """The three quadratics are linearly dependent, so the quotient surface
    degenerates to a product of elliptic curves."""


class QuadraticSplitting:
    """Factorization f6 = A*B*C into three quadratics.

    Quadratics are dehomogenized coefficient triples (c0, c1, c2); a pair
    containing the root at infinity drops to an honest linear factor with
    c2 = 0.
    """

    __slots__ = ("K", "quads", "pairs")

    def __init__(self, K, A, B, C, pairs=None):
        self.K = K
        quads = []
        for q in (A, B, C):
            q = tuple(q) + (K.zero(),) * (3 - len(q))
            if len(q) != 3:
                raise ValueError("quadratics take at most three coefficients")
            if _kzero(K, q[1]) and _kzero(K, q[2]):
                raise ValueError("constant factor cannot carry two roots")
            quads.append(q)
        if sum(1 for q in quads if _kzero(K, q[2])) > 1:
            raise ValueError("two linear factors would put a double root "
                             "at infinity")
        self.quads = tuple(quads)
        self.pairs = tuple(tuple(p) for p in pairs) if pairs else None

    def determinant(self):
        """Determinant of the three coefficient rows in the basis
        {x^2, xz, z^2}; zero exactly in the split case."""
        return matrix_det(self.K, [[q[2], q[1], q[0]] for q in self.quads])

    def product(self):
        """The sextic A*B*C as seven low-to-high coefficients."""
        K = self.K
        g = poly_mul(K, poly_mul(K, list(self.quads[0]), list(self.quads[1])),
                     list(self.quads[2]))
        return tuple((list(g) + [K.zero()] * 7)[:7])

    def __repr__(self):
        tag = self.pairs if self.pairs else "unlabeled"
        return "QuadraticSplitting(%s)" % (tag,)


def pair_quadratic(K, roots, pair):
    """Monic quadratic with the two labeled roots; None marks infinity."""
    ri, rj = roots[pair[0] - 1], roots[pair[1] - 1]
    if ri is None:
        ri, rj = rj, ri
    if ri is None:
        raise ValueError("at most one root may sit at infinity")
    if rj is None:
        return (-ri, K.one(), K.zero())
    return (ri * rj, -(ri + rj), K.one())


def _check_roots(K, roots):
    roots = list(roots)
    if len(roots) != 6:
        raise ValueError("need exactly six labeled roots")
    finite = [r for r in roots if r is not None]
    if len(finite) < 5:
        raise ValueError("at most one root may sit at infinity")
    for a, b in itertools.combinations(finite, 2):
        if K.eq(a, b):
            raise ValueError("repeated roots: the sextic is singular")
    return roots


def splitting_from_roots(roots, pairs, K=None):
    """Splitting of the monic sextic with the given labeled roots.

    pairs may be a partition triple, a partition label, or a GoepelGroup.
    """
    if isinstance(pairs, GoepelGroup):
        pairs = pairs.partition()
    elif isinstance(pairs, str):
        pairs = parse_partition(pairs)
    if K is None:
        K = backend_of(next(r for r in roots if r is not None))
    roots = _check_roots(K, roots)
    quads = [pair_quadratic(K, roots, p) for p in pairs]
    return QuadraticSplitting(K, *quads, pairs=pairs)


def enumerate_splittings(roots, K=None):
    """The fifteen splittings, ordered like enumerate_goepel()."""
    if K is None:
        K = backend_of(next(r for r in roots if r is not None))
    roots = _check_roots(K, roots)
    return [splitting_from_roots(roots, g.partition(), K)
            for g in enumerate_goepel()]


def bracket(K, A, B):
    """[A, B] = A'B - AB' on dehomogenized quadratics; the cubic terms
    cancel identically, leaving a quadratic."""
    g = poly_sub(K, poly_mul(K, poly_deriv(K, list(A)), list(B)),
                 poly_mul(K, list(A), poly_deriv(K, list(B))))
    g = list(g) + [K.zero()] * 3
    return tuple(g[:3])


def richelot_codomain(splitting):
    """Quotient curve of the (2,2)-isogeny attached to the splitting.

    Returns (codomain sextic, determinant); the sextic is the product of
    the three pairwise brackets divided by the determinant.  Raises
    SplitCodomain when the determinant vanishes.
    """
    K = splitting.K
    A, B, C = splitting.quads
    d = splitting.determinant()
    if _kzero(K, d):
        raise SplitCodomain("splitting determinant vanishes: quotient is "
                            "a product of elliptic curves")
    g = poly_mul(K, poly_mul(K, list(bracket(K, A, B)),
                             list(bracket(K, A, C))),
                 list(bracket(K, B, C)))
    g = (list(g) + [K.zero()] * 7)[:7]
    return BinarySextic(K, [c / d for c in g], check=False), d


def dual_splitting(splitting):
    """The bracket splitting of the codomain; its own codomain recovers a
    curve with the starting Igusa point."""
    K = splitting.K
    A, B, C = splitting.quads
    return QuadraticSplitting(K, bracket(K, B, C), bracket(K, A, C),
                              bracket(K, A, B))


# ---------------------------------------------------------------------------
# moduli of the quotient


def rescale_moduli(l1, l2, l3, K=None, root=None):
    """Rescaled Rosenhain moduli (l_i + l_j l_k) / root.

    root must square to l1*l2*l3.  When omitted it is taken from the
    backend's square root and an error is raised if the product is not a
    square there; the opposite branch is selected by passing the negated
    root, which negates all three outputs.
    """
    if K is None:
        K = backend_of(l1)
    prod = l1 * l2 * l3
    if root is None:
        ok, root = K.nth_root(prod, 2)
        if not ok:
            raise ValueError("l1*l2*l3 is not a square in the field; pass "
                             "an explicit root from an extension")
    elif not K.eq(root * root, prod):
        raise ValueError("root^2 does not equal l1*l2*l3")
    if _kzero(K, root):
        raise ValueError("l1*l2*l3 must not vanish")
    return ((l1 + l2 * l3) / root, (l2 + l1 * l3) / root,
            (l3 + l1 * l2) / root)


def isogenous_moduli(rescaled, K=None):
    """Rescaled moduli of the (2,2)-isogenous curve.

    The map is an exact involution: applying it twice returns the input.
    Poles sit at lam1' = +-2 (the split degeneration, reached exactly when
    lam1 = lam2*lam3 before rescaling) and at lam2' = lam3'.
    """
    a, b, c = rescaled
    if K is None:
        K = backend_of(a)
    two = K.from_int(2)
    if _kzero(K, b - c):
        raise ValueError("lam2' = lam3': degenerate configuration")
    if _kzero(K, a - two) or _kzero(K, a + two):
        raise ValueError("lam1' = +-2: split degeneration")
    first = two * (two * a - b - c) / (b - c)
    corr = K.from_int(4) * (a - b) * (a - c) / (b - c)
    return (first, first - corr / (a + two), first - corr / (a - two))


def split_degenerate(rescaled, K=None):
    """Whether the rescaled triple sits on a pole of isogenous_moduli."""
    a, b, c = rescaled
    if K is None:
        K = backend_of(a)
    two = K.from_int(2)
    return (_kzero(K, b - c) or _kzero(K, a - two) or _kzero(K, a + two))


def theta_codomain_moduli(nulls, tol=None):
    """Rosenhain moduli of the doubled-period curve, plus the twist scalar.

    Everything is built from the first four theta nulls.  Returns
    ((L1, L2, L3), mu); raises when one of the participating denominators
    degenerates.
    """
    if tol is None:
        tol = nulls.tol
    n1, n2, n3, n4 = nulls[1], nulls[2], nulls[3], nulls[4]
    s1, s2, s3, s4 = n1 * n1, n2 * n2, n3 * n3, n4 * n4
    total = s1 + s2 + s3 + s4
    t12 = s1 + s2 - s3 - s4
    t13 = s1 - s2 + s3 - s4
    t14 = s1 - s2 - s3 + s4
    pplus = s1 * s2 + s3 * s4 + 2 * n1 * n2 * n3 * n4
    pminus = s1 * s2 - s3 * s4
    quad = n1 * n2 * n3 * n4
    scale = max(1, max(abs(v) for v in (n1, n2, n3, n4)) ** 4)
    cut = mpmath.sqrt(tol) * scale
    for value in (total, t12, t13, t14, pminus, quad):
        if abs(value) <= cut:
            raise ValueError("vanishing theta combination: tau sits on a "
                             "degenerate stratum for these moduli")
    lams = (total * t14 / (t12 * t13), t14 * pplus / (t13 * pminus),
            total * pplus / (t12 * pminus))
    mu = ((n1 * n2 - n3 * n4) ** 2 * t12 * t13
          / (4 * quad * total * t14))
    return lams, mu


__all__ = [
    "TwoTorsionLabel",
    "GoepelGroup",
    "QuadraticSplitting",
    "SplitCodomain",
    "torsion_add",
    "weil_pairing",
    "all_labels",
    "enumerate_goepel",
    "parse_partition",
    "pair_quadratic",
    "splitting_from_roots",
    "enumerate_splittings",
    "bracket",
    "richelot_codomain",
    "dual_splitting",
    "rescale_moduli",
    "isogenous_moduli",
    "split_degenerate",
    "theta_codomain_moduli",
]
