"""Exact projective arithmetic: homogeneous polynomials in x, y, z over Q,
projective points, invertible 3x3 matrices, and torus-permutation maps.

Everything is immutable and kept in a canonical form so that `==` decides
projective equality:

* polynomials: integer coefficients, jointly coprime, the coefficient of the
  lexicographically greatest monomial positive;
* points and matrices: coprime integer entries, first nonzero entry positive.

No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegreeMismatch, SingularMatrix, ZeroTriple

Exp = tuple[int, int, int]

VAR_NAMES = ("x", "y", "z")


def _int_gcd(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def _canonical_int_vector(fracs):
    """Scale a nonzero tuple of Fractions to coprime ints, first nonzero > 0."""
    lcm = 1
    for f in fracs:
        d = Fraction(f).denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(Fraction(f) * lcm) for f in fracs]
    g = _int_gcd(abs(v) for v in ints)
    if g == 0:
        return tuple(0 for _ in ints)
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


# ---------------------------------------------------------------------------
# univariate helpers over Q (dense lists, low degree first)
# ---------------------------------------------------------------------------

def _uni_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _uni_add(p, q):
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _uni_trim(out)


def _uni_scale(p, c):
    if c == 0:
        return []
    return [a * c for a in p]

def _uni_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _uni_trim(out)


def _uni_divmod(p, q):
    if not q:
        raise ZeroDivisionError("univariate division by zero")
    rem = [Fraction(c) for c in p]
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    dq = len(q) - 1
    lead = q[-1]
    while len(rem) - 1 >= dq and rem:
        k = len(rem) - 1 - dq
        c = rem[-1] / lead
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        _uni_trim(rem)
    return _uni_trim(quo), rem


def _uni_gcd(p, q):
    """Monic gcd in Q[t]."""
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in q]
    _uni_trim(a)
    _uni_trim(b)
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _uni_rational_roots(p):
    """All rational roots of p in Q[t] (p nonzero), with multiplicity stripped."""
    coeffs = _canonical_int_vector(p)
    lo = 0
    while coeffs[lo] == 0:
        lo += 1
    roots = set()
    if lo > 0:
        roots.add(Fraction(0))
    ints = list(coeffs[lo:])
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return out

    for num in divisors(a0):
        for den in divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.add(cand)
    return sorted(roots)


# ---------------------------------------------------------------------------
# homogeneous polynomials
# ---------------------------------------------------------------------------

def _lex_key(e: Exp):
    return e


@dataclass(frozen=True)
class HomPoly:
    """Homogeneous polynomial in x, y, z with canonical integer coefficients.

    `coeffs` maps exponent triples (a, b, c) with a+b+c = degree to nonzero
    integers. The zero polynomial has an empty mapping and degree -1.
    """

    degree: int
    coeffs: tuple[tuple[Exp, int], ...]

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_dict(d, degree=None):
        items = {e: Fraction(c) for e, c in d.items() if c != 0}
        if not items:
            return HomPoly(-1, ())
        degs = {sum(e) for e in items}
        if len(degs) != 1:
            raise DegreeMismatch(f"inhomogeneous support: degrees {sorted(degs)}")
        (dd,) = degs
        if degree is not None and degree != dd:
            raise DegreeMismatch(f"expected degree {degree}, found {dd}")
        exps = sorted(items, key=_lex_key, reverse=True)
        vec = _canonical_int_vector([items[e] for e in exps])
        return HomPoly(dd, tuple((e, c) for e, c in zip(exps, vec) if c != 0))

    @staticmethod
    def zero():
        return HomPoly(-1, ())

    @staticmethod
    def variable(i, degree=1):
        e = [0, 0, 0]
        e[i] = degree
        return HomPoly.from_dict({tuple(e): 1})

    @staticmethod
    def linear_form(coeffs):
        a, b, c = coeffs
        return HomPoly.from_dict({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    def is_zero(self):
        return not self.coeffs

    def as_dict(self):
        return dict(self.coeffs)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise DegreeMismatch("sum of different degrees")
        d = dict(self.coeffs)
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) + c
        return HomPoly.from_dict(d)

    def __neg__(self):
        return HomPoly(self.degree, tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return HomPoly.zero()
        d = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                d[e] = d.get(e, 0) + c1 * c2
        return HomPoly.from_dict(d)

    def scaled(self, c):
        if c == 0:
            return HomPoly.zero()
        return HomPoly.from_dict({e: Fraction(c) * k for e, k in self.coeffs})

    def power(self, n):
        out = HomPoly.from_dict({(0, 0, 0): 1})
        base = self
        while n > 0:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, point):
        x, y, z = (Fraction(v) for v in point)
        total = Fraction(0)
        for (a, b, c), k in self.coeffs:
            total += k * x**a * y**b * z**c
        return total

    def substitute(self, f1, f2, f3):
        """Return self(f1, f2, f3) for homogeneous f1, f2, f3 of equal degree."""
        degs = {f.degree for f in (f1, f2, f3) if not f.is_zero()}
        if len(degs) > 1:
            raise DegreeMismatch("substitution triple has mixed degrees")
        if self.is_zero():
            return HomPoly.zero()
        acc = HomPoly.zero()
        for (a, b, c), k in self.coeffs:
            term = f1.power(a) * f2.power(b) * f3.power(c)
            term = term.scaled(k)
            acc = term if acc.is_zero() else acc + term
        return acc

    def gradient(self):
        """Formal partial derivatives (dx, dy, dz)."""
        parts = []
        for i in range(3):
            d = {}
            for e, c in self.coeffs:
                if e[i] > 0:
                    ne = list(e)
                    ne[i] -= 1
                    d[tuple(ne)] = d.get(tuple(ne), 0) + c * e[i]
            parts.append(HomPoly.from_dict(d) if d else HomPoly.zero())
        return tuple(parts)

    def var_valuation(self, i):
        """Largest k with variable i dividing self to the k-th power."""
        if self.is_zero():
            return 0
        return min(e[i] for e, _ in self.coeffs)

    def divide_var_power(self, i, k):
        if k == 0:
            return self
        d = {}
        for e, c in self.coeffs:
            ne = list(e)
            ne[i] -= k
            d[tuple(ne)] = c
        return HomPoly.from_dict(d)

    # -- display -------------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.coeffs:
            mono = "*".join(
                f"{VAR_NAMES[i]}^{e[i]}" if e[i] > 1 else VAR_NAMES[i]
                for i in range(3)
                if e[i] > 0
            )
            if not mono:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__


# ---------------------------------------------------------------------------
# gcd of homogeneous polynomials
# ---------------------------------------------------------------------------
#
# Strategy: strip the common pure power of z, dehomogenize z=1 to land in
# Q[x, y], run a primitive-part Euclidean algorithm with main variable x and
# coefficients in Q[y], rehomogenize to the total degree, and restore the
# stripped power of z. Adequate and exact for the small degrees arising here.

def _biv_from_hom(p: HomPoly):
    """Dehomogenize z=1: dict (a, b) -> Fraction, total degree preserved."""
    return {(e[0], e[1]): Fraction(c) for e, c in p.coeffs}


def _biv_to_hom(d, degree):
    out = {}
    for (a, b), c in d.items():
        out[(a, b, degree - a - b)] = c
    return HomPoly.from_dict(out)


def _biv_deg_x(d):
    return max((a for (a, _b) in d), default=-1)


def _biv_coeff_in_x(d, k):
    """Coefficient of x^k as a univariate poly in y (low-first list)."""
    out = []
    for (a, b), c in d.items():
        if a == k:
            while len(out) <= b:
                out.append(Fraction(0))
            out[b] += c
    return _uni_trim(out)


def _biv_from_x_coeffs(cs):
    d = {}
    for a, poly in enumerate(cs):
        for b, c in enumerate(poly):
            if c != 0:
                d[(a, b)] = c
    return d


def _biv_x_coeffs(d):
    return [_biv_coeff_in_x(d, k) for k in range(_biv_deg_x(d) + 1)]


def _biv_content(d):
    cs = _biv_x_coeffs(d)
    g = []
    for c in cs:
        if c:
            g = _uni_gcd(g, c)
    return g


def _biv_mul_uni(d, u):
    out = {}
    for (a, b), c in d.items():
        for i, k in enumerate(u):
            if k != 0:
                out[(a, b + i)] = out.get((a, b + i), Fraction(0)) + c * k
    return {k: v for k, v in out.items() if v != 0}


def _biv_div_uni(d, u):
    """Exact division of every x-coefficient by the univariate u."""
    cs = _biv_x_coeffs(d)
    out = []
    for c in cs:
        if not c:
            out.append([])
            continue
        q, r = _uni_divmod(c, u)
        if r:
            raise ArithmeticError("inexact content division")
        out.append(q)
    return _biv_from_x_coeffs(out)


def _biv_primitive(d):
    cont = _biv_content(d)
    if not cont:
        return {}, []
    return _biv_div_uni(d, cont), cont


def _biv_mul(d1, d2):
    out = {}
    for (a1, b1), c1 in d1.items():
        for (a2, b2), c2 in d2.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def _biv_pseudo_rem(d1, d2):
    """Pseudo-remainder of d1 by d2 with respect to x."""
    n, m = _biv_deg_x(d1), _biv_deg_x(d2)
    lead2 = _biv_coeff_in_x(d2, m)
    rem = dict(d1)
    while rem and _biv_deg_x(rem) >= m:
        k = _biv_deg_x(rem)
        leadr = _biv_coeff_in_x(rem, k)
        # rem <- lead2 * rem - leadr * x^(k-m) * d2
        new = _biv_mul_uni(rem, lead2)
        sub = _biv_mul_uni(d2, leadr)
        sub = {(a + k - m, b): c for (a, b), c in sub.items()}
        for key, c in sub.items():
            new[key] = new.get(key, Fraction(0)) - c
        rem = {kk: v for kk, v in new.items() if v != 0}
    return rem


def _biv_gcd(d1, d2):
    if not d1:
        return d2
    if not d2:
        return d1
    p1, c1 = _biv_primitive(d1)
    p2, c2 = _biv_primitive(d2)
    cont = _uni_gcd(c1, c2)
    if _biv_deg_x(p1) < _biv_deg_x(p2):
        p1, p2 = p2, p1
    while p2:
        r = _biv_pseudo_rem(p1, p2)
        if not r:
            p1, p2 = p2, {}
            break
        r, _ = _biv_primitive(r)
        p1, p2 = p2, r
    return _biv_mul_uni(p1, cont) if cont else {}


def hom_gcd(p: HomPoly, q: HomPoly) -> HomPoly:
    """Gcd of two homogeneous polynomials, canonicalized."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    kp, kq = p.var_valuation(2), q.var_valuation(2)
    p0 = p.divide_var_power(2, kp)
    q0 = q.divide_var_power(2, kq)
    b = _biv_gcd(_biv_from_hom(p0), _biv_from_hom(q0))
    if not b:
        raise ArithmeticError("gcd of nonzero polynomials came out zero")
    deg = max(a + bb for (a, bb) in b)
    g = _biv_to_hom(b, deg)
    k = min(kp, kq)
    if k:
        g = g * HomPoly.variable(2, k)
    return g


def exact_divide(p: HomPoly, d: HomPoly) -> HomPoly:
    """Exact division p / d for homogeneous polynomials (raises if inexact)."""
    if p.is_zero():
        return p
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    rem = {e: Fraction(c) for e, c in p.coeffs}
    out = {}
    dlead = max(e for e, _ in d.coeffs)
    dlc = dict(d.coeffs)[dlead]
    while rem:
        e = max(rem, key=_lex_key)
        q = tuple(e[i] - dlead[i] for i in range(3))
        if any(v < 0 for v in q):
            raise ArithmeticError("inexact polynomial division")
        c = rem[e] / dlc
        out[q] = out.get(q, Fraction(0)) + c
        for de, dc in d.coeffs:
            key = (q[0] + de[0], q[1] + de[1], q[2] + de[2])
            rem[key] = rem.get(key, Fraction(0)) - c * dc
            if rem[key] == 0:
                del rem[key]
    return HomPoly.from_dict(out)


def triple_cancel(f1: HomPoly, f2: HomPoly, f3: HomPoly):
    """Divide out gcd(f1, f2, f3); the result is a coprime canonical triple."""
    if f1.is_zero() and f2.is_zero() and f3.is_zero():
        raise ZeroTriple("cannot cancel the zero triple")
    g = hom_gcd(hom_gcd(f1, f2), f3)
    if g.degree <= 0:
        return (f1, f2, f3)
    return tuple(exact_divide(f, g) if not f.is_zero() else f for f in (f1, f2, f3))


def poly_substitute(p: HomPoly, f1: HomPoly, f2: HomPoly, f3: HomPoly) -> HomPoly:
    """p(f1, f2, f3), canonicalized; the fi must share a degree."""
    return p.substitute(f1, f2, f3)


# ---------------------------------------------------------------------------
# projective points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjPoint:
    """Point of the projective plane in canonical integer coordinates."""

    coords: tuple[int, int, int]

    @staticmethod
    def make(x, y, z):
        vec = _canonical_int_vector((Fraction(x), Fraction(y), Fraction(z)))
        if vec == (0, 0, 0):
            raise ValueError("projective point needs a nonzero coordinate")
        return ProjPoint(vec)

    def __getitem__(self, i):
        return self.coords[i]

    def first_nonzero(self):
        for i, v in enumerate(self.coords):
            if v != 0:
                return i
        raise AssertionError("zero vector stored in ProjPoint")

    def __str__(self):
        return "[" + ":".join(str(v) for v in self.coords) + "]"

    __repr__ = __str__


E1 = ProjPoint.make(1, 0, 0)
E2 = ProjPoint.make(0, 1, 0)
E3 = ProjPoint.make(0, 0, 1)


def cross(p, q):
    """Line through two points (or intersection of two lines) as a vector."""
    a, b = p.coords if isinstance(p, ProjPoint) else p, q.coords if isinstance(q, ProjPoint) else q
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def collinear(p, q, r):
    c = cross(p, q)
    return sum(c[i] * r.coords[i] for i in range(3)) == 0


# ---------------------------------------------------------------------------
# linear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinMap:
    """Invertible 3x3 matrix over Q in canonical integer form, acting on P^2."""

    rows: tuple[tuple[int, int, int], ...]

    @staticmethod
    def make(rows):
        flat = [Fraction(v) for row in rows for v in row]
        vec = _canonical_int_vector(flat)
        m = (tuple(vec[0:3]), tuple(vec[3:6]), tuple(vec[6:9]))
        if _det(m) == 0:
            raise SingularMatrix(f"singular matrix {rows}")
        return LinMap(m)

    @staticmethod
    def identity():
        return LinMap.make(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @staticmethod
    def from_columns(c1, c2, c3):
        cols = [c.coords if isinstance(c, ProjPoint) else tuple(c) for c in (c1, c2, c3)]
        return LinMap.make(tuple(zip(*cols)))

    def det(self):
        return _det(self.rows)

    def apply(self, p: ProjPoint) -> ProjPoint:
        v = [sum(self.rows[i][j] * p.coords[j] for j in range(3)) for i in range(3)]
        return ProjPoint.make(*v)

    def compose(self, other: "LinMap") -> "LinMap":
        rows = tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(3)) for j in range(3))
            for i in range(3)
        )
        return LinMap.make(rows)

    def inverse(self) -> "LinMap":
        return LinMap.make(_adjugate(self.rows))

    def row_forms(self):
        """The three linear forms whose values give the image point."""
        return tuple(HomPoly.linear_form(r) for r in self.rows)

    def act_on_form(self, w):
        """Pullback of the line {w . x = 0}: returns the vector w A."""
        return tuple(sum(w[i] * self.rows[i][j] for i in range(3)) for j in range(3))

    def is_identity(self):
        return self == LinMap.identity()

    def fixes(self, p: ProjPoint) -> bool:
        return self.apply(p) == p

    def preserves_set(self, pts) -> bool:
        image = {self.apply(p) for p in pts}
        return image == set(pts)

    def preserves_line(self, w) -> bool:
        pull = self.act_on_form(w)
        return _canonical_int_vector(pull) == _canonical_int_vector(w)

    def __str__(self):
        return "lin(" + ";".join(",".join(str(v) for v in r) for r in self.rows) + ")"

    __repr__ = __str__


def _det(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _adjugate(m):
    def cof(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
        return minor if (i + j) % 2 == 0 else -minor

    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


# ---------------------------------------------------------------------------
# torus-permutation maps
# ---------------------------------------------------------------------------

PERMS = {
    (0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1),
}


@dataclass(frozen=True)
class TorusPermElement:
    """Monomial linear map: a coordinate permutation composed with a diagonal.

    `perm[j] = i` means basis vector e_j is sent to (a multiple of) e_i; the
    diagonal holds the three nonzero scaling factors, one per output slot.
    """

    perm: tuple[int, int, int]
    diag: tuple[Fraction, Fraction, Fraction]

    @staticmethod
    def make(perm, diag):
        perm = tuple(perm)
        if perm not in PERMS:
            raise ValueError(f"not a permutation of (0,1,2): {perm}")
        d = tuple(Fraction(v) for v in diag)
        if any(v == 0 for v in d):
            raise ValueError("torus element needs nonzero diagonal entries")
        return TorusPermElement(perm, d)

    @staticmethod
    def identity():
        return TorusPermElement.make((0, 1, 2), (1, 1, 1))

    def to_linmap(self) -> LinMap:
        rows = [[Fraction(0)] * 3 for _ in range(3)]
        for j in range(3):
            rows[self.perm[j]][j] = self.diag[self.perm[j]]
        return LinMap.make(rows)

    @staticmethod
    def from_linmap(m: LinMap):
        """Recognize a monomial matrix; returns None if not of this shape."""
        perm = [None] * 3
        diag = [None] * 3
        for j in range(3):
            nz = [i for i in range(3) if m.rows[i][j] != 0]
            if len(nz) != 1:
                return None
            perm[j] = nz[0]
            diag[nz[0]] = Fraction(m.rows[nz[0]][j])
        if set(perm) != {0, 1, 2}:
            return None
        return TorusPermElement.make(tuple(perm), tuple(diag))


def iota(t: TorusPermElement) -> TorusPermElement:
    """Conjugation by the standard involution: fixes the permutation part and
    inverts the diagonal entrywise."""
    return TorusPermElement.make(t.perm, tuple(1 / d for d in t.diag))
