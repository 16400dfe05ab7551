"""Transport of bubble points through birational maps by symbolic arcs.

A bubble point of height h is represented by the family of all smooth curve
germs through it: a truncated power-series arc whose constrained jet orders
encode the tower and whose higher orders are free polynomial parameters.
Pushing the arc through the map and reading off the chain of infinitely near
points it passes gives the transported point; the chain is cut at the first
level whose value genuinely depends on the free parameters.

All readings are division-free (projective numerator pairs with a common
denominator series) and every accepted chain entry is certified exact by a
polynomial identity, so the transport is rigorous, not sampled.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import TowerTooDeep, UnsupportedBasePointConfiguration

TRUNC = 9          # series are kept modulo t^TRUNC
NPARAMS = 16       # free jet parameters (8 per affine coordinate)


# ---------------------------------------------------------------------------
# polynomials in the free parameters
# ---------------------------------------------------------------------------

class PPoly:
    """Sparse polynomial over Q in the NPARAMS jet parameters."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def const(c):
        c = Fraction(c)
        return PPoly({(): c} if c else {})

    @staticmethod
    def param(i):
        return PPoly({((i, 1),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return PPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Fraction(0)) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return PPoly(out)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return PPoly()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _merge_exps(e1, e2)
                v = out.get(e, Fraction(0)) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return PPoly(out)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return PPoly()
        return PPoly({e: k * c for e, k in self.terms.items()})

    def eval(self, values):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for (i, k) in e:
                v *= values[i] ** k
            total += v
        return total


def _merge_exps(e1, e2):
    d = dict(e1)
    for i, k in e2:
        d[i] = d.get(i, 0) + k
    return tuple(sorted(d.items()))


# ---------------------------------------------------------------------------
# truncated series with PPoly coefficients
# ---------------------------------------------------------------------------

class Series:
    """Polynomial in t modulo t^TRUNC with PPoly coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)[:TRUNC]
        while len(cs) < TRUNC:
            cs.append(PPoly())
        self.coeffs = cs

    @staticmethod
    def const(c):
        return Series([PPoly.const(c)])

    @staticmethod
    def zero():
        return Series([])

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None

    def shift_down(self, k):
        return Series(self.coeffs[k:])

    def __add__(self, other):
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        out = [PPoly() for _ in range(TRUNC)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= TRUNC:
                    break
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return Series(out)

    def scale(self, c):
        return Series([a.scale(c) for a in self.coeffs])

    def scale_p(self, p):
        return Series([a * p for a in self.coeffs])


def _series_pow(s, n):
    out = Series.const(1)
    for _ in range(n):
        out = out * s
    return out


def evaluate_poly_on_series(poly, xs, ys, zs):
    """Evaluate a HomPoly on a series triple."""
    total = Series.zero()
    powers = {}

    def p(s, key, n):
        if (key, n) not in powers:
            powers[(key, n)] = _series_pow(s, n)
        return powers[(key, n)]

    for (a, b, c), k in poly.coeffs:
        term = Series.const(k)
        if a:
            term = term * p(xs, "x", a)
        if b:
            term = term * p(ys, "y", b)
        if c:
            term = term * p(zs, "z", c)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# probe machinery: find a rational candidate, then certify symbolically
# ---------------------------------------------------------------------------

_PROBES = [
    [Fraction(2 + 3 * k + 5 * i * i + i * k) for i in range(NPARAMS)]
    for k in range(24)
]


def _canonical_pair(a, b):
    if a == 0 and b == 0:
        return (0, 0)
    la = a.denominator if isinstance(a, Fraction) else 1
    lb = b.denominator if isinstance(b, Fraction) else 1
    l = la * lb // gcd(la, lb)
    ia, ib = int(a * l), int(b * l)
    g = gcd(abs(ia), abs(ib))
    ia, ib = ia // g, ib // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib = -ia, -ib
    return (ia, ib)


def read_projective_value(leads):
    """Certified constant projective value of a tuple of PPolys.

    Returns the canonical integer tuple, or None when the projective class
    genuinely depends on the parameters.
    """
    for probe in _PROBES:
        vals = [p.eval(probe) for p in leads]
        if any(v != 0 for v in vals):
            break
    else:
        raise AssertionError("could not find a nonvanishing probe")
    # certify: leads[i] * vals[j] == leads[j] * vals[i] as polynomials
    for i in range(len(leads)):
        for j in range(i + 1, len(leads)):
            diff = leads[i].scale(vals[j]) - leads[j].scale(vals[i])
            if not diff.is_zero():
                return None
    from .exact import _canonical_int_vector

    return _canonical_int_vector(vals)


# ---------------------------------------------------------------------------
# arc construction
# ---------------------------------------------------------------------------

def _free(i):
    return PPoly.param(i)


def build_affine_arc(tower):
    """Series (u(t), v(t)) of the generic arc through a tower at the origin.

    `tower` is the tuple of P^1 chart coordinates (length 0, 1 or 2) above
    the chart origin.
    """
    ucs = [PPoly() for _ in range(TRUNC)]
    vcs = [PPoly() for _ in range(TRUNC)]
    start = 1
    if len(tower) == 0:
        start = 1
    elif len(tower) >= 1:
        du, dv = tower[0]
        ucs[1] = PPoly.const(du)
        vcs[1] = PPoly.const(dv)
        start = 2
        if len(tower) == 2:
            p, q = tower[1]
            if p == 0:
                raise UnsupportedBasePointConfiguration(
                    "level-2 point on the strict transform of the first "
                    "exceptional curve is not arc-representable"
                )
            if du != 0:
                # [du^3 : B2*du - A2*dv] = [p : q]
                a2 = _free(2)
                kappa = Fraction(q * du**3, p)
                b2 = (a2.scale(Fraction(dv, du))) + PPoly.const(kappa / du)
                ucs[2] = a2
                vcs[2] = b2
            else:
                # chart with s = v, n = u/v: leading [1 : A2/dv^2]-ish
                # arc: u = A2 t^2 + ..., v = dv t + B2 t^2 + ...
                # n = u/v = (A2/dv) t + ..., s = v = dv t + ...
                # [ds : dn] = [dv : A2/dv] = [dv^2 : A2] = [p : q]
                ucs[2] = PPoly.const(Fraction(q * dv * dv, p))
                vcs[2] = _free(3)
            start = 3
    for k in range(start, TRUNC):
        ucs[k] = _free(2 * k % NPARAMS)
        vcs[k] = _free((2 * k + 1) % NPARAMS)
    if len(tower) == 0:
        ucs[1] = _free(0)
        vcs[1] = _free(1)
    return Series(ucs), Series(vcs)


def projective_arc(base, tower):
    """Series triple (X, Y, Z) of the generic arc through a bubble point."""
    c = base.first_nonzero()
    others = [i for i in range(3) if i != c]
    a, b = others
    u, v = build_affine_arc(tower)
    pa = Fraction(base[a], base[c])
    pb = Fraction(base[b], base[c])
    slots = {}
    slots[a] = Series.const(pa) + u
    slots[b] = Series.const(pb) + v
    slots[c] = Series.const(1)
    return slots[0], slots[1], slots[2]


# ---------------------------------------------------------------------------
# chain reading
# ---------------------------------------------------------------------------

def transport_through(components, base, tower, max_height=2):
    """Image of the bubble point (base, tower) under the map with the given
    components, as a (ProjPoint, tower-tuple) pair.

    Raises TowerTooDeep when the image has height > max_height.
    """
    from .exact import ProjPoint, _canonical_int_vector

    X0, Y0, Z0 = projective_arc(base, tower)
    img = [evaluate_poly_on_series(p, X0, Y0, Z0) for p in components]

    vals = [s.valuation() for s in img]
    vals = [v for v in vals if v is not None]
    if not vals:
        raise AssertionError("image arc is identically zero")
    m = min(vals)
    img = [s.shift_down(m) for s in img]
    leads = [s.coeffs[0] for s in img]
    point_vec = read_projective_value(leads)
    if point_vec is None:
        raise AssertionError("image base point depends on arc parameters")
    q = ProjPoint(point_vec)

    c = q.first_nonzero()
    others = [i for i in range(3) if i != c]
    a, b = others
    U = img[a].scale(q[c]) - img[c].scale(q[a])
    V = img[b].scale(q[c]) - img[c].scale(q[b])
    D = img[c].scale(q[c])

    chain = []
    for level in range(1, max_height + 2):
        vu, vv = U.valuation(), V.valuation()
        if vu is None and vv is None:
            raise AssertionError("image arc collapsed to a point")
        m = min(v for v in (vu, vv) if v is not None)
        if m >= TRUNC - 2:
            raise AssertionError("series precision exhausted in transport")
        U, V = U.shift_down(m), V.shift_down(m)
        pair = read_projective_value((U.coeffs[0], V.coeffs[0]))
        if pair is None:
            return q, tuple(chain)
        if level > max_height:
            raise TowerTooDeep(
                f"transport of {base}^{tower} exceeds height {max_height}"
            )
        chain.append(pair)
        du, dv = pair
        if du != 0:
            U, V, D = (
                U * U.scale(du),
                D * (V.scale(du) - U.scale(dv)),
                D * U.scale(du),
            )
        else:
            U, V, D = (
                V * V.scale(dv),
                D * (U.scale(dv) - V.scale(du)),
                D * V.scale(dv),
            )
    return q, tuple(chain)
