"""Rational common zeros of jointly coprime homogeneous forms in x, y, z.

Elimination is by Sylvester resultants with respect to x, leaving binary
forms in (y, z) whose rational roots are found by the rational root theorem.
Leftover irreducible factors are tested for genuine common zeros by gcd
computation over Q[t]/(q), splitting q on zero divisors, so that irrational
base points can be told apart from the absence of base points.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import (
    HomPoly, ProjPoint, _uni_divmod, _uni_gcd, _uni_mul, _uni_rational_roots,
    _uni_trim, hom_gcd, exact_divide,
)

# Binary forms in (y, z): list of Fractions, index j = degree in z, so
# form = sum coeffs[j] * y^(k-j) * z^j for a form of degree k = len - 1.


def _bform_of(poly: HomPoly):
    """Binary form of an x-free homogeneous polynomial."""
    k = poly.degree
    out = [Fraction(0)] * (k + 1)
    for (a, b, c), co in poly.coeffs:
        assert a == 0
        out[c] += co
    return out


def _bform_mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def _bform_is_zero(f):
    return all(c == 0 for c in f)


def _bform_gcd(f, g):
    """Gcd of binary forms, returned as a binary form (monic-ish)."""
    if _bform_is_zero(f):
        return g
    if _bform_is_zero(g):
        return f

    def split(h):
        lo = 0
        while h[lo] == 0:
            lo += 1
        hi = len(h) - 1
        while h[hi] == 0:
            hi -= 1
        return lo, len(h) - 1 - hi, h[lo:hi + 1]

    fy, fz, fu = split(f)   # wait: index j is z-degree; low zeros = z-divisible
    gy, gz, gu = split(g)
    u = _uni_gcd(fu, gu)
    ydeg = min(fz, gz)
    zdeg = min(fy, gy)
    out = [Fraction(0)] * zdeg + u
    out += [Fraction(0)] * ydeg
    return out


def bform_rational_roots(f):
    """Rational projective roots [y0 : z0] of a nonzero binary form."""
    roots = []
    k = len(f) - 1
    if f[k] == 0:
        roots.append((1, 0))  # y^k coefficient zero => [1:0] is a root
    # dehomogenize z = 1: polynomial in t = y/z with coefficient of t^i = f[k-i]
    uni = [f[k - i] for i in range(k + 1)]
    _uni_trim(uni)
    if uni:
        for r in _uni_rational_roots(uni):
            roots.append((r.numerator, r.denominator))
    out = []
    for (a, b) in roots:
        g = abs(__import__("math").gcd(a, b))
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        if (a, b) not in out:
            out.append((a, b))
    return out


def _poly_x_coeffs(p: HomPoly):
    """Coefficients of powers of x, as binary forms in (y, z)."""
    dx = max((e[0] for e, _ in p.coeffs), default=0)
    out = []
    for k in range(dx + 1):
        deg = p.degree - k
        form = [Fraction(0)] * (deg + 1)
        for (a, b, c), co in p.coeffs:
            if a == k:
                form[c] += co
        out.append(form)
    return out


def _sylvester_resultant_x(p: HomPoly, q: HomPoly):
    """Resultant of p, q with respect to x, a binary form in (y, z)."""
    pc, qc = _poly_x_coeffs(p), _poly_x_coeffs(q)
    n, m = len(pc) - 1, len(qc) - 1
    assert n >= 1 and m >= 1
    size = n + m
    # Sylvester matrix rows: m rows of p-coeffs, n rows of q-coeffs.
    rows = []
    for i in range(m):
        row = [[Fraction(0)]] * size
        for k in range(n + 1):
            row[i + k] = pc[n - k]
        rows.append(row)
    for i in range(n):
        row = [[Fraction(0)]] * size
        for k in range(m + 1):
            row[i + k] = qc[m - k]
        rows.append(row)
    return _bform_det(rows)


def _bform_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        entry = rows[0][j]
        if _bform_is_zero(entry):
            continue
        minor = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        term = _bform_mul(entry, _bform_det(minor))
        if j % 2 == 1:
            term = [-c for c in term]
        if total is None:
            total = term
        else:
            width = max(len(total), len(term))
            total = [
                (total[i] if i < len(total) else 0) + (term[i] if i < len(term) else 0)
                for i in range(width)
            ]
    if total is None:
        return [Fraction(0)]
    return total


# ---------------------------------------------------------------------------
# gcd over Q[t]/(q) with dynamic splitting (to certify irrational zeros)
# ---------------------------------------------------------------------------

def _mod_reduce(p, q):
    _, r = _uni_divmod(p, q)
    return r


def _ext_gcd_steps(a, b):
    """Extended Euclid in Q[t]: returns (g, s) with s*a = g mod b."""
    from .exact import _uni_add, _uni_scale

    r0, r1 = [Fraction(c) for c in a], [Fraction(c) for c in b]
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _uni_divmod(r0, r1)
        r0, r1 = r1, r
        s_next = _uni_add(s0, [-c for c in _uni_mul(q, s1)])
        s0, s1 = s1, s_next
    return r0, s0


class _SplitRequired(Exception):
    def __init__(self, factor):
        self.factor = factor


def _inv_mod(a, q):
    g, s = _ext_gcd_steps(a, q)
    if len(g) != 1:
        raise _SplitRequired(g)
    return _mod_reduce([c / g[0] for c in s], q)


def _gcd_mod(polys_x, q):
    """Gcd in (Q[t]/(q))[x] of polynomials given as lists of Q[t]-coefficients.

    Each element of polys_x is a list (by x-degree) of univariate Q[t] polys.
    Returns the degree in x of the gcd (0 means coprime / no common zero).
    Raises _SplitRequired when q must be split.
    """
    def reduce_poly(px):
        out = [_mod_reduce(c, q) for c in px]
        while out and not out[-1]:
            out.pop()
        return out

    current = None
    for px in polys_x:
        px = reduce_poly(px)
        if not px:
            continue
        if current is None:
            current = px
            continue
        a, b = current, px
        while b:
            inv = _inv_mod(b[-1], q)
            # a mod b with monic-ized b
            bb = [_mod_reduce(_uni_mul(c, inv), q) for c in b]
            rem = [list(c) for c in a]
            while len(rem) >= len(bb) and rem:
                coef = rem[-1]
                shift = len(rem) - len(bb)
                for i, bc in enumerate(bb):
                    term = _uni_mul(coef, bc)
                    idx = shift + i
                    width = max(len(rem[idx]), len(term))
                    rem[idx] = [
                        (rem[idx][k] if k < len(rem[idx]) else Fraction(0))
                        - (term[k] if k < len(term) else Fraction(0))
                        for k in range(width)
                    ]
                    rem[idx] = _mod_reduce(_uni_trim(rem[idx]), q)
                rem.pop()
                while rem and not _uni_trim(list(rem[-1])):
                    rem.pop()
            a, b = bb, [_uni_trim(c) for c in rem]
            b = [c for c in b]
            while b and not b[-1]:
                b.pop()
        current = a
        if len(current) == 1:
            return 0
    if current is None:
        return -1  # everything vanished mod q: a whole line of zeros
    return len(current) - 1


def extension_hosts_common_zero(polys, q):
    """True if the system has a common zero with q(y/z) = 0, q nonrational."""
    stack = [[Fraction(c) for c in q]]
    while stack:
        qq = _uni_trim(stack.pop())
        if len(qq) <= 1:
            continue
        if len(qq) == 2:
            continue  # linear factor = rational root, found elsewhere
        polys_x = []
        for p in polys:
            cs = _poly_x_coeffs(p)
            # substitute y = t, z = 1 in each binary-form coefficient
            px = []
            for form in cs:
                k = len(form) - 1
                px.append(_uni_trim([form[k - i] for i in range(k + 1)]))
            polys_x.append(px)
        try:
            degx = _gcd_mod(polys_x, qq)
        except _SplitRequired as s:
            f1 = s.factor
            f2, _ = _uni_divmod(qq, f1)
            stack.append(f1)
            stack.append(f2)
            continue
        if degx != 0:
            return True
    return False


# ---------------------------------------------------------------------------
# the rational common-zero search
# ---------------------------------------------------------------------------

def rational_common_zeros(polys):
    """All rational common zeros of jointly coprime forms (>= 2 of them).

    Returns (points, irrational_leftover): the sorted rational common zeros
    and a flag telling whether common zeros exist that are not rational.
    """
    polys = [p for p in polys if not p.is_zero()]
    assert len(polys) >= 2
    if any(p.degree == 0 for p in polys):
        return [], False

    # split off pairwise common factors first
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            g = hom_gcd(polys[i], polys[j])
            if g.degree > 0:
                rest = [p for k, p in enumerate(polys) if k not in (i, j)]
                if not rest:
                    raise AssertionError("common-zero search needs a coprime pair")
                pts1, ir1 = rational_common_zeros([g] + rest)
                reduced = [exact_divide(polys[i], g), exact_divide(polys[j], g)] + rest
                reduced = [p for p in reduced if p.degree > 0]
                if len(reduced) >= 2:
                    pts2, ir2 = rational_common_zeros(reduced)
                else:
                    pts2, ir2 = [], False
                merged = sorted(set(pts1) | set(pts2), key=lambda p: p.coords)
                return merged, ir1 or ir2

    points = set()
    if all(p.evaluate((1, 0, 0)) == 0 for p in polys):
        points.add(ProjPoint.make(1, 0, 0))

    xfree = [p for p in polys if all(e[0] == 0 for e, _ in p.coeffs)]
    withx = [p for p in polys if p not in xfree]

    cand = None
    if xfree:
        for p in xfree:
            f = _bform_of(p)
            cand = f if cand is None else _bform_gcd(cand, f)
    else:
        base = polys[0]
        for q in polys[1:]:
            r = _sylvester_resultant_x(base, q)
            if _bform_is_zero(r):
                continue
            cand = r if cand is None else _bform_gcd(cand, r)
    if cand is None or _bform_is_zero(cand):
        # cannot happen for coprime inputs
        raise AssertionError("degenerate elimination for coprime forms")

    irrational = False
    roots = bform_rational_roots(cand)
    for (y0, z0) in roots:
        unis = []
        for p in polys:
            cs = _poly_x_coeffs(p)
            vals = []
            for form in cs:
                k = len(form) - 1
                v = sum(
                    form[j] * Fraction(y0) ** (k - j) * Fraction(z0) ** j
                    for j in range(k + 1)
                )
                vals.append(v)
            unis.append(_uni_trim(vals))
        nonzero = [u for u in unis if u]
        if not nonzero:
            raise AssertionError("a common line survived coprime reduction")
        g = []
        for u in nonzero:
            g = _uni_gcd(g, u)
        if len(g) == 1 and g:
            continue
        found_deg = 0
        for r in _uni_rational_roots(g):
            if all(p.evaluate((r, y0, z0)) == 0 for p in polys):
                points.add(ProjPoint.make(r, y0, z0))
                found_deg += 1
        if found_deg < len(g) - 1:
            # nonrational x-solutions over this rational [y0:z0]
            irrational = True

    # strip rational roots off the candidate form; test the leftover
    k = len(cand) - 1
    uni = _uni_trim([cand[k - i] for i in range(k + 1)])
    for r in _uni_rational_roots(uni):
        lin = [-r, Fraction(1)]
        while True:
            qq, rr = _uni_divmod(uni, lin)
            if rr:
                break
            uni = qq
    if len(uni) > 2 and extension_hosts_common_zero(polys, uni):
        irrational = True

    return sorted(points, key=lambda p: p.coords), irrational
