"""Exact arithmetic layer: polynomials, gcds, points, matrices, torus maps."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cremona.errors import DegreeMismatch, SingularMatrix, ZeroTriple
from cremona.exact import (
    E1, E2, E3, HomPoly, LinMap, ProjPoint, TorusPermElement, collinear,
    exact_divide, hom_gcd, iota, poly_substitute, triple_cancel,
)


def P(d):
    return HomPoly.from_dict(d)


X = HomPoly.variable(0)
Y = HomPoly.variable(1)
Z = HomPoly.variable(2)

# components of the three standard quadratic involutions
S1 = (P({(1, 1, 0): -1, (0, 0, 2): 1}), P({(0, 2, 0): 1}), P({(0, 1, 1): 1}))
S2 = (P({(1, 1, 0): 1}), P({(0, 0, 2): 1}), P({(0, 1, 1): 1}))
S3 = (P({(0, 1, 1): 1}), P({(1, 0, 1): 1}), P({(1, 1, 0): 1}))


class TestSubstitute:
    def test_projection(self):
        # first coordinate of the standard involution pulled back is y*z
        assert poly_substitute(X, *S3) == S3[0]

    def test_hand_expansion(self):
        # (x*y)(yz, xz, xy) = (yz)(xz) = x y z^2
        assert poly_substitute(X * Y, *S3) == P({(1, 1, 2): 1})

    def test_identity_substitution(self):
        p = X + Y + Z
        assert poly_substitute(p, X, Y, Z) == p

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            poly_substitute(X, X, Y * Y, Z)


class TestTripleCancel:
    def test_sigma3_squared(self):
        # components of the standard involution composed with itself
        comp = tuple(poly_substitute(p, *S3) for p in S3)
        assert triple_cancel(*comp) == (X, Y, Z)

    def test_already_coprime(self):
        assert triple_cancel(X, Y, Z) == (X, Y, Z)

    def test_sigma1_squared(self):
        comp = tuple(poly_substitute(p, *S1) for p in S1)
        # by hand: (x*y^3, y^4, y^3*z), gcd y^3
        assert comp == (P({(1, 3, 0): 1}), P({(0, 4, 0): 1}), P({(0, 3, 1): 1}))
        assert triple_cancel(*comp) == (X, Y, Z)

    def test_zero_triple(self):
        with pytest.raises(ZeroTriple):
            triple_cancel(HomPoly.zero(), HomPoly.zero(), HomPoly.zero())


class TestGcd:
    def test_pure_powers(self):
        assert hom_gcd(X * X * Y, X * Y * Y) == X * Y

    def test_z_power_restored(self):
        p = Z * Z * (X + Y)
        q = Z * (X + Y) * (X + Y)
        assert hom_gcd(p, q) == Z * (X + Y)

    def test_coprime(self):
        g = hom_gcd(X + Y, X + Z)
        assert g.degree == 0

    def test_exact_divide(self):
        p = (X + Y) * (Y + Z)
        assert exact_divide(p, X + Y) == Y + Z
        with pytest.raises(ArithmeticError):
            exact_divide(X * X, Y)


small = st.integers(min_value=-6, max_value=6)


CONIC_MONOMIALS = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


@given(st.lists(small, min_size=6, max_size=6), small, small)
def test_gcd_divides_and_cancel_coprime(cs, a, b):
    p = HomPoly.from_dict(dict(zip(CONIC_MONOMIALS, cs)))
    if p.is_zero():
        return
    q = p * (X.scaled(a) + Y + Z.scaled(b) if a or b else X + Y)
    g = hom_gcd(p, q)
    assert exact_divide(p, g) is not None
    assert exact_divide(q, g) is not None
    # after cancelation the triple is coprime
    t = triple_cancel(p * X, p * Y, p * Z)
    gg = hom_gcd(hom_gcd(t[0], t[1]), t[2])
    assert gg.degree == 0


class TestProjPoint:
    def test_canonical(self):
        assert ProjPoint.make(2, 4, 6) == ProjPoint.make(1, 2, 3)
        assert ProjPoint.make(-1, 2, 0) == ProjPoint.make(1, -2, 0)
        assert ProjPoint.make(Fraction(1, 2), 0, 1) == ProjPoint.make(1, 0, 2)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            ProjPoint.make(0, 0, 0)

    def test_collinear(self):
        assert collinear(E1, E2, ProjPoint.make(1, 1, 0))
        assert not collinear(E1, E2, E3)


class TestLinMap:
    def test_identity_apply(self):
        assert LinMap.identity().apply(ProjPoint.make(1, 2, 3)) == ProjPoint.make(1, 2, 3)

    def test_swap_involution(self):
        t13 = LinMap.make(((0, 0, 1), (0, 1, 0), (1, 0, 0)))
        assert t13.inverse() == t13
        assert t13.compose(t13).is_identity()

    def test_inverse_exact(self):
        m = LinMap.make(((1, 2, 3), (0, 1, 4), (5, 6, 0)))
        assert m.compose(m.inverse()).is_identity()
        assert m.inverse().compose(m).is_identity()

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrix):
            LinMap.make(((1, 2, 3), (2, 4, 6), (0, 0, 1)))

    def test_from_columns(self):
        p = ProjPoint.make(1, 2, 3)
        m = LinMap.from_columns(E1, p, E3)
        assert m.apply(E2) == p

    def test_line_pullback(self):
        m = LinMap.make(((0, 1, 0), (1, 0, 0), (0, 0, 1)))
        # the line {y = 0} pulls back to {x = 0} under the swap
        assert m.act_on_form((0, 1, 0)) == (1, 0, 0)


class TestTorusPerm:
    def test_iota_permutation_fixed(self):
        t = TorusPermElement.make((1, 0, 2), (1, 1, 1))
        assert iota(t) == t

    def test_iota_diagonal_inverted(self):
        t = TorusPermElement.make((0, 1, 2), (2, 3, 5))
        assert iota(t).diag == (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))

    def test_iota_identity(self):
        assert iota(TorusPermElement.identity()) == TorusPermElement.identity()

    @given(st.permutations([0, 1, 2]), st.tuples(small, small, small))
    def test_iota_involution(self, perm, diag):
        d = tuple(v if v != 0 else 1 for v in diag)
        t = TorusPermElement.make(tuple(perm), d)
        assert iota(iota(t)) == t

    def test_roundtrip_linmap(self):
        t = TorusPermElement.make((2, 0, 1), (1, Fraction(2, 3), -5))
        back = TorusPermElement.from_linmap(t.to_linmap())
        assert back.to_linmap() == t.to_linmap()

    def test_not_monomial(self):
        m = LinMap.make(((1, 1, 0), (0, 1, 0), (0, 0, 1)))
        assert TorusPermElement.from_linmap(m) is None


def test_canonicalization_idempotent():
    p = P({(2, 0, 0): Fraction(2, 3), (0, 2, 0): Fraction(-4, 3)})
    q = HomPoly.from_dict(p.as_dict())
    assert p == q
    assert p.coeffs == ((  (2, 0, 0), 1), ((0, 2, 0), -2))
