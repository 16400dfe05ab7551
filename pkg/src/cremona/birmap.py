"""Plane birational maps as coprime triples of equal-degree forms.

A map may carry a factorization word: a sequence of atoms, each either a
linear map or one of the named quadratic involutions sigma1, sigma2, sigma3.
The word composes exactly to the map and is what makes inversion and the
rewriting algorithms possible for degrees >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DegreeMismatch, IndeterminacyPoint, NoInverseRecipe, NotBirational,
)
from .exact import (
    HomPoly, LinMap, ProjPoint, hom_gcd, poly_substitute, triple_cancel,
)

# -- factorization atoms -----------------------------------------------------

SIGMA_COMPONENTS = {
    1: (
        HomPoly.from_dict({(1, 1, 0): -1, (0, 0, 2): 1}),
        HomPoly.from_dict({(0, 2, 0): 1}),
        HomPoly.from_dict({(0, 1, 1): 1}),
    ),
    2: (
        HomPoly.from_dict({(1, 1, 0): 1}),
        HomPoly.from_dict({(0, 0, 2): 1}),
        HomPoly.from_dict({(0, 1, 1): 1}),
    ),
    3: (
        HomPoly.from_dict({(0, 1, 1): 1}),
        HomPoly.from_dict({(1, 0, 1): 1}),
        HomPoly.from_dict({(1, 1, 0): 1}),
    ),
}


def lin_atom(m: LinMap):
    return ("lin", m)


def sigma_atom(i: int):
    if i not in (1, 2, 3):
        raise ValueError(f"no quadratic generator sigma{i}")
    return ("sigma", i)


def atom_inverse(atom):
    kind, val = atom
    if kind == "lin":
        return ("lin", val.inverse())
    return atom  # the sigmas are involutions


def atom_components(atom):
    kind, val = atom
    if kind == "lin":
        return val.row_forms()
    return SIGMA_COMPONENTS[val]


@dataclass(frozen=True)
class BirMap:
    """Birational self-map of the plane: coprime components plus optional word."""

    components: tuple[HomPoly, HomPoly, HomPoly]
    factor_word: tuple | None = field(default=None, compare=False)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def make(components, factor_word=None, certify=True):
        comps = triple_cancel(*components)
        if any(c.is_zero() for c in comps):
            raise NotBirational("a component is identically zero")
        d = comps[0].degree
        if any(c.degree != d for c in comps):
            raise DegreeMismatch("components of different degrees")
        if d < 1:
            raise NotBirational("constant components do not define a map")
        f = BirMap(tuple(comps), tuple(factor_word) if factor_word else None)
        if certify and factor_word is None and d >= 2:
            f._certify_birational()
        return f

    @staticmethod
    def from_linmap(m: LinMap) -> "BirMap":
        return BirMap.make(m.row_forms(), (lin_atom(m),), certify=False)

    @staticmethod
    def identity() -> "BirMap":
        return BirMap.from_linmap(LinMap.identity())

    def _certify_birational(self):
        if self.degree() > 2:
            raise NoInverseRecipe(
                "raw maps of degree >= 3 are not certified; supply a factor word"
            )
        from .jonquieres import factor_quadratic

        factor_quadratic(self)  # raises NotBirational and friends on failure

    # -- basic queries --------------------------------------------------------

    def degree(self) -> int:
        return self.components[0].degree

    def is_linear(self) -> bool:
        return self.degree() == 1

    def as_linear(self) -> LinMap:
        if not self.is_linear():
            raise DegreeMismatch(f"map of degree {self.degree()} is not linear")
        rows = []
        for comp in self.components:
            row = [0, 0, 0]
            for (a, b, c), k in comp.coeffs:
                row[(a, b, c).index(1)] = k
            rows.append(tuple(row))
        return LinMap.make(tuple(rows))

    def is_identity(self) -> bool:
        return self.is_linear() and self.as_linear().is_identity()

    def jacobian_det(self) -> HomPoly:
        """Determinant of the Jacobian matrix; vanishes on the contracted curves."""
        g = [c.gradient() for c in self.components]
        det = HomPoly.zero()
        for (i, j, k, sign) in (
            (0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
            (2, 1, 0, -1), (1, 0, 2, -1), (0, 2, 1, -1),
        ):
            term = (g[0][i] * g[1][j] * g[2][k]).scaled(sign)
            det = term if det.is_zero() else det + term
        return det

    # -- action ----------------------------------------------------------------

    def apply(self, p: ProjPoint) -> ProjPoint:
        vals = [c.evaluate(p.coords) for c in self.components]
        if all(v == 0 for v in vals):
            raise IndeterminacyPoint(f"{p} is a base point of the map")
        return ProjPoint.make(*vals)

    def compose(self, other: "BirMap") -> "BirMap":
        """self after other (apply `other` first)."""
        comps = tuple(poly_substitute(c, *other.components) for c in self.components)
        comps = triple_cancel(*comps)
        word = None
        if self.factor_word is not None and other.factor_word is not None:
            word = self.factor_word + other.factor_word
        return BirMap.make(comps, word, certify=False)

    def inverse(self) -> "BirMap":
        """Exact inverse, from the factor word or by quadratic factorization."""
        if self.factor_word is not None:
            word = tuple(atom_inverse(a) for a in reversed(self.factor_word))
            inv = compose_atoms(word)
        elif self.is_linear():
            inv = BirMap.from_linmap(self.as_linear().inverse())
        elif self.degree() == 2:
            from .jonquieres import factor_quadratic

            beta, i, alpha = factor_quadratic(self)
            inv = compose_atoms(
                (lin_atom(alpha.inverse()), sigma_atom(i), lin_atom(beta.inverse()))
            )
        else:
            raise NoInverseRecipe(
                f"degree-{self.degree()} map without a factor word"
            )
        assert self.compose(inv).is_identity(), "inverse failed composition check"
        return inv

    def drop_word(self) -> "BirMap":
        return BirMap(self.components, None)

    def __str__(self):
        return "[" + " : ".join(str(c) for c in self.components) + "]"

    __repr__ = __str__


def compose_atoms(atoms) -> BirMap:
    """Exact composition of a factor word (leftmost atom outermost)."""
    atoms = tuple(atoms)
    if not atoms:
        return BirMap.identity()
    result = BirMap.make(atom_components(atoms[-1]), (atoms[-1],), certify=False)
    for atom in reversed(atoms[:-1]):
        outer = BirMap.make(atom_components(atom), (atom,), certify=False)
        result = outer.compose(result)
    return result


# -- named generators ---------------------------------------------------------

def make_sigma(i: int) -> BirMap:
    """The quadratic involution with i proper base points (i = 1, 2, 3)."""
    return BirMap.make(SIGMA_COMPONENTS[i], (sigma_atom(i),), certify=False)


_TAU_ROWS = {
    (1, 2): ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    (1, 3): ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    (2, 3): ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
}


def tau_linmap(i: int, j: int) -> LinMap:
    key = (min(i, j), max(i, j))
    if key not in _TAU_ROWS:
        raise ValueError(f"no coordinate transposition tau{i}{j}")
    return LinMap.make(_TAU_ROWS[key])


def make_tau(i: int, j: int) -> BirMap:
    """The coordinate transposition swapping the i-th and j-th coordinates."""
    return BirMap.from_linmap(tau_linmap(i, j))


def make_tau12_sigma2_tau12() -> BirMap:
    """The pencil-preserving involution [z^2 : x*y : x*z]."""
    t = tau_linmap(1, 2)
    return compose_atoms((lin_atom(t), sigma_atom(2), lin_atom(t)))


def degree_of_word(atoms) -> int:
    return compose_atoms(atoms).degree()


def same_map(f: BirMap, g: BirMap) -> bool:
    return f.components == g.components
