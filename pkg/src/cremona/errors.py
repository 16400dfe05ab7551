"""Exception taxonomy shared by all modules.

Error class names are part of the CLI contract: domain failures are
reported by printing the class name verbatim and exiting with code 1.
"""


class CremonaError(Exception):
    """Base class for all domain errors raised by this package."""


# -- exact arithmetic ------------------------------------------------------

class DegreeMismatch(CremonaError):
    """Polynomials that must share a degree do not."""


class ZeroTriple(CremonaError):
    """All three polynomials of a triple are zero."""


class SingularMatrix(CremonaError):
    """A 3x3 matrix meant to act on the plane has determinant zero."""


# -- birational maps -------------------------------------------------------

class IndeterminacyPoint(CremonaError):
    """The map is undefined at the given point (all components vanish)."""


class NoInverseRecipe(CremonaError):
    """Raw map of degree >= 3 without a factorization word cannot be inverted."""


class NotQuadratic(CremonaError):
    """Operation requires a map of degree exactly 2."""


class NotBirational(CremonaError):
    """The polynomial triple does not define a birational map."""


# -- base points and towers ------------------------------------------------

class IrrationalBasePoints(CremonaError):
    """The map has base points that are not rational over Q."""


class TowerTooDeep(CremonaError):
    """A blow-up tower of height > 2 would be required."""


class IsBasePoint(CremonaError):
    """The point is a base point of the map, so transport is undefined."""


class MultiplicityUndefined(CremonaError):
    """Linear-system multiplicities at the map's base points are ambiguous."""


class UnsupportedBasePointConfiguration(CremonaError):
    """A base-point configuration outside the height-<=2 cases handled here."""


# -- pencil-preserving (de Jonquieres) machinery ----------------------------

class NotDeJonquieres(CremonaError):
    """The map does not preserve the pencil of lines through [1:0:0]."""


class DegreeTooHigh(CremonaError):
    """Operation only defined for maps of low degree."""


# -- word rewriting ---------------------------------------------------------

class NotTorusPerm(CremonaError):
    """Letter is not represented by a monomial (torus-permutation) matrix."""


class NotSigma3Adjacent(CremonaError):
    """The adjacent letter is not the standard involution sigma3."""


class PatternMismatch(CremonaError):
    """The word does not match the shape required by the rewrite rule."""


class HypothesisViolation(CremonaError):
    """A computational hypothesis of a rewrite rule fails for these inputs."""


class GenericityFailure(CremonaError):
    """An auxiliary construction found no admissible candidate point."""


class GenericityExhausted(CremonaError):
    """Random sampling of general points exceeded the retry bound."""


class NotIdentity(CremonaError):
    """The word does not compose to the identity map."""


# -- parsing ----------------------------------------------------------------

class ParseError(CremonaError):
    """Malformed text input for one of the shared grammars."""
