"""Exception hierarchy shared by the lieorbits modules."""


class LieOrbitsError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrix(LieOrbitsError):
    """A square linear system has no unique solution."""


class DependentBasis(LieOrbitsError):
    """Vectors handed to a Gram-orthogonal split are linearly dependent."""


class InvalidType(LieOrbitsError):
    """A simple-type letter/rank pair outside the classification bounds."""


class ZeroVector(LieOrbitsError):
    """A pairing was requested against the zero vector."""


class RankTooSmall(LieOrbitsError):
    """The operation needs rank >= 2 (the extended A1 diagram is a double edge)."""


class NonIntegralWeights(LieOrbitsError):
    """A weighted diagram with non-integer weights where integers are required."""


class OutOfRangeParams(LieOrbitsError):
    """Real-form parameters outside the catalog bounds."""


class FormNameError(LieOrbitsError):
    """A real-form name that does not parse under the name grammar."""


class InconsistentDiagram(LieOrbitsError):
    """A Satake diagram violating an involution invariant (mis-transcribed data)."""


class UnrecognizedSystem(LieOrbitsError):
    """A restricted root system that matches no classified Cartan type."""


class TypeMismatch(LieOrbitsError):
    """Two diagram-like values built over different simple types."""
