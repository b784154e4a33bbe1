"""Exceptions raised by the computational subsystems."""


class OversamplingException(Exception):
    """Base class for all errors raised by oversampling computations."""


class InputError(OversamplingException):
    """Input data does not conform to the expected shape.

    The command line maps this error to exit status 3.
    """

    def __init__(self, message: str, path: str = "$"):
        super().__init__(message)
        self.path = path

    def __str__(self):
        return "{path}: {message}".format(path=self.path, message=self.args[0])


class RankError(OversamplingException):
    """Matrix does not have the rank the operation needs."""


class DimError(OversamplingException):
    """Operands live in different dimensions."""


class NotALattice(OversamplingException):
    """Generators do not span a discrete full rank subgroup."""


class NotSublattice(OversamplingException):
    """The lattice given as a sublattice is not contained in the parent lattice."""


class RadicandMismatch(OversamplingException):
    """Two quadratic scalars with different radicands were combined."""


class Unsupported(OversamplingException):
    """The inputs are outside of the class where the computation is exact."""


class BadDilation(OversamplingException):
    """Dilation parameters are not a reduced expansive fraction."""


class BadIndex(OversamplingException):
    """A frequency index is not a point of the required dual lattice."""


class HypothesisUnverifiable(OversamplingException):
    """No approximate transversal was found within the search budget."""
