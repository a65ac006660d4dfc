r"""
Exceptions raised by twistlab.

Every domain failure is a :class:`TwistlabError` carrying a ``details`` dict with the
numbers that entered the failed check, so the command line can print them as a JSON
envelope on stderr.
"""


class TwistlabError(Exception):
    r"""Base class of all twistlab domain errors.

    Args:
        message (str): human readable description.
        **details: numbers and labels entering the failed check. values must be JSON
            serializable after :func:`twistlab.utils.io.to_jsonable`.
    """

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def envelope(self):
        """Dict form used for the stderr JSON envelope of the CLI."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


# index engine


class EmptyInput(TwistlabError):
    pass


class IncompatibleGrids(TwistlabError):
    pass


class PrincipalNotExceptional(TwistlabError):
    pass


class UnresolvedCrossingCluster(TwistlabError):
    r"""Crossings could not be separated at grid resolution. Refine the grid."""


class DegenerateCrossing(TwistlabError):
    r"""A crossing form has a zero eigenvalue on the kernel.

    ``details`` holds the crossing time ``t`` and the kernel-restricted ``spectrum``.
    Perturb the path (see :func:`twistlab.index.suggest_perturbation`) or refine.
    """


class NonSymplecticSample(TwistlabError):
    pass


class EndpointMismatch(TwistlabError):
    pass


class NotALoop(TwistlabError):
    pass


class IterationBoundViolation(TwistlabError):
    pass


class PathFormatError(TwistlabError, ValueError):
    r"""A path file could not be parsed. Treated as a usage error by the CLI."""


# mean Euler characteristic


class InvalidGradedDims(TwistlabError, ValueError):
    pass


class InfiniteSupport(TwistlabError):
    pass


class ZeroDenominator(TwistlabError):
    pass


class ParityViolation(TwistlabError):
    pass


class NonIntegerCombination(TwistlabError):
    pass


class UnsupportedK(TwistlabError):
    pass


class IncompletePeriod(TwistlabError):
    pass


# twist decider and catalog


class InvalidDimension(TwistlabError):
    pass


class ScanFailure(TwistlabError):
    pass


# profiles


class NonPositiveRho(TwistlabError):
    pass


class NonPositiveShift(TwistlabError):
    pass


class ConditionViolated(TwistlabError):
    pass


# configuration


class InvalidConfig(TwistlabError, ValueError):
    pass
