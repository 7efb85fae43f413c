"""Exception hierarchy.

Every error carries the CLI exit code it maps to, so the frontend never
needs a lookup table of its own.
"""


class CmPolyError(Exception):
    exit_code = 1


class PreconditionError(CmPolyError, ValueError):
    exit_code = 2


class InvalidDiscriminant(PreconditionError):
    pass


class SplitPrime(InvalidDiscriminant):
    """The single eta quotient for a prime l not dividing D has no integral minimal polynomial."""


class InertPrime(PreconditionError):
    pass


class UnsupportedPair(PreconditionError):
    pass


class UnsupportedFamily(PreconditionError):
    pass


class DegenerateJ(PreconditionError):
    pass


class ZeroRoot(PreconditionError):
    pass


class NoSystem(CmPolyError):
    pass


class UnsupportedK(CmPolyError):
    pass


class MatrixContract(CmPolyError):
    pass


class NotInPrimeField(CmPolyError):
    pass


class NoCubicFactor(CmPolyError):
    pass


class NonConvergent(CmPolyError):
    exit_code = 3


class PrecisionExhausted(CmPolyError):
    exit_code = 3

    def __init__(self, residual, hint=None):
        self.residual = residual
        self.hint = hint
        msg = f"rounding residual {float(residual):.3g} above tolerance"
        if hint:
            msg += f"; try {hint}"
        super().__init__(msg)


class SearchExhausted(CmPolyError):
    exit_code = 4


class Inconclusive(CmPolyError):
    exit_code = 4


class CacheError(CmPolyError):
    exit_code = 5
