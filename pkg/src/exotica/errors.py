"""Exception hierarchy shared by all modules."""


class ExoticaError(Exception):
    pass


class DivisionByZero(ExoticaError, ZeroDivisionError):
    pass


class DimensionMismatch(ExoticaError, ValueError):
    pass


class ZeroVector(ExoticaError, ValueError):
    pass


class VariableMismatch(ExoticaError, ValueError):
    pass


class MissingVariable(ExoticaError, KeyError):
    pass


class RankMismatch(ExoticaError, ValueError):
    pass


class InvalidIndex(ExoticaError, ValueError):
    pass


class DuplicateIndex(ExoticaError, ValueError):
    pass


class NonIntegralQuotient(ExoticaError, ValueError):
    pass


class NegativeBetti(ExoticaError, ValueError):
    pass


class SignatureExceedsRank(ExoticaError, ValueError):
    pass


class ArityMismatch(ExoticaError, ValueError):
    pass


class ConditionsNotMet(ExoticaError, ValueError):
    pass


class DegenerateParam(ExoticaError, ValueError):
    pass


class InconsistentRatios(ExoticaError, ValueError):
    pass


class InvalidConfig(ExoticaError, ValueError):
    pass


class CheckFailed(ExoticaError):
    """Raised after a certificate has been produced with at least one FAIL."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class IoError(ExoticaError, OSError):
    pass
