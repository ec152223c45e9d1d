"""Exception hierarchy shared by all modules."""


class PlethysmError(Exception):
    """Base class for every error raised by this package."""


class ParseError(PlethysmError, ValueError):
    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NonPrimeCharacteristic(PlethysmError, ValueError):
    pass


class ReducibleModulus(PlethysmError, ValueError):
    pass


class ModulusDegreeMismatch(PlethysmError, ValueError):
    pass


class DivisionByZero(PlethysmError, ZeroDivisionError):
    pass


class FieldMismatch(PlethysmError, TypeError):
    pass


class DoesNotFitRectangle(PlethysmError, ValueError):
    pass


class NotColumnStandard(PlethysmError, ValueError):
    pass


class EntryOutOfRange(PlethysmError, ValueError):
    pass


class SingularMatrix(PlethysmError, ValueError):
    pass


class UnsupportedConstructor(PlethysmError, TypeError):
    pass


class RankOutOfRange(PlethysmError, ValueError):
    pass


class KindMismatch(PlethysmError, ValueError):
    pass


class NotAWeightVector(PlethysmError, ValueError):
    pass


class NoUniqueHighestWeight(PlethysmError, ValueError):
    pass


class ModeMismatch(PlethysmError, ValueError):
    pass


class InfiniteEnumeration(PlethysmError, ValueError):
    pass


class ParamsOutOfSupportedRange(PlethysmError, ValueError):
    pass


class HypothesisNotMet(PlethysmError, ValueError):
    """A theorem runner refused to run because a field-size hypothesis fails."""
