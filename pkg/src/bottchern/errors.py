"""Exception hierarchy. The CLI maps each family to an exit code."""


class BottChernError(Exception):
    exit_code = 1


class ParseError(BottChernError):
    exit_code = 2


class UnknownNameError(ParseError):
    pass


class IntegrabilityError(ParseError):
    """A differential has a (0,2) component."""


class InvalidComplexError(BottChernError):
    """d^2 != 0 in some bidegree, or a well-definedness assertion failed."""

    exit_code = 3


class ConjecturalFormulaError(BottChernError):
    exit_code = 4


class DimensionError(BottChernError, ValueError):
    exit_code = 5


class CriterionDisagreement(BottChernError):
    """The three ddbar-lemma criteria disagree on a complex."""

    exit_code = 3
