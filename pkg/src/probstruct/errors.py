"""Exception types shared across the package."""


class ProbstructError(Exception):
    """Base class for every error this package raises deliberately."""


class ValidationError(ProbstructError):
    """A structural invariant was violated while building a value."""


class LanguageMismatchError(ProbstructError):
    """Values built over different propositional languages were combined."""


class FormulaSyntaxError(ProbstructError):
    """Formula text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownPropositionError(FormulaSyntaxError):
    """Formula text names a proposition the language does not contain."""

    def __init__(self, name: str, position: int):
        super().__init__(f"unknown proposition {name!r}", position)
        self.name = name


class NotMeasurableError(ProbstructError):
    """The world set is outside the algebra the measure is defined on."""


class UndefinedIncidenceError(ProbstructError):
    """The formula is outside the algebra the incidence map is defined on."""


class WrongKindError(ProbstructError):
    """Operation applied to the wrong kind of probability structure."""


class NotTotalError(ProbstructError):
    """Operation requires a total belief structure."""


class DocumentError(ProbstructError):
    """A structure document failed to parse or validate."""
