"""Exception types shared across the package."""


class StrongLPError(Exception):
    """Base class for every error raised by this package."""


class FormulaSyntaxError(StrongLPError):
    """Malformed formula text. Carries a 1-based line:column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class UnknownSymbolError(StrongLPError):
    """A constant or relation symbol is not declared in the signature."""


class ArityMismatchError(StrongLPError):
    """A relation symbol is applied to the wrong number of arguments."""


class EvaluationError(StrongLPError):
    """A formula cannot be evaluated in the given context (unbound atom or
    variable, quantifier in a propositional setting, and the like)."""


class BudgetExceededError(StrongLPError):
    """An exhaustive sweep would exceed the configured enumeration budget."""


class TranslationError(StrongLPError):
    """A formula has no two-valued counterpart (it mentions the paradoxical
    constant)."""


class InconsistentModelError(StrongLPError):
    """A two-valued operation was asked to work on a model with paradoxical
    relation entries."""


class SubstitutionError(StrongLPError):
    """A substitution would capture a free variable under a quantifier."""


class EmbeddingError(StrongLPError):
    """An embedding is malformed, or a formula is outside the classical
    fragment it can translate."""


class FileFormatError(StrongLPError):
    """A model, signature or embedding file does not match its schema."""
