class SbgenError(Exception):
    """Base class for every error raised by this package."""


class GrammarSyntaxError(SbgenError):
    def __init__(self, message: str, line: int, col: int, source: str = "<text>"):
        super().__init__(f"{source}:{line}:{col}: {message}")
        self.line = line
        self.col = col


class GrammarError(SbgenError):
    """Well-formed input that violates a semantic constraint."""


class BagError(SbgenError):
    pass


class TransferError(SbgenError):
    pass


class UnknownWordError(SbgenError):
    def __init__(self, word: str, position: int):
        super().__init__(f"unknown word {word!r} at position {position}")
        self.word = word
        self.position = position


class EdgeBudgetExceeded(SbgenError):
    def __init__(self, created: int, in_chart: int, pending: int, limit: int):
        super().__init__(
            f"edge budget of {limit} exceeded: {created} edges created, "
            f"{in_chart} in chart, {pending} on agenda"
        )
        self.created = created
        self.in_chart = in_chart
        self.pending = pending
        self.limit = limit


class OracleBudgetExceeded(SbgenError):
    """The exhaustive search hit its depth or time budget.

    ``partial`` holds the sentences found before giving up.
    """

    def __init__(self, message: str, partial=frozenset(), expansions: int = 0,
                 seconds: float = 0.0):
        super().__init__(message)
        self.partial = partial
        self.expansions = expansions
        self.seconds = seconds
