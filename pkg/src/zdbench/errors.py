"""Shared exception types."""


class BoundExceeded(RuntimeError):
    """A configured size or search budget was exceeded.

    Signals the caller to shrink the universe or raise the relevant cap;
    never silently degrades a result.
    """


class PresentationUnavailable(BoundExceeded):
    """No generator/relation presentation derivable within budget."""


class DslError(ValueError):
    """Parse or resolution error in the construction DSL, with a source span."""

    def __init__(self, message: str, span: tuple[int, int]):
        super().__init__(f"{message} (at {span[0]}..{span[1]})")
        self.message = message
        self.span = span
