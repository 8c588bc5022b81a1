"""Error types shared across the kernel."""


class InvalidInput(ValueError):
    """An operation was called outside its stated domain."""


class ParseError(InvalidInput):
    """Malformed text input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InternalError(RuntimeError):
    """An internally guaranteed property failed; indicates a kernel bug."""
