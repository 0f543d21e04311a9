"""Exception hierarchy shared by every module of the package."""


class RegexError(Exception):
    """Base class for all errors raised by pointed_regex."""


class ParseError(RegexError):
    """Malformed concrete syntax. ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class CarrierMismatchError(RegexError):
    """Two pointed items were combined but do not share a carrier."""


class LimitExceededError(RegexError):
    """A bounded operation was asked to go beyond its guard."""


class StateBudgetExceeded(RegexError):
    """An automaton construction produced more states than allowed."""


class AlphabetMismatchError(RegexError):
    """Two automata over different alphabets were compared."""
