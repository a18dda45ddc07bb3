"""Exception types shared across the toolkit."""


class SubtokError(Exception):
    """Base class for all toolkit errors."""


class CorpusDecodeError(SubtokError):
    """Input bytes are not valid UTF-8."""

    def __init__(self, message: str, *, byte_offset: int, line_number: int | None = None):
        super().__init__(message)
        self.byte_offset = byte_offset
        self.line_number = line_number


class EmptyCorpusError(SubtokError):
    """A corpus or word table contains no words."""


class CoverageError(SubtokError):
    """A vocabulary does not cover every character unit of the training data."""

    def __init__(self, message: str, *, unit: str):
        super().__init__(message)
        self.unit = unit


class UnprunableTokenError(SubtokError):
    """Token loss was requested for a token that may never be pruned."""


class StagnationError(SubtokError):
    """Pruning cannot make progress: nothing prunable while the vocabulary is above target."""

    def __init__(self, message: str, *, floor_size: int):
        super().__init__(message)
        self.floor_size = floor_size


class UndefinedRateError(SubtokError):
    """An error rate was requested against an empty reference."""


class ParseError(SubtokError):
    """A model or lexicon file is malformed."""

    def __init__(self, message: str, *, path: str | None = None, line_number: int | None = None):
        loc = ""
        if path is not None:
            loc = f"{path}:{line_number}: " if line_number is not None else f"{path}: "
        super().__init__(loc + message)
        self.path = path
        self.line_number = line_number


class ConsistencyError(SubtokError):
    """Model components disagree (e.g. a merge rule references an unknown token)."""


class AlignmentError(SubtokError):
    """Reference and hypothesis files are not line-aligned."""
