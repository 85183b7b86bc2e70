class NakayamaError(ValueError):
    """Base class for every error raised by the toolkit."""

    returncode = 1


class UsageError(NakayamaError):
    """Bad input: length mismatch, negative exponent, violated precondition."""

    returncode = 3


class ParseError(UsageError):
    """Input that cannot be read at all: malformed JSON or flag values."""

    returncode = 2


class NotTDeterminedError(UsageError):
    pass


class ComplexError(NakayamaError):
    """A constructed object broke an algebraic invariant (d∘d, chain map, exactness)."""

    returncode = 1


class ComplexTooLarge(NakayamaError):
    returncode = 4

    def __init__(self, cells, cap):
        self.cells = cells
        self.cap = cap
        super().__init__(
            f"complex needs {cells} cells, above the NAK_MAX_CELLS cap of {cap}"
        )

    def __reduce__(self):
        return type(self), (self.cells, self.cap)
