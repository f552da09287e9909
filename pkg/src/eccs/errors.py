"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised when serialized material (points, keys, envelopes) is malformed."""


class InvalidCiphertext(Exception):
    """Raised on any decryption failure.

    Deliberately carries a single fixed message so callers cannot
    distinguish a failed validity check from a malformed chunk.
    """

    def __init__(self) -> None:
        super().__init__("invalid ciphertext")
