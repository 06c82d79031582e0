"""Exception hierarchy shared by the cipher, the machine model and the file formats."""


class MhheaError(Exception):
    """Base class for every error raised by this package."""


class InvalidKeyError(MhheaError):
    """Key matrix is empty or contains a component outside 0..7."""


class InvalidSeedError(MhheaError):
    """LFSR seed is zero or does not fit in 16 bits."""


class CoverExhaustedError(MhheaError):
    """Cover data ran out before the plaintext was fully embedded."""


class TruncatedCiphertextError(MhheaError):
    """Ciphertext carries fewer payload bits than its header promises."""


class MachineHaltedError(MhheaError):
    """step() was called on a machine that already finished its run."""


class FormatError(MhheaError):
    """Base class for container parse failures."""


class BadMagicError(FormatError):
    """File does not start with the expected magic bytes."""


class BadVersionError(FormatError):
    """Container version byte is not supported."""


class ReservedBitError(FormatError):
    """A bit that must be zero is set."""


class KeyLengthError(FormatError):
    """Key file declares zero pairs."""


class TruncatedFileError(FormatError):
    """File is shorter than its header requires, or the payload is ragged."""


class TrailingDataError(FormatError):
    """Key file is longer than its declared pair count allows."""
