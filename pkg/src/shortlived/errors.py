"""Exception types shared across the package.

The CLI maps these onto exit codes: format/usage problems exit 2,
everything else raised from library code exits 3.
"""


class ShortLivedError(Exception):
    """Base class for all library errors."""


class RetryExhaustedError(ShortLivedError):
    """A bounded random search ran out of attempts."""


class ModulusMismatchError(ShortLivedError, ValueError):
    """A group element was used with a modulus it is not bound to."""


class TrapdoorMismatchError(ShortLivedError, ValueError):
    """Trapdoor secret does not factor the public modulus."""


class ParameterError(ShortLivedError, ValueError):
    """Public parameters are malformed or inconsistent."""


class KeyMismatchError(ParameterError):
    """Secret key does not correspond to the public key in the parameters."""


class MessageTooLargeError(ShortLivedError, ValueError):
    """Plaintext exceeds the configured size cap."""


class BindingError(ShortLivedError, ValueError):
    """Decrypted payload is not bound to these public parameters."""


class DecryptionError(ShortLivedError, ValueError):
    """Ciphertext failed authentication or parsing."""


class FutureRoundError(ShortLivedError):
    """Requested beacon round is not yet available."""


class CalibrationError(ShortLivedError):
    """Timing calibration is missing or below the timer resolution floor."""


class FormatError(ShortLivedError, ValueError):
    """An on-disk artifact could not be parsed."""
