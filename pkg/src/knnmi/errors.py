"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid configuration: bad grid, bad neighbor count, malformed config file."""


class DuplicatePointError(ValueError):
    """Two samples coincide in joint space, so a k-NN radius is exactly zero.

    Duplicates would later produce ln(0); we fail fast instead of jittering
    the data, which would silently perturb the estimate.
    """

    def __init__(self, index: int):
        self.index = index
        super().__init__(
            f"sample {index} has a duplicate in joint space (k-NN radius is 0)"
        )


class NonFiniteNormalizationError(ValueError):
    """The normalization factor overflowed or underflowed (baseline backend)."""

    def __init__(self, result):
        self.result = result
        super().__init__(
            f"ln V is not finite ({result.ln_v!r}) for backend "
            f"{result.backend.value!r} at joint dimension {result.d_joint}"
        )
