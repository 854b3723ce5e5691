"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Array dimensions do not satisfy an operation's contract."""


class FormatError(ValueError):
    """A file exists but its contents are not in a supported format."""


class MaskGenerationError(RuntimeError):
    """Mask generation could not satisfy the requested coverage bounds."""


class NumericError(ArithmeticError):
    """A non-finite value appeared where the pipeline requires finite math."""

    def __init__(self, message, iteration=None):
        if iteration is not None:
            message = f"{message} (iteration {iteration})"
        super().__init__(message)
        self.iteration = iteration


class ConfigError(ValueError):
    """A configuration value violates its declared invariant."""


class DegenerateRegionError(ValueError):
    """A region is too small to yield a usable feature sample."""
