class InputError(ValueError):
    """Malformed or inconsistent input (bad lengths, bad file lines, out-of-range arguments)."""


class CapacityError(ValueError):
    """The requested computation exceeds a configured size bound."""
