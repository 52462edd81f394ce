class CodingError(Exception):
    """Base class for every error raised by the library."""

    exit_code = 2


class DimensionError(CodingError, ValueError):
    pass


class DomainError(CodingError, ValueError):
    pass


class DegenerateError(DomainError):
    """The weight vector is all-zero where a norm is required."""


class ResourceError(CodingError, RuntimeError):
    exit_code = 3


class RecordError(DomainError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


def check_length(expected: int, actual: int, what: str = "vector"):
    if expected != actual:
        raise DimensionError(f"{what} has length {actual}, expected {expected}")


def check_cap(value: int, cap: int, what: str):
    if value > cap:
        raise ResourceError(f"{what} = {value} exceeds the configured cap {cap}")
