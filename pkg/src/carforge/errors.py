"""Exception hierarchy shared by every carforge module."""


class CarForgeError(Exception):
    """Base class for all carforge errors."""


class ConfigurationError(CarForgeError, ValueError):
    """A threshold, fraction, strategy or column name is invalid."""


class DataError(CarForgeError, ValueError):
    """The input data cannot be used."""


class ParseError(DataError):
    def __init__(self, message, row=None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class EmptyDatasetError(DataError):
    pass


class InputError(DataError):
    """An instance does not conform to the schema it is scored against."""
