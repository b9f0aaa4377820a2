"""An enum of the log levels the CLI accepts."""

from ._compat import StrEnum


class LogLevel(StrEnum):
    """The level to display logs at."""

    DEBUG = "debug"
    INFO = "info"
    WARN = "warning"
    ERROR = "error"
