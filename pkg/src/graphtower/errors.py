"""Exception hierarchy shared across the package."""


class GraphTowerError(Exception):
    """Base class for all package errors."""


class BoundExceededError(GraphTowerError):
    """A configured resource bound (group order, matrix size, ...) was exceeded."""


class DisconnectedError(GraphTowerError):
    """An operation that requires a connected graph received a disconnected one."""


class LevelMismatchError(GraphTowerError):
    """Group-ring operands live at different tower levels."""


class ConfigError(GraphTowerError):
    """A job configuration file is invalid or inconsistent."""
