"""Exception hierarchy shared by all permlat modules."""


class PermLatError(Exception):
    """Base class for errors raised by permlat."""


class DimensionError(PermLatError, ValueError):
    """Operands have incompatible lengths or degrees."""


class ConfigError(PermLatError, ValueError):
    """An experiment configuration or CLI argument is invalid."""
