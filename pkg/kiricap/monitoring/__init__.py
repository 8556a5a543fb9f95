"""Logging and observability for kiricap."""

from .logging import JSONFormatter, configure_logging, log_command_execution

__all__ = ["JSONFormatter", "configure_logging", "log_command_execution"]
