"""CLI commands."""

from .registry import CommandRegistry, CommandResult, ExitCode, command_registry, command

# Import command modules to register them
from . import build
from . import knit
from . import covering
from . import check
from . import reproduce

__all__ = ["CommandRegistry", "CommandResult", "ExitCode", "command_registry", "command"]
