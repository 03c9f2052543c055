"""
Command Registry with decorator registration.

Usage:
    from clusterforge.tools.registry import command_registry, command

    @command(name="knit", input_model=KnitInput)
    def knit_command(params: KnitInput) -> CommandResult:
        '''Knit the AR quiver of an algebra.'''
        ...

The CLI builds one subcommand per registered command and hands the parsed
arguments to ``execute``, which validates them against the input model.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from functools import wraps
from typing import Any, Callable, Dict, List, Optional, Type

from pydantic import BaseModel, ValidationError

from ..core.errors import InputError
from ..core.security import artifact_writer


class ExitCode(IntEnum):
    OK = 0
    VERDICT_FAILED = 1
    INPUT_ERROR = 2


@dataclass
class CommandResult:
    """What a command produced: an artifact (JSON or DOT text), a report and an exit code."""
    exit_code: ExitCode = ExitCode.OK
    artifact: Optional[str] = None
    report: Dict[str, Any] = field(default_factory=dict)
    written: List[str] = field(default_factory=list)


@dataclass
class CommandDefinition:
    """Definition of a registered command."""
    name: str
    description: str
    handler: Callable
    input_model: Type[BaseModel]
    tags: List[str] = field(default_factory=list)


class CommandRegistry:
    """Central registry for CLI commands."""

    def __init__(self):
        self._commands: Dict[str, CommandDefinition] = {}

    def register(
        self,
        name: str,
        handler: Callable,
        input_model: Type[BaseModel],
        description: Optional[str] = None,
        tags: Optional[List[str]] = None
    ) -> None:
        """
        Register a command directly.

        Args:
            name: Unique subcommand name
            handler: Callable taking the validated input model
            input_model: Pydantic model for validation
            description: Help text (uses the docstring's first line if not provided)
            tags: Optional tags for grouping in help output
        """
        if name in self._commands:
            raise ValueError(f"command {name!r} registered twice")
        if description is None:
            description = handler.__doc__ or f"Command: {name}"
        description = description.strip().split('\n')[0]
        self._commands[name] = CommandDefinition(name, description, handler, input_model, tags or [])

    def get(self, name: str) -> Optional[CommandDefinition]:
        return self._commands.get(name)

    def execute(self, name: str, args: Dict[str, Any]) -> CommandResult:
        """
        Validate ``args`` and run the command.

        Raises:
            InputError: unknown command or arguments failing validation
        """
        definition = self._commands.get(name)
        if definition is None:
            raise InputError(f"Unknown command: {name}")
        try:
            params = definition.input_model(**{k: v for k, v in args.items() if v is not None})
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(x) for x in first.get("loc", ()))
            raise InputError(f"invalid arguments for {name}: {where + ': ' if where else ''}{first.get('msg')}")
        return definition.handler(params)

    def list_commands(self) -> List[Dict[str, Any]]:
        return [
            {
                "name": c.name,
                "description": c.description,
                "inputSchema": c.input_model.model_json_schema(),
            }
            for c in sorted(self._commands.values(), key=lambda c: c.name)
        ]

    def names(self) -> List[str]:
        return sorted(self._commands)

    def __len__(self) -> int:
        return len(self._commands)

    def __contains__(self, name: str) -> bool:
        return name in self._commands


# Global registry instance
command_registry = CommandRegistry()


def command(
    name: Optional[str] = None,
    input_model: Optional[Type[BaseModel]] = None,
    description: Optional[str] = None,
    tags: Optional[List[str]] = None
) -> Callable:
    """Decorator to register a function as a CLI command."""
    def decorator(func: Callable) -> Callable:
        command_name = name or func.__name__.replace("_", "-")
        command_registry.register(
            name=command_name,
            handler=func,
            input_model=input_model,
            description=description,
            tags=tags
        )

        @wraps(func)
        def wrapper(*args, **kwargs):
            return func(*args, **kwargs)

        wrapper._command_name = command_name
        return wrapper

    return decorator


def emit(result: CommandResult, out: Optional[str]) -> CommandResult:
    """Write the artifact to ``out`` when given; otherwise leave it for stdout."""
    if out and result.artifact is not None:
        written = artifact_writer.write(out, result.artifact)
        if not written.success:
            raise InputError(f"cannot write {out}: {written.error}")
        result.written.append(written.path)
        result.artifact = None
    return result
