"""
Unit tests for the command registry.
"""

import os

import pytest
from pydantic import BaseModel


class _Args(BaseModel):
    path: str
    cap: int = 3


class TestCommandRegistry:
    """Registration, validation and dispatch."""

    def test_register_and_execute(self):
        """None arguments fall back to model defaults."""
        from clusterforge.tools.registry import CommandRegistry, CommandResult

        registry = CommandRegistry()

        def handler(params):
            """Echo the cap."""
            return CommandResult(report={"cap": params.cap})

        registry.register("echo", handler, _Args)
        result = registry.execute("echo", {"path": "q.json", "cap": None})
        assert result.report == {"cap": 3}
        assert registry.get("echo").description == "Echo the cap."
        assert "echo" in registry and len(registry) == 1

    def test_duplicate_name(self):
        """A name registers once."""
        from clusterforge.tools.registry import CommandRegistry, CommandResult

        registry = CommandRegistry()
        registry.register("x", lambda p: CommandResult(), _Args)
        with pytest.raises(ValueError):
            registry.register("x", lambda p: CommandResult(), _Args)

    def test_unknown_command(self):
        """Dispatching an unknown name is an input error."""
        from clusterforge.core.errors import InputError
        from clusterforge.tools.registry import CommandRegistry

        with pytest.raises(InputError):
            CommandRegistry().execute("nothing", {})

    def test_invalid_arguments(self):
        """Validation failures become input errors naming the field."""
        from clusterforge.core.errors import InputError
        from clusterforge.tools.registry import CommandRegistry, CommandResult

        registry = CommandRegistry()
        registry.register("echo", lambda p: CommandResult(), _Args)
        with pytest.raises(InputError) as exc_info:
            registry.execute("echo", {"path": "q.json", "cap": "many"})
        assert "cap" in str(exc_info.value)

    def test_global_registry(self):
        """Every CLI subcommand is registered."""
        from clusterforge.tools import command_registry

        for name in ("present", "trivial-ext", "cluster-rep", "repetitive", "duplicated", "knit",
                     "pushdown", "quotient", "surgery", "domain", "check", "reproduce"):
            assert name in command_registry
        schemas = command_registry.list_commands()
        assert [c["name"] for c in schemas] == sorted(c["name"] for c in schemas)


class TestEmit:
    """Artifacts go to stdout or a file."""

    def test_emit_to_file(self, temp_out):
        """Writing moves the artifact to disk."""
        from clusterforge.tools.registry import CommandResult, emit

        target = os.path.join(temp_out, "out.json")
        result = emit(CommandResult(artifact="{}\n"), target)
        assert result.artifact is None
        assert result.written == [target]
        with open(target, encoding="utf-8") as f:
            assert f.read() == "{}\n"

    def test_emit_to_stdout(self):
        """Without a path the artifact stays on the result."""
        from clusterforge.tools.registry import CommandResult, emit

        assert emit(CommandResult(artifact="{}"), None).artifact == "{}"
