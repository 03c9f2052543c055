"""
Structured logging for clusterforge.
Supports both text and JSON formats; long computations report progress.
"""

import os
import sys
import json
import logging
from datetime import datetime, timezone
from dataclasses import dataclass
from typing import Dict, Any, Optional
from logging.handlers import RotatingFileHandler

from .config import config


@dataclass
class LogRecord:
    """Structured log record for JSON logging."""
    timestamp: str
    level: str
    command: Optional[str]
    status: str
    duration_ms: Optional[float]
    request_id: Optional[str]
    details: Dict[str, Any]
    error: Optional[str]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat().replace("+00:00", "Z")


class StructuredLogger:
    """
    JSON-structured logger.

    Output format, one object per line on stderr:
    {"timestamp": "...", "level": "INFO", "command": "knit", "status": "success", ...}
    """

    def __init__(self, name: str = "clusterforge"):
        self.name = name

    def _emit(self, record: LogRecord):
        """Output log record as JSON to stderr."""
        output = {
            "timestamp": record.timestamp,
            "level": record.level,
            "command": record.command,
            "status": record.status,
            "duration_ms": record.duration_ms,
            "request_id": record.request_id,
            "details": {k: v if isinstance(v, (int, float, bool)) else str(v)
                        for k, v in record.details.items()},
            "error": record.error,
        }

        # Remove None values for cleaner output
        output = {k: v for k, v in output.items() if v is not None}

        print(json.dumps(output, ensure_ascii=False), file=sys.stderr, flush=True)

    def command_start(self, command: str, request_id: str, args: Dict):
        """Log command start."""
        self._emit(LogRecord(
            timestamp=_now(),
            level="INFO",
            command=command,
            status="start",
            duration_ms=None,
            request_id=request_id,
            details={"args_keys": sorted(args.keys())},
            error=None
        ))

    def command_success(self, command: str, request_id: str, duration_ms: float, details: Dict):
        """Log command success."""
        self._emit(LogRecord(
            timestamp=_now(),
            level="INFO",
            command=command,
            status="success",
            duration_ms=round(duration_ms, 2),
            request_id=request_id,
            details=details,
            error=None
        ))

    def command_error(self, command: str, request_id: str, duration_ms: float, error: str):
        """Log command failure."""
        self._emit(LogRecord(
            timestamp=_now(),
            level="ERROR",
            command=command,
            status="error",
            duration_ms=round(duration_ms, 2),
            request_id=request_id,
            details={},
            error=error
        ))

    def info(self, message: str, **kwargs):
        """Log info message."""
        self._emit(LogRecord(
            timestamp=_now(),
            level="INFO",
            command=kwargs.get("command"),
            status=kwargs.get("status", "info"),
            duration_ms=None,
            request_id=kwargs.get("request_id"),
            details={"message": message},
            error=None
        ))

    def error(self, message: str, **kwargs):
        """Log error message."""
        self._emit(LogRecord(
            timestamp=_now(),
            level="ERROR",
            command=kwargs.get("command"),
            status=kwargs.get("status", "error"),
            duration_ms=None,
            request_id=kwargs.get("request_id"),
            details={},
            error=message
        ))


# Global structured logger instance
structured_logger = StructuredLogger()


# =============================================================================
# ACTIVITY LOGGER (File-based)
# =============================================================================

activity_logger = None

def _init_activity_logger():
    """Initialize the activity file logger."""
    global activity_logger

    if not config.activity_log_enabled:
        return

    try:
        os.makedirs(config.log_dir, exist_ok=True)
        activity_log_path = os.path.join(config.log_dir, "activity.log")

        activity_logger = logging.getLogger("clusterforge_activity")
        activity_logger.setLevel(logging.INFO)
        activity_logger.propagate = False

        handler = RotatingFileHandler(
            activity_log_path,
            maxBytes=config.log_max_bytes,
            backupCount=config.log_backup_count
        )
        handler.setFormatter(logging.Formatter(
            '%(asctime)s | %(levelname)s | %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
        activity_logger.addHandler(handler)
    except Exception:
        activity_logger = None


# Initialize on module load
_init_activity_logger()


def log_activity(command: str, status: str, duration_ms: float = 0,
                 details: Optional[Dict[str, Any]] = None, error: Optional[str] = None,
                 request_id: Optional[str] = None):
    """
    Log command activity.

    Args:
        command: Name of the CLI subcommand
        status: "start", "success", or "error"
        duration_ms: Execution time in milliseconds
        details: Additional details (long values are abbreviated)
        error: Error message if status is "error"
        request_id: Unique request identifier
    """
    if config.log_format == "json":
        try:
            if status == "start":
                structured_logger.command_start(command, request_id or "", details or {})
            elif status == "success":
                structured_logger.command_success(command, request_id or "", duration_ms, details or {})
            elif status == "error":
                structured_logger.command_error(command, request_id or "", duration_ms, error or "")
        except Exception:
            pass
        return

    if not activity_logger:
        return

    try:
        parts = [f"command={command}", f"status={status}"]

        if request_id:
            parts.append(f"req_id={request_id}")

        if duration_ms > 0:
            parts.append(f"duration={duration_ms:.0f}ms")

        if details:
            short = {}
            for k, v in details.items():
                if isinstance(v, str) and len(v) > 100:
                    short[k] = f"{v[:100]}... ({len(v)} chars)"
                elif isinstance(v, (list, tuple)):
                    short[k] = f"[{len(v)} items]"
                else:
                    short[k] = v
            parts.append(f"details={json.dumps(short, default=str, ensure_ascii=False)}")

        if error:
            parts.append(f"error={error[:200]}")

        activity_logger.info(" | ".join(parts))
    except Exception:
        pass


def log_progress(message: str, stage: str = "progress"):
    """
    Log progress messages to stderr for long-running computations.

    Silent unless progress reporting is switched on.
    """
    if not config.progress:
        return
    if config.log_format == "json":
        structured_logger.info(message, status=stage)
    else:
        print(f"[clusterforge] {stage}: {message}", file=sys.stderr, flush=True)
