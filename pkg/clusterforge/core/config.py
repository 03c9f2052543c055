"""
Configuration management for clusterforge.
Centralizes all environment variables and computation limits.
"""

import os
from dataclasses import dataclass, field
from typing import Optional


def _env_bool(name: str, default: str) -> bool:
    return os.environ.get(name, default).lower() == "true"


@dataclass
class Config:
    """
    Central configuration for clusterforge.

    All settings are loaded from environment variables with sensible defaults.
    Library functions accept explicit overrides; ``None`` means "use config".
    """

    # Version
    version: str = "1.0.0"

    # Computation caps
    length_cap: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_LENGTH_CAP", "30"))
    )
    resolution_cap: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_RESOLUTION_CAP", "12"))
    )
    knit_cap: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_KNIT_CAP", "2000"))
    )

    # Windows
    margin: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_MARGIN", "1"))
    )
    working_margin: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_WORKING_MARGIN", "3"))
    )

    # Randomized searches (endomorphism splitting, isomorphism tests)
    seed: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_SEED", "20240611"))
    )
    search_tries: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_SEARCH_TRIES", "40"))
    )
    coefficient_range: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_COEFFICIENT_RANGE", "97"))
    )

    # Activity Logging
    activity_log_enabled: bool = field(
        default_factory=lambda: _env_bool("CLUSTERFORGE_ACTIVITY_LOG", "true")
    )
    log_dir: str = field(
        default_factory=lambda: os.environ.get(
            "CLUSTERFORGE_LOG_DIR", os.path.expanduser("~/.clusterforge")
        )
    )
    log_max_bytes: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_LOG_MAX_BYTES", str(5 * 1024 * 1024)))
    )
    log_backup_count: int = field(
        default_factory=lambda: int(os.environ.get("CLUSTERFORGE_LOG_BACKUP_COUNT", "3"))
    )
    log_format: str = field(
        default_factory=lambda: os.environ.get("CLUSTERFORGE_LOG_FORMAT", "text").lower()
    )
    progress: bool = field(
        default_factory=lambda: _env_bool("CLUSTERFORGE_PROGRESS", "false")
    )

    def resolve(self, name: str, value: Optional[int]) -> int:
        """Return ``value`` unless it is None, else the configured setting ``name``."""
        return getattr(self, name) if value is None else value

    def validate(self) -> Optional[str]:
        """
        Validate configuration.

        Returns:
            Error message if invalid, None if valid.
        """
        for name in ("length_cap", "resolution_cap", "knit_cap", "search_tries"):
            if getattr(self, name) <= 0:
                return f"{name} must be positive"
        if self.margin < 0 or self.working_margin < 0:
            return "window margins must be non-negative"
        if self.coefficient_range < 1:
            return "coefficient_range must be at least 1"
        if self.log_format not in ("text", "json"):
            return f"Unknown log format: {self.log_format}"
        return None


# Global config instance
config = Config()
