"""
Pytest configuration and fixtures for clusterforge tests.

Algebras built from the shipped quiver files are session-scoped: windows,
trivial extensions and knitted AR quivers are expensive and never mutated
by the tests that share them.
"""

import os
import shutil
import sys
import tempfile
from pathlib import Path

import pytest

# Keep test runs out of ~/.clusterforge/activity.log
os.environ.setdefault("CLUSTERFORGE_ACTIVITY_LOG", "false")

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

FIXTURES = Path(__file__).parent.parent / "clusterforge" / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def load(name: str, field=None):
    from clusterforge.utils.serialization import load_algebra

    return load_algebra(fixture_path(name), field=field)


@pytest.fixture
def fixtures_dir():
    """Directory of the shipped quiver, slice and module files."""
    return FIXTURES


@pytest.fixture
def temp_out():
    """Temporary output directory for artifacts."""
    out = tempfile.mkdtemp(prefix="clusterforge_test_")
    yield out
    shutil.rmtree(out, ignore_errors=True)


@pytest.fixture
def restore_config():
    """Save and restore the config fields a test may patch."""
    from clusterforge.core.config import config

    names = ("knit_cap", "resolution_cap", "length_cap", "margin", "working_margin",
             "log_format", "progress", "search_tries")
    saved = {name: getattr(config, name) for name in names}
    yield config
    for name, value in saved.items():
        setattr(config, name, value)


@pytest.fixture
def disable_logging():
    """Disable activity logging for tests."""
    from clusterforge.core import logging as cf_logging

    old_logger = cf_logging.activity_logger
    cf_logging.activity_logger = None
    yield
    cf_logging.activity_logger = old_logger


# =============================================================================
# ALGEBRAS
# =============================================================================

@pytest.fixture(scope="session")
def a5_abc():
    """A5 linear with αβγ = 0: dim 13, gl.dim 2."""
    return load("a5_abc")


@pytest.fixture(scope="session")
def a2():
    return load("a2")


@pytest.fixture(scope="session")
def a3_strict():
    """3 -> 2 -> 1 with αβ = 0."""
    return load("a3_strict")


@pytest.fixture(scope="session")
def a5():
    return load("a5")


@pytest.fixture(scope="session")
def d4():
    return load("d4")


@pytest.fixture(scope="session")
def gentle4():
    return load("gentle4")


@pytest.fixture(scope="session")
def point():
    """The one-vertex algebra k."""
    return load("k")


@pytest.fixture(scope="session")
def a5_abc_pipeline(a5_abc):
    """Pipeline over the worked example; derived algebras are cached on it."""
    from clusterforge.tools.pipeline import Pipeline

    return Pipeline(a5_abc)


@pytest.fixture(scope="session")
def a3_pipeline(a3_strict):
    from clusterforge.tools.pipeline import Pipeline

    return Pipeline(a3_strict)
