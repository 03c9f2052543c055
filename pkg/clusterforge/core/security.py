"""
Safe artifact writing: file locking and atomic, verified writes.

Quiver files, module files, reports and DOT views produced by the CLI go
through ``ArtifactWriter`` so concurrent runs never leave half-written files.
"""

import os
import hashlib
import tempfile
from pathlib import Path
from dataclasses import dataclass
from typing import Optional
from contextlib import contextmanager

from .errors import FileLockError

# File locking - cross-platform using filelock
try:
    from filelock import FileLock as FileLocker, Timeout as FileLockTimeout
    HAS_FILELOCK = True
except ImportError:
    HAS_FILELOCK = False
    try:
        import fcntl
        HAS_FCNTL = True
    except ImportError:
        HAS_FCNTL = False


# =============================================================================
# FILE LOCKING
# =============================================================================

@contextmanager
def file_lock(file_path: str, timeout: float = 5.0):
    """
    Context manager holding an exclusive lock on ``file_path``.

    Uses the filelock library (a ``.lock`` file alongside the target), with an
    fcntl fallback on Unix.

    Raises:
        FileLockError: If lock cannot be acquired within timeout
    """
    lock_path = f"{file_path}.lock"
    lock_dir = os.path.dirname(lock_path)
    if lock_dir:
        os.makedirs(lock_dir, exist_ok=True)

    if HAS_FILELOCK:
        locker = FileLocker(lock_path)
        try:
            locker.acquire(timeout=timeout)
        except FileLockTimeout:
            raise FileLockError(
                f"file locked: could not acquire lock on {file_path} within {timeout}s"
            )
        try:
            yield
        finally:
            locker.release()
        return

    if not HAS_FCNTL:
        yield
        return

    import time
    lock_fd = os.open(lock_path, os.O_CREAT | os.O_RDWR, 0o600)
    try:
        start_time = time.time()
        while True:
            try:
                fcntl.flock(lock_fd, fcntl.LOCK_EX | fcntl.LOCK_NB)
                break
            except (IOError, OSError):
                if time.time() - start_time > timeout:
                    raise FileLockError(
                        f"file locked: could not acquire lock on {file_path} within {timeout}s"
                    )
                time.sleep(0.1)
        yield
    finally:
        try:
            fcntl.flock(lock_fd, fcntl.LOCK_UN)
        except (IOError, OSError):
            pass
        os.close(lock_fd)
        try:
            os.unlink(lock_path)
        except (IOError, OSError):
            pass


# =============================================================================
# ATOMIC ARTIFACT WRITES
# =============================================================================

@dataclass
class WriteResult:
    """Result of an artifact write."""
    success: bool
    path: str
    content_hash: str
    error: Optional[str] = None


class ArtifactWriter:
    """
    Atomic writer for output artifacts.

    Features:
    - Exclusive lock while writing
    - Temp file in the target directory + ``os.replace``
    - Content hash verification
    """

    LOCK_TIMEOUT = 5.0  # seconds

    def write(self, path: str, content: str) -> WriteResult:
        """Write ``content`` to ``path`` atomically."""
        target_path = Path(path)
        try:
            with file_lock(str(target_path.resolve()), timeout=self.LOCK_TIMEOUT):
                return self._write_locked(target_path, content)
        except FileLockError as e:
            return WriteResult(False, str(path), "", str(e))
        except OSError as e:
            return WriteResult(False, str(path), "", str(e))

    def _write_locked(self, target_path: Path, content: str) -> WriteResult:
        """Internal write operation, called while holding the lock."""
        content_hash = hashlib.sha256(content.encode("utf-8")).hexdigest()[:16]
        target_path.parent.mkdir(parents=True, exist_ok=True)

        temp_fd, temp_path = tempfile.mkstemp(
            dir=target_path.parent,
            prefix=f".{target_path.name}.",
            suffix=".tmp"
        )
        try:
            with os.fdopen(temp_fd, 'w', encoding='utf-8', newline='\n') as f:
                f.write(content)

            with open(temp_path, 'r', encoding='utf-8', newline='\n') as f:
                if hashlib.sha256(f.read().encode("utf-8")).hexdigest()[:16] != content_hash:
                    raise IOError("Content verification failed")

            os.replace(temp_path, target_path)
        except Exception:
            if os.path.exists(temp_path):
                os.unlink(temp_path)
            raise

        return WriteResult(success=True, path=str(target_path), content_hash=content_hash)


artifact_writer = ArtifactWriter()
