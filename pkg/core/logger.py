"""
QuadStokes logging module - run log written to disk for troubleshooting

Each run writes QuadStokes.log in the project root. The previous run's log is
renamed with its timestamp and only the newest MAX_ROTATED_LOGS of those are
kept. Heavyweight steps (solves, eigen-solves, complex checks) are wrapped in
`timed` so the log shows where a run spends its time.
"""

import logging
import time
from contextlib import contextmanager
from datetime import datetime
from enum import Enum
from pathlib import Path


class LogLevel(Enum):
    DEBUG = "DEBUG"
    RELEASE = "RELEASE"


# Hardcoded log level - change to DEBUG to trace assembly and solver internals
CURRENT_LOG_LEVEL = LogLevel.RELEASE

LOG_NAME = "QuadStokes"
LOG_FILENAME = f"{LOG_NAME}.log"
MAX_ROTATED_LOGS = 5

_logger = None


def _get_log_path() -> Path:
    return Path(__file__).parent.parent / LOG_FILENAME


def prune_rotated_logs(directory: Path, keep: int = MAX_ROTATED_LOGS) -> list[Path]:
    """Delete all but the `keep` newest timestamped logs in `directory`; returns the deleted paths."""
    # Timestamps sort lexicographically
    rotated = sorted(directory.glob(f"{LOG_NAME}_*.log"), reverse=True)
    removed = []
    for path in rotated[keep:]:
        try:
            path.unlink()
            removed.append(path)
        except OSError:
            pass
    return removed


def _rotate_existing_log():
    log_path = _get_log_path()
    if not log_path.exists():
        return
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
    try:
        log_path.rename(log_path.parent / f"{LOG_NAME}_{timestamp}.log")
    except OSError:
        return
    prune_rotated_logs(log_path.parent)


def _initialize_logger() -> logging.Logger:
    global _logger

    _rotate_existing_log()

    logger = logging.getLogger(LOG_NAME)
    logger.setLevel(logging.DEBUG)
    logger.handlers.clear()
    logger.propagate = False

    log_path = _get_log_path()
    file_handler = logging.FileHandler(log_path, mode='w', encoding='utf-8')

    # Format: [TIMESTAMP] [LEVEL] [MODULE:FUNCTION:LINE] MESSAGE
    file_handler.setFormatter(logging.Formatter(
        '[%(asctime)s] [%(levelname)-8s] [%(module)s:%(funcName)s:%(lineno)d] %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))
    file_handler.setLevel(logging.DEBUG if CURRENT_LOG_LEVEL == LogLevel.DEBUG else logging.INFO)
    logger.addHandler(file_handler)

    logger.info(f"{LOG_NAME} run started (log level {CURRENT_LOG_LEVEL.value}, file {log_path})")
    _logger = logger
    return logger


def get_logger() -> logging.Logger:
    if _logger is None:
        return _initialize_logger()
    return _logger


# The wrappers add one frame; stacklevel=2 keeps the caller in the location tag.
def debug(msg: str, *args, **kwargs):
    get_logger().debug(msg, *args, stacklevel=2, **kwargs)


def info(msg: str, *args, **kwargs):
    get_logger().info(msg, *args, stacklevel=2, **kwargs)


def warning(msg: str, *args, **kwargs):
    get_logger().warning(msg, *args, stacklevel=2, **kwargs)


def error(msg: str, *args, **kwargs):
    get_logger().error(msg, *args, stacklevel=2, **kwargs)


def exception(msg: str, *args, **kwargs):
    """Log exception with traceback"""
    get_logger().exception(msg, *args, stacklevel=2, **kwargs)


def assert_true(condition, msg: str, error_type: type = RuntimeError):
    """Log error and raise `error_type` if condition is false"""
    if not condition:
        get_logger().error(msg, stacklevel=2)
        raise error_type(msg)


@contextmanager
def timed(step: str):
    """
    Log `step` at info on entry and its wall time at debug on exit.

    A failing step is logged with its traceback and the exception propagates.
    """
    log = get_logger()
    log.info(f"{step} ...", stacklevel=3)
    start = time.perf_counter()
    try:
        yield
    except Exception:
        log.exception(f"{step} failed after {time.perf_counter() - start:.3f}s", stacklevel=3)
        raise
    log.debug(f"{step} done in {time.perf_counter() - start:.3f}s", stacklevel=3)
