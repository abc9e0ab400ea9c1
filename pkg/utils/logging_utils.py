"""
Logging setup and thread-safe progress lines for the batch runner.

Progress lines from worker threads go to standard error so that JSON reports
written to standard output are never interleaved with them.
"""

import logging
import sys
import threading
from datetime import datetime
from typing import Optional

# shared by progress lines and result slots in worker_utils
_print_lock = threading.Lock()

LOG_FORMAT = "%(asctime)s %(levelname)s [%(threadName)s] %(name)s: %(message)s"


def thread_safe_print(message: str, lock: Optional[threading.Lock] = None):
    """
    Print one timestamped progress line on standard error.

    Args:
        message: Progress text
        lock: Lock to hold while printing; defaults to the shared print lock
    """
    with lock or _print_lock:
        stamp = datetime.now().strftime("%H:%M:%S.%f")[:-3]
        print(f"[{stamp}] {message}", file=sys.stderr, flush=True)


def get_print_lock() -> threading.Lock:
    return _print_lock


def configure_logging(verbose: bool = False):
    """Configure root logging once: DEBUG with -v, WARNING otherwise, always on stderr."""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
