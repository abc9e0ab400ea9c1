"""
Thread-safe queue of validated jobs for the batch runner.
"""

import logging
import queue
import threading
import time
from typing import Any, Dict, Optional

from models.jobs import Job

logger = logging.getLogger(__name__)


class JobQueue:
    """
    Thread-safe queue manager for jobs.

    Tracks how many jobs were queued, completed and failed so the runner can
    report progress and wait for the batch to drain.
    """

    def __init__(self, max_size: int = 0):
        """
        Initialize the job queue.

        Args:
            max_size: Maximum queue size (0 = unlimited)
        """
        self._queue = queue.Queue(maxsize=max_size)
        self._shutdown_event = threading.Event()

        self._stats_lock = threading.Lock()
        self._stats = {
            'queued': 0,
            'completed': 0,
            'failed': 0,
            'start_time': None
        }

        logger.debug("JobQueue initialized")

    def add_job(self, job: Job) -> bool:
        """
        Add a job to the queue.

        Returns:
            bool: True if the job was added, False if shut down or full
        """
        if self._shutdown_event.is_set():
            return False

        try:
            self._queue.put(job, timeout=1.0)
        except queue.Full:
            logger.error(f"Queue is full - cannot add job {job.index} ({job.command})")
            return False

        with self._stats_lock:
            self._stats['queued'] += 1
            if self._stats['start_time'] is None:
                self._stats['start_time'] = time.time()

        logger.debug(f"Added job {job.index}: {job.command}")
        return True

    def get_next_job(self, timeout: float = 1.0) -> Optional[Job]:
        """
        Get the next job, or None if none arrives within ``timeout`` or the
        queue is shutting down.
        """
        if self._shutdown_event.is_set():
            return None
        try:
            return self._queue.get(timeout=timeout)
        except queue.Empty:
            return None

    def mark_completed(self, job: Job, success: bool = True):
        """Record the outcome of a job taken from the queue."""
        with self._stats_lock:
            if success:
                self._stats['completed'] += 1
            else:
                self._stats['failed'] += 1

        self._queue.task_done()
        logger.debug(f"Job {job.index} finished (success: {success})")

    def get_progress(self) -> Dict[str, Any]:
        """Counts, completion percentage and jobs per second."""
        with self._stats_lock:
            stats = self._stats.copy()

        finished = stats['completed'] + stats['failed']
        percentage = finished / stats['queued'] * 100 if stats['queued'] else 0.0
        rate = 0.0
        if stats['start_time'] and finished:
            elapsed = time.time() - stats['start_time']
            if elapsed > 0:
                rate = finished / elapsed

        return {
            'is_processing': finished < stats['queued'],
            'queued': stats['queued'],
            'completed': stats['completed'],
            'failed': stats['failed'],
            'pending': self._queue.qsize(),
            'progress_percentage': percentage,
            'processing_rate': rate,
        }

    def wait_until_done(self):
        """Block until every queued job has been marked completed."""
        self._queue.join()

    def is_empty(self) -> bool:
        return self._queue.empty()

    def size(self) -> int:
        return self._queue.qsize()

    def shutdown(self):
        logger.debug("Shutdown initiated for JobQueue")
        self._shutdown_event.set()

    def is_shutdown(self) -> bool:
        return self._shutdown_event.is_set()
